#pragma once

// Lucas numbers, the intervals of constant expansion length, closed forms for
// the expansions of Lucas numbers, and an independent recursive construction
// of beta(N) and gamma(N) by affix surgery on shorter expansions.

#include "goldbase/digit_string.hpp"
#include "goldbase/representation.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace goldbase {

inline constexpr int kMaxLucasIndex = 90;

/// L_0 = 2, L_1 = 1, L_n = L_{n-1} + L_{n-2}.
inline std::int64_t lucas(int n) {
  if (n < 0 || n > kMaxLucasIndex) throw std::out_of_range("lucas: index out of range");
  std::int64_t prev = 2;
  std::int64_t cur = 1;
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const std::int64_t next = prev + cur;
    prev = cur;
    cur = next;
  }
  return cur;
}

struct Interval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool contains(std::int64_t n) const { return lo <= n && n <= hi; }
  std::int64_t size() const { return hi >= lo ? hi - lo + 1 : 0; }
  Interval shifted(std::int64_t by) const { return {lo + by, hi + by}; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical Lucas interval: {1} for n = 0, [L_n + 1, L_{n+1}] for n >= 1.
inline Interval gamma_interval(int n) {
  if (n < 0 || n >= kMaxLucasIndex) throw std::out_of_range("gamma_interval: n out of range");
  if (n == 0) return {1, 1};
  return {lucas(n) + 1, lucas(n + 1)};
}

/// Bergman Lucas interval: [L_{2m}, L_{2m+1}] for n = 2m and
/// [L_{2m+1} + 1, L_{2m+2} - 1] for n = 2m + 1; n >= 1.
inline Interval lambda_interval(int n) {
  if (n < 1 || n >= kMaxLucasIndex) throw std::out_of_range("lambda_interval: n out of range");
  if (n % 2 == 0) return {lucas(n), lucas(n + 1)};
  return {lucas(n) + 1, lucas(n + 1) - 1};
}

/// Length-interval of the given scheme: Lambda_n for standard, Gamma_n for canonical.
inline Interval length_interval(int n, Scheme scheme) {
  return scheme == Scheme::standard ? lambda_interval(n) : gamma_interval(n);
}

struct SubIntervals {
  Interval i;
  Interval j;
  Interval k;
};

/// Partition of the odd length-interval of index 2n + 1 into I_n, J_n, K_n
/// (n >= 2). The canonical version partitions Gamma_{2n+1}; the standard one
/// partitions Lambda_{2n+1}.
inline SubIntervals sub_intervals(int n, Scheme scheme = Scheme::canonical) {
  if (n < 2 || 2 * n + 2 > kMaxLucasIndex) throw std::out_of_range("sub_intervals: n out of range");
  const std::int64_t base = lucas(2 * n + 1);
  const std::int64_t l2 = lucas(2 * n - 2);
  const std::int64_t l1 = lucas(2 * n - 1);
  const std::int64_t top = lucas(2 * n + 2);
  if (scheme == Scheme::canonical) {
    return {{base + 1, base + l2}, {base + l2 + 1, base + l1}, {base + l1 + 1, top}};
  }
  return {{base + 1, base + l2 - 1}, {base + l2, base + l1}, {base + l1 + 1, top - 1}};
}

/// Index n >= 1 of the length-interval containing N, if any (N = 1 lies in
/// none of them).
inline std::optional<int> interval_index(std::int64_t n, Scheme scheme) {
  for (int k = 1; k < kMaxLucasIndex; ++k) {
    const Interval iv = length_interval(k, scheme);
    if (iv.contains(n)) return k;
    if (iv.lo > n) break;
  }
  return std::nullopt;
}

/// (L, R) of the actual expansion.
inline std::pair<int, int> lr_indices(const BigInt& n, Scheme scheme) {
  const DigitString rep = expansion_of(n, scheme);
  return {rep.left_index(), rep.right_index()};
}

/// (L, R) predicted for members of the length-interval of index k:
/// (2m, -2m) for k = 2m and (2m + 1, -(2m + 2)) for k = 2m + 1.
inline std::pair<int, int> predicted_lr(int k) {
  return k % 2 == 0 ? std::pair{k, -k} : std::pair{k, -(k + 1)};
}

// ---------------------------------------------------------------------------
// Closed forms

namespace detail {
inline std::string repeat(std::string_view s, int times) {
  std::string out;
  for (int t = 0; t < times; ++t) out += s;
  return out;
}
}  // namespace detail

struct LucasClosedForms {
  DigitString bergman_even;    // beta(L_{2n})
  DigitString canonical_even;  // gamma(L_{2n})
  DigitString odd;             // beta(L_{2n+1}) = gamma(L_{2n+1})
  DigitString even_plus_one;   // beta(L_{2n}+1) = gamma(L_{2n}+1)
  DigitString odd_plus_one;    // beta(L_{2n+1}+1) = gamma(L_{2n+1}+1)
};

inline LucasClosedForms lucas_closed_forms(int n) {
  if (n < 1) throw std::out_of_range("lucas_closed_forms: n must be >= 1");
  using detail::repeat;
  LucasClosedForms f;
  f.bergman_even = parse("1" + repeat("0", 2 * n) + "." + repeat("0", 2 * n - 1) + "1");
  f.canonical_even = parse(repeat("10", n - 1) + "11." + repeat("0", 2 * n - 1) + "1");
  f.odd = parse("1" + repeat("01", n) + "." + repeat("01", n));
  f.even_plus_one = parse("1" + repeat("0", 2 * n - 1) + "1." + repeat("0", 2 * n - 1) + "1");
  f.odd_plus_one = parse("1" + repeat("0", 2 * n + 1) + "." + repeat("10", n) + "01");
  return f;
}

/// Closed form of gamma(2 L_{2n}), n >= 2.
inline DigitString double_lucas_gamma(int n) {
  if (n < 2) throw std::out_of_range("double_lucas_gamma: n must be >= 2");
  using detail::repeat;
  return parse("1000" + repeat("10", n - 2) + "11." + repeat("0", 2 * n - 2) + "1001");
}

// ---------------------------------------------------------------------------
// Recursive construction

namespace detail {

// Free-group affix surgery: strip old_prefix from the left end and old_suffix
// from the right end of w, then attach new_prefix/new_suffix. Digits of w
// that are kept stay at their exponents. Throws if w does not carry the
// expected affixes.
inline DigitString replace_affixes(const DigitString& w, std::string_view old_prefix, std::string_view new_prefix,
                                   std::string_view old_suffix, std::string_view new_suffix) {
  const int left = w.left_index();
  const int right = w.right_index();
  const int prefix_end = left - static_cast<int>(old_prefix.size()) + 1;
  const int suffix_start = right + static_cast<int>(old_suffix.size()) - 1;
  if (prefix_end <= suffix_start) throw std::logic_error("replace_affixes: word too short");

  auto digit_char = [](DigitString::Digit d) { return static_cast<char>('0' + d); };
  DigitString out = w;
  for (std::size_t j = 0; j < old_prefix.size(); ++j) {
    const int e = left - static_cast<int>(j);
    if (digit_char(w.digit(e)) != old_prefix[j]) throw std::logic_error("replace_affixes: prefix mismatch");
    out.set(e, 0);
  }
  for (std::size_t j = 0; j < old_suffix.size(); ++j) {
    const int e = suffix_start - static_cast<int>(j);
    if (digit_char(w.digit(e)) != old_suffix[j]) throw std::logic_error("replace_affixes: suffix mismatch");
    out.set(e, 0);
  }
  const int np = static_cast<int>(new_prefix.size());
  for (int j = 0; j < np; ++j) {
    out.set(prefix_end + (np - 1 - j), static_cast<DigitString::Digit>(new_prefix[static_cast<std::size_t>(j)] - '0'));
  }
  for (std::size_t j = 0; j < new_suffix.size(); ++j) {
    out.set(suffix_start - static_cast<int>(j), static_cast<DigitString::Digit>(new_suffix[j] - '0'));
  }
  return out;
}

inline const std::array<DigitString, 7>& base_expansions(Scheme scheme) {
  static const std::array<DigitString, 7> standard = {
      parse("1.0"), parse("10.01"), parse("100.01"), parse("101.01"),
      parse("1000.1001"), parse("1010.0001"), parse("10000.0001")};
  static const std::array<DigitString, 7> canonical = {
      parse("1.0"), parse("10.01"), parse("11.01"), parse("101.01"),
      parse("1000.1001"), parse("1010.0001"), parse("1011.0001")};
  return scheme == Scheme::standard ? standard : canonical;
}

inline DigitString recursive_expansion(std::int64_t n, Scheme scheme) {
  if (n < 1) throw std::invalid_argument("recursive expansion: N must be >= 1");
  if (n <= 7) return base_expansions(scheme)[static_cast<std::size_t>(n - 1)];

  const auto index = interval_index(n, scheme);
  if (!index) throw std::logic_error("recursive expansion: no length interval");
  const int m = *index;

  DigitString out;
  if (m % 2 == 0) {
    // Part I: N = L_{2n} + k.
    const int half = m / 2;
    const std::int64_t lead = lucas(m);
    const LucasClosedForms forms = lucas_closed_forms(half);
    if (n == lead) {
      // Only the standard scheme starts an even interval at L_{2n}.
      out = forms.bergman_even;
    } else {
      out = add_digitwise(forms.bergman_even, recursive_expansion(n - lead, scheme));
    }
  } else {
    // Part II: N in I_n, J_n or K_n of the interval of index 2n + 1.
    const int half = (m - 1) / 2;
    const SubIntervals parts = sub_intervals(half, scheme);
    const std::int64_t odd_lucas = lucas(2 * half + 1);
    if (parts.i.contains(n)) {
      const std::int64_t k = n - odd_lucas;
      out = replace_affixes(recursive_expansion(lucas(2 * half - 1) + k, scheme), "10", "1000", "01", "1001");
    } else if (parts.j.contains(n)) {
      const std::int64_t k = n - odd_lucas - lucas(2 * half - 2);
      out = replace_affixes(recursive_expansion(lucas(2 * half - 2) + k, scheme), "10", "10010", "01", "001001");
    } else if (parts.k.contains(n)) {
      const std::int64_t k = n - odd_lucas - lucas(2 * half - 1);
      out = replace_affixes(recursive_expansion(lucas(2 * half - 1) + k, scheme), "10", "1010", "01", "0001");
    } else {
      throw std::logic_error("recursive expansion: N outside I, J, K");
    }
  }
  if (!is_admissible(out, scheme)) throw std::logic_error("recursive expansion: result not admissible");
  return out;
}

}  // namespace detail

/// beta(N) built from the recursive structure of the Bergman expansion.
inline DigitString recursive_beta(std::int64_t n) { return detail::recursive_expansion(n, Scheme::standard); }

/// gamma(N) built from the recursive structure of the canonical expansion.
inline DigitString recursive_gamma(std::int64_t n) { return detail::recursive_expansion(n, Scheme::canonical); }

}  // namespace goldbase

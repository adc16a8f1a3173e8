#pragma once

// Bergman and canonical expansions of natural numbers in base phi, and the
// standard/canonical expansions in base 1 + sqrt 2 which share the same
// machinery (greedy construction, admissibility, brute-force enumeration).

#include "goldbase/digit_string.hpp"
#include "goldbase/quadratic.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbase {

/// Digit scheme. For base phi `standard` is Bergman's representation; for
/// base 1 + sqrt 2 it is the standard greedy expansion with digits {0,1,2}.
enum class Scheme { standard, canonical };

inline const char* to_string(Scheme scheme) {
  return scheme == Scheme::standard ? "standard" : "canonical";
}

/// Classification of N by the low-order digits of its Bergman expansion.
enum class TypeCode { A, B, C, D };

inline char to_char(TypeCode t) { return static_cast<char>('A' + static_cast<int>(t)); }

inline DigitString::Digit max_digit(Base base) { return base == Base::phi ? 1 : 2; }

/// True iff every digit is in range and no forbidden adjacent pair occurs.
///
/// phi: digits {0,1}, no "11"; canonical permits "11" at exponents (1,0).
/// silver: digits {0,1,2}, no "21" or "22"; canonical permits "21" at (1,0).
inline bool is_admissible(const DigitString& rep, Scheme scheme) {
  const auto top = max_digit(rep.base());
  bool ok = true;
  rep.for_each_nonzero([&](int e, DigitString::Digit d) {
    if (!ok) return;
    if (d > top) {
      ok = false;
      return;
    }
    const auto above = rep.digit(e + 1);
    const bool exempt = scheme == Scheme::canonical && e == 0;
    if (rep.base() == Base::phi) {
      if (above == 1 && !exempt) ok = false;
    } else if (above == 2) {
      if (!(exempt && d == 1)) ok = false;
    }
  });
  return ok;
}

namespace detail {

inline void require_positive(const BigInt& n, const char* where) {
  if (n < 1) throw std::invalid_argument(std::string(where) + ": N must be >= 1");
}

// Greedy expansion: from the highest power downwards, take the largest
// admissible digit d with d * theta^e <= remainder.
template <class Int>
DigitString greedy_expansion(const Int& n, Base base) {
  BasicQuadInt<Int> rem = integer<Int>(n, base);
  long top = 0;
  while (compare(power<Int>(base, top + 1), rem) <= 0) ++top;
  const long floor_exponent = -4 * (top + 4);
  const auto top_digit = max_digit(base);

  DigitString out(base);
  for (long e = top; !rem.is_zero(); --e) {
    if (e < floor_exponent) throw std::logic_error("greedy expansion did not terminate");
    const BasicQuadInt<Int> p = power<Int>(base, e);
    for (DigitString::Digit d = top_digit; d >= 1; --d) {
      BasicQuadInt<Int> candidate = rem - p * Int(d);
      if (sign(candidate) >= 0) {
        rem = std::move(candidate);
        out.set(static_cast<int>(e), d);
        break;
      }
    }
  }
  return out;
}

inline TypeCode classify(const DigitString& beta) {
  const auto d1 = beta.digit(1);
  const auto d0 = beta.digit(0);
  const auto dm1 = beta.digit(-1);
  if (d0 == 1) return TypeCode::C;
  if (d1 == 1) return TypeCode::A;
  return dm1 == 0 ? TypeCode::B : TypeCode::D;
}

}  // namespace detail

inline TypeCode type_code_of(const DigitString& beta) { return detail::classify(beta); }

inline DigitString bergman_of(const BigInt& n) {
  detail::require_positive(n, "bergman_of");
  DigitString beta = detail::greedy_expansion<BigInt>(n, Base::phi);
  if (!is_admissible(beta, Scheme::standard)) throw std::logic_error("bergman_of: greedy result not admissible");
  return beta;
}

/// gamma(N) from beta(N) and beta(N - 1): when beta(N) ends in 00.0 the
/// canonical expansion is beta(N - 1) with its zero units digit set to 1.
inline DigitString canonical_from_bergman(const DigitString& beta_n, const DigitString& beta_prev) {
  if (detail::classify(beta_n) != TypeCode::B) return beta_n;
  if (beta_prev.digit(0) != 0) throw std::logic_error("canonical_from_bergman: predecessor has units digit 1");
  DigitString gamma = beta_prev;
  gamma.set(0, 1);
  if (!is_admissible(gamma, Scheme::canonical)) {
    throw std::logic_error("canonical_from_bergman: result not admissible");
  }
  return gamma;
}

inline DigitString canonical_of(const BigInt& n) {
  detail::require_positive(n, "canonical_of");
  DigitString beta = bergman_of(n);
  if (detail::classify(beta) != TypeCode::B) return beta;
  return canonical_from_bergman(beta, bergman_of(BigInt(n - 1)));
}

inline DigitString expansion_of(const BigInt& n, Scheme scheme) {
  return scheme == Scheme::standard ? bergman_of(n) : canonical_of(n);
}

inline TypeCode type_code(const BigInt& n) { return detail::classify(bergman_of(n)); }

/// Standard expansion in base 1 + sqrt 2: digits {0,1,2}, no "21" or "22".
inline DigitString silver_standard_of(const BigInt& n) {
  detail::require_positive(n, "silver_standard_of");
  DigitString rep = detail::greedy_expansion<BigInt>(n, Base::silver);
  if (!is_admissible(rep, Scheme::standard)) throw std::logic_error("silver_standard_of: greedy result not admissible");
  return rep;
}

/// Silver canonical expansion from the standard expansions of N and N - 1
/// (`prev` is null for N = 1). When the standard expansion of N - 1 has
/// d_1 d_0 = 20, a representation of N with c_1 c_0 = 21 exists and is obtained
/// by raising the units digit; otherwise the standard expansion is canonical.
inline DigitString silver_canonical_from_standard(const DigitString& std_n, const DigitString* prev) {
  if (prev == nullptr || prev->digit(1) != 2 || prev->digit(0) != 0) return std_n;
  DigitString rep = *prev;
  rep.set(0, 1);
  if (!is_admissible(rep, Scheme::canonical)) throw std::logic_error("silver canonical: result not admissible");
  return rep;
}

inline DigitString silver_canonical_of(const BigInt& n) {
  detail::require_positive(n, "silver_canonical_of");
  const DigitString std_n = silver_standard_of(n);
  if (n == 1) return std_n;
  const DigitString prev = silver_standard_of(BigInt(n - 1));
  return silver_canonical_from_standard(std_n, &prev);
}

inline DigitString expansion_of(const BigInt& n, Scheme scheme, Base base) {
  if (base == Base::phi) return expansion_of(n, scheme);
  return scheme == Scheme::standard ? silver_standard_of(n) : silver_canonical_of(n);
}

inline bool gamma_ne_beta(const BigInt& n) { return !(canonical_of(n) == bergman_of(n)); }

// ---------------------------------------------------------------------------
// Rewrite normalization

struct RewriteStep {
  std::string rule;
  DigitString state;
};

namespace detail {

inline std::optional<int> highest_carry_site(const DigitString& rep) {
  std::optional<int> site;
  rep.for_each_nonzero([&](int e, DigitString::Digit d) {
    if (d >= 2) site = e;
  });
  return site;
}

// Highest i with d_{i+1} >= 1 and d_i >= 1.
inline std::optional<int> highest_shift_site(const DigitString& rep) {
  std::optional<int> site;
  rep.for_each_nonzero([&](int e, DigitString::Digit) {
    if (rep.digit(e + 1) != 0) site = e;
  });
  return site;
}

}  // namespace detail

/// Rewrites a base-phi digit string with non-negative digits into the
/// admissible string of `scheme` with the same value. Uses the carry rule
/// 2 phi^n = phi^{n+1} + phi^{n-2} and the golden mean shift 011 -> 100, and
/// for the canonical scheme the inverse shifts that produce "11" at (1,0).
///
/// The exact value is re-checked after every rewrite. When `trace` is given,
/// it receives the input followed by the state after each rewrite.
inline DigitString normalize(const DigitString& rep, Scheme scheme, std::vector<RewriteStep>* trace = nullptr) {
  if (rep.base() != Base::phi) throw std::invalid_argument("normalize: base phi only");
  const QuadInt value = eval_digits(rep);
  if (value.b != 0 || value.a < 1) {
    throw std::invalid_argument("normalize: value is not a positive integer");
  }

  DigitString cur = rep;
  if (trace) trace->push_back({"input", cur});
  auto record = [&](std::string rule) {
    if (!(eval_digits(cur) == value)) throw std::logic_error("normalize: rewrite changed the value (" + rule + ")");
    if (trace) trace->push_back({std::move(rule), cur});
  };

  // Iteration cap: 10 * width^2 over a window wide enough for the result.
  long width = cur.left_index() - cur.right_index() + 1;
  width += 2 * static_cast<long>(boost::multiprecision::msb(value.a) * 3 / 2 + 4);
  const long cap = 10 * width * width;
  long steps = 0;
  auto tick = [&] {
    if (++steps > cap) throw std::runtime_error("normalize: iteration cap exceeded");
  };

  for (;;) {
    if (auto e = detail::highest_carry_site(cur)) {
      tick();
      cur.subtract(*e, 2);
      cur.add(*e + 1, 1);
      cur.add(*e - 2, 1);
      record("carry at " + std::to_string(*e));
      continue;
    }
    if (auto e = detail::highest_shift_site(cur)) {
      tick();
      cur.subtract(*e + 1, 1);
      cur.subtract(*e, 1);
      cur.add(*e + 2, 1);
      record("shift at " + std::to_string(*e));
      continue;
    }
    break;
  }

  if (scheme == Scheme::canonical && detail::classify(cur) == TypeCode::B) {
    // beta ends in 10^k.0 with k even; undo shifts at k, k-2, ..., 2.
    int k = 1;
    while (cur.digit(k) == 0) ++k;
    if (k % 2 != 0) throw std::logic_error("normalize: type B expansion with odd trailing zero run");
    for (int j = k; j >= 2; j -= 2) {
      tick();
      cur.subtract(j, 1);
      cur.add(j - 1, 1);
      cur.add(j - 2, 1);
      record("unshift at " + std::to_string(j));
    }
  }
  if (!is_admissible(cur, scheme)) throw std::logic_error("normalize: fixed point not admissible");
  return cur;
}

// ---------------------------------------------------------------------------
// Brute-force enumeration (oracle for uniqueness)

namespace detail {

class RepresentationSearch {
 public:
  using Q = BasicQuadInt<std::int64_t>;

  RepresentationSearch(std::int64_t n, int top, int bottom, Scheme scheme, Base base)
      : base_(base), scheme_(scheme), top_(top), bottom_(bottom), target_{n, 0, base} {
    for (int e = bottom; e <= top; ++e) {
      powers_.push_back(power<std::int64_t>(base, e));
      // Any admissible digits on exponents <= e sum to less than theta^{e+1};
      // the canonical (1,0) exemption adds at most 1.
      tail_bounds_.push_back(power<std::int64_t>(base, e + 1) + Q{1, 0, base});
    }
    digits_.assign(static_cast<std::size_t>(top - bottom + 1), 0);
  }

  std::vector<DigitString> run() {
    search(top_, Q{0, 0, base_});
    return std::move(found_);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  std::size_t idx(int e) const { return static_cast<std::size_t>(e - bottom_); }

  bool allowed(int e, DigitString::Digit d) const {
    if (d == 0) return true;
    const DigitString::Digit above = e < top_ ? digits_[idx(e + 1)] : 0;
    const bool exempt = scheme_ == Scheme::canonical && e == 0;
    if (base_ == Base::phi) return above == 0 || exempt;
    return above != 2 || (exempt && d == 1);
  }

  void search(int e, const Q& partial) {
    ++nodes_;
    if (partial == target_) {
      DigitString rep(base_);
      for (int k = top_; k > e; --k) rep.set(k, digits_[idx(k)]);
      found_.push_back(std::move(rep));
      return;
    }
    if (e < bottom_) return;
    if (compare(partial + tail_bounds_[idx(e)], target_) < 0) return;
    for (DigitString::Digit d = 0; d <= max_digit(base_); ++d) {
      if (!allowed(e, d)) continue;
      Q next = partial + powers_[idx(e)] * static_cast<std::int64_t>(d);
      if (compare(next, target_) > 0) break;
      digits_[idx(e)] = d;
      search(e - 1, next);
      digits_[idx(e)] = 0;
    }
  }

  Base base_;
  Scheme scheme_;
  int top_;
  int bottom_;
  Q target_;
  std::vector<Q> powers_;
  std::vector<Q> tail_bounds_;
  std::vector<DigitString::Digit> digits_;
  std::vector<DigitString> found_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

/// Every admissible string of `scheme` supported on exponents [bottom, top]
/// whose value is exactly n. Exhaustive with value-bound pruning; the window
/// must be small (top - bottom <= 40).
///
/// For the canonical scheme the "as soon as possible" preference is applied:
/// if any locally admissible string has the exempt pair at (1,0) ("11" for
/// phi, "21" for silver), only those are returned.
inline std::vector<DigitString> brute_force_reps(std::int64_t n, int top, int bottom, Scheme scheme,
                                                 Base base = Base::phi) {
  if (n < 1) throw std::invalid_argument("brute_force_reps: N must be >= 1");
  if (top < bottom || top - bottom > 40) throw std::invalid_argument("brute_force_reps: bad window");
  std::vector<DigitString> found = detail::RepresentationSearch(n, top, bottom, scheme, base).run();
  if (scheme == Scheme::standard) return found;

  const DigitString::Digit high = base == Base::phi ? 1 : 2;
  auto has_exempt_pair = [&](const DigitString& rep) { return rep.digit(1) == high && rep.digit(0) == 1; };
  if (std::none_of(found.begin(), found.end(), has_exempt_pair)) return found;
  std::vector<DigitString> preferred;
  for (auto& rep : found) {
    if (has_exempt_pair(rep)) preferred.push_back(std::move(rep));
  }
  return preferred;
}

}  // namespace goldbase

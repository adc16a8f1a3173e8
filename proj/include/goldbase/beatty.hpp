#pragma once

// Generalized Beatty sequences V(p, q, r): V_n = p * floor(n * alpha) + q * n + r.

#include "goldbase/quadratic.hpp"

#include <boost/multiprecision/integer.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbase {

enum class Irrational { phi, sigma_plus_1, sigma };

inline const char* to_string(Irrational alpha) {
  switch (alpha) {
    case Irrational::phi: return "phi";
    case Irrational::sigma_plus_1: return "sigma_plus_1";
    case Irrational::sigma: return "sigma";
  }
  return "?";
}

inline Irrational irrational_from_string(const std::string& name) {
  if (name == "phi") return Irrational::phi;
  if (name == "sigma_plus_1") return Irrational::sigma_plus_1;
  if (name == "sigma") return Irrational::sigma;
  throw std::invalid_argument("unknown irrational " + name);
}

struct GbsParams {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  Irrational alpha = Irrational::phi;

  friend bool operator==(const GbsParams&, const GbsParams&) = default;
  friend auto operator<=>(const GbsParams&, const GbsParams&) = default;
};

namespace detail {

// n * alpha - m as an element of Z[phi] or Z[sqrt 2].
inline QuadInt multiple_minus(const BigInt& n, const BigInt& m, Irrational alpha) {
  switch (alpha) {
    case Irrational::phi: return {BigInt(-m), n, Base::phi};
    case Irrational::sigma: return {BigInt(n - m), n, Base::silver};
    case Irrational::sigma_plus_1: return {BigInt(2 * n - m), n, Base::silver};
  }
  throw std::logic_error("multiple_minus");
}

}  // namespace detail

/// floor(n * alpha) for n >= 0, exact. The candidate comes from an integer
/// square root and is confirmed as the largest m with sign(n alpha - m) >= 0.
inline std::int64_t floor_multiple(std::int64_t n, Irrational alpha) {
  if (n < 0) throw std::invalid_argument("floor_multiple: n must be >= 0");
  const BigInt big_n = n;
  BigInt m;
  switch (alpha) {
    case Irrational::phi:  // (n + n sqrt 5) / 2
      m = (big_n + boost::multiprecision::sqrt(BigInt(5 * big_n * big_n))) / 2;
      break;
    case Irrational::sigma:  // n + n sqrt 2
      m = big_n + boost::multiprecision::sqrt(BigInt(2 * big_n * big_n));
      break;
    case Irrational::sigma_plus_1:  // 2n + n sqrt 2
      m = 2 * big_n + boost::multiprecision::sqrt(BigInt(2 * big_n * big_n));
      break;
  }
  while (sign(detail::multiple_minus(big_n, m, alpha)) < 0) --m;
  while (sign(detail::multiple_minus(big_n, BigInt(m + 1), alpha)) >= 0) ++m;
  return static_cast<std::int64_t>(m);
}

inline std::int64_t gbs_term(const GbsParams& g, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("gbs_term: n must be >= 0");
  return g.p * floor_multiple(n, g.alpha) + g.q * n + g.r;
}

/// Both possible steps V_{n+1} - V_n are positive, so the sequence is strictly
/// increasing for every starting index.
inline bool gbs_strictly_increasing(const GbsParams& g) {
  std::int64_t whole = 0;
  switch (g.alpha) {
    case Irrational::phi: whole = 1; break;
    case Irrational::sigma: whole = 2; break;
    case Irrational::sigma_plus_1: whole = 3; break;
  }
  return g.p * whole + g.q > 0 && g.p * (whole + 1) + g.q > 0;
}

/// Precomputed floor(n * alpha) for n = 0..count.
class FloorTable {
 public:
  FloorTable(Irrational alpha, std::int64_t count) : alpha_(alpha) {
    floors_.reserve(static_cast<std::size_t>(count + 1));
    for (std::int64_t n = 0; n <= count; ++n) floors_.push_back(floor_multiple(n, alpha));
  }
  Irrational alpha() const { return alpha_; }
  std::int64_t size() const { return static_cast<std::int64_t>(floors_.size()); }
  std::int64_t operator[](std::int64_t n) const { return floors_[static_cast<std::size_t>(n)]; }

 private:
  Irrational alpha_;
  std::vector<std::int64_t> floors_;
};

/// Terms V_n, n >= first_index, that fall in [1, nmax]. Requires a strictly
/// increasing sequence.
inline std::vector<std::int64_t> gbs_terms_upto(const GbsParams& g, std::int64_t nmax, int first_index = 1) {
  if (!gbs_strictly_increasing(g)) throw std::invalid_argument("gbs_terms_upto: sequence not increasing");
  std::vector<std::int64_t> out;
  for (std::int64_t n = first_index;; ++n) {
    const std::int64_t v = gbs_term(g, n);
    if (v > nmax) break;
    if (v >= 1) out.push_back(v);
  }
  return out;
}

/// True iff `positions` equals the union of the terms of every sequence in
/// `params`, intersected with [1, nmax].
inline bool gbs_prefix_match(std::span<const std::int64_t> positions, std::span<const GbsParams> params,
                             std::int64_t nmax, int first_index = 1) {
  std::set<std::int64_t> expected;
  for (const auto& g : params) {
    for (auto v : gbs_terms_upto(g, nmax, first_index)) expected.insert(v);
  }
  std::set<std::int64_t> observed;
  for (auto v : positions) {
    if (v >= 1 && v <= nmax) observed.insert(v);
  }
  return expected == observed && observed.size() == positions.size();
}

struct FitBounds {
  std::int64_t p_lo = -6, p_hi = 6;
  std::int64_t q_lo = -6, q_hi = 6;
  std::int64_t r_lo = -12, r_hi = 12;
  std::size_t max_union = 4;
  std::size_t min_terms = 4;        // candidates with fewer terms in range are ignored
  std::size_t max_solutions = 200;
};

/// Unions of at most max_union strictly increasing V(p, q, r), n >= 1
/// (alpha = phi unless given), whose terms in [1, nmax] are exactly
/// `positions`. No member of a returned union is redundant; smaller unions
/// are listed first.
inline std::vector<std::vector<GbsParams>> fit_gbs(std::span<const std::int64_t> positions, std::int64_t nmax,
                                                   const FitBounds& bounds = {},
                                                   Irrational alpha = Irrational::phi) {
  std::vector<std::vector<GbsParams>> solutions;
  if (positions.empty()) return solutions;

  std::vector<char> observed(static_cast<std::size_t>(nmax + 1), 0);
  for (auto v : positions) {
    if (v < 1 || v > nmax) throw std::invalid_argument("fit_gbs: position outside [1, nmax]");
    observed[static_cast<std::size_t>(v)] = 1;
  }

  const FloorTable floors(alpha, nmax + 1);
  struct Candidate {
    GbsParams params;
    std::vector<std::int64_t> terms;
  };
  std::vector<Candidate> candidates;
  for (std::int64_t p = bounds.p_lo; p <= bounds.p_hi; ++p) {
    for (std::int64_t q = bounds.q_lo; q <= bounds.q_hi; ++q) {
      const GbsParams shape{p, q, 0, alpha};
      if (!gbs_strictly_increasing(shape)) continue;
      for (std::int64_t r = bounds.r_lo; r <= bounds.r_hi; ++r) {
        Candidate c{{p, q, r, alpha}, {}};
        bool subset = true;
        for (std::int64_t n = 1; n < floors.size(); ++n) {
          const std::int64_t v = p * floors[n] + q * n + r;
          if (v > nmax) break;
          if (v < 1) continue;
          if (!observed[static_cast<std::size_t>(v)]) {
            subset = false;
            break;
          }
          c.terms.push_back(v);
        }
        if (subset && c.terms.size() >= bounds.min_terms) candidates.push_back(std::move(c));
      }
    }
  }

  // Cover search: always extend with a candidate containing the smallest
  // uncovered position. Depths grow one at a time so smaller unions come
  // first; unions with a redundant member are dropped.
  std::vector<std::vector<std::size_t>> containing(static_cast<std::size_t>(nmax + 1));
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    for (auto v : candidates[k].terms) containing[static_cast<std::size_t>(v)].push_back(k);
  }
  std::vector<int> cover(static_cast<std::size_t>(nmax + 1), 0);
  std::vector<std::size_t> chosen;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::int64_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());

  auto irredundant = [&] {
    for (auto k : chosen) {
      const auto& terms = candidates[k].terms;
      if (std::all_of(terms.begin(), terms.end(), [&](std::int64_t v) { return cover[static_cast<std::size_t>(v)] > 1; }))
        return false;
    }
    return true;
  };

  std::size_t depth = 0;
  auto search = [&](auto&& self) -> void {
    if (solutions.size() >= bounds.max_solutions) return;
    auto uncovered = std::find_if(sorted.begin(), sorted.end(),
                                  [&](std::int64_t v) { return cover[static_cast<std::size_t>(v)] == 0; });
    if (uncovered == sorted.end()) {
      if (chosen.size() != depth || !irredundant()) return;
      std::vector<std::size_t> key = chosen;
      std::sort(key.begin(), key.end());
      if (seen.insert(key).second) {
        std::vector<GbsParams> union_params;
        for (auto k : key) union_params.push_back(candidates[k].params);
        solutions.push_back(std::move(union_params));
      }
      return;
    }
    if (chosen.size() == depth) return;
    for (auto k : containing[static_cast<std::size_t>(*uncovered)]) {
      chosen.push_back(k);
      for (auto v : candidates[k].terms) ++cover[static_cast<std::size_t>(v)];
      self(self);
      for (auto v : candidates[k].terms) --cover[static_cast<std::size_t>(v)];
      chosen.pop_back();
    }
  };
  for (depth = 1; depth <= bounds.max_union; ++depth) search(search);
  return solutions;
}

inline nlohmann::json to_json(const GbsParams& g) {
  return {{"p", g.p}, {"q", g.q}, {"r", g.r}, {"alpha", to_string(g.alpha)}};
}

inline nlohmann::json to_json(std::span<const GbsParams> union_params) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& g : union_params) j.push_back(to_json(g));
  return j;
}

inline GbsParams gbs_from_json(const nlohmann::json& j) {
  return {j.at("p").get<std::int64_t>(), j.at("q").get<std::int64_t>(), j.at("r").get<std::int64_t>(),
          irrational_from_string(j.at("alpha").get<std::string>())};
}

}  // namespace goldbase

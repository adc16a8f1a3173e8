#pragma once

// Finite verification suites and exploratory conjecture scans. Each suite
// returns a ReportEnvelope; the CLI and the acceptance tests share them.

#include "goldbase/beatty.hpp"
#include "goldbase/parallel.hpp"
#include "goldbase/report.hpp"
#include "goldbase/representation.hpp"
#include "goldbase/runs.hpp"
#include "goldbase/silver.hpp"
#include "goldbase/structure.hpp"
#include "goldbase/table.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace goldbase {

/// Builds each expansion table at most once per (base, nmax).
class TableCache {
 public:
  explicit TableCache(unsigned jobs = 1) : jobs_(jobs) {}

  const ExpansionTable& get(Base base, std::int64_t nmax) {
    auto& slot = tables_[{base, nmax}];
    if (!slot) slot = std::make_unique<ExpansionTable>(ExpansionTable::build(base, nmax, jobs_));
    return *slot;
  }
  unsigned jobs() const { return jobs_; }

 private:
  unsigned jobs_;
  std::map<std::pair<Base, std::int64_t>, std::unique_ptr<ExpansionTable>> tables_;
};

namespace detail {

/// Smallest N in [first, last] for which bad(N) holds, scanning in parallel.
template <class Pred>
std::optional<std::int64_t> first_failure(std::int64_t first, std::int64_t last, unsigned jobs, Pred bad) {
  std::optional<std::int64_t> result;
  std::mutex m;
  parallel_for_ranges(first, last + 1, jobs, [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t n = begin; n < end; ++n) {
      if (bad(n)) {
        std::lock_guard lock(m);
        if (!result || n < *result) result = n;
        return;
      }
    }
  });
  return result;
}

inline CheckRecord range_check(std::string name, std::int64_t first, std::int64_t last,
                               std::optional<std::int64_t> failure) {
  CheckRecord c{std::move(name), !failure, false, {{"from", first}, {"to", last}}};
  if (failure) c.data["counterexample"] = *failure;
  return c;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Suites

/// Type codes and the canonical construction.
inline void check_type_codes(ReportEnvelope& out, TableCache& cache, std::int64_t nmax) {
  const auto& t = cache.get(Base::phi, nmax);
  auto code = [&](std::int64_t n) { return type_code_of(t.standard(n)); };

  out.add(detail::range_check("round_trip", 1, nmax, detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
    const QuadInt want = integer<BigInt>(n, Base::phi);
    return !(eval_digits(t.standard(n)) == want) || !(eval_digits(t.canonical(n)) == want) ||
           !is_admissible(t.standard(n), Scheme::standard) || !is_admissible(t.canonical(n), Scheme::canonical);
  })));
  out.add(detail::range_check("canonical_pair_iff_type_B", 1, nmax,
                              detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
                                const auto& g = t.canonical(n);
                                const bool pair = g.digit(1) == 1 && g.digit(0) == 1;
                                return pair != (code(n) == TypeCode::B);
                              })));
  out.add(detail::range_check("A_followed_by_B", 1, nmax,
                              detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
                                const bool a_then_not_b = n < nmax && code(n) == TypeCode::A && code(n + 1) != TypeCode::B;
                                const bool b_without_a = code(n) == TypeCode::B && (n == 1 || code(n - 1) != TypeCode::A);
                                return a_then_not_b || b_without_a;
                              })));
  out.add(detail::range_check("no_10.1_pattern", 1, nmax,
                              detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
                                const auto& b = t.standard(n);
                                return b.digit(1) == 1 && b.digit(0) == 0 && b.digit(-1) == 1;
                              })));
}

/// gamma(N) != beta(N) exactly on floor((phi + 2) n), with density 1/(phi + 2).
inline void check_mismatch_density(ReportEnvelope& out, TableCache& cache, std::int64_t nmax) {
  const auto& t = cache.get(Base::phi, nmax);
  std::vector<std::int64_t> mismatches;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    if (!(t.standard(n) == t.canonical(n))) mismatches.push_back(n);
  }
  const GbsParams seq{1, 2, 0, Irrational::phi};
  const bool equal = gbs_prefix_match(mismatches, std::span<const GbsParams>(&seq, 1), nmax);
  out.add({"mismatch_set_is_floor_phi_plus_2", equal, false,
           {{"nmax", nmax}, {"count", mismatches.size()}, {"sequence", to_json(seq)}}});

  // 1 / (phi + 2) = (5 - sqrt 5) / 10
  const double limit = (5.0 - std::sqrt(5.0)) / 10.0;
  const double fraction = static_cast<double>(mismatches.size()) / static_cast<double>(nmax);
  out.add({"mismatch_density", std::abs(fraction - limit) <= 0.001, false,
           {{"fraction", fraction}, {"limit", limit}, {"tolerance", 0.001}}});
}

/// Exactly one admissible string per scheme inside the window [-14, 14].
inline void check_uniqueness(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, Base base = Base::phi,
                             int half_window = 14) {
  const auto& t = cache.get(base, nmax);
  for (Scheme scheme : {Scheme::standard, Scheme::canonical}) {
    const auto failure = detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
      const auto found = brute_force_reps(n, half_window, -half_window, scheme, base);
      return found.size() != 1 || !(found.front() == t.at(n, scheme));
    });
    auto rec = detail::range_check(std::string("unique_") + to_string(base) + "_" + to_string(scheme), 1, nmax, failure);
    rec.data["window"] = {-half_window, half_window};
    out.add(std::move(rec));
  }
}

/// Closed forms for expansions of Lucas numbers, n = 1..max_index, and of
/// 2 L_{2n}, n = 2..max_index.
inline void check_closed_forms(ReportEnvelope& out, int max_index) {
  std::optional<std::int64_t> bad;
  std::optional<std::int64_t> bad_double;
  for (int n = 1; n <= max_index && !bad; ++n) {
    const auto f = lucas_closed_forms(n);
    const BigInt even = lucas(2 * n);
    const BigInt odd = lucas(2 * n + 1);
    const bool ok = f.bergman_even == bergman_of(even) && f.canonical_even == canonical_of(even) &&
                    f.odd == bergman_of(odd) && f.odd == canonical_of(odd) &&
                    f.even_plus_one == bergman_of(even + 1) && f.even_plus_one == canonical_of(even + 1) &&
                    f.odd_plus_one == bergman_of(odd + 1) && f.odd_plus_one == canonical_of(odd + 1);
    if (!ok) bad = n;
  }
  for (int n = 2; n <= max_index && !bad_double; ++n) {
    if (!(double_lucas_gamma(n) == canonical_of(BigInt(2 * lucas(2 * n))))) bad_double = n;
  }
  out.add(detail::range_check("lucas_closed_forms", 1, max_index, bad));
  out.add(detail::range_check("double_lucas_canonical", 2, max_index, bad_double));
}

/// (L, R) = predicted_lr(k) on every length-interval of index k >= 1.
inline void check_length_law(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, Scheme scheme) {
  const auto& t = cache.get(Base::phi, nmax);
  const std::string tag = scheme == Scheme::standard ? "bergman" : "canonical";
  out.add(detail::range_check(tag + "_length_law", 2, nmax,
                              detail::first_failure(2, nmax, cache.jobs(), [&](std::int64_t n) {
                                const auto k = interval_index(n, scheme);
                                const auto& rep = t.at(n, scheme);
                                return !k || predicted_lr(*k) != std::pair{rep.left_index(), rep.right_index()};
                              })));
  const auto& one = t.at(1, scheme);
  out.add({tag + "_length_of_one", one.left_index() == 0 && one.right_index() == 0, false,
           {{"L", one.left_index()}, {"R", one.right_index()}}});
}

inline void check_recursive(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, Scheme scheme) {
  const auto& t = cache.get(Base::phi, nmax);
  const std::string tag = scheme == Scheme::standard ? "recursive_bergman" : "recursive_canonical";
  out.add(detail::range_check(tag, 1, nmax, detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
    try {
      return !(detail::recursive_expansion(n, scheme) == t.at(n, scheme));
    } catch (const std::logic_error&) {
      return true;
    }
  })));
}

/// Digit c_{-2n+3} vanishes on Gamma_{2n}; c_{-2n+1} is 1 exactly on the
/// first L_{2n-1} members of Gamma_{2n+1}.
inline void check_boundary_digits(ReportEnvelope& out, int max_index) {
  std::optional<std::int64_t> bad_a;
  std::optional<std::int64_t> bad_b;
  for (int n = 2; n <= max_index; ++n) {
    const Interval even = gamma_interval(2 * n);
    for (std::int64_t m = even.lo; m <= even.hi && !bad_a; ++m) {
      if (canonical_of(m).digit(-2 * n + 3) != 0) bad_a = n;
    }
    const Interval odd = gamma_interval(2 * n + 1);
    const std::int64_t head = lucas(2 * n - 1);
    for (std::int64_t m = odd.lo; m <= odd.hi && !bad_b; ++m) {
      const bool one = canonical_of(m).digit(-2 * n + 1) == 1;
      if (one != (m - odd.lo < head)) bad_b = n;
    }
  }
  out.add(detail::range_check("gamma_even_zero_digit", 2, max_index, bad_a));
  out.add(detail::range_check("gamma_odd_leading_ones", 2, max_index, bad_b));
}

inline void check_orthogonality(ReportEnvelope& out, int max_index) {
  std::optional<std::int64_t> bad_oe;
  std::optional<std::int64_t> bad_eo;
  for (int n = 1; n <= max_index; ++n) {
    const auto r = ortho_check(n);
    if (!r.odd_even && !bad_oe) bad_oe = n;
    if (!r.even_odd && !bad_eo) bad_eo = n;
  }
  out.add(detail::range_check("shared_ones_lucas_even", 1, max_index, bad_oe));
  out.add(detail::range_check("shared_ones_lucas_odd", 1, max_index, bad_eo));
}

/// Complete runs of 1's in canonical columns [-span, span] have Lucas length;
/// the Bergman columns show every length 1..7.
inline void check_run_lengths(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, int span = 14) {
  const auto& t = cache.get(Base::phi, nmax);
  std::vector<RunReport> reports(static_cast<std::size_t>(2 * span + 1));
  parallel_for_ranges(-span, span + 1, cache.jobs(), [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t i = begin; i < end; ++i) {
      reports[static_cast<std::size_t>(i + span)] = verify_run_theorem(t, static_cast<int>(i));
    }
  });
  nlohmann::json columns = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    all = all && r.pass;
    nlohmann::json c = {{"column", r.column},
                        {"predicted", r.predicted_length},
                        {"complete_runs", r.complete_runs()},
                        {"pass", r.pass}};
    if (r.first_violation) c["first_violation"] = {{"startN", r.first_violation->start}, {"length", r.first_violation->length}};
    columns.push_back(c);
  }
  out.add({"canonical_run_lengths", all, false, {{"nmax", nmax}, {"columns", columns}}});

  const auto lengths = observed_run_lengths(t, Scheme::standard, -span, span);
  bool contains = true;
  for (std::int64_t k = 1; k <= 7; ++k) contains = contains && lengths.count(k) == 1;
  out.add({"bergman_run_lengths_1_to_7", contains, false, {{"observed", lengths}}});
}

inline void check_silver(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, std::int64_t unique_max = 300) {
  const auto& t = cache.get(Base::silver, nmax);
  out.add(detail::range_check("silver_round_trip", 1, nmax,
                              detail::first_failure(1, nmax, cache.jobs(), [&](std::int64_t n) {
                                const QuadInt want = integer<BigInt>(n, Base::silver);
                                return !(eval_digits(t.standard(n)) == want) || !(eval_digits(t.canonical(n)) == want) ||
                                       !is_admissible(t.standard(n), Scheme::standard) ||
                                       !is_admissible(t.canonical(n), Scheme::canonical);
                              })));
  check_uniqueness(out, cache, std::min(nmax, unique_max), Base::silver, 10);
  const auto mismatch = silver_mismatch_scan(t);
  out.add({"silver_mismatch_sequence", mismatch.matches_sequence, false, to_json(mismatch)});
}

// ---------------------------------------------------------------------------
// Conjecture scans (consistency to nmax, never proofs)

inline void scan_beatty_columns(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, int span = 4) {
  const auto& t = cache.get(Base::phi, nmax);
  auto positions_of = [&](int i, std::int64_t from) {
    std::vector<std::int64_t> pos;
    const auto col = t.column(i, Scheme::canonical);
    for (std::int64_t n = from; n <= nmax; ++n) {
      if (col[static_cast<std::size_t>(n - 1)] == 1) pos.push_back(n);
    }
    return pos;
  };

  // Known characterizations of columns 0 and -1, under both index conventions.
  const GbsParams col0[] = {{1, 2, 0, Irrational::phi}, {1, 2, 1, Irrational::phi}};
  const GbsParams colm1[] = {{3, 1, 1, Irrational::phi}};
  const auto pos0 = positions_of(0, 1);
  const auto pos0_from2 = positions_of(0, 2);
  const auto posm1 = positions_of(-1, 1);
  out.add({"column_0_union", gbs_prefix_match(pos0_from2, col0, nmax, 1), false,
           {{"union", to_json(std::span<const GbsParams>(col0))}, {"from_N", 2}, {"first_index", 1}}});
  out.add({"column_0_union_from_index_0", gbs_prefix_match(pos0, col0, nmax, 0), true,
           {{"union", to_json(std::span<const GbsParams>(col0))}, {"first_index", 0}}});
  out.add({"column_-1_sequence", gbs_prefix_match(posm1, colm1, nmax, 1), false,
           {{"union", to_json(std::span<const GbsParams>(colm1))}, {"first_index", 1}}});
  out.add({"column_-1_sequence_from_index_0", gbs_prefix_match(posm1, colm1, nmax, 0), true,
           {{"union", to_json(std::span<const GbsParams>(colm1))}, {"first_index", 0}}});

  for (int i = -span; i <= span; ++i) {
    const auto pos = positions_of(i, i == 0 ? 2 : 1);
    FitBounds bounds;
    bounds.max_solutions = 8;
    nlohmann::json fits = nlohmann::json::array();
    std::size_t found = 0;
    if (!pos.empty()) {
      const auto sols = fit_gbs(pos, nmax, bounds);
      found = sols.size();
      for (const auto& s : sols) fits.push_back(to_json(std::span<const GbsParams>(s)));
    }
    out.add({"fit_column_" + std::to_string(i), found > 0, true,
             {{"column", i}, {"positions", pos.size()}, {"candidates", fits}}});
  }
}

inline void scan_silver_mismatch(ReportEnvelope& out, TableCache& cache, std::int64_t nmax) {
  const auto r = silver_mismatch_scan(cache.get(Base::silver, nmax));
  out.add({"silver_mismatch_sequence", r.matches_sequence, false, to_json(r)});
}

inline void scan_silver_intervals(ReportEnvelope& out, TableCache& cache, std::int64_t nmax) {
  for (const auto& rec : silver_interval_scan(cache.get(Base::silver, nmax))) {
    out.add({std::string("silver_interval_") + to_string(rec.scheme) + "_" + std::to_string(rec.index), rec.pass(),
             false, to_json(rec)});
  }
}

inline void scan_silver_runs(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, int span = 6) {
  const auto& t = cache.get(Base::silver, nmax);
  for (int i = -span; i <= span; ++i) {
    const auto r = silver_run_scan(t, i);
    out.add({"silver_blocks_column_" + std::to_string(i), r.pass, !r.asserted, to_json(r)});
  }
}

inline void scan_chains(ReportEnvelope& out, TableCache& cache, std::int64_t nmax, std::size_t max_links = 12) {
  const auto chains = chain_report(cache.get(Base::phi, nmax), max_links);
  std::size_t left = 0, right = 0, lucas_like = 0;
  nlohmann::json longest_left, longest_right;
  std::size_t best_left = 0, best_right = 0;
  for (const auto& c : chains) {
    lucas_like += c.follows_lucas() ? 1 : 0;
    if (c.side == ChainSide::left) {
      ++left;
      if (c.links.size() > best_left) best_left = c.links.size(), longest_left = to_json(c);
    } else {
      ++right;
      if (c.links.size() > best_right) best_right = c.links.size(), longest_right = to_json(c);
    }
  }
  out.add({"chains", lucas_like == chains.size(), true,
           {{"left_chains", left},
            {"right_chains", right},
            {"following_lucas", lucas_like},
            {"longest_left", longest_left},
            {"longest_right", longest_right}}});
}

// ---------------------------------------------------------------------------
// Registry

struct SuiteEntry {
  std::string name;
  std::string summary;
  std::int64_t default_max;
  bool index_range;  // max is an index bound rather than an N bound
  std::function<void(ReportEnvelope&, TableCache&, std::int64_t)> run;
};

inline const std::vector<SuiteEntry>& verify_suites() {
  static const std::vector<SuiteEntry> suites = {
      {"lemma31", "type codes, canonical pair, A->B succession, round trips", 100000, false,
       [](auto& o, auto& c, auto m) { check_type_codes(o, c, m); }},
      {"uniqueness", "brute-force uniqueness in the window [-14, 14]", 500, false,
       [](auto& o, auto& c, auto m) { check_uniqueness(o, c, m); }},
      {"prop32", "mismatch set and its density", 100000, false,
       [](auto& o, auto& c, auto m) { check_mismatch_density(o, c, m); }},
      {"lemma41", "closed forms for Lucas numbers (max = index bound)", 15, true,
       [](auto& o, auto&, auto m) { check_closed_forms(o, static_cast<int>(m)); }},
      {"prop41", "Bergman (L, R) law on Lucas intervals", 100000, false,
       [](auto& o, auto& c, auto m) { check_length_law(o, c, m, Scheme::standard); }},
      {"prop42", "canonical (L, R) law on canonical Lucas intervals", 100000, false,
       [](auto& o, auto& c, auto m) { check_length_law(o, c, m, Scheme::canonical); }},
      {"thm51", "recursive Bergman construction", 20000, false,
       [](auto& o, auto& c, auto m) { check_recursive(o, c, m, Scheme::standard); }},
      {"thm52", "recursive canonical construction", 20000, false,
       [](auto& o, auto& c, auto m) { check_recursive(o, c, m, Scheme::canonical); }},
      {"lemma51", "boundary digits on canonical Lucas intervals (max = index bound)", 10, true,
       [](auto& o, auto&, auto m) { check_boundary_digits(o, static_cast<int>(m)); }},
      {"lemma61", "shared 1-positions at Lucas numbers (max = index bound)", 12, true,
       [](auto& o, auto&, auto m) { check_orthogonality(o, static_cast<int>(m)); }},
      {"thm61", "vertical run lengths, columns -14..14", 100000, false,
       [](auto& o, auto& c, auto m) { check_run_lengths(o, c, m); }},
      {"silver", "silver round trips, uniqueness, mismatch set", 20000, false,
       [](auto& o, auto& c, auto m) { check_silver(o, c, m); }},
  };
  return suites;
}

inline const std::vector<SuiteEntry>& conjecture_targets() {
  static const std::vector<SuiteEntry> targets = {
      {"beatty_columns", "Beatty-union fits for canonical columns -4..4", 5000, false,
       [](auto& o, auto& c, auto m) { scan_beatty_columns(o, c, m); }},
      {"silver_mismatch", "silver mismatch set against V(2,2,0)", 20000, false,
       [](auto& o, auto& c, auto m) { scan_silver_mismatch(o, c, m); }},
      {"silver_intervals", "silver length intervals", 20000, false,
       [](auto& o, auto& c, auto m) { scan_silver_intervals(o, c, m); }},
      {"silver_runs", "silver vertical blocks, columns -6..6", 20000, false,
       [](auto& o, auto& c, auto m) { scan_silver_runs(o, c, m); }},
      {"chains", "chains of runs across adjacent columns", 1000, false,
       [](auto& o, auto& c, auto m) { scan_chains(o, c, m); }},
  };
  return targets;
}

inline const SuiteEntry* find_suite(const std::vector<SuiteEntry>& list, const std::string& name) {
  for (const auto& s : list) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

/// Runs one named suite, or every suite for "all". An explicit max applies to
/// N-ranged suites; index-bounded suites keep their defaults under "all".
inline ReportEnvelope run_suite(const std::vector<SuiteEntry>& list, const std::string& name,
                                std::optional<std::int64_t> max, unsigned jobs = 1) {
  const auto start = std::chrono::steady_clock::now();
  ReportEnvelope env;
  env.suite = name;
  TableCache cache(jobs);
  auto run_one = [&](const SuiteEntry& s, bool in_all) {
    std::int64_t m = s.default_max;
    if (max && !(in_all && s.index_range)) m = *max;
    if (m < 1) throw std::invalid_argument("max must be >= 1");
    env.nmax = std::max(env.nmax, m);
    s.run(env, cache, m);
  };
  if (name == "all") {
    for (const auto& s : list) run_one(s, true);
  } else {
    const SuiteEntry* s = find_suite(list, name);
    if (!s) throw std::invalid_argument("unknown suite " + name);
    run_one(*s, false);
  }
  env.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return env;
}

}  // namespace goldbase

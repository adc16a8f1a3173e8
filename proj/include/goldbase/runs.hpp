#pragma once

// Column-wise ("vertical") digit analysis over tables of expansions.

#include "goldbase/structure.hpp"
#include "goldbase/table.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace goldbase {

struct Run {
  std::int64_t start = 1;  // first N of the run
  std::int64_t length = 0;
  bool complete = true;    // false if the run touches the end of the scanned range

  std::int64_t last() const { return start + length - 1; }
  friend bool operator==(const Run&, const Run&) = default;
};

/// Maximal runs of `symbol` in seq, where seq[k] belongs to N = k + 1.
inline std::vector<Run> extract_runs(std::span<const DigitString::Digit> seq, DigitString::Digit symbol) {
  std::vector<Run> runs;
  const auto n = static_cast<std::int64_t>(seq.size());
  std::int64_t k = 0;
  while (k < n) {
    if (seq[static_cast<std::size_t>(k)] != symbol) {
      ++k;
      continue;
    }
    const std::int64_t begin = k;
    while (k < n && seq[static_cast<std::size_t>(k)] == symbol) ++k;
    runs.push_back({begin + 1, k - begin, k < n});
  }
  return runs;
}

inline std::vector<DigitString::Digit> digit_column(const ExpansionTable& table, int i, Scheme scheme) {
  return table.column(i, scheme);
}

inline std::vector<DigitString::Digit> digit_column(int i, std::int64_t nmax, Scheme scheme, Base base = Base::phi) {
  return ExpansionTable::build(base, nmax).column(i, scheme);
}

struct RunReport {
  int column = 0;
  std::vector<Run> runs;
  std::int64_t predicted_length = 0;
  bool first_run_exempt = false;  // column 0: the first run has length 1
  bool pass = true;
  std::optional<Run> first_violation;

  std::size_t complete_runs() const {
    std::size_t c = 0;
    for (const auto& r : runs) c += r.complete ? 1 : 0;
    return c;
  }
};

/// Lucas length predicted for runs of 1's in canonical column i:
/// L_{i-1} for i >= 1 and L_{-i} for i <= 0.
inline std::int64_t predicted_run_length(int i) { return i >= 1 ? lucas(i - 1) : lucas(-i); }

inline RunReport verify_run_theorem(const ExpansionTable& table, int i) {
  if (table.base() != Base::phi) throw std::invalid_argument("verify_run_theorem: base phi only");
  RunReport report;
  report.column = i;
  report.predicted_length = predicted_run_length(i);
  report.first_run_exempt = i == 0;
  const auto column = table.column(i, Scheme::canonical);
  report.runs = extract_runs(column, 1);
  for (std::size_t k = 0; k < report.runs.size(); ++k) {
    const Run& run = report.runs[k];
    if (!run.complete) continue;
    if (k == 0 && report.first_run_exempt) {
      if (run.length == 1) continue;
    } else if (run.length == report.predicted_length) {
      continue;
    }
    report.pass = false;
    if (!report.first_violation) report.first_violation = run;
  }
  return report;
}

inline RunReport verify_run_theorem(int i, std::int64_t nmax) {
  return verify_run_theorem(ExpansionTable::build(Base::phi, nmax), i);
}

inline nlohmann::json to_json(const RunReport& r) {
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& run : r.runs) runs.push_back({{"startN", run.start}, {"length", run.length}, {"complete", run.complete}});
  nlohmann::json j = {{"column", r.column},
                      {"predicted", r.predicted_length},
                      {"first_run_exempt", r.first_run_exempt},
                      {"complete_runs", r.complete_runs()},
                      {"pass", r.pass},
                      {"runs", runs}};
  if (r.first_violation) j["first_violation"] = {{"startN", r.first_violation->start}, {"length", r.first_violation->length}};
  return j;
}

/// CSV rows: column,startN,length,complete,predicted,pass
inline std::string to_csv(std::span<const RunReport> reports) {
  std::ostringstream os;
  os << "column,startN,length,complete,predicted,pass\n";
  for (const auto& r : reports) {
    for (std::size_t k = 0; k < r.runs.size(); ++k) {
      const Run& run = r.runs[k];
      const bool ok = !run.complete || (k == 0 && r.first_run_exempt && run.length == 1) ||
                      run.length == r.predicted_length;
      os << r.column << ',' << run.start << ',' << run.length << ',' << (run.complete ? "true" : "false") << ','
         << r.predicted_length << ',' << (ok ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

/// Run lengths of 1's observed in complete runs of the given scheme over the
/// columns [lo, hi].
inline std::set<std::int64_t> observed_run_lengths(const ExpansionTable& table, Scheme scheme, int lo, int hi) {
  std::set<std::int64_t> lengths;
  for (int i = lo; i <= hi; ++i) {
    for (const auto& run : extract_runs(table.column(i, scheme), 1)) {
      if (run.complete) lengths.insert(run.length);
    }
  }
  return lengths;
}

// ---------------------------------------------------------------------------
// Digit coincidences at the ends of canonical Lucas intervals

struct OrthoResult {
  bool odd_even = false;  // shared 1-positions of gamma(L_{2n}), gamma(L_{2n}+1) are exactly {0, -2n}
  bool even_odd = false;  // gamma(L_{2n+1}), gamma(L_{2n+1}+1) share no 1 in [-2n-2, 2n+2]
};

inline OrthoResult ortho_check(int n) {
  if (n < 1 || 2 * n + 1 >= kMaxLucasIndex) throw std::out_of_range("ortho_check: n out of range");
  OrthoResult out;
  const DigitString a = canonical_of(lucas(2 * n));
  const DigitString b = canonical_of(lucas(2 * n) + 1);
  std::set<int> shared;
  a.for_each_nonzero([&](int e, DigitString::Digit d) {
    if (d == 1 && b.digit(e) == 1) shared.insert(e);
  });
  out.odd_even = shared == std::set<int>{0, -2 * n};

  const DigitString c = canonical_of(lucas(2 * n + 1));
  const DigitString d = canonical_of(lucas(2 * n + 1) + 1);
  out.even_odd = true;
  for (int e = -2 * n - 2; e <= 2 * n + 2; ++e) {
    if (c.digit(e) == 1 && d.digit(e) == 1) out.even_odd = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chains of runs across adjacent columns (exploratory)

enum class ChainSide { left, right };

struct ChainLink {
  int column = 0;
  Run run;
  std::int64_t signed_length = 0;
};

struct Chain {
  ChainSide side = ChainSide::left;
  std::vector<ChainLink> links;
  bool truncated = false;  // stopped by max_links rather than by a missing link

  std::vector<std::int64_t> lengths() const {
    std::vector<std::int64_t> out;
    for (const auto& l : links) out.push_back(l.signed_length);
    return out;
  }

  /// Left: lengths are L_0, L_1, ...; right: L_0, L_{-1}, L_{-2}, ... with
  /// L_{-n} = (-1)^n L_n.
  bool follows_lucas() const {
    for (std::size_t k = 0; k < links.size(); ++k) {
      std::int64_t expected = lucas(static_cast<int>(k));
      if (side == ChainSide::right && k % 2 == 1) expected = -expected;
      if (links[k].signed_length != expected) return false;
    }
    return true;
  }
};

namespace detail {
struct ColumnRuns {
  std::vector<Run> runs;
  std::unordered_map<std::int64_t, std::size_t> by_start;
  std::unordered_map<std::int64_t, std::size_t> by_last;

  explicit ColumnRuns(std::vector<Run> r) : runs(std::move(r)) {
    for (std::size_t k = 0; k < runs.size(); ++k) {
      if (!runs[k].complete) continue;
      by_start.emplace(runs[k].start, k);
      by_last.emplace(runs[k].last(), k);
    }
  }
  const Run* starting_at(std::int64_t n) const {
    auto it = by_start.find(n);
    return it == by_start.end() ? nullptr : &runs[it->second];
  }
  const Run* ending_at(std::int64_t n) const {
    auto it = by_last.find(n);
    return it == by_last.end() ? nullptr : &runs[it->second];
  }
};
}  // namespace detail

/// Links complete runs of 1's of the canonical table into chains.
///
/// Left side (i >= 1): a chain starts at a run in column 1; a run in column j
/// ending at row e is followed by the run in column j + 1 that starts at row
/// e + 1.
///
/// Right side (i <= 0): a chain starts at a run in column 0 ending at row e;
/// it continues through columns -1, -2, ... where odd offsets need a run
/// starting at row e + 1 (negative length) and even offsets a run ending at
/// row e (positive length).
inline std::vector<Chain> chain_report(const ExpansionTable& table, std::size_t max_links, int column_span = 40) {
  std::vector<Chain> chains;
  if (max_links == 0 || table.nmax() < 2) return chains;
  std::vector<std::optional<detail::ColumnRuns>> cache(static_cast<std::size_t>(2 * column_span + 1));
  auto runs_at = [&](int col) -> const detail::ColumnRuns& {
    auto& slot = cache[static_cast<std::size_t>(col + column_span)];
    if (!slot) slot.emplace(extract_runs(table.column(col, Scheme::canonical), 1));
    return *slot;
  };

  for (const Run& first : runs_at(1).runs) {
    if (!first.complete) continue;
    Chain chain;
    chain.side = ChainSide::left;
    chain.links.push_back({1, first, first.length});
    for (int col = 2; col <= column_span; ++col) {
      const Run* next = runs_at(col).starting_at(chain.links.back().run.last() + 1);
      if (!next) break;
      if (chain.links.size() == max_links) {
        chain.truncated = true;
        break;
      }
      chain.links.push_back({col, *next, next->length});
    }
    chains.push_back(std::move(chain));
  }

  for (const Run& first : runs_at(0).runs) {
    // the length-1 run at N = 1 is the column-0 exception, not a chain head
    if (!first.complete || first.start == 1) continue;
    const std::int64_t boundary = first.last();
    Chain chain;
    chain.side = ChainSide::right;
    chain.links.push_back({0, first, first.length});
    for (int offset = 1; offset <= column_span; ++offset) {
      const bool odd = offset % 2 == 1;
      const Run* next = odd ? runs_at(-offset).starting_at(boundary + 1) : runs_at(-offset).ending_at(boundary);
      if (!next) break;
      if (chain.links.size() == max_links) {
        chain.truncated = true;
        break;
      }
      chain.links.push_back({-offset, *next, odd ? -next->length : next->length});
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

inline nlohmann::json to_json(const Chain& c) {
  nlohmann::json links = nlohmann::json::array();
  for (const auto& l : c.links) {
    links.push_back({{"column", l.column}, {"startN", l.run.start}, {"length", l.signed_length}});
  }
  return {{"side", c.side == ChainSide::left ? "left" : "right"},
          {"lengths", c.lengths()},
          {"follows_lucas", c.follows_lucas()},
          {"truncated", c.truncated},
          {"links", links}};
}

}  // namespace goldbase

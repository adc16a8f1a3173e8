#pragma once

// Silver mean (sigma = 1 + sqrt 2) numeration: Pell-Lucas intervals and the
// column scans over tables of standard and canonical expansions.

#include "goldbase/beatty.hpp"
#include "goldbase/runs.hpp"
#include "goldbase/structure.hpp"
#include "goldbase/table.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace goldbase {

inline constexpr int kMaxPellLucasIndex = 48;

/// Q_0 = 2, Q_1 = 2, Q_{n+2} = 2 Q_{n+1} + Q_n.
inline std::int64_t pell_lucas(int n) {
  if (n < 0 || n > kMaxPellLucasIndex) throw std::out_of_range("pell_lucas: index out of range");
  std::int64_t prev = 2;
  std::int64_t cur = 2;
  for (int k = 1; k < n; ++k) {
    const std::int64_t next = 2 * cur + prev;
    prev = cur;
    cur = next;
  }
  return n == 0 ? prev : cur;
}

/// Standard length-interval: {1, 2} for n = 0, [Q_n, Q_{n+1}] for even n >= 2,
/// [Q_n + 1, Q_{n+1} - 1] for odd n.
inline Interval pell_lambda_interval(int n) {
  if (n < 0 || n >= kMaxPellLucasIndex) throw std::out_of_range("pell_lambda_interval: n out of range");
  if (n == 0) return {1, 2};
  if (n % 2 == 0) return {pell_lucas(n), pell_lucas(n + 1)};
  return {pell_lucas(n) + 1, pell_lucas(n + 1) - 1};
}

/// Canonical length-interval: {1, 2} for n = 0, [Q_n + 1, Q_{n+1}] for n >= 1.
inline Interval pell_gamma_interval(int n) {
  if (n < 0 || n >= kMaxPellLucasIndex) throw std::out_of_range("pell_gamma_interval: n out of range");
  if (n == 0) return {1, 2};
  return {pell_lucas(n) + 1, pell_lucas(n + 1)};
}

inline Interval pell_length_interval(int n, Scheme scheme) {
  return scheme == Scheme::standard ? pell_lambda_interval(n) : pell_gamma_interval(n);
}

// ---------------------------------------------------------------------------
// Mismatch set

/// V(2, 2, 0) with alpha = sigma, i.e. 2 * floor(n (sigma + 1)).
inline GbsParams silver_mismatch_sequence() { return {2, 2, 0, Irrational::sigma}; }

struct SilverMismatchReport {
  std::int64_t nmax = 0;
  std::vector<std::int64_t> mismatches;  // N with standard(N) != canonical(N)
  bool matches_sequence = false;
  std::optional<std::int64_t> first_difference;
};

inline SilverMismatchReport silver_mismatch_scan(const ExpansionTable& table) {
  if (table.base() != Base::silver) throw std::invalid_argument("silver_mismatch_scan: silver table required");
  SilverMismatchReport report;
  report.nmax = table.nmax();
  for (std::int64_t n = 1; n <= table.nmax(); ++n) {
    if (!(table.standard(n) == table.canonical(n))) report.mismatches.push_back(n);
  }
  const auto expected = gbs_terms_upto(silver_mismatch_sequence(), table.nmax());
  report.matches_sequence = expected == report.mismatches;
  if (!report.matches_sequence) {
    std::size_t k = 0;
    while (k < expected.size() && k < report.mismatches.size() && expected[k] == report.mismatches[k]) ++k;
    if (k < expected.size() && k < report.mismatches.size()) {
      report.first_difference = std::min(expected[k], report.mismatches[k]);
    } else if (k < expected.size()) {
      report.first_difference = expected[k];
    } else {
      report.first_difference = report.mismatches[k];
    }
  }
  return report;
}

inline SilverMismatchReport silver_mismatch_scan(std::int64_t nmax, unsigned jobs = 1) {
  return silver_mismatch_scan(ExpansionTable::build(Base::silver, nmax, jobs));
}

inline nlohmann::json to_json(const SilverMismatchReport& r) {
  nlohmann::json head = nlohmann::json::array();
  for (std::size_t k = 0; k < r.mismatches.size() && k < 10; ++k) head.push_back(r.mismatches[k]);
  nlohmann::json j = {{"nmax", r.nmax},
                      {"count", r.mismatches.size()},
                      {"first_terms", head},
                      {"sequence", to_json(silver_mismatch_sequence())},
                      {"matches_sequence", r.matches_sequence}};
  if (r.first_difference) j["first_difference"] = *r.first_difference;
  return j;
}

// ---------------------------------------------------------------------------
// Length intervals

struct SilverIntervalRecord {
  Scheme scheme = Scheme::standard;
  int index = 0;
  Interval interval;
  bool partial = false;      // interval extends past nmax
  std::pair<int, int> lr{};  // (L, R) at the interval's first N
  bool constant = true;
  bool differs_from_previous = true;
  std::optional<std::int64_t> first_violation;

  bool pass() const { return constant && differs_from_previous; }
};

/// For each length-interval meeting [1, nmax], checks that (L, R) is constant
/// on it and changes when entering it.
inline std::vector<SilverIntervalRecord> silver_interval_scan(const ExpansionTable& table) {
  if (table.base() != Base::silver) throw std::invalid_argument("silver_interval_scan: silver table required");
  std::vector<SilverIntervalRecord> records;
  for (Scheme scheme : {Scheme::standard, Scheme::canonical}) {
    std::optional<std::pair<int, int>> previous;
    for (int k = 0; k < kMaxPellLucasIndex; ++k) {
      const Interval iv = pell_length_interval(k, scheme);
      if (iv.lo > table.nmax()) break;
      SilverIntervalRecord rec;
      rec.scheme = scheme;
      rec.index = k;
      rec.interval = iv;
      rec.partial = iv.hi > table.nmax();
      const auto lr_at = [&](std::int64_t n) {
        const DigitString& rep = table.at(n, scheme);
        return std::pair{rep.left_index(), rep.right_index()};
      };
      rec.lr = lr_at(iv.lo);
      const std::int64_t last = std::min(iv.hi, table.nmax());
      for (std::int64_t n = iv.lo + 1; n <= last; ++n) {
        if (lr_at(n) != rec.lr) {
          rec.constant = false;
          rec.first_violation = n;
          break;
        }
      }
      rec.differs_from_previous = !previous || *previous != rec.lr;
      if (!rec.differs_from_previous && !rec.first_violation) rec.first_violation = iv.lo;
      previous = rec.lr;
      records.push_back(rec);
    }
  }
  return records;
}

inline nlohmann::json to_json(const SilverIntervalRecord& r) {
  nlohmann::json j = {{"scheme", to_string(r.scheme)},
                      {"index", r.index},
                      {"lo", r.interval.lo},
                      {"hi", r.interval.hi},
                      {"partial", r.partial},
                      {"L", r.lr.first},
                      {"R", r.lr.second},
                      {"pass", r.pass()}};
  if (r.first_violation) j["first_violation"] = *r.first_violation;
  return j;
}

// ---------------------------------------------------------------------------
// Vertical blocks

/// A maximal stretch of nonzero digits in a column, stored run-length encoded
/// as (digit, length) pairs.
struct Block {
  std::int64_t start = 1;
  std::vector<std::pair<DigitString::Digit, std::int64_t>> runs;
  bool complete = true;

  std::int64_t length() const {
    std::int64_t total = 0;
    for (const auto& r : runs) total += r.second;
    return total;
  }
  /// e.g. "1^2 2^2"
  std::string word() const {
    std::string out;
    for (const auto& [d, len] : runs) {
      if (!out.empty()) out += ' ';
      out += std::to_string(d) + '^' + std::to_string(len);
    }
    return out;
  }
};

inline std::vector<Block> extract_blocks(std::span<const DigitString::Digit> seq) {
  std::vector<Block> blocks;
  const auto n = static_cast<std::int64_t>(seq.size());
  std::int64_t k = 0;
  while (k < n) {
    if (seq[static_cast<std::size_t>(k)] == 0) {
      ++k;
      continue;
    }
    Block block;
    block.start = k + 1;
    while (k < n && seq[static_cast<std::size_t>(k)] != 0) {
      const auto d = seq[static_cast<std::size_t>(k)];
      if (!block.runs.empty() && block.runs.back().first == d) {
        ++block.runs.back().second;
      } else {
        block.runs.emplace_back(d, 1);
      }
      ++k;
    }
    block.complete = k < n;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

struct SilverRunReport {
  int column = 0;
  bool asserted = true;                // false for column 0, which only reports its vocabulary
  std::vector<std::string> allowed;    // admissible block words
  std::map<std::string, std::int64_t> vocabulary;  // complete block word -> count
  std::size_t incomplete_blocks = 0;
  bool pass = true;
  std::optional<Block> first_violation;
};

/// Block words allowed in canonical column i != 0, with Q = Q_{|i|}:
/// i > 0: 1^{Q_i} 2^{Q_{i-1}}; even i < 0: 1^Q or 1^Q 2^Q; odd i < 0: 1^Q or
/// 2^Q 1^Q.
inline std::vector<std::string> silver_allowed_blocks(int i) {
  if (i == 0) return {};
  auto word = [](std::vector<std::pair<int, std::int64_t>> runs) {
    Block b;
    for (auto [d, len] : runs) b.runs.emplace_back(static_cast<DigitString::Digit>(d), len);
    return b.word();
  };
  if (i > 0) return {word({{1, pell_lucas(i)}, {2, pell_lucas(i - 1)}})};
  const std::int64_t q = pell_lucas(-i);
  if (i % 2 == 0) return {word({{1, q}}), word({{1, q}, {2, q}})};
  return {word({{1, q}}), word({{2, q}, {1, q}})};
}

inline SilverRunReport silver_run_scan(const ExpansionTable& table, int i) {
  if (table.base() != Base::silver) throw std::invalid_argument("silver_run_scan: silver table required");
  SilverRunReport report;
  report.column = i;
  report.asserted = i != 0;
  report.allowed = silver_allowed_blocks(i);
  const auto column = table.column(i, Scheme::canonical);
  for (const Block& block : extract_blocks(column)) {
    if (!block.complete) {
      ++report.incomplete_blocks;
      continue;
    }
    const std::string w = block.word();
    ++report.vocabulary[w];
    if (!report.asserted) continue;
    if (std::find(report.allowed.begin(), report.allowed.end(), w) == report.allowed.end()) {
      report.pass = false;
      if (!report.first_violation) report.first_violation = block;
    }
  }
  return report;
}

inline nlohmann::json to_json(const SilverRunReport& r) {
  nlohmann::json j = {{"column", r.column},
                      {"asserted", r.asserted},
                      {"allowed", r.allowed},
                      {"vocabulary", r.vocabulary},
                      {"incomplete_blocks", r.incomplete_blocks},
                      {"pass", r.pass}};
  if (r.first_violation) j["first_violation"] = {{"startN", r.first_violation->start}, {"word", r.first_violation->word()}};
  return j;
}

}  // namespace goldbase

#pragma once

#include "goldbase/digit_string.hpp"
#include "goldbase/parallel.hpp"
#include "goldbase/representation.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace goldbase {

/// Standard and canonical expansions of 1..nmax, built once and shared
/// read-only by the column scans.
class ExpansionTable {
 public:
  static ExpansionTable build(Base base, std::int64_t nmax, unsigned jobs = 1) {
    if (nmax < 1) throw std::invalid_argument("ExpansionTable: nmax must be >= 1");
    ExpansionTable t;
    t.base_ = base;
    const auto size = static_cast<std::size_t>(nmax);
    t.standard_.resize(size);
    t.canonical_.resize(size);
    parallel_for_ranges(1, nmax + 1, jobs, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t n = begin; n < end; ++n) {
        t.standard_[static_cast<std::size_t>(n - 1)] =
            base == Base::phi ? bergman_of(BigInt(n)) : silver_standard_of(BigInt(n));
      }
    });
    parallel_for_ranges(1, nmax + 1, jobs, [&](std::int64_t begin, std::int64_t end) {
      for (std::int64_t n = begin; n < end; ++n) {
        const auto k = static_cast<std::size_t>(n - 1);
        const DigitString* prev = n > 1 ? &t.standard_[k - 1] : nullptr;
        if (base == Base::phi) {
          t.canonical_[k] = prev ? canonical_from_bergman(t.standard_[k], *prev) : t.standard_[k];
        } else {
          t.canonical_[k] = silver_canonical_from_standard(t.standard_[k], prev);
        }
      }
    });
    return t;
  }

  Base base() const { return base_; }
  std::int64_t nmax() const { return static_cast<std::int64_t>(standard_.size()); }

  const DigitString& at(std::int64_t n, Scheme scheme) const {
    if (n < 1 || n > nmax()) throw std::out_of_range("ExpansionTable: N out of range");
    const auto k = static_cast<std::size_t>(n - 1);
    return scheme == Scheme::standard ? standard_[k] : canonical_[k];
  }
  const DigitString& standard(std::int64_t n) const { return at(n, Scheme::standard); }
  const DigitString& canonical(std::int64_t n) const { return at(n, Scheme::canonical); }

  /// (digit_i(N)) for N = 1..nmax, with implied zeros.
  std::vector<DigitString::Digit> column(int i, Scheme scheme) const {
    const auto& rows = scheme == Scheme::standard ? standard_ : canonical_;
    std::vector<DigitString::Digit> out;
    out.reserve(rows.size());
    for (const auto& rep : rows) out.push_back(rep.digit(i));
    return out;
  }

 private:
  Base base_ = Base::phi;
  std::vector<DigitString> standard_;
  std::vector<DigitString> canonical_;
};

}  // namespace goldbase

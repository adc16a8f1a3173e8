#include "goldbase/structure.hpp"
#include "goldbase/table.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace goldbase;

TEST(Lucas, Values) {
  EXPECT_EQ(lucas(0), 2);
  EXPECT_EQ(lucas(1), 1);
  EXPECT_EQ(lucas(5), 11);
  for (int n = 0; n <= 60; ++n) EXPECT_EQ(lucas(n), oracle::lucas(n)) << n;
  EXPECT_THROW(lucas(-1), std::out_of_range);
}

TEST(Intervals, Examples) {
  EXPECT_EQ(gamma_interval(0), (Interval{1, 1}));
  EXPECT_EQ(gamma_interval(1), (Interval{2, 3}));
  EXPECT_EQ(gamma_interval(2), (Interval{4, 4}));
  EXPECT_EQ(gamma_interval(3), (Interval{5, 7}));
  EXPECT_EQ(gamma_interval(4), (Interval{8, 11}));
  EXPECT_EQ(lambda_interval(4), (Interval{7, 11}));
  EXPECT_THROW(lambda_interval(0), std::out_of_range);
  EXPECT_THROW(sub_intervals(1), std::out_of_range);
}

TEST(Intervals, CanonicalPartitionOfInitialSegment) {
  for (int m = 1; m <= 25; ++m) {
    std::int64_t next = 1;
    for (int n = 0; n <= m; ++n) {
      const Interval iv = gamma_interval(n);
      ASSERT_EQ(iv.lo, next) << "m=" << m << " n=" << n;
      next = iv.hi + 1;
      if (n >= 1) EXPECT_EQ(iv.size(), lucas(n + 1) - lucas(n));
    }
    EXPECT_EQ(next - 1, lucas(m + 1));
  }
}

TEST(Intervals, SubIntervalsPartitionAndShifts) {
  for (int n = 2; n <= 20; ++n) {
    const auto p = sub_intervals(n);
    const Interval whole = gamma_interval(2 * n + 1);
    EXPECT_EQ(p.i.lo, whole.lo);
    EXPECT_EQ(p.j.lo, p.i.hi + 1);
    EXPECT_EQ(p.k.lo, p.j.hi + 1);
    EXPECT_EQ(p.k.hi, whole.hi);
    EXPECT_EQ(p.i, gamma_interval(2 * n - 1).shifted(lucas(2 * n)));
    EXPECT_EQ(p.j, gamma_interval(2 * n - 2).shifted(lucas(2 * n + 1)));
    EXPECT_EQ(p.k, gamma_interval(2 * n - 1).shifted(lucas(2 * n + 1)));

    const auto b = sub_intervals(n, Scheme::standard);
    const Interval lam = lambda_interval(2 * n + 1);
    EXPECT_EQ(b.i.lo, lam.lo);
    EXPECT_EQ(b.j.lo, b.i.hi + 1);
    EXPECT_EQ(b.k.lo, b.j.hi + 1);
    EXPECT_EQ(b.k.hi, lam.hi);
  }
}

TEST(LengthLaw, Examples) {
  EXPECT_EQ(lr_indices(9, Scheme::canonical), (std::pair{4, -4}));
  EXPECT_EQ(lr_indices(12, Scheme::standard), (std::pair{5, -6}));
  EXPECT_EQ(lr_indices(4, Scheme::canonical), (std::pair{2, -2}));
  EXPECT_EQ(lr_indices(1, Scheme::canonical), (std::pair{0, 0}));
  EXPECT_FALSE(interval_index(1, Scheme::canonical).has_value());
  EXPECT_FALSE(interval_index(1, Scheme::standard).has_value());
}

TEST(LengthLaw, HoldsOnBothSchemes) {
  const std::int64_t nmax = 30000;
  const auto t = ExpansionTable::build(Base::phi, nmax);
  for (Scheme s : {Scheme::standard, Scheme::canonical}) {
    for (std::int64_t n = 2; n <= nmax; ++n) {
      const auto k = interval_index(n, s);
      ASSERT_TRUE(k.has_value()) << n;
      const auto& rep = t.at(n, s);
      ASSERT_EQ(predicted_lr(*k), (std::pair{rep.left_index(), rep.right_index()})) << n << ' ' << to_string(s);
    }
  }
}

TEST(ClosedForms, SmallCases) {
  const auto f1 = lucas_closed_forms(1);
  EXPECT_EQ(f1.bergman_even, parse("100.01"));
  EXPECT_EQ(f1.canonical_even, parse("11.01"));
  EXPECT_EQ(f1.odd_plus_one, parse("1000.1001"));
  EXPECT_EQ(f1.odd, parse("101.01"));
  EXPECT_EQ(f1.even_plus_one, parse("101.01"));
}

TEST(ClosedForms, MatchDirectComputation) {
  for (int n = 1; n <= 15; ++n) {
    const auto f = lucas_closed_forms(n);
    const BigInt e = lucas(2 * n), o = lucas(2 * n + 1);
    EXPECT_EQ(f.bergman_even, bergman_of(e)) << n;
    EXPECT_EQ(f.canonical_even, canonical_of(e)) << n;
    EXPECT_EQ(f.odd, bergman_of(o)) << n;
    EXPECT_EQ(f.odd, canonical_of(o)) << n;
    EXPECT_EQ(f.even_plus_one, canonical_of(e + 1)) << n;
    EXPECT_EQ(f.odd_plus_one, canonical_of(o + 1)) << n;
  }
}

TEST(DoubleLucas, Examples) {
  EXPECT_EQ(double_lucas_gamma(2), parse("100011.001001"));
  EXPECT_EQ(double_lucas_gamma(2), canonical_of(14));
  EXPECT_EQ(double_lucas_gamma(3), parse("10001011.00001001"));
  EXPECT_EQ(double_lucas_gamma(3), canonical_of(36));
  for (int n = 2; n <= 10; ++n) {
    EXPECT_EQ(eval_digits(double_lucas_gamma(n)), integer(BigInt(2 * lucas(2 * n)), Base::phi)) << n;
  }
  EXPECT_THROW(double_lucas_gamma(1), std::out_of_range);
}

TEST(Recursive, Examples) {
  EXPECT_EQ(recursive_gamma(8), parse("10001.0001"));
  EXPECT_EQ(recursive_gamma(23), parse("1001000.100101"));
  EXPECT_EQ(recursive_gamma(1), parse("1.0"));
  EXPECT_EQ(recursive_beta(7), parse("10000.0001"));
  EXPECT_THROW(recursive_beta(0), std::invalid_argument);
}

TEST(Recursive, MatchesDirectConstruction) {
  const std::int64_t nmax = 5000;
  const auto t = ExpansionTable::build(Base::phi, nmax);
  for (std::int64_t n = 1; n <= nmax; ++n) {
    ASSERT_EQ(recursive_beta(n), t.standard(n)) << n;
    ASSERT_EQ(recursive_gamma(n), t.canonical(n)) << n;
  }
}

TEST(Recursive, AffixSurgeryRejectsMismatch) {
  EXPECT_THROW(detail::replace_affixes(parse("1001.0011"), "10", "1000", "01", "1001"), std::logic_error);
  EXPECT_EQ(detail::replace_affixes(parse("101.01"), "10", "1000", "01", "1001"), parse("10001.1001"));
}

TEST(BoundaryDigits, OnCanonicalLucasIntervals) {
  for (int n = 2; n <= 8; ++n) {
    const Interval even = gamma_interval(2 * n);
    for (std::int64_t m = even.lo; m <= even.hi; ++m) EXPECT_EQ(canonical_of(m).digit(-2 * n + 3), 0u) << m;
    const Interval odd = gamma_interval(2 * n + 1);
    for (std::int64_t m = odd.lo; m <= odd.hi; ++m) {
      EXPECT_EQ(canonical_of(m).digit(-2 * n + 1) == 1, m - odd.lo < lucas(2 * n - 1)) << m;
    }
  }
}

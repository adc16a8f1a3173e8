#include "goldbase/representation.hpp"
#include "goldbase/table.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace goldbase;

namespace {

std::string beta_text(long n) { return render(bergman_of(BigInt(n)), RadixGlyph::dot); }
std::string gamma_text(long n) { return render(canonical_of(BigInt(n)), RadixGlyph::dot); }

std::map<int, unsigned> as_map(const DigitString& rep) {
  std::map<int, unsigned> m;
  rep.for_each_nonzero([&](int e, DigitString::Digit d) { m[e] = d; });
  return m;
}

}  // namespace

TEST(Bergman, Examples) {
  EXPECT_EQ(beta_text(1), "1.0");
  EXPECT_EQ(beta_text(2), "10.01");
  EXPECT_EQ(beta_text(7), "10000.0001");
  EXPECT_EQ(beta_text(23), "1001000.100101");
}

TEST(Canonical, Examples) {
  EXPECT_EQ(gamma_text(3), "11.01");
  EXPECT_EQ(gamma_text(10), "10011.0101");
  EXPECT_EQ(gamma_text(4), "101.01");
}

TEST(Admissible, Examples) {
  EXPECT_TRUE(is_admissible(parse("11.01"), Scheme::canonical));
  EXPECT_FALSE(is_admissible(parse("11.01"), Scheme::standard));
  EXPECT_FALSE(is_admissible(parse("110.0"), Scheme::canonical));
  EXPECT_FALSE(is_admissible(parse("2.0"), Scheme::standard));
  EXPECT_TRUE(is_admissible(parse("21.01", Base::silver), Scheme::canonical));
  EXPECT_FALSE(is_admissible(parse("21.01", Base::silver), Scheme::standard));
  EXPECT_FALSE(is_admissible(parse("220.0", Base::silver), Scheme::canonical));
  EXPECT_TRUE(is_admissible(parse("202.02", Base::silver), Scheme::standard));
}

TEST(TypeCode, Examples) {
  EXPECT_EQ(type_code(5), TypeCode::D);
  EXPECT_EQ(type_code(9), TypeCode::A);
  EXPECT_EQ(type_code(16), TypeCode::D);
  EXPECT_EQ(type_code(1), TypeCode::C);
  EXPECT_EQ(type_code(3), TypeCode::B);
}

TEST(GammaNeBeta, Examples) {
  EXPECT_TRUE(gamma_ne_beta(3));
  EXPECT_FALSE(gamma_ne_beta(4));
  EXPECT_TRUE(gamma_ne_beta(7));
  EXPECT_FALSE(gamma_ne_beta(1));
}

TEST(AddDigitwise, Examples) {
  EXPECT_EQ(render(add_digitwise(parse("101.01"), parse("1.0")), RadixGlyph::dot), "102.01");
  EXPECT_EQ(add_digitwise(parse("10.01"), DigitString()), parse("10.01"));
  EXPECT_EQ(render(add_digitwise(parse("1.0"), parse("1.0")), RadixGlyph::dot), "2.0");
  EXPECT_THROW(add_digitwise(parse("1.0"), parse("1.0", Base::silver)), std::invalid_argument);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(parse("102.01"), Scheme::standard), parse("1000.1001"));
  EXPECT_EQ(normalize(parse("10.01"), Scheme::standard), parse("10.01"));
  EXPECT_EQ(normalize(parse("0.11"), Scheme::standard), parse("1.0"));
  EXPECT_EQ(normalize(parse("100.01"), Scheme::canonical), parse("11.01"));
}

TEST(Normalize, TraceOfFourPlusOne) {
  std::vector<RewriteStep> trace;
  const auto out = normalize(add_digitwise(canonical_of(4), canonical_of(1)), Scheme::canonical, &trace);
  ASSERT_GE(trace.size(), 2u);
  EXPECT_EQ(render(trace.front().state, RadixGlyph::dot), "102.01");
  EXPECT_EQ(render(trace[1].state, RadixGlyph::dot), "110.02");
  EXPECT_EQ(render(out, RadixGlyph::dot), "1000.1001");
  EXPECT_EQ(trace.back().state, out);
  for (const auto& step : trace) EXPECT_EQ(eval_digits(step.state), integer(BigInt(5), Base::phi)) << step.rule;
}

TEST(Normalize, RejectsNonIntegerValues) {
  EXPECT_THROW(normalize(parse("0.1"), Scheme::standard), std::invalid_argument);
  EXPECT_THROW(normalize(DigitString(), Scheme::standard), std::invalid_argument);
  EXPECT_THROW(normalize(parse("1.0", Base::silver), Scheme::standard), std::invalid_argument);
}

TEST(Normalize, SumsOfExpansionsReachTheDirectExpansion) {
  for (long n = 1; n <= 60; ++n) {
    for (long m = 1; m <= 60; ++m) {
      for (Scheme s : {Scheme::standard, Scheme::canonical}) {
        const auto sum = add_digitwise(expansion_of(n, s), expansion_of(m, s));
        ASSERT_EQ(normalize(sum, s), expansion_of(BigInt(n + m), s)) << n << '+' << m;
      }
    }
  }
}

TEST(Normalize, RandomMultisetsOfPowers) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pick(1, 5000);
  for (int trial = 0; trial < 300; ++trial) {
    // A string with large digits: k * beta_text(n) written digit-wise.
    const long n = pick(rng);
    const int k = 1 + trial % 5;
    DigitString rep;
    for (int j = 0; j < k; ++j) rep = add_digitwise(rep, bergman_of(BigInt(n)));
    ASSERT_EQ(normalize(rep, Scheme::standard), bergman_of(BigInt(n * k)));
    ASSERT_EQ(normalize(rep, Scheme::canonical), canonical_of(BigInt(n * k)));
  }
}

TEST(BruteForce, Examples) {
  const auto c3 = brute_force_reps(3, 4, -4, Scheme::canonical);
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3.front(), parse("11.01"));
  const auto b1 = brute_force_reps(1, 2, -2, Scheme::standard);
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1.front(), parse("1.0"));
  const auto b3 = brute_force_reps(3, 4, -4, Scheme::standard);
  ASSERT_EQ(b3.size(), 1u);
  EXPECT_EQ(b3.front(), parse("100.01"));
}

TEST(BruteForce, PrunedSearchMatchesFullEnumeration) {
  for (bool silver : {false, true}) {
    const int half = silver ? 5 : 7;
    const Base base = silver ? Base::silver : Base::phi;
    for (std::int64_t n = 1; n <= (silver ? 40 : 30); ++n) {
      for (Scheme s : {Scheme::standard, Scheme::canonical}) {
        const auto pruned = brute_force_reps(n, half, -half, s, base);
        const auto full = oracle::all_reps(n, half, -half, s == Scheme::canonical, silver);
        std::set<std::map<int, unsigned>> a, b(full.begin(), full.end());
        for (const auto& r : pruned) a.insert(as_map(r));
        EXPECT_EQ(a, b) << "n=" << n << " silver=" << silver << " scheme=" << to_string(s);
      }
    }
  }
}

TEST(BruteForce, UniqueAndEqualToConstructionSmallRange) {
  for (std::int64_t n = 1; n <= 120; ++n) {
    for (Scheme s : {Scheme::standard, Scheme::canonical}) {
      const auto found = brute_force_reps(n, 12, -12, s);
      ASSERT_EQ(found.size(), 1u) << n;
      EXPECT_EQ(found.front(), expansion_of(BigInt(n), s)) << n;
    }
  }
}

TEST(BruteForce, RejectsBadWindows) {
  EXPECT_THROW(brute_force_reps(3, 30, -30, Scheme::standard), std::invalid_argument);
  EXPECT_THROW(brute_force_reps(0, 4, -4, Scheme::standard), std::invalid_argument);
}

TEST(RenderParse, Examples) {
  EXPECT_EQ(render(bergman_of(1)), "1\xC2\xB7" "0");
  DigitString expected;
  expected.set(1, 1);
  expected.set(-2, 1);
  EXPECT_EQ(parse("10.01"), expected);
  EXPECT_EQ(parse("10\xC2\xB7" "01"), expected);
  EXPECT_THROW(parse("1..0"), std::invalid_argument);
  EXPECT_THROW(parse("1\xC2\xB7\xC2\xB7" "0"), std::invalid_argument);
  EXPECT_THROW(parse("10"), std::invalid_argument);
  EXPECT_THROW(parse(".01"), std::invalid_argument);
  EXPECT_THROW(parse("1.-1"), std::invalid_argument);
  EXPECT_THROW(parse("1.0x"), std::invalid_argument);
  EXPECT_EQ(render(parse("1[12]0.01"), RadixGlyph::dot), "1[12]0.01");
}

TEST(RenderParse, RoundTrip) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> exponent(-15, 15), digit(1, 12), count(0, 10);
  for (int trial = 0; trial < 3000; ++trial) {
    DigitString x(trial % 2 ? Base::silver : Base::phi);
    for (int k = count(rng); k > 0; --k) x.set(exponent(rng), static_cast<DigitString::Digit>(digit(rng)));
    for (RadixGlyph g : {RadixGlyph::dot, RadixGlyph::middot}) {
      const std::string text = render(x, g);
      EXPECT_EQ(parse(text, x.base()), x) << text;
      EXPECT_NE(text.find_first_of("0123456789["), std::string::npos);
    }
    EXPECT_EQ(digit_string_from_json(to_json(x)), x);
  }
}

TEST(Json, Form) {
  EXPECT_EQ(to_json(parse("10.01")).dump(), R"({"base":"phi","digits":{"-2":1,"1":1}})");
  EXPECT_THROW(digit_string_from_json(nlohmann::json::parse(R"({"base":"phi","digits":{"1":-1}})")),
               std::invalid_argument);
}

TEST(Properties, RoundTripTypeCodesAndSuccession) {
  const std::int64_t nmax = 20000;
  const auto t = ExpansionTable::build(Base::phi, nmax);
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const auto& b = t.standard(n);
    const auto& g = t.canonical(n);
    ASSERT_EQ(eval_digits(b), integer(BigInt(n), Base::phi)) << n;
    ASSERT_EQ(eval_digits(g), integer(BigInt(n), Base::phi)) << n;
    ASSERT_TRUE(is_admissible(b, Scheme::standard)) << n;
    ASSERT_TRUE(is_admissible(g, Scheme::canonical)) << n;
    const TypeCode c = type_code_of(b);
    ASSERT_EQ(g.digit(1) == 1 && g.digit(0) == 1, c == TypeCode::B) << n;
    ASSERT_EQ(!(g == b), c == TypeCode::B) << n;
    ASSERT_FALSE(b.digit(1) == 1 && b.digit(0) == 0 && b.digit(-1) == 1) << n;
    if (n > 1) ASSERT_EQ(c == TypeCode::B, type_code_of(t.standard(n - 1)) == TypeCode::A) << n;
  }
}

TEST(Properties, GammaNeBetaIsFloorPhiPlusTwo) {
  // independent floor via Fibonacci convergents
  std::set<std::int64_t> expected;
  for (std::int64_t n = 1;; ++n) {
    const std::int64_t v = oracle::floor_by_convergents(n, false) + 2 * n;
    if (v > 5000) break;
    expected.insert(v);
  }
  for (std::int64_t n = 1; n <= 5000; ++n) EXPECT_EQ(gamma_ne_beta(n), expected.count(n) == 1) << n;
}

TEST(Silver, Examples) {
  auto s = [](long n) { return render(silver_standard_of(BigInt(n)), RadixGlyph::dot); };
  auto c = [](long n) { return render(silver_canonical_of(BigInt(n)), RadixGlyph::dot); };
  EXPECT_EQ(s(6), "100.01");
  EXPECT_EQ(s(15), "1000.2011");
  EXPECT_EQ(s(2), "2.0");
  EXPECT_EQ(c(6), "21.01");
  EXPECT_EQ(c(12), "121.02");
  EXPECT_EQ(c(7), "101.01");
}

TEST(Silver, UniqueInWindowAndEqualToConstruction) {
  for (std::int64_t n = 1; n <= 300; ++n) {
    for (Scheme s : {Scheme::standard, Scheme::canonical}) {
      const auto found = brute_force_reps(n, 10, -10, s, Base::silver);
      ASSERT_EQ(found.size(), 1u) << n;
      EXPECT_EQ(found.front(), expansion_of(BigInt(n), s, Base::silver)) << n;
    }
  }
}

TEST(Construction, RejectsZero) {
  EXPECT_THROW(bergman_of(0), std::invalid_argument);
  EXPECT_THROW(canonical_of(0), std::invalid_argument);
  EXPECT_THROW(silver_standard_of(0), std::invalid_argument);
}

TEST(Construction, LargeInputs) {
  const BigInt big("123456789012345678901234567890");
  for (Scheme s : {Scheme::standard, Scheme::canonical}) {
    const auto rep = expansion_of(big, s);
    EXPECT_EQ(eval_digits(rep), integer(big, Base::phi));
    EXPECT_TRUE(is_admissible(rep, s));
    const auto srep = expansion_of(big, s, Base::silver);
    EXPECT_EQ(eval_digits(srep), integer(big, Base::silver));
    EXPECT_TRUE(is_admissible(srep, s));
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>

#include "oracles.hpp"
#include "sturmian/continued_fraction.hpp"
#include "sturmian/powers.hpp"

using namespace sturmian;

namespace {

ContinuedFraction cf(const std::string& text) { return ContinuedFraction::parse(text); }

QuadReal slope(const std::string& text) { return value_of(cf(text)).frac(); }

const char* const kFib = "[0;2,(1)]";
const char* const kBeta = "[0;3,1,1,1,100,(1)]";

std::string repeat(const std::string& s, int n) {
  std::string out;
  while (n-- > 0) out += s;
  return out;
}

// Longest u^n in w with |u| = m, by direct scanning.
std::size_t longest_power_in(const std::string& w, std::size_t m) {
  std::size_t best = 0;
  for (std::size_t i = 0; i + m <= w.size(); ++i) {
    std::size_t n = 1;
    while (i + (n + 1) * m <= w.size() && w.compare(i + n * m, m, w, i, m) == 0) ++n;
    best = std::max(best, n);
  }
  return best;
}

}  // namespace

TEST(Powers, PublishedExponents) {
  const auto rec = max_kab_exponent(slope(kFib), 2, 5);
  EXPECT_EQ(rec.exponent, 5);
  ASSERT_TRUE(rec.witness.has_value());
  EXPECT_EQ(rec.witness->word.str(), repeat("10100", 2) + repeat("10010", 3));
  EXPECT_GT(occurrences(oracle::fibonacci_word(5000), rec.witness->word.str()), 0u);
  EXPECT_EQ(max_kab_exponent(slope(kFib), 2, 7).exponent, 1);
  EXPECT_EQ(max_kab_exponent(slope(kBeta), 2, 4).exponent, 6);
  EXPECT_EQ(max_kab_exponent(slope(kBeta), 2, 7).exponent, 5);
  EXPECT_THROW(max_kab_exponent(QuadReal::rational(2, 5), 2, 5), domain_error);
  EXPECT_THROW(max_kab_exponent(slope(kFib), 2, 0), domain_error);
}

TEST(Powers, BruteOracleExamples) {
  EXPECT_EQ(brute_kab_exponent(slope(kFib), 2, 5), 5u);
  EXPECT_EQ(brute_kab_exponent(slope(kFib), 2, 7), 1u);
  EXPECT_EQ(brute_kab_exponent(slope(kFib), 1, 1), 2u);
  EXPECT_EQ(longest_power_in(oracle::fibonacci_word(5000), 1), 2u);
}

TEST(Powers, BruteOracleCap) {
  EXPECT_THROW(brute_kab_exponent(slope(kFib), 2, 5, {}, 20), resource_cap_exceeded);
  EXPECT_THROW(brute_kab_exponent(slope(kFib), 2, 50, {}, 60), resource_cap_exceeded);
  EXPECT_THROW(brute_kab_exponent(slope(kBeta), 1, 11), resource_cap_exceeded);
  EXPECT_EQ(oracle_cap_from_env(), default_oracle_cap);
  ::setenv("STURMIAN_SPECTRA_CAP", "16384", 1);
  EXPECT_EQ(oracle_cap_from_env(), 16384u);
  ::setenv("STURMIAN_SPECTRA_CAP", "lots", 1);
  EXPECT_THROW(oracle_cap_from_env(), parse_error);
  ::unsetenv("STURMIAN_SPECTRA_CAP");
}

TEST(Powers, FormulaMatchesOracle) {
  for (const auto& text : oracle::slope_set()) {
    const QuadReal a = slope(text);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t m = 1; m <= 20; ++m) {
        const auto rec = max_kab_exponent(a, k, m);
        EXPECT_EQ(rec.exponent, brute_kab_exponent(a, k, m, {}, 16384)) << text << " k=" << k << " m=" << m;
      }
    }
  }
}

TEST(Powers, WitnessesAreFactorsAndPowers) {
  for (const auto& text : oracle::slope_set()) {
    const QuadReal a = slope(text);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t m = 1; m <= 30; ++m) {
        const auto rec = max_kab_exponent(a, k, m, {}, 600);
        if (!rec.witness) continue;
        const Word& w = rec.witness->word;
        EXPECT_EQ(BigInt(w.size()), rec.exponent * m);
        EXPECT_TRUE(is_kab_power(w, m, k)) << text << " k=" << k << " m=" << m;
        bool found = false;
        for (const auto& f : factors_of_length(a, w.size())) found = found || f.word == w;
        EXPECT_TRUE(found) << text << " k=" << k << " m=" << m;
      }
    }
  }
}

TEST(Powers, MonotoneInK) {
  for (const auto& text : oracle::slope_set()) {
    const QuadReal a = slope(text);
    for (std::size_t m = 1; m <= 40; ++m) {
      for (std::size_t k = 1; k <= 5; ++k) {
        EXPECT_GE(max_kab_exponent(a, k, m, {}, 0).exponent, max_kab_exponent(a, k + 1, m, {}, 0).exponent)
            << text << " k=" << k << " m=" << m;
      }
    }
  }
}

TEST(Powers, ConventionIndependence) {
  for (const auto& text : oracle::slope_set()) {
    const QuadReal a = slope(text);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t m = 1; m <= 15; ++m) {
        EXPECT_EQ(max_kab_exponent(a, k, m, {true}, 0).exponent, max_kab_exponent(a, k, m, {false}, 0).exponent);
        EXPECT_EQ(brute_kab_exponent(a, k, m, {false}, 16384), brute_kab_exponent(a, k, m, {true}, 16384));
      }
    }
  }
}

TEST(Powers, IntegerPowers) {
  EXPECT_EQ(max_integer_power_exponent(cf(kFib), 5), 3);
  EXPECT_LE(max_integer_power_exponent(cf(kFib), 4), 2);
  EXPECT_EQ(max_integer_power_exponent(cf(kBeta), 11), 102);
  EXPECT_THROW(max_integer_power_exponent(cf("[0;2,3]"), 2), domain_error);
  const std::string f = oracle::fibonacci_word(20000);
  for (std::size_t m = 1; m <= 40; ++m) {
    EXPECT_EQ(max_integer_power_exponent(cf(kFib), m), longest_power_in(f, m)) << "m=" << m;
  }
}

TEST(Powers, IntegerPowerFormulaMatchesBrute) {
  for (const auto& text : {"[0;2,(1)]", "[0;(1)]", "[0;(2)]", "[0;(1,2)]", "[0;(3,1)]", "[0;2,(4,1,1)]"}) {
    const auto c = cf(text);
    const QuadReal a = value_of(c).frac();
    for (const auto& v : convergents(c, 8)) {
      if (v.t < 2 || v.q > 400 || convergents(c, v.t - 1).back().q == 1) continue;
      const auto m = v.q.convert_to<std::size_t>();
      EXPECT_EQ(max_integer_power_exponent(c, m), brute_integer_power_exponent(a, m, {}, 16384))
          << text << " m=" << m;
    }
    for (std::size_t m = 2; m <= 60; ++m) {
      bool multiple = false;
      for (const auto& v : convergents(c, 12)) multiple = multiple || (v.q <= m && m % v.q.convert_to<std::size_t>() == 0 && v.q > 1);
      if (!multiple) {
        EXPECT_LE(brute_integer_power_exponent(a, m, {}, 16384), 2u) << text << " m=" << m;
      }
    }
  }
}

TEST(Powers, IntegerPowerEdgeCases) {
  // q_{t-1} = 1 leaves the repetition one letter short of a_{t+1} + 2 full periods.
  EXPECT_EQ(max_integer_power_exponent(cf("[0;(1)]"), 2), 2);
  EXPECT_EQ(max_integer_power_exponent(cf("[0;(1,2)]"), 3), 2);
  // Multiples of a convergent denominator inherit its powers.
  const auto c = cf("[0;2,(4,1,1)]");
  EXPECT_EQ(max_integer_power_exponent(c, 20), 6);
  EXPECT_EQ(max_integer_power_exponent(c, 40), 3);
}

std::size_t count_rule(const BoundReport& r, const std::string& rule) {
  return static_cast<std::size_t>(
      std::count_if(r.violations.begin(), r.violations.end(), [&](const BoundViolation& v) { return v.rule == rule; }));
}

TEST(Powers, ConvergentBound) {
  const auto fib = exponent_bound_check(cf(kFib), 2, 1, 8);
  EXPECT_EQ(count_rule(fib, "convergents_enough"), 0u);
  EXPECT_GT(fib.approximate_checks, 0u);
  EXPECT_EQ(fib.rows.size(), 8u);

  const auto beta = exponent_bound_check(cf(kBeta), 2, 1, 8);
  EXPECT_EQ(count_rule(beta, "convergents_enough"), 0u);
  // The q-sequence of beta starts 1, 3, 4, 7, 11 and A(4) = 6 > 5 = A(7).
  ASSERT_GE(beta.rows.size(), 3u);
  EXPECT_EQ(beta.rows[1].q_t, 4);
  EXPECT_EQ(beta.rows[2].q_t, 7);
  EXPECT_EQ(beta.rows[1].exponent_at_q, 6);
  EXPECT_EQ(beta.rows[2].exponent_at_q, 5);

  for (const auto& text : oracle::slope_set()) {
    for (std::size_t k = 1; k <= 3; ++k) {
      EXPECT_EQ(count_rule(exponent_bound_check(cf(text), k, 1, 6), "convergents_enough"), 0u) << text << " k=" << k;
    }
  }
}

TEST(Powers, ApproximateExponentWindow) {
  // A(m) - floor(max L / ||m alpha||) lies in [-1, 2]; the +-1 window is too narrow.
  const QuadReal a = slope(kFib);
  const QuadReal max_l = family_extremes(level_intervals(a, 2)).max;
  const QuadReal gap = dist_to_int(QuadReal(11) * a);
  EXPECT_LT(gap, family_extremes(level_intervals(a, 2)).min);
  EXPECT_EQ((max_l / gap).floor(), 1);
  EXPECT_EQ(max_kab_exponent(a, 2, 11).exponent, 3);
  EXPECT_EQ(brute_kab_exponent(a, 2, 11, {}, 16384), 3u);

  const auto fib = exponent_bound_check(cf(kFib), 2, 1, 8);
  ASSERT_FALSE(fib.violations.empty());
  EXPECT_EQ(fib.violations.front().m, 11u);

  for (const auto& text : oracle::slope_set()) {
    const auto c = cf(text);
    const QuadReal alpha = value_of(c).frac();
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto level = family_extremes(level_intervals(alpha, 2 * k - 2));
      for (std::size_t m = 1; m <= 400; ++m) {
        const QuadReal g = dist_to_int(QuadReal(static_cast<long long>(m)) * alpha);
        if (!(g < level.min)) continue;
        const BigInt diff = max_kab_exponent(alpha, k, m, {}, 0).exponent - (level.max / g).floor();
        EXPECT_GE(diff, -1) << text << " k=" << k << " m=" << m;
        EXPECT_LE(diff, 2) << text << " k=" << k << " m=" << m;
      }
    }
  }
}

TEST(Powers, AbelianCaseIsMonotoneAlongConvergents) {
  for (const auto& text : {"[0;2,(1)]", "[0;(2)]", "[0;(1,2)]"}) {
    const auto report = exponent_bound_check(cf(text), 1, 2, 8);
    EXPECT_EQ(count_rule(report, "convergents_enough"), 0u) << text;
    for (const auto& row : report.rows) {
      // Recorded, not required: A(m) < A(q_t) for every m < q_t.
      RecordProperty(std::string(text) + " t=" + std::to_string(row.t),
                     row.below_for_smaller_periods ? "below" : "not below");
    }
  }
}

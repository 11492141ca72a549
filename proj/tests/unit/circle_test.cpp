#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sturmian/circle.hpp"
#include "sturmian/continued_fraction.hpp"

using namespace sturmian;

namespace {

QuadReal fib() { return (QuadReal(3) - QuadReal::sqrt(5)) / QuadReal(2); }

std::vector<QuadReal> test_slopes() {
  std::vector<QuadReal> out;
  for (const auto& t : oracle::slope_set()) out.push_back(value_of(ContinuedFraction::parse(t)));
  return out;
}

}  // namespace

TEST(Circle, OrbitPoints) {
  const auto pts = orbit_points(fib(), {-1, -2, 0});
  EXPECT_EQ(pts[0].value(), (QuadReal::sqrt(5) - QuadReal(1)) / QuadReal(2));
  EXPECT_EQ(pts[1].value().to_decimal(5), "0.23607");
  EXPECT_EQ(pts[2].value(), QuadReal(0));
  EXPECT_THROW(orbit_points(QuadReal::rational(1, 2), {1}), domain_error);
}

TEST(Circle, LevelIntervals) {
  const auto two = level_intervals(fib(), 2);
  ASSERT_EQ(two.size(), 3u);
  std::multiset<std::string> lengths;
  for (const auto& l : two.lengths()) lengths.insert(l.to_decimal(5));
  EXPECT_EQ(lengths, (std::multiset<std::string>{"0.23607", "0.38197", "0.38197"}));
  EXPECT_EQ(family_extremes(two).max, fib());

  const auto five = level_intervals(fib(), 5);
  std::vector<std::string> cuts;
  for (const auto& c : five.cuts()) cuts.push_back(c.value().to_decimal(2));
  EXPECT_EQ(cuts, (std::vector<std::string>{"0", "0.090", "0.24", "0.47", "0.62", "0.85"}));

  const auto zero = level_intervals(fib(), 0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero.length(0), QuadReal(1));
  EXPECT_EQ(family_extremes(zero).min, QuadReal(1));
}

TEST(Circle, IkmIntervals) {
  const QuadReal a = fib();
  const auto f25 = ikm_intervals(a, 2, 5);
  std::set<CirclePoint> expected;
  for (auto& p : orbit_points(a, {0, -1, -4, -5})) expected.insert(p);
  EXPECT_EQ(std::set<CirclePoint>(f25.cuts().begin(), f25.cuts().end()), expected);
  EXPECT_EQ(family_extremes(f25).max, a);

  const auto f27 = ikm_intervals(a, 2, 7);
  EXPECT_EQ(f27.size(), 4u);
  EXPECT_EQ(family_extremes(f27).max, dist_to_int(QuadReal(7) * a));

  const auto f15 = ikm_intervals(a, 1, 5);
  ASSERT_EQ(f15.size(), 2u);
  EXPECT_EQ(f15.cuts()[1], CirclePoint(QuadReal(-5) * a));

  EXPECT_THROW(ikm_intervals(a, 0, 3), domain_error);
  EXPECT_THROW(ikm_intervals(a, 2, 0), domain_error);
}

TEST(Circle, IkmSizeAndSmallLengths) {
  for (const auto& a : test_slopes()) {
    for (std::size_t k = 1; k <= 5; ++k) {
      for (std::size_t m = 1; m <= 30; ++m) {
        const auto fam = ikm_intervals(a, k, m);
        EXPECT_EQ(fam.size(), std::min(2 * k, m + 1)) << "k=" << k << " m=" << m;
        if (m < k - 1) {
          EXPECT_EQ(fam.cuts(), level_intervals(a, m).cuts());
        }
      }
    }
  }
}

TEST(Circle, Locate) {
  const QuadReal a = fib();
  const auto two = level_intervals(a, 2);
  EXPECT_EQ(two.start(two.locate(CirclePoint(QuadReal(0)))), QuadReal(0));
  const CirclePoint minus_alpha(-a);
  EXPECT_EQ(two.locate(minus_alpha), 2u);
  EXPECT_EQ(two.start(two.locate(minus_alpha)), minus_alpha.value());
  const IntervalFamily open_left(two.cuts(), EndpointConvention{false});
  EXPECT_EQ(open_left.locate(minus_alpha), 1u);
  EXPECT_EQ(open_left.locate(CirclePoint(QuadReal(0))), 2u);

  const auto f25 = ikm_intervals(a, 2, 5);
  const std::size_t i = f25.locate(CirclePoint(QuadReal::rational(1, 2)));
  EXPECT_EQ(f25.start(i).to_decimal(3), "0.472");
}

TEST(Circle, LocateIsTotalAndConventionMovesOnlyCuts) {
  for (const auto& a : test_slopes()) {
    const auto closed = level_intervals(a, 12);
    const IntervalFamily open(closed.cuts(), EndpointConvention{false});
    std::set<CirclePoint> cut_set(closed.cuts().begin(), closed.cuts().end());
    for (int j = 0; j < 200; ++j) {
      const CirclePoint x(QuadReal::rational(j, 200));
      const std::size_t i = closed.locate(x);
      EXPECT_GE(x.value() + (x.value() < closed.start(i) ? QuadReal(1) : QuadReal(0)), closed.start(i));
      EXPECT_LT(x.value() + (x.value() < closed.start(i) ? QuadReal(1) : QuadReal(0)), closed.end(i));
      if (!cut_set.count(x)) {
        EXPECT_EQ(open.locate(x), i);
      }
    }
    for (std::size_t i = 0; i < closed.size(); ++i) {
      const CirclePoint c = closed.cuts()[i];
      EXPECT_EQ(closed.locate(c), i);
      EXPECT_EQ(open.locate(c), (i + closed.size() - 1) % closed.size());
    }
  }
}

TEST(Circle, ThreeDistanceAndConservation) {
  for (const auto& a : test_slopes()) {
    for (std::size_t n = 0; n <= 500; n += (n < 60 ? 1 : 7)) {
      const auto fam = level_intervals(a, n);
      std::set<QuadReal> distinct;
      QuadReal total(0);
      for (const auto& l : fam.lengths()) {
        distinct.insert(l);
        total += l;
      }
      EXPECT_EQ(total, QuadReal(1));
      ASSERT_LE(distinct.size(), 3u) << "n=" << n;
      if (distinct.size() == 3) {
        auto it = distinct.begin();
        const QuadReal small = *it++;
        const QuadReal mid = *it++;
        EXPECT_EQ(*it, small + mid) << "n=" << n;
      }
    }
  }
}

TEST(Circle, RotationIsAnIsometry) {
  for (const auto& a : test_slopes()) {
    const auto fam = level_intervals(a, 17);
    std::vector<CirclePoint> rotated;
    for (const auto& c : fam.cuts()) rotated.emplace_back(c.value() + a);
    const IntervalFamily moved(rotated, {});
    std::multiset<QuadReal> before, after;
    for (const auto& l : fam.lengths()) before.insert(l);
    for (const auto& l : moved.lengths()) after.insert(l);
    EXPECT_EQ(before, after);
  }
}

TEST(Circle, DuplicateCutsMerge) {
  const IntervalFamily fam({CirclePoint(QuadReal(0)), CirclePoint(QuadReal(1)), CirclePoint(QuadReal::rational(1, 2))},
                           {});
  EXPECT_EQ(fam.size(), 2u);
  EXPECT_THROW(IntervalFamily({}, {}), domain_error);
}

#include <random>
#include <set>

#include "doctest.h"
#include "quotdt/error.hpp"
#include "quotdt/toric.hpp"

using namespace quotdt;

namespace {

long dot(const Vec3& a, const Vec3& b) {
  return static_cast<long>(a[0]) * b[0] + static_cast<long>(a[1]) * b[1] +
         static_cast<long>(a[2]) * b[2];
}

// Coefficient of q^n in M(q)^e, by the divisor-sum recurrence for log M.
Integer macmahon_power_coefficient(long e, int n) {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1, 0);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 1; k <= m; ++k) {
      long sigma2 = 0;
      for (int d = 1; d <= k; ++d) {
        if (k % d == 0) sigma2 += static_cast<long>(d) * d;
      }
      acc += Rational(e * sigma2) * a[m - k];
    }
    a[m] = acc / m;
  }
  return a[n].get_num();
}

ErrorKind kind_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInvalidArgument;
}

}  // namespace

TEST_CASE("builtin spaces") {
  CHECK(builtin_space("p3").chart_count() == 4);
  CHECK(builtin_space("p2xp1").chart_count() == 6);
  CHECK(builtin_space("p1cubed").chart_count() == 8);
  CHECK(builtin_space("blp3").chart_count() == 6);
  CHECK_THROWS_AS(builtin_space("p4"), Error);
  for (const auto& name : builtin_space_names()) {
    const ToricSpace s = builtin_space(name);
    CHECK_NOTHROW(s.validate());
    for (const auto& chart : s.charts) CHECK(std::abs(det3(chart)) == 1);
  }
}

TEST_CASE("chart characters are dual to the cone rays") {
  for (const auto& name : builtin_space_names()) {
    const ToricSpace s = builtin_space(name);
    REQUIRE(s.fan.has_value());
    for (std::size_t c = 0; c < s.chart_count(); ++c) {
      const auto& cone = s.fan->cones[c];
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          CHECK(dot(s.charts[c][i], s.fan->rays[cone[j]]) == (i == j ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("O(1) on P^3 has the simplex as its polytope") {
  const ToricSpace p3 = builtin_space("p3");
  const auto m = line_bundle_characters(p3, {1});
  std::set<Vec3> got(m.begin(), m.end());
  CHECK(got == std::set<Vec3>{Vec3{0, 0, 0}, Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}});
}

TEST_CASE("local generators pair with the rays of their cone") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (const auto& name : builtin_space_names()) {
    const ToricSpace s = builtin_space(name);
    const auto& fan = *s.fan;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<int> degrees(fan.picard_basis.size());
      for (auto& x : degrees) x = d(rng);
      std::vector<long> a(fan.rays.size(), 0);
      for (std::size_t k = 0; k < degrees.size(); ++k) {
        for (std::size_t r = 0; r < fan.rays.size(); ++r) a[r] += degrees[k] * fan.picard_basis[k][r];
      }
      const auto m = line_bundle_characters(s, degrees);
      for (std::size_t c = 0; c < s.chart_count(); ++c) {
        for (int ray : fan.cones[c]) CHECK(dot(m[c], fan.rays[ray]) == -a[ray]);
      }
    }
  }
}

TEST_CASE("line bundle parsing") {
  CHECK(parse_line_bundle("O", 1) == std::vector<int>{0});
  CHECK(parse_line_bundle("O1", 1) == std::vector<int>{1});
  CHECK(parse_line_bundle("O(-2)", 1) == std::vector<int>{-2});
  CHECK(parse_line_bundle("O(1,0)", 2) == std::vector<int>{1, 0});
  CHECK(parse_line_bundle("O", 3) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(parse_line_bundle("O(1,0)", 1), Error);
  CHECK_THROWS_AS(parse_line_bundle("L(1)", 1), Error);
  CHECK(parse_bundle_list("O(1,0),O(0,1)", 2) == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(parse_bundle_list("O,O1", 1) == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("count_fixed_points") {
  CHECK(count_fixed_points(builtin_space("p3"), 1, 1) == 4);
  CHECK(count_fixed_points(builtin_space("p3"), 1, 0) == 1);
  for (const auto& name : builtin_space_names()) {
    const ToricSpace s = builtin_space(name);
    for (int r = 1; r <= 2; ++r) {
      for (int n = 0; n <= 4; ++n) {
        CHECK(count_fixed_points(s, r, n) ==
              macmahon_power_coefficient(r * static_cast<long>(s.chart_count()), n));
      }
    }
  }
}

TEST_CASE("c3 by localization") {
  CHECK(c3_via_localization(builtin_space("p3"), 1) == -20);
  CHECK(c3_via_localization(builtin_space("p2xp1"), 1) == -18);
  CHECK(c3_via_localization(builtin_space("p1cubed"), 1) == -16);
  CHECK(c3_via_localization(builtin_space("blp3"), 1) == -18);
}

TEST_CASE("rank one DT of P^3") {
  const ToricSpace p3 = builtin_space("p3");
  const Series s = dt_series(p3, SplitBundle::trivial(p3, 1), 3, 42);
  CHECK(s == Series::from_integers({1, 20, 150, 400}));
  CHECK(dt_invariant(p3, SplitBundle::trivial(p3, 1), 1, 7) == 20);
}

TEST_CASE("rank one DT of every builtin matches the closed formula") {
  for (const auto& name : builtin_space_names()) {
    const ToricSpace s = builtin_space(name);
    const long c3 = c3_via_localization(s, 3).get_si();
    CHECK(dt_series(s, SplitBundle::trivial(s, 1), 3, 11) == dt_closed_formula(1, c3, 3));
  }
}

TEST_CASE("rank two DT of P^3 is independent of the twists") {
  const ToricSpace p3 = builtin_space("p3");
  const Series expected = Series::from_integers({1, -40, 700});
  CHECK(dt_series(p3, SplitBundle::trivial(p3, 2), 2, 42) == expected);
  CHECK(dt_series(p3, split_bundle(p3, {{0}, {1}}), 2, 42) == expected);
  CHECK(dt_series(p3, split_bundle(p3, {{2}, {-1}}), 2, 5) == expected);
}

TEST_CASE("rank two on a product with mixed twists") {
  const ToricSpace s = builtin_space("p2xp1");
  const Series expected = dt_closed_formula(2, -18, 2);
  CHECK(dt_series(s, split_bundle(s, {{1, 0}, {0, 1}}), 2, 3) == expected);
}

TEST_CASE("results do not depend on the seed") {
  const ToricSpace s = builtin_space("blp3");
  const auto bundle = split_bundle(s, {{1, 0}});
  const Series a = dt_series(s, bundle, 2, 1);
  for (std::uint64_t seed : {2ULL, 99ULL, 123456789ULL}) CHECK(dt_series(s, bundle, 2, seed) == a);
}

TEST_CASE("the sampler is deterministic and bounded") {
  ParamSampler a(5), b(5);
  for (int i = 0; i < 100; ++i) {
    const Integer x = a.draw();
    CHECK(x == b.draw());
    CHECK(abs(x) <= ParamSampler::kBound);
  }
}

TEST_CASE("inconsistent chart data is detected") {
  ToricSpace lone{"lone", {builtin_space("p3").charts[0]}, std::nullopt};
  CHECK(kind_of([&] { c3_via_localization(lone, 1); }) == ErrorKind::kParameterDependence);
  CHECK(kind_of([&] { localize_dt(lone, SplitBundle::trivial(lone, 1), 1, 1); }) ==
        ErrorKind::kParameterDependence);
}

TEST_CASE("bad bundles and charts are rejected") {
  const ToricSpace p3 = builtin_space("p3");
  SplitBundle bad = SplitBundle::trivial(p3, 2);
  bad.twists[1].pop_back();
  CHECK(kind_of([&] { bad.validate(p3); }) == ErrorKind::kRankMismatch);
  ToricSpace singular{"singular", {{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 2}}}, std::nullopt};
  CHECK(kind_of([&] { singular.validate(); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { localize_dt(p3, SplitBundle::trivial(p3, 1), 1, 1, 1); }) ==
        ErrorKind::kInvalidArgument);
}

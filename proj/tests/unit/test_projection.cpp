#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "oracles.hpp"
#include "polyknot/error.hpp"
#include "polyknot/projection.hpp"

using namespace polyknot;

namespace {

const PlaneCurve k52{{88, -22, -19, 2, 1}, {0, 96, 0, -22, 0, 1}};
const PlaneCurve k62{{0, 1, -27, 0, 1}, {0, 260, 0, -36, 0, 1}};
const PlaneCurve lemniscate{{-1, 0, 1}, {0, -1, 0, 1}};

struct Pair {
  double t, s;
};

void check_pairs(const std::vector<DoublePoint>& got, const std::vector<Pair>& want, double tol) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    INFO("pair " << i << ": (" << got[i].t << ", " << got[i].s << ")");
    CHECK(std::abs(got[i].t - want[i].t) <= tol);
    CHECK(std::abs(got[i].s - want[i].s) <= tol);
  }
}

int count(const std::string& hay, const std::string& needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

// Exhaustive a*g1 + b*g2 == target over small a, b.
bool semigroup_by_enumeration(int target, int g1, int g2) {
  for (int a = 0; a * g1 <= target; ++a)
    for (int b = 0; a * g1 + b * g2 <= target; ++b)
      if ((a || b) && a * g1 + b * g2 == target) return true;
  return false;
}

}  // namespace

TEST_SUITE("projection") {

TEST_CASE("regularity of the bundled projections") {
  CHECK(check_regularity(k52).is_regular);
  CHECK(check_regularity(k62).is_regular);
  CHECK(check_regularity(k52).double_point_count == 5);
  CHECK(check_regularity(k62).double_point_count == 6);
}

TEST_CASE("a cusp is reported, not thrown") {
  const PlaneCurve c{{0, 0, 1}, {0, 0, 0, 1}};  // (t^2, t^3): x' = y' = 0 at 0
  const auto rep = check_regularity(c);
  CHECK_FALSE(rep.is_regular);
  REQUIRE(rep.common_critical_values.size() == 1);
  CHECK(std::abs(rep.common_critical_values[0]) < 1e-8);
  CHECK_FALSE(rep.issues.empty());
}

TEST_CASE("(t^2, t^2) is rejected") {
  const PlaneCurve c{{0, 0, 1}, {0, 0, 1}};
  CHECK_THROWS_AS(validate_plane_curve(c), DomainError);
  CHECK_FALSE(check_regularity(c).is_regular);
}

TEST_CASE("curve validation") {
  CHECK_THROWS_AS(validate_plane_curve({{1}, {0, 1}}), DomainError);
  CHECK_THROWS_AS(validate_plane_curve({{0, 0, 1}, {0, 1}}), DomainError);
  CHECK_NOTHROW(validate_plane_curve(k52));
  CHECK_THROWS_AS(find_double_points(k52, 0.0), DomainError);
}

TEST_CASE("lemniscate has one node at the origin") {
  const auto dp = find_double_points(lemniscate);
  REQUIRE(dp.size() == 1);
  CHECK(dp[0].t == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(dp[0].s == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(dp[0].point.x) < 1e-9);
  CHECK(std::abs(dp[0].point.y) < 1e-9);
  CHECK(std::abs(dp[0].transversality) > 0.1);
}

TEST_CASE("five double points of the 5_2 projection") {
  check_pairs(find_double_points(k52),
              {{-4.21, 3.43}, {-3.85, 2.08}, {-3.01, 1.79}, {-2.05, 3.84}, {0.105, 4.03}}, 0.01);
}

TEST_CASE("six double points of the 6_2 projection") {
  check_pairs(find_double_points(k62),
              {{-5.201, -0.363}, {-5.118, 5.078}, {-4.698, 2.31}, {-3.090, 3.233}, {-2.226, 4.651},
               {0.252, 5.172}},
              0.01);
}

TEST_CASE("double points are genuine and ordered") {
  for (const auto* c : {&k52, &k62, &lemniscate}) {
    const auto dp = find_double_points(*c);
    for (std::size_t i = 0; i < dp.size(); ++i) {
      CHECK(dp[i].t < dp[i].s);
      const double resid = std::abs(c->x(dp[i].t) - c->x(dp[i].s)) + std::abs(c->y(dp[i].t) - c->y(dp[i].s));
      CHECK(resid <= 1e-6);
      CHECK(dp[i].transversality == doctest::Approx(cross(dp[i].tangent_t, dp[i].tangent_s)));
      if (i) CHECK(dp[i - 1].t <= dp[i].t);
    }
  }
}

TEST_CASE("reflection negates and reorders the pairs") {
  for (const auto* c : {&k52, &k62}) {
    const auto dp = find_double_points(*c);
    auto rp = find_double_points(c->reflected());
    REQUIRE(rp.size() == dp.size());
    std::vector<Pair> mapped;
    for (const auto& p : rp) mapped.push_back({-p.s, -p.t});
    std::sort(mapped.begin(), mapped.end(), [](Pair a, Pair b) { return a.t < b.t; });
    for (std::size_t i = 0; i < dp.size(); ++i) {
      CHECK(mapped[i].t == doctest::Approx(dp[i].t).epsilon(1e-8));
      CHECK(mapped[i].s == doctest::Approx(dp[i].s).epsilon(1e-8));
    }
  }
}

TEST_CASE("grid oracle agrees on random degree (4, 5) curves") {
  std::mt19937_64 rng(20240517);
  int checked = 0;
  while (checked < 10) {
    const PlaneCurve c{oracle::random_rooted(rng, 4, 3.0), oracle::random_rooted(rng, 5, 3.0)};
    if (!check_regularity(c).is_regular) continue;
    const auto dp = find_double_points(c);
    // Keep to curves whose nodes sit comfortably inside the grid window.
    const double L = 6.0;
    if (std::any_of(dp.begin(), dp.end(), [&](const DoublePoint& p) { return std::abs(p.t) > L - 0.5 || std::abs(p.s) > L - 0.5; }))
      continue;
    const auto ref = oracle::grid_double_points(c, L);
    INFO("curve " << checked);
    REQUIRE(ref.size() == dp.size());
    for (std::size_t i = 0; i < dp.size(); ++i) {
      CHECK(std::abs(ref[i].t - dp[i].t) <= 1e-3);
      CHECK(std::abs(ref[i].s - dp[i].s) <= 1e-3);
    }
    CHECK(static_cast<int>(dp.size()) <= max_crossing_bound(6));
    ++checked;
  }
}

TEST_CASE("crossing bound") {
  CHECK(max_crossing_bound(6) == 6);
  CHECK(max_crossing_bound(5) == 3);
  CHECK(max_crossing_bound(3) == 0);
  CHECK(max_crossing_bound(7) == 10);
  CHECK_THROWS_AS(max_crossing_bound(2), DomainError);
}

TEST_CASE("degree sequences") {
  CHECK(valid_degree_sequence(4, 5, 6));
  CHECK_FALSE(valid_degree_sequence(2, 4, 6));
  CHECK(valid_degree_sequence(3, 4, 5));
  CHECK_FALSE(valid_degree_sequence(1, 2, 3));
  CHECK_THROWS_AS(valid_degree_sequence(4, 4, 6), DomainError);
  CHECK_THROWS_AS(valid_degree_sequence(5, 4, 6), DomainError);
  CHECK_THROWS_AS(valid_degree_sequence(0, 4, 6), DomainError);

  for (int a = 1; a <= 9; ++a)
    for (int b = a + 1; b <= 10; ++b)
      for (int c = b + 1; c <= 11; ++c) {
        const bool want = !semigroup_by_enumeration(a, b, c) && !semigroup_by_enumeration(b, a, c) &&
                          !semigroup_by_enumeration(c, a, b);
        CHECK_MESSAGE(valid_degree_sequence(a, b, c) == want, a << "," << b << "," << c);
      }
}

TEST_CASE("svg plots mark the double points") {
  const auto d52 = find_double_points(k52);
  const auto svg52 = plot_curve_svg(k52, -4.5, 4.3, d52);
  CHECK(svg52.rfind("<svg", 0) == 0);
  CHECK(count(svg52, "<circle") == 5);
  CHECK(svg52 == plot_curve_svg(k52, -4.5, 4.3, d52));

  CHECK(count(plot_curve_svg(k62, -5.5, 5.4, find_double_points(k62)), "<circle") == 6);

  const PlaneCurve cubic{{0, 1}, {0, 0, 0, 1}};
  CHECK(find_double_points(cubic).empty());
  CHECK(count(plot_curve_svg(cubic, -1, 1, {}), "<circle") == 0);
  CHECK_THROWS_AS(plot_curve_svg(cubic, 1, 1, {}), DomainError);
}

}  // TEST_SUITE

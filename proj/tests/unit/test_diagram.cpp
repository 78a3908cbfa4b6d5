#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polyknot/diagram.hpp"
#include "polyknot/error.hpp"
#include "polyknot/invariants.hpp"

using namespace polyknot;

namespace {

const PlaneCurve k52{{88, -22, -19, 2, 1}, {0, 96, 0, -22, 0, 1}};
// Shastri's trefoil.
const SpaceKnot kTrefoil{{0, -3, 0, 1}, {0, 0, -4, 0, 1}, {0, -10, 0, 0, 0, 1}};
const char* kLeftTrefoil = "X(6,3,1,4) X(4,1,5,2) X(2,5,3,6)";
// The same knot with every crossing switched.
const char* kRightTrefoil = "X(3,1,4,6) X(1,5,2,4) X(5,3,6,2)";

KnotDiagram prescribed_52() {
  return diagram_from_pattern(find_double_points(k52), SignPattern::alternating(5));
}

// Every label twice, and the union of crossings joined by shared labels is
// connected.
void check_well_formed(const KnotDiagram& d) {
  std::map<int, int> seen;
  for (const auto& x : d.pd())
    for (int v : x) ++seen[v];
  CHECK(static_cast<int>(seen.size()) == d.arc_count());
  for (const auto& [label, n] : seen) CHECK_MESSAGE(n == 2, "label " << label);

  const std::size_t n = d.size();
  if (n == 0) return;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::map<int, std::size_t> first;
  for (std::size_t x = 0; x < n; ++x)
    for (int v : d.pd()[x]) {
      auto [it, fresh] = first.emplace(v, x);
      if (!fresh) parent[find(x)] = find(it->second);
    }
  std::set<std::size_t> roots;
  for (std::size_t x = 0; x < n; ++x) roots.insert(find(x));
  CHECK(roots.size() == 1);
}

SpaceKnot reversed(const SpaceKnot& k) { return {reflect(k.f), reflect(k.g), reflect(k.h)}; }

}  // namespace

TEST_SUITE("diagram") {

TEST_CASE("crossing signs") {
  CHECK(crossing_sign({1, 0}, {0, 1}) == 1);
  CHECK(crossing_sign({0, 1}, {1, 0}) == -1);
  CHECK(crossing_sign({2, 1}, {-1, 3}) == 1);
  CHECK_THROWS_AS(crossing_sign({1, 1}, {2, 2}), NonTransverse);
  CHECK_THROWS_AS(crossing_sign({0, 0}, {1, 0}), NonTransverse);
}

TEST_CASE("space knot validation") {
  CHECK_NOTHROW(validate_space_knot(kTrefoil));
  CHECK_THROWS_AS(validate_space_knot({{0, 1}, {0, 0, 1}, {0, 0, 1}}), DomainError);
  CHECK_THROWS_AS(validate_space_knot({{0, 0, 1}, {0, 1}, {0, 0, 0, 1}}), DomainError);
}

TEST_CASE("prescribed 5_2 diagram has writhe +5") {
  const auto d = prescribed_52();
  CHECK(d.size() == 5);
  CHECK(d.writhe() == 5);
  CHECK(d.signs() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(d.arc_count() == 10);
  check_well_formed(d);
  REQUIRE(d.crossings().size() == 5);
  CHECK(d.crossings()[0].t_under == doctest::Approx(-4.2071).epsilon(1e-4));
  CHECK(d.crossings()[1].t_over == doctest::Approx(-3.8485).epsilon(1e-4));
  CHECK(d.gauss_code() == "U1+ O2+ U3+ O4+ U5+ O3+ U2+ O1+ U4+ O5+");
  CHECK(KnotDiagram::from_pd(d.pd()) == d);
}

TEST_CASE("injective projection gives the trivial diagram") {
  const auto d = build_diagram({{0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0, 0, 1}});
  CHECK(d.size() == 0);
  CHECK(d.pd().empty());
  CHECK(d.writhe() == 0);
  CHECK(d.pd_string().empty());
  CHECK(d.gauss_code().empty());
}

TEST_CASE("Shastri's trefoil is right-handed") {
  const auto d = build_diagram(kTrefoil);
  CHECK(d.size() == 3);
  CHECK(d.writhe() == 3);
  check_well_formed(d);
  for (const auto& c : d.crossings()) {
    // Over/under agrees with the heights.
    CHECK(kTrefoil.h(c.t_over) > kTrefoil.h(c.t_under));
  }
}

TEST_CASE("sign convention calibrates on standard trefoil codes") {
  CHECK(KnotDiagram::from_pd(parse_pd(kRightTrefoil)).writhe() == 3);
  CHECK(KnotDiagram::from_pd(parse_pd(kLeftTrefoil)).writhe() == -3);
  CHECK(mirror(KnotDiagram::from_pd(parse_pd(kLeftTrefoil))) == KnotDiagram::from_pd(parse_pd(kRightTrefoil)));
}

TEST_CASE("mirror is an involution that negates the writhe") {
  const auto d = prescribed_52();
  const auto m = mirror(d);
  CHECK(m.writhe() == -5);
  CHECK(mirror(m) == d);
  check_well_formed(m);
  CHECK(mirror(KnotDiagram{}) == KnotDiagram{});
  for (const auto& entry : KnotTable::bundled().entries()) {
    const auto& t = entry.diagram;
    CHECK(mirror(t).writhe() == -t.writhe());
    CHECK(mirror(mirror(t)) == t);
  }
}

TEST_CASE("over/under follows the height") {
  const auto d = build_diagram(kTrefoil);
  const auto pts = find_double_points(kTrefoil.projection());
  const auto seps = verify_pattern(kTrefoil.h, parameter_pairs(pts), SignPattern::alternating(3), 0.0).separations;
  const auto realized = SignPattern::from_separations(seps);
  const auto again = diagram_from_pattern(pts, realized);
  CHECK(again == d);
}

TEST_CASE("reversing the parameter keeps writhe and Jones") {
  for (const auto& k : {kTrefoil, SpaceKnot{{0, -3, 0, 1}, {0, 0, -4, 0, 1}, {0, 10, 0, 0, 0, -1}}}) {
    const auto d = build_diagram(k);
    const auto r = build_diagram(reversed(k));
    CHECK(r.writhe() == d.writhe());
    CHECK(jones(r) == jones(d));
  }
}

TEST_CASE("ambiguous heights are refused") {
  // h even: h(t) == h(-t), and the lemniscate node sits at t = -1, s = 1.
  CHECK_THROWS_AS(build_diagram({{-1, 0, 1}, {0, -1, 0, 1}, {0, 0, 0, 0, 1}}), DomainError);
}

TEST_CASE("PD parsing") {
  const auto pd = parse_pd("X(1,2,3,4), X(5,6,7,8)");
  REQUIRE(pd.size() == 2);
  CHECK(pd[1] == PdTuple{5, 6, 7, 8});
  CHECK(parse_pd("  ").empty());
  CHECK(parse_pd(kLeftTrefoil).size() == 3);
  CHECK_THROWS_AS(parse_pd("X(1,2,3)"), DataError);
  CHECK_THROWS_AS(parse_pd("Y(1,2,3,4)"), DataError);
  CHECK_THROWS_AS(parse_pd("X(1,2,3,4) junk"), DataError);
}

TEST_CASE("malformed codes are rejected") {
  CHECK_THROWS_AS(KnotDiagram::from_pd({{1, 2, 3, 4}}), DataError);
  CHECK_THROWS_AS(KnotDiagram::from_pd({{1, 1, 2, 2}, {3, 3, 4, 4}}), DataError);  // two components
  CHECK_THROWS_AS(KnotDiagram::from_pd(parse_pd("X(6,3,1,4) X(4,1,5,2) X(2,5,3,7)")), DataError);
  const auto d = prescribed_52();
  CHECK_THROWS_AS(KnotDiagram::from_pd(d.pd(), {}), DataError);
}

TEST_CASE("PD and Gauss text") {
  const auto d = KnotDiagram::from_pd(parse_pd(kRightTrefoil));
  CHECK(d.pd_string() == "X(3,1,4,6), X(1,5,2,4), X(5,3,6,2)");
  CHECK(KnotDiagram::from_pd(parse_pd(d.pd_string())) == d);
  const auto g = d.gauss_code();
  CHECK(g.rfind("O", 0) == 0);
  CHECK(std::count(g.begin(), g.end(), '+') == 6);
}

TEST_CASE("kinks") {
  const auto d = prescribed_52();
  for (int sign : {1, -1})
    for (bool under_first : {true, false}) {
      const auto k = with_kink(d, 3, sign, under_first);
      CHECK(k.size() == 6);
      CHECK(k.writhe() == d.writhe() + sign);
      CHECK(k.signs().back() == sign);
      check_well_formed(k);
      const auto u = with_kink(KnotDiagram{}, 1, sign, under_first);
      CHECK(u.size() == 1);
      CHECK(u.writhe() == sign);
      check_well_formed(u);
    }
  CHECK_THROWS_AS(with_kink(d, 99, 1, true), DomainError);
  CHECK_THROWS_AS(with_kink(d, 1, 0, true), DomainError);
}

}  // TEST_SUITE

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polyknot/app.hpp"
#include "polyknot/error.hpp"
#include "polyknot/invariants.hpp"
#include "report.hpp"

namespace polyknot::app {

namespace {

using detail::Json;

double pair_deviation(std::span<const DoublePoint> got, std::span<const ParameterPair> want) {
  if (got.size() != want.size()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < got.size(); ++i)
    dev = std::max({dev, std::abs(got[i].t - want[i].t), std::abs(got[i].s - want[i].s)});
  return dev;
}

bool within_relative(double got, double want, double rel) {
  return std::abs(got - want) <= rel * std::abs(want);
}

std::string num(double v) {
  std::ostringstream o;
  o.precision(8);
  o << v;
  return o.str();
}

// Diagram and invariants of a space knot, or the reason there is none.
Json realized_json(const SpaceKnot& k, std::span<const DoublePoint> points) {
  Json j;
  try {
    std::vector<double> seps;
    for (const auto& p : points) seps.push_back(k.h(p.t) - k.h(p.s));
    const KnotDiagram d = build_diagram(k);
    j["h"] = detail::to_json(k.h);
    j["separations_at_double_points"] = seps;
    j["pattern"] = SignPattern::from_separations(seps).to_string();
    j["diagram"] = detail::to_json(d);
    j["invariants"] = detail::invariants_json(d);
  } catch (const Error& e) {
    j["error"] = e.what();
  }
  return j;
}

}  // namespace

bool Reproduction::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Reproduction reproduce(const Preset& p, const ReproduceOptions& opt) {
  Reproduction out;
  Json& rep = out.report;
  auto check = [&](std::string name, bool pass, std::string detail) {
    out.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto finish = [&]() -> Reproduction& {
    Json checks = Json::array();
    for (const auto& c : out.checks)
      checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    rep["checks"] = checks;
    rep["all_pass"] = out.all_pass();
    return out;
  };
  rep["preset"] = p.name;
  rep["conventions"] = detail::conventions();

  // Projection: pick the variant whose double points match the published ones.
  Json variants = Json::array();
  std::size_t best = 0;
  double best_dev = std::numeric_limits<double>::infinity();
  std::vector<std::vector<DoublePoint>> found(p.variants.size());
  for (std::size_t i = 0; i < p.variants.size(); ++i) {
    Json v{{"label", p.variants[i].first},
           {"x", detail::to_json(p.variants[i].second.x)},
           {"y", detail::to_json(p.variants[i].second.y)}};
    double dev = std::numeric_limits<double>::infinity();
    try {
      found[i] = find_double_points(p.variants[i].second, opt.tol);
      dev = pair_deviation(found[i], p.published_pairs);
      v["double_point_count"] = found[i].size();
    } catch (const Error& e) {
      v["error"] = e.what();
    }
    v["max_deviation_from_published"] = std::isfinite(dev) ? Json(dev) : Json(nullptr);
    variants.push_back(v);
    if (dev < best_dev) {
      best_dev = dev;
      best = i;
    }
  }
  const PlaneCurve& curve = p.variants[best].second;
  const std::vector<DoublePoint>& points = found[best];
  rep["conventions"]["projection_variant"] =
      p.variants[best].first + " (published double points matched within " +
      num(p.variant_tolerance) + ")";

  Json published_pairs = Json::array();
  for (const auto& q : p.published_pairs) published_pairs.push_back({q.t, q.s});
  const RegularityReport reg = check_regularity(curve, opt.tol);
  rep["crossings"] = Json{{"variants", variants},
                          {"chosen", p.variants[best].first},
                          {"regularity", detail::to_json(reg)},
                          {"double_points", detail::to_json(points)},
                          {"published_pairs", published_pairs},
                          {"max_deviation", std::isfinite(best_dev) ? Json(best_dev) : Json(nullptr)}};
  check("projection variant", best_dev <= p.variant_tolerance,
        p.variants[best].first + ", deviation " + num(best_dev));
  check("regular projection", reg.is_regular,
        reg.is_regular ? "no common critical values" : "irregular");
  check("double points", points.size() == p.published_pairs.size() && best_dev <= p.pair_tolerance,
        std::to_string(points.size()) + " pairs, max deviation " + num(best_dev) + " (tol " +
            num(p.pair_tolerance) + ")");
  if (points.empty()) return finish();

  // Height polynomial from the published, rounded parameters.
  const std::vector<ParameterPair> exact = parameter_pairs(points);
  const LiftSpec spec = LiftSpec::for_crossings(points.size(), p.degree, opt.magnitude);
  Json lift;
  Json pub_coeffs = Json::object();
  for (const auto& [k, c] : p.published_coefficients) pub_coeffs["t^" + std::to_string(k)] = c;
  lift["pattern"] = p.pattern.to_string();
  lift["magnitude"] = opt.magnitude;
  lift["published_determinant"] = p.published_determinant;
  lift["published_coefficients"] = pub_coeffs;
  std::optional<LiftResult> solved;
  const LinearSystem printed_sys = build_sign_system(p.published_pairs, p.pattern, spec);
  {
    Json j{{"determinant", printed_sys.determinant},
           {"hadamard_ratio", printed_sys.hadamard_ratio},
           {"degeneracy_ratio", spec.degeneracy_ratio}};
    try {
      j["solution"] = detail::to_json(solve_lift(p.published_pairs, p.pattern, spec));
    } catch (const Error& e) {
      j["error"] = e.what();
    }
    // The same system without the conditioning guard, to compare coefficients.
    LiftSpec unguarded = spec;
    unguarded.degeneracy_ratio = 0.0;
    try {
      solved = solve_lift(p.published_pairs, p.pattern, unguarded);
      j["unguarded_solution"] = detail::to_json(*solved);
    } catch (const Error& e) {
      j["unguarded_error"] = e.what();
    }
    lift["from_published_parameters"] = j;
  }
  {
    const LinearSystem sys = build_sign_system(exact, p.pattern, spec);
    Json j{{"determinant", sys.determinant}, {"hadamard_ratio", sys.hadamard_ratio}};
    try {
      j["solution"] = detail::to_json(solve_lift(exact, p.pattern, spec));
    } catch (const Error& e) {
      j["error"] = e.what();
    }
    lift["from_computed_double_points"] = j;
  }
  const Realizability real = realize_pattern(exact, p.pattern, p.degree, opt.magnitude);
  lift["realizability_at_computed_double_points"] = detail::to_json(real);
  {
    const PatternCheck at_printed = verify_pattern(p.published_h, p.published_pairs, p.pattern, 0.0);
    const PatternCheck at_exact = verify_pattern(p.published_h, exact, p.pattern, 0.0);
    lift["published_h"] = Json{
        {"h", detail::to_json(p.published_h)},
        {"pattern_at_published_parameters", at_printed.ok},
        {"separations_at_published_parameters", at_printed.separations},
        {"pattern_at_computed_double_points", at_exact.ok},
        {"realized_pattern_at_computed_double_points",
         SignPattern::from_separations(at_exact.separations).to_string()}};
  }
  rep["lift"] = lift;

  check("lift determinant",
        within_relative(std::abs(printed_sys.determinant), std::abs(p.published_determinant),
                        p.relative_tolerance),
        "|det| " + num(std::abs(printed_sys.determinant)) + " vs " +
            num(std::abs(p.published_determinant)));
  if (solved) {
    bool ok = true;
    std::string detail;
    for (const auto& [k, want] : p.published_coefficients) {
      const double got = solved->coefficients.at(k);
      if (!within_relative(got, want, p.relative_tolerance)) ok = false;
      detail += (detail.empty() ? "" : ", ") + ("t^" + std::to_string(k)) + " " + num(got) +
                " vs " + num(want);
    }
    check("lift coefficients", ok, detail);
    out.lifted = SpaceKnot{curve.x, curve.y, solved->h};
  } else {
    check("lift coefficients", false, "no solution");
  }

  // The diagram with the prescribed pattern imposed on the computed crossings.
  const KnotDiagram d = diagram_from_pattern(points, p.pattern);
  const LaurentInt bracket = kauffman_bracket(d);
  const LaurentInt f = normalized_f(d);
  const LaurentInt v = jones(d);
  const Identification id = identify(v, KnotTable::bundled());
  rep["diagram"] = detail::to_json(d);
  rep["invariants"] = detail::invariants_json(d);
  if (p.published_bracket)
    check("bracket", bracket == LaurentInt::parse(*p.published_bracket, 'A'),
          bracket.to_string() + " vs " + *p.published_bracket);
  if (p.published_writhe)
    check("writhe", d.writhe() == *p.published_writhe,
          std::to_string(d.writhe()) + " vs " + std::to_string(*p.published_writhe));
  if (p.published_f)
    check("normalized f", f == LaurentInt::parse(*p.published_f, 'A'),
          f.to_string() + " vs " + *p.published_f);
  check("jones", v == LaurentInt::parse(p.published_jones, 'q'),
        v.to_string() + " vs " + p.published_jones);
  check("identification", id.found && id.name == p.expected_knot,
        id.describe() + " vs " + p.expected_knot);

  // Knots actually realized by the height polynomials.
  Json realized;
  if (out.lifted) realized["solved_h"] = realized_json(*out.lifted, points);
  realized["published_h"] = realized_json({curve.x, curve.y, p.published_h}, points);
  rep["realized"] = realized;

  const DegreeBounds b = degree_bounds(p.degree);
  rep["bounds"] = Json{{"degree", p.degree},
                       {"crossing", b.crossing},
                       {"bridge", b.bridge},
                       {"superbridge", b.superbridge},
                       {"torus_2_5_superbridge", torus_superbridge(2, 5)}};
  check("crossing bound", static_cast<int>(points.size()) <= b.crossing,
        std::to_string(points.size()) + " crossings <= " + std::to_string(b.crossing));

  if (out.lifted && opt.sweep_n > 0) {
    const DirectionSweep sw = sweep_directions(*out.lifted, opt.sweep_n, opt.seed);
    Json js = detail::to_json(sw);
    js["seed"] = opt.seed;
    rep["sweep"] = js;
    check("sweep", sw.max_closed == b.superbridge && sw.min_closed == 2,
          "closed counts " + std::to_string(sw.min_closed) + ".." + std::to_string(sw.max_closed) +
              ", bound " + std::to_string(b.superbridge));
  }

  return finish();
}

}  // namespace polyknot::app

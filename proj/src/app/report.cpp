#include "report.hpp"

#include "polyknot/invariants.hpp"

namespace polyknot::app::detail {

Json to_json(const RealPoly& p) { return Json(p.coeffs()); }

Json to_json(const DoublePoint& p) {
  return Json{{"t", p.t},
              {"s", p.s},
              {"point", {p.point.x, p.point.y}},
              {"tangent_t", {p.tangent_t.x, p.tangent_t.y}},
              {"tangent_s", {p.tangent_s.x, p.tangent_s.y}},
              {"transversality", p.transversality}};
}

Json to_json(std::span<const DoublePoint> points) {
  Json a = Json::array();
  for (const auto& p : points) a.push_back(to_json(p));
  return a;
}

Json to_json(const RegularityReport& r) {
  return Json{{"is_regular", r.is_regular},
              {"common_critical_values", r.common_critical_values},
              {"double_point_count", r.double_point_count},
              {"issues", r.issues}};
}

Json to_json(const KnotDiagram& d) {
  Json pd = Json::array();
  for (const auto& x : d.pd()) pd.push_back(x);
  Json crossings = Json::array();
  for (const auto& c : d.crossings())
    crossings.push_back(Json{{"id", c.id},
                             {"t_under", c.t_under},
                             {"t_over", c.t_over},
                             {"point", {c.point.x, c.point.y}},
                             {"sign", c.sign}});
  return Json{{"crossing_count", d.size()},
              {"writhe", d.writhe()},
              {"signs", d.signs()},
              {"pd", d.pd_string()},
              {"pd_tuples", pd},
              {"gauss", d.gauss_code()},
              {"crossings", crossings}};
}

Json to_json(const DirectionSweep& s) {
  Json hist = Json::object();
  for (const auto& [k, v] : s.histogram) hist[std::to_string(k)] = v;
  return Json{{"directions", s.directions},
              {"degenerate", s.degenerate},
              {"min_closed_count", s.min_closed},
              {"max_closed_count", s.max_closed},
              {"argmin", {s.argmin.x, s.argmin.y, s.argmin.z}},
              {"argmax", {s.argmax.x, s.argmax.y, s.argmax.z}},
              {"histogram", hist},
              {"frame_scales", {s.frame.x, s.frame.y, s.frame.z}},
              {"closure_convention", kClosureConvention}};
}

Json to_json(const Realizability& r) {
  Json j{{"realizable", r.realizable}, {"margin", r.margin}, {"rank", r.rank},
         {"left_null_vectors", r.null_vectors}};
  if (r.realizable) {
    j["h"] = to_json(r.h);
    j["separations"] = r.separations;
  }
  return j;
}

Json to_json(const LiftResult& r) {
  Json coeffs = Json::object();
  for (auto it = r.coefficients.rbegin(); it != r.coefficients.rend(); ++it)
    coeffs["t^" + std::to_string(it->first)] = it->second;
  return Json{{"determinant", r.determinant},
              {"hadamard_ratio", r.hadamard_ratio},
              {"coefficients", coeffs},
              {"h", to_json(r.h)},
              {"separations", r.separations},
              {"residual", r.residual}};
}

Json conventions() {
  return Json{
      {"coefficients", "ascending degree"},
      {"crossing_sign", "sign(det[T_over, T_under]); positive iff PD slot d is the incoming over-strand"},
      {"pd_order", "incoming under-strand, then counterclockwise"},
      {"closure", "the two unbounded ends join outside the picture; the arc through infinity is 2n"},
      {"gauss", "O<id><sign> / U<id><sign> along the orientation from the smallest arc label"},
      {"lift_equations", "rows sorted by t; unknowns in descending degree"},
      {"bridge_closure", kClosureConvention},
      {"jones_substitution", "A^-4 = q"}};
}

Json invariants_json(const KnotDiagram& d) {
  const LaurentInt v = jones(d);
  return Json{{"bracket", kauffman_bracket(d).to_string()},
              {"writhe", d.writhe()},
              {"normalized_f", normalized_f(d).to_string()},
              {"jones", v.to_string()},
              {"identification", identify(v, KnotTable::bundled()).describe()}};
}

}  // namespace polyknot::app::detail

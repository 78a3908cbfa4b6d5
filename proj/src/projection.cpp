#include "polyknot/projection.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

constexpr double kRootTolerance = 1e-10;
// Relative sine of the crossing angle below which an intersection counts as
// tangential.
constexpr double kTransverseSine = 1e-7;

std::string fmt_pair(double t, double s) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.6g, %.6g)", t, s);
  return buf;
}

// Hadamard bound of the Sylvester matrix, used to decide whether a resultant
// value is zero relative to the size of its inputs.
double sylvester_scale(const RealPoly& p, const RealPoly& q, int m, int n) {
  double np = 0.0, nq = 0.0;
  for (int k = 0; k <= m; ++k) np += p.coeff(k) * p.coeff(k);
  for (int k = 0; k <= n; ++k) nq += q.coeff(k) * q.coeff(k);
  return std::pow(std::sqrt(np), n) * std::pow(std::sqrt(nq), m);
}

// True when X(t, .) and Y(t, .) share a root for every t, i.e. the curve runs
// over itself along an arc.
bool resultant_identically_zero(const BiPoly& X, const BiPoly& Y) {
  static constexpr double kProbe[] = {-2.718281, -0.577215, 0.318309, 1.414213, 3.141592};
  const int m = X.degree_s();
  const int n = Y.degree_s();
  for (double t : kProbe) {
    const RealPoly p = X.in_s_at(t);
    const RealPoly q = Y.in_s_at(t);
    const double scale = sylvester_scale(p, q, m, n);
    if (scale == 0.0) continue;
    if (std::abs(sylvester_determinant(p, q, m, n)) > 1e-10 * scale) return false;
  }
  return true;
}

struct Polished {
  double t, s;
  bool converged;
};

// Newton on (X, Y) = 0 in both unknowns.
Polished polish_pair(const BiPoly& X, const BiPoly& Y, const BiPoly& Xt, const BiPoly& Xs,
                     const BiPoly& Yt, const BiPoly& Ys, double t, double s) {
  for (int it = 0; it < 60; ++it) {
    const double fx = X(t, s), fy = Y(t, s);
    const double a = Xt(t, s), b = Xs(t, s), c = Yt(t, s), d = Ys(t, s);
    const double det = a * d - b * c;
    if (det == 0.0 || !std::isfinite(det)) return {t, s, false};
    const double dt = (d * fx - b * fy) / det;
    const double ds = (-c * fx + a * fy) / det;
    t -= dt;
    s -= ds;
    if (!std::isfinite(t) || !std::isfinite(s)) return {t, s, false};
    if (std::abs(dt) + std::abs(ds) <= 1e-15 * (1.0 + std::abs(t) + std::abs(s))) break;
  }
  return {t, s, true};
}

double intersection_residual(const PlaneCurve& c, double t, double s) {
  return std::abs(c.x(t) - c.x(s)) + std::abs(c.y(t) - c.y(s));
}

double intersection_scale(const PlaneCurve& c, double t, double s) {
  return std::max(1.0, c.x.magnitude_at(t) + c.x.magnitude_at(s) + c.y.magnitude_at(t) +
                           c.y.magnitude_at(s));
}

}  // namespace

void validate_plane_curve(const PlaneCurve& c) {
  if (c.x.degree() < 1 || c.y.degree() < 1)
    throw DomainError("plane curve: components must be nonconstant");
  if (c.x.degree() >= c.y.degree())
    throw DomainError("plane curve: degrees must satisfy deg x < deg y (got " +
                      std::to_string(c.x.degree()) + ", " + std::to_string(c.y.degree()) + ")");
}

DoublePointSearch locate_double_points(const PlaneCurve& c, double tol) {
  if (!(tol > 0.0)) throw DomainError("double points: tolerance must be positive");
  if (c.x.degree() < 1 || c.y.degree() < 1)
    throw DomainError("double points: components must be nonconstant");
  DoublePointSearch out;
  if (c.x.degree() < 2 || c.y.degree() < 2) {
    // A linear component is injective, so the curve is too.
    out.resultant = RealPoly::constant(1.0);
    return out;
  }

  const BiPoly X = divided_difference(c.x);
  const BiPoly Y = divided_difference(c.y);
  if (resultant_identically_zero(X, Y)) {
    out.resultant_vanishes = true;
    out.warnings.push_back("resultant vanishes identically: the curve overlaps itself");
    return out;
  }
  out.resultant = resultant_eliminate_s(X, Y);
  if (out.resultant.degree() < 1) return out;

  const BiPoly Xt = X.d_dt(), Xs = X.d_ds(), Yt = Y.d_dt(), Ys = Y.d_ds();
  const RootSet troots = real_roots(out.resultant, kRootTolerance);
  out.resultant_real_roots = static_cast<int>(troots.size());

  std::vector<DoublePoint> raw;
  for (double t0 : troots.roots) {
    const RealPoly xs = X.in_s_at(t0);
    if (xs.degree() < 1) continue;
    for (double s0 : real_roots(xs, kRootTolerance).roots) {
      if (std::abs(s0 - t0) <= 1e-7 * (1.0 + std::abs(t0))) continue;
      const double yv = std::abs(Y(t0, s0));
      if (yv > 1e-3 * std::max(Y.magnitude_at(t0, s0), 1e-300)) continue;
      const Polished p = polish_pair(X, Y, Xt, Xs, Yt, Ys, t0, s0);
      if (!p.converged) continue;
      if (std::abs(p.t - p.s) <= 1e-7 * (1.0 + std::abs(p.t))) continue;
      if (intersection_residual(c, p.t, p.s) > tol * intersection_scale(c, p.t, p.s)) continue;
      DoublePoint dp;
      dp.t = std::min(p.t, p.s);
      dp.s = std::max(p.t, p.s);
      raw.push_back(dp);
    }
  }

  std::sort(raw.begin(), raw.end(), [](const DoublePoint& a, const DoublePoint& b) {
    return a.t < b.t || (a.t == b.t && a.s < b.s);
  });
  for (const DoublePoint& dp : raw) {
    const bool dup = std::any_of(out.points.begin(), out.points.end(), [&](const DoublePoint& q) {
      return std::abs(q.t - dp.t) <= 1e-7 * (1.0 + std::abs(dp.t)) &&
             std::abs(q.s - dp.s) <= 1e-7 * (1.0 + std::abs(dp.s));
    });
    if (!dup) out.points.push_back(dp);
  }

  for (DoublePoint& dp : out.points) {
    const Vec2 a = c.at(dp.t), b = c.at(dp.s);
    dp.point = {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)};
    dp.tangent_t = c.tangent(dp.t);
    dp.tangent_s = c.tangent(dp.s);
    dp.transversality = cross(dp.tangent_t, dp.tangent_s);
    const double norms = std::hypot(dp.tangent_t.x, dp.tangent_t.y) *
                         std::hypot(dp.tangent_s.x, dp.tangent_s.y);
    if (std::abs(dp.transversality) <= kTransverseSine * norms)
      out.non_transverse.push_back(fmt_pair(dp.t, dp.s));
  }

  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j) {
      const Vec2 a = out.points[i].point, b = out.points[j].point;
      const double scale = 1.0 + std::abs(a.x) + std::abs(a.y);
      if (std::abs(a.x - b.x) + std::abs(a.y - b.y) <= tol * scale)
        out.triple_points.push_back(fmt_pair(out.points[i].t, out.points[i].s) + " and " +
                                    fmt_pair(out.points[j].t, out.points[j].s));
    }

  if (out.resultant_real_roots != 2 * static_cast<int>(out.points.size()))
    out.warnings.push_back("resultant has " + std::to_string(out.resultant_real_roots) +
                           " real roots but " + std::to_string(out.points.size()) +
                           " double points were confirmed (tangential or complex intersections)");
  return out;
}

std::vector<DoublePoint> find_double_points(const PlaneCurve& c, double tol) {
  DoublePointSearch search = locate_double_points(c, tol);
  if (search.resultant_vanishes)
    throw DomainError("double points: the curve overlaps itself along an arc");
  if (!search.non_transverse.empty()) {
    const auto& bad = *std::find_if(search.points.begin(), search.points.end(), [](const DoublePoint& dp) {
      const double norms = std::hypot(dp.tangent_t.x, dp.tangent_t.y) *
                           std::hypot(dp.tangent_s.x, dp.tangent_s.y);
      return std::abs(dp.transversality) <= kTransverseSine * norms;
    });
    throw NonTransverse("double points: tangential intersection at " + search.non_transverse.front(),
                        bad.t, bad.s);
  }
  if (!search.triple_points.empty()) {
    const auto& p = search.points.front();
    throw NonTransverse("double points: triple point " + search.triple_points.front(), p.t, p.s);
  }
  return std::move(search.points);
}

RegularityReport check_regularity(const PlaneCurve& c, double tol) {
  if (!(tol > 0.0)) throw DomainError("check_regularity: tolerance must be positive");
  RegularityReport rep;
  const RealPoly dx = derivative(c.x);
  const RealPoly dy = derivative(c.y);
  if (dx.is_zero() || dy.is_zero()) {
    rep.issues.push_back("a component is constant");
    return rep;
  }
  if (dx.degree() >= 1) {
    for (double r : real_roots(dx, kRootTolerance).roots) {
      if (std::abs(dy(r)) <= tol * std::max(1.0, dy.magnitude_at(r))) {
        rep.common_critical_values.push_back(r);
      }
    }
  }
  if (!rep.common_critical_values.empty())
    rep.issues.push_back("x' and y' have a common zero (cusp or stall)");

  const DoublePointSearch search = locate_double_points(c, tol);
  rep.double_point_count = static_cast<int>(search.points.size());
  if (search.resultant_vanishes) rep.issues.push_back("the curve overlaps itself along an arc");
  for (const auto& s : search.non_transverse) rep.issues.push_back("tangential intersection at " + s);
  for (const auto& s : search.triple_points) rep.issues.push_back("triple point at " + s);
  rep.is_regular = rep.issues.empty();
  return rep;
}

int max_crossing_bound(int d) {
  if (d < 3) throw DomainError("max_crossing_bound: degree must be at least 3");
  return (d - 2) * (d - 3) / 2;
}

bool in_semigroup(int target, int g1, int g2) {
  if (target < 1) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (int v = 1; v <= target; ++v) {
    reach[static_cast<std::size_t>(v)] =
        (v >= g1 && reach[static_cast<std::size_t>(v - g1)]) ||
        (v >= g2 && reach[static_cast<std::size_t>(v - g2)]);
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

bool valid_degree_sequence(int d1, int d2, int d3) {
  if (d1 < 1 || !(d1 < d2 && d2 < d3))
    throw DomainError("valid_degree_sequence: degrees must be positive and strictly increasing");
  return !in_semigroup(d1, d2, d3) && !in_semigroup(d2, d1, d3) && !in_semigroup(d3, d1, d2);
}

std::string plot_curve_svg(const PlaneCurve& c, double t0, double t1,
                           std::span<const DoublePoint> marks) {
  if (!(t1 > t0)) throw DomainError("plot: empty parameter range");
  constexpr int kSamples = 1200;
  constexpr double kSize = 600.0;
  constexpr double kPad = 20.0;

  std::vector<Vec2> pts(kSamples + 1);
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = t0 + (t1 - t0) * i / kSamples;
    pts[static_cast<std::size_t>(i)] = c.at(t);
    xmin = std::min(xmin, pts[static_cast<std::size_t>(i)].x);
    xmax = std::max(xmax, pts[static_cast<std::size_t>(i)].x);
    ymin = std::min(ymin, pts[static_cast<std::size_t>(i)].y);
    ymax = std::max(ymax, pts[static_cast<std::size_t>(i)].y);
  }
  const double w = std::max(xmax - xmin, 1e-12), h = std::max(ymax - ymin, 1e-12);
  auto px = [&](double x) { return kPad + (x - xmin) / w * (kSize - 2 * kPad); };
  auto py = [&](double y) { return kSize - kPad - (y - ymin) / h * (kSize - 2 * kPad); };

  std::ostringstream os;
  char buf[128];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  os << "<rect width=\"600\" height=\"600\" fill=\"white\"/>\n";
  os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "", px(pts[i].x), py(pts[i].y));
    os << buf;
  }
  os << "\"/>\n";
  int id = 1;
  for (const DoublePoint& m : marks) {
    std::snprintf(buf, sizeof buf,
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"5\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n",
                  px(m.point.x), py(m.point.y));
    os << buf;
    std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" fill=\"red\">%d</text>\n",
                  px(m.point.x) + 7, py(m.point.y) - 7, id++);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace polyknot

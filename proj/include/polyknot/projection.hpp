#pragma once

// Plane-curve analysis for polynomial projections (x(t), y(t)).

#include <span>
#include <string>
#include <vector>

#include "polyknot/polycore.hpp"

namespace polyknot {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

struct PlaneCurve {
  RealPoly x;
  RealPoly y;

  Vec2 at(double t) const { return {x(t), y(t)}; }
  Vec2 tangent(double t) const { return {derivative(x)(t), derivative(y)(t)}; }
  /// (x(-t), y(-t)).
  PlaneCurve reflected() const { return {reflect(x), reflect(y)}; }
};

/// Throws DomainError unless both components are nonconstant and
/// deg x < deg y.
void validate_plane_curve(const PlaneCurve& c);

/// A transverse self-intersection c(t) = c(s), t < s.
struct DoublePoint {
  double t = 0.0;
  double s = 0.0;
  Vec2 point;
  Vec2 tangent_t;
  Vec2 tangent_s;
  /// cross(tangent_t, tangent_s); zero means a tangential intersection.
  double transversality = 0.0;
};

struct RegularityReport {
  bool is_regular = false;
  std::vector<double> common_critical_values;
  int double_point_count = 0;
  /// Human-readable reasons the projection is not regular (empty when it is).
  std::vector<std::string> issues;
};

/// Everything the double-point search found, including what it rejected.
struct DoublePointSearch {
  std::vector<DoublePoint> points;
  RealPoly resultant;
  bool resultant_vanishes = false;
  int resultant_real_roots = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> non_transverse;
  std::vector<std::string> triple_points;
};

/// Default tolerance for matching an intersection after Newton polishing.
inline constexpr double kMatchTolerance = 1e-6;

/// Runs the resultant-based search without raising on degenerate findings.
DoublePointSearch locate_double_points(const PlaneCurve& c, double tol = kMatchTolerance);

/// Sorted by t. Throws NonTransverse for a tangential or triple intersection
/// and DomainError when the curve overlaps itself along an arc.
std::vector<DoublePoint> find_double_points(const PlaneCurve& c, double tol = kMatchTolerance);

RegularityReport check_regularity(const PlaneCurve& c, double tol = kMatchTolerance);

/// floor((d-2)(d-3)/2); DomainError for d < 3.
int max_crossing_bound(int d);

/// True iff none of d1 < d2 < d3 lies in the numerical semigroup generated by
/// the other two. DomainError unless strictly increasing and positive.
bool valid_degree_sequence(int d1, int d2, int d3);

/// Whether target = a*g1 + b*g2 for nonnegative a, b (target >= 1).
bool in_semigroup(int target, int g1, int g2);

/// Static SVG of the curve over [t0, t1] with the given double points circled.
std::string plot_curve_svg(const PlaneCurve& c, double t0, double t1,
                           std::span<const DoublePoint> marks);

}  // namespace polyknot

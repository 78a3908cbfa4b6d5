#pragma once

// Closed knot diagrams of polynomial long knots: crossings, signs, writhe and
// planar diagram (PD) codes.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polyknot/lift.hpp"
#include "polyknot/polycore.hpp"
#include "polyknot/projection.hpp"

namespace polyknot {

/// t -> (f(t), g(t), h(t)) with deg f < deg g < deg h.
struct SpaceKnot {
  RealPoly f;
  RealPoly g;
  RealPoly h;

  PlaneCurve projection() const { return {f, g}; }
};

void validate_space_knot(const SpaceKnot& k);

/// sign(det[tangent_over, tangent_under]). NonTransverse on parallel or zero
/// tangents.
int crossing_sign(Vec2 tangent_over, Vec2 tangent_under);

/// One crossing of a geometric diagram.
struct Crossing {
  int id = 0;
  double t_under = 0.0;
  double t_over = 0.0;
  Vec2 point;
  int sign = 0;
};

/// Arc labels at a crossing: incoming under-strand first, then
/// counterclockwise. a -> c is the under-strand; the crossing is positive iff
/// slot d is the incoming over-strand.
using PdTuple = std::array<int, 4>;

class KnotDiagram {
 public:
  KnotDiagram() = default;

  /// Validates the code (each label exactly twice, one connected component,
  /// consistent orientation) and derives signs from it. Throws DataError.
  static KnotDiagram from_pd(std::vector<PdTuple> pd);

  /// Attaches crossing geometry; crossings[i] must describe pd[i].
  static KnotDiagram from_pd(std::vector<PdTuple> pd, std::vector<Crossing> crossings);

  std::size_t size() const { return pd_.size(); }
  const std::vector<PdTuple>& pd() const { return pd_; }
  const std::vector<int>& signs() const { return signs_; }
  /// Empty for diagrams built from a bare PD code.
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int writhe() const;
  int arc_count() const { return static_cast<int>(2 * pd_.size()); }

  /// "X(a,b,c,d), X(e,f,g,h), ..."; empty for the trivial diagram.
  std::string pd_string() const;
  /// Passages along the orientation, starting where the smallest arc label
  /// leaves: tokens O<id><sign> / U<id><sign> with 1-based crossing ids.
  std::string gauss_code() const;

  friend bool operator==(const KnotDiagram& a, const KnotDiagram& b) {
    return a.pd_ == b.pd_ && a.signs_ == b.signs_;
  }

 private:
  std::vector<PdTuple> pd_;
  std::vector<int> signs_;
  std::vector<Crossing> crossings_;
};

/// Parses "X(1,2,3,4) X(...)" with spaces or commas between tuples.
std::vector<PdTuple> parse_pd(std::string_view text);

/// The diagram of a plane projection with an imposed over/under pattern:
/// pattern[i] == Under puts the strand through t_i beneath the one through s_i.
/// The two unbounded ends close through one arc outside the picture.
KnotDiagram diagram_from_pattern(std::span<const DoublePoint> points, const SignPattern& pattern);

/// The diagram of k projected to the (f, g) plane. Throws DomainError when
/// |h(t) - h(s)| is within tol (relative to the size of h) at a crossing.
KnotDiagram build_diagram(const SpaceKnot& k, double tol = 1e-9);

/// Over/under swapped everywhere; signs and writhe negate.
KnotDiagram mirror(const KnotDiagram& d);

/// Reidemeister I: a curl of the given sign inserted on arc `arc`, which is
/// split into `arc`, a loop arc and an exit arc with fresh labels. The strand
/// passes the new crossing underneath first when under_first is set.
KnotDiagram with_kink(const KnotDiagram& d, int arc, int sign, bool under_first);

}  // namespace polyknot

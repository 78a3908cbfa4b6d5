#pragma once

// Degree bounds on crossing, bridge and superbridge index, and empirical
// counts of height-function maxima over projection directions.

#include <cstdint>
#include <map>
#include <string>

#include "polyknot/diagram.hpp"

namespace polyknot {

struct DegreeBounds {
  int crossing = 0;
  int bridge = 0;
  int superbridge = 0;
};

/// (floor((d-2)(d-3)/2), floor((d-1)/2), floor((d+1)/2)); DomainError for d < 3.
DegreeBounds degree_bounds(int d);

/// min(2p, q) for coprime 2 <= p < q.
int torus_superbridge(int p, int q);

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Behaviour of the height function at t -> -inf and t -> +inf.
enum class Tails : std::uint8_t { BothUp, BothDown, Mixed };

std::string to_string(Tails t);

/// Closure convention: the point at infinity adds one maximum unless both
/// tails fall.
inline constexpr const char* kClosureConvention = "both-up +1, both-down +0, mixed +1";

struct DirectionalMaxima {
  int interior_maxima = 0;
  int interior_minima = 0;
  Tails tails = Tails::Mixed;
  int closed_count = 0;
  /// The derivative of the height has a (near) multiple root.
  bool degenerate = false;
};

/// Maxima of t -> v . (f, g, h). DomainError unless |v| = 1 and the height is
/// nonconstant.
DirectionalMaxima directional_maxima(const SpaceKnot& k, Vec3 v, double tol = 1e-8);

struct DirectionSweep {
  int directions = 0;
  int degenerate = 0;
  int min_closed = 0;
  int max_closed = 0;
  Vec3 argmin;
  Vec3 argmax;
  /// closed count -> number of directions.
  std::map<int, int> histogram;
  /// Per-coordinate scales of the sampling frame.
  Vec3 frame;
};

/// Quasi-uniform directions (Fibonacci lattice with seeded jitter) drawn in a
/// frame where f, g, h are each scaled to unit size over the parameter window
/// of the plane curve's turning points. Rescaling a coordinate permutes
/// directions, so the attainable counts are unchanged; only sampling density
/// moves toward the thin bands a raw lattice misses. Degenerate directions
/// are skipped and counted.
DirectionSweep sweep_directions(const SpaceKnot& k, int n, std::uint64_t seed);

}  // namespace polyknot

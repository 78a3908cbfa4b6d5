#include "polyknot/bridges.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "polyknot/error.hpp"

namespace polyknot {

namespace {

double largest_critical_point(const RealPoly& p) {
  const RealPoly dp = derivative(p);
  if (dp.degree() < 1) return 0.0;
  double r = 0.0;
  for (double x : real_roots(dp).roots) r = std::max(r, std::abs(x));
  return r;
}

double max_abs_on(const RealPoly& p, double R) {
  double m = 0.0;
  constexpr int kSamples = 2001;
  for (int i = 0; i < kSamples; ++i) m = std::max(m, std::abs(p(-R + 2.0 * R * i / (kSamples - 1))));
  return m > 0.0 ? m : 1.0;
}

}  // namespace

DegreeBounds degree_bounds(int d) {
  if (d < 3) throw DomainError("degree bounds need d >= 3");
  return {max_crossing_bound(d), (d - 1) / 2, (d + 1) / 2};
}

int torus_superbridge(int p, int q) {
  if (p < 2 || q <= p || std::gcd(p, q) != 1)
    throw DomainError("torus knot (p, q) needs coprime 2 <= p < q");
  return std::min(2 * p, q);
}

std::string to_string(Tails t) {
  switch (t) {
    case Tails::BothUp: return "both-up";
    case Tails::BothDown: return "both-down";
    case Tails::Mixed: return "mixed";
  }
  return "?";
}

DirectionalMaxima directional_maxima(const SpaceKnot& k, Vec3 v, double tol) {
  const double norm = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  if (std::abs(norm - 1.0) > 1e-9) throw DomainError("direction must be a unit vector");
  const RealPoly p = v.x * k.f + v.y * k.g + v.z * k.h;
  if (p.degree() < 1) throw DomainError("height function is constant in this direction");

  DirectionalMaxima out;
  const bool even = p.degree() % 2 == 0;
  out.tails = !even ? Tails::Mixed : p.leading() > 0.0 ? Tails::BothUp : Tails::BothDown;

  const RealPoly dp = derivative(p);
  if (dp.degree() >= 1) {
    const RootSet rs = real_roots(dp);
    const RealPoly ddp = derivative(dp);
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const double r = rs.roots[i];
      if (rs.multiple[i] || std::abs(ddp(r)) <= tol * std::max(ddp.magnitude_at(r), 1e-300))
        out.degenerate = true;
    }
    // Classify each root by the sign of p' on either side.
    const auto& roots = rs.roots;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const double left = i == 0 ? roots[i] - 1.0 : 0.5 * (roots[i - 1] + roots[i]);
      const double right = i + 1 == roots.size() ? roots[i] + 1.0 : 0.5 * (roots[i] + roots[i + 1]);
      const double a = dp(left), b = dp(right);
      if (a > 0.0 && b < 0.0) ++out.interior_maxima;
      if (a < 0.0 && b > 0.0) ++out.interior_minima;
    }
  }
  out.closed_count = out.interior_maxima + (out.tails == Tails::BothDown ? 0 : 1);
  return out;
}

DirectionSweep sweep_directions(const SpaceKnot& k, int n, std::uint64_t seed) {
  if (n < 1) throw DomainError("sweep needs at least one direction");
  validate_space_knot(k);
  const double R =
      1.0 + std::max(largest_critical_point(k.f), largest_critical_point(k.g));
  const Vec3 frame{max_abs_on(k.f, R), max_abs_on(k.g, R), max_abs_on(k.h, R)};

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));

  DirectionSweep out;
  out.frame = frame;
  out.min_closed = std::numeric_limits<int>::max();
  out.max_closed = std::numeric_limits<int>::min();
  for (int i = 0; i < n; ++i) {
    const double z = std::clamp(1.0 - (2.0 * (i + 0.5 + 0.5 * jitter(rng))) / n, -1.0, 1.0);
    const double phi = golden * i + 0.5 * golden * jitter(rng);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec3 v{r * std::cos(phi) / frame.x, r * std::sin(phi) / frame.y, z / frame.z};
    const double len = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    v = {v.x / len, v.y / len, v.z / len};
    ++out.directions;
    DirectionalMaxima m;
    try {
      m = directional_maxima(k, v);
    } catch (const DomainError&) {
      ++out.degenerate;
      continue;
    }
    if (m.degenerate) {
      ++out.degenerate;
      continue;
    }
    ++out.histogram[m.closed_count];
    if (m.closed_count < out.min_closed) {
      out.min_closed = m.closed_count;
      out.argmin = v;
    }
    if (m.closed_count > out.max_closed) {
      out.max_closed = m.closed_count;
      out.argmax = v;
    }
  }
  if (out.histogram.empty()) out.min_closed = out.max_closed = 0;
  return out;
}

}  // namespace polyknot

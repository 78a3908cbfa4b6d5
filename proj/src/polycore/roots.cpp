#include <algorithm>
#include <cmath>
#include <limits>

#include "polyknot/error.hpp"
#include "polyknot/polycore.hpp"

namespace polyknot {

namespace {

RealPoly normalized(const RealPoly& p) {
  const double m = p.max_abs_coeff();
  return m > 0.0 ? (1.0 / m) * p : p;
}

// Sturm chain p, p', -rem(...), ...; members rescaled to unit max coefficient
// (positive scaling keeps every sign). A remainder that is zero relative to
// its dividend ends the chain.
std::vector<RealPoly> sturm_chain(const RealPoly& p) {
  std::vector<RealPoly> chain;
  chain.push_back(normalized(p));
  RealPoly d = derivative(chain.back());
  if (d.is_zero()) return chain;
  chain.push_back(normalized(d));
  while (chain.back().degree() > 0) {
    RealPoly q, r;
    divide(chain[chain.size() - 2], chain.back(), q, r);
    const double scale = chain[chain.size() - 2].max_abs_coeff();
    if (r.is_zero() || r.max_abs_coeff() <= 1e-11 * scale) break;
    chain.push_back(normalized(-r));
  }
  return chain;
}

int sign_variations(const std::vector<RealPoly>& chain, double x) {
  int changes = 0;
  int prev = 0;
  for (const auto& f : chain) {
    const double v = f(x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int count_in(const std::vector<RealPoly>& chain, double a, double b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

// A split point near the middle of (a, b) where p is not (numerically) zero,
// so Sturm counts at the split are well defined.
double safe_split(const RealPoly& p, double a, double b) {
  static constexpr double kOffsets[] = {0.5, 0.4619, 0.5381, 0.4137, 0.5863, 0.3691, 0.6309};
  double best = 0.5 * (a + b);
  double best_val = -1.0;
  for (double f : kOffsets) {
    const double m = a + f * (b - a);
    const double v = std::abs(p(m)) / std::max(p.magnitude_at(m), 1e-300);
    if (v > 1e-9) return m;
    if (v > best_val) {
      best_val = v;
      best = m;
    }
  }
  return best;
}

double newton_polish(const RealPoly& p, const RealPoly& dp, double x, double lo, double hi) {
  for (int it = 0; it < 60; ++it) {
    const double fx = p(x);
    const double dfx = dp(x);
    if (fx == 0.0 || dfx == 0.0) break;
    const double step = fx / dfx;
    const double nx = x - step;
    if (!(nx >= lo && nx <= hi)) break;
    if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x))) {
      x = nx;
      break;
    }
    // Accept only steps that do not increase the residual.
    if (std::abs(p(nx)) > std::abs(fx)) break;
    x = nx;
  }
  return x;
}

}  // namespace

bool RootSet::any_multiple() const {
  return std::any_of(multiple.begin(), multiple.end(), [](bool b) { return b; });
}

double root_bound(const RealPoly& p) {
  // Fujiwara: 2 max_k |a_{n-k} / a_n|^(1/k), with the constant term halved.
  const int n = p.degree();
  if (n < 1) return 0.0;
  const double lead = std::abs(p.leading());
  double m = 0.0;
  for (int k = 1; k <= n; ++k) {
    double a = std::abs(p.coeff(n - k)) / lead;
    if (k == n) a *= 0.5;
    m = std::max(m, std::pow(a, 1.0 / k));
  }
  return 2.0 * m;
}

int sturm_count(const RealPoly& p, double a, double b) {
  if (p.is_zero()) throw DomainError("sturm_count: zero polynomial");
  return count_in(sturm_chain(p), a, b);
}

namespace {

// Isolation width: tol, but never below a few ulps of the endpoints.
double width_floor(double a, double b, double tol) {
  return std::max(tol, 8.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(a), std::abs(b)));
}

}  // namespace

RootSet real_roots(const RealPoly& p, double tol) {
  if (p.is_zero()) throw DomainError("real_roots: zero polynomial");
  if (!(tol > 0.0)) throw DomainError("real_roots: tolerance must be positive");
  RootSet out;
  out.tolerance = tol;
  if (p.degree() < 1) return out;

  const auto chain = sturm_chain(p);
  const RealPoly np = chain.front();
  const RealPoly dp = derivative(np);
  const double bound = root_bound(p) * 1.0001 + tol;

  struct Interval {
    double a, b;
    int count;
  };
  std::vector<Interval> stack{{-bound, bound, count_in(chain, -bound, bound)}};
  std::vector<std::pair<double, bool>> found;

  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count <= 0) continue;
    if (iv.b - iv.a <= width_floor(iv.a, iv.b, tol)) {
      found.emplace_back(0.5 * (iv.a + iv.b), iv.count > 1);
      continue;
    }
    if (iv.count == 1 && np(iv.a) * np(iv.b) < 0.0) {
      // Plain sign-change bracket: bisect on sign to width tol.
      double a = iv.a, b = iv.b;
      double fa = np(a);
      while (b - a > width_floor(a, b, tol)) {
        const double m = 0.5 * (a + b);
        if (!(m > a && m < b)) break;
        const double fm = np(m);
        if (fm == 0.0) {
          a = b = m;
          break;
        }
        if ((fm < 0.0) == (fa < 0.0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      found.emplace_back(newton_polish(np, dp, 0.5 * (a + b), iv.a, iv.b), false);
      continue;
    }
    const double m = safe_split(np, iv.a, iv.b);
    if (!(m > iv.a && m < iv.b)) {
      found.emplace_back(0.5 * (iv.a + iv.b), iv.count > 1);
      continue;
    }
    const int left = count_in(chain, iv.a, m);
    // Push right first so roots come out roughly ascending.
    stack.push_back({m, iv.b, iv.count - left});
    stack.push_back({iv.a, m, left});
  }

  std::sort(found.begin(), found.end());
  for (auto& [r, mult] : found) {
    double x = r;
    if (!mult) x = newton_polish(np, dp, x, x - tol, x + tol);
    const double slope_scale = derivative(np).magnitude_at(x);
    const bool flat = std::abs(dp(x)) <= 1e-8 * std::max(slope_scale, 1e-300);
    if (!out.roots.empty() && x <= out.roots.back()) {
      // Two isolating intervals polished onto the same value.
      out.multiple.back() = true;
      continue;
    }
    out.roots.push_back(x);
    out.multiple.push_back(mult || flat);
  }
  return out;
}

}  // namespace polyknot

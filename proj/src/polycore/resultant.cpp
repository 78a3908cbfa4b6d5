#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "polyknot/error.hpp"
#include "polyknot/polycore.hpp"

namespace polyknot {

double sylvester_determinant(const RealPoly& p, const RealPoly& q, int m, int n) {
  if (m < p.degree() || n < q.degree() || m < 0 || n < 0)
    throw DomainError("sylvester_determinant: formal degree below actual degree");
  if (m == 0) return std::pow(p.coeff(0), n);
  if (n == 0) return std::pow(q.coeff(0), m);
  const int size = m + n;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(size, size);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) S(r, r + k) = p.coeff(m - k);
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S(n + r, r + k) = q.coeff(n - k);
  return S.partialPivLu().determinant();
}

double sylvester_determinant(const RealPoly& p, const RealPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0.0;
  return sylvester_determinant(p, q, p.degree(), q.degree());
}

namespace {

// Coefficients (ascending, in u) of the degree-<=N interpolant of f(rho*u)
// through N+1 Chebyshev nodes on [-1, 1].
template <typename F>
std::vector<double> interpolate_scaled(F&& f, int N, double rho) {
  const int count = N + 1;
  Eigen::MatrixXd V(count, count);
  Eigen::VectorXd y(count);
  for (int k = 0; k < count; ++k) {
    const double u =
        count == 1 ? 0.0 : std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * count));
    double pw = 1.0;
    for (int j = 0; j < count; ++j) {
      V(k, j) = pw;
      pw *= u;
    }
    y(k) = f(rho * u);
  }
  Eigen::VectorXd c = V.colPivHouseholderQr().solve(y);
  return {c.data(), c.data() + c.size()};
}

}  // namespace

RealPoly resultant_eliminate_s(const BiPoly& P, const BiPoly& Q) {
  if (P.is_zero() || Q.is_zero()) throw DomainError("resultant: zero input");
  const int m = P.degree_s();
  const int n = Q.degree_s();
  if (m < 1 || n < 1) throw DomainError("resultant: an input has degree 0 in s");

  const int mixed_bound = m * Q.degree_t() + n * P.degree_t();
  const int bezout_bound = P.total_degree() * Q.total_degree();
  const int N = std::max(0, std::min(mixed_bound, bezout_bound));

  auto value_at = [&](double t) {
    return sylvester_determinant(P.in_s_at(t), Q.in_s_at(t), m, n);
  };

  // keep < 0: trim noise above the true degree; otherwise truncate to keep+1.
  auto build = [&](double rho, int keep) {
    std::vector<double> cu = interpolate_scaled(value_at, N, rho);
    if (keep >= 0) {
      cu.resize(std::min<std::size_t>(cu.size(), static_cast<std::size_t>(keep) + 1));
    } else {
      double big = 0.0;
      for (double v : cu) big = std::max(big, std::abs(v));
      // Degree can fall below the bound; drop interpolation noise on top.
      while (!cu.empty() && std::abs(cu.back()) <= 1e-11 * big) cu.pop_back();
    }
    std::vector<double> ct(cu.size());
    double scale = 1.0;
    for (std::size_t k = 0; k < cu.size(); ++k) {
      ct[k] = cu[k] / scale;
      scale *= rho;
    }
    return RealPoly(std::move(ct));
  };

  RealPoly R = build(1.0, -1);
  if (R.degree() < 1) return R;
  const double rho = root_bound(R);
  if (rho > 1.5) R = build(rho, -1);
  // Accuracy matters most where the real roots live; nodes spread out to the
  // complex-root bound lose several digits there, so resample tightly.
  const int degree = R.degree();
  double reach = 0.0;
  for (double r : real_roots(R, 1e-9).roots) reach = std::max(reach, std::abs(r));
  const double tight = std::max(1.5, 1.1 * reach);
  if (tight < rho) R = build(tight, degree);
  return R;
}

}  // namespace polyknot

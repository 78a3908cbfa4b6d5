#include <algorithm>
#include <cmath>

#include "polyknot/error.hpp"
#include "polyknot/polycore.hpp"

namespace polyknot {

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RealPoly::RealPoly(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

RealPoly RealPoly::constant(double c) { return RealPoly(std::vector<double>{c}); }

RealPoly RealPoly::monomial(int k, double c) {
  if (k < 0) throw DomainError("monomial: negative exponent");
  std::vector<double> v(static_cast<std::size_t>(k) + 1, 0.0);
  v.back() = c;
  return RealPoly(std::move(v));
}

RealPoly RealPoly::from_roots(std::span<const double> roots, double lead) {
  RealPoly p = constant(lead);
  for (double r : roots) p = p * RealPoly{-r, 1.0};
  return p;
}

void RealPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double RealPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(k)];
}

double RealPoly::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double RealPoly::magnitude_at(double t) const {
  const double at = std::abs(t);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + std::abs(*it);
  return acc;
}

double RealPoly::max_abs_coeff() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
  std::vector<double> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
  return RealPoly(std::move(v));
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) { return a + (-1.0 * b); }

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RealPoly(std::move(v));
}

RealPoly operator*(double k, const RealPoly& a) {
  std::vector<double> v = a.coeffs_;
  for (double& c : v) c *= k;
  return RealPoly(std::move(v));
}

double eval(const RealPoly& p, double t) { return p(t); }

RealPoly derivative(const RealPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<double> v(static_cast<std::size_t>(p.degree()));
  for (int k = 1; k <= p.degree(); ++k) v[static_cast<std::size_t>(k - 1)] = k * p.coeff(k);
  return RealPoly(std::move(v));
}

RealPoly reflect(const RealPoly& p) {
  std::vector<double> v = p.coeffs();
  for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
  return RealPoly(std::move(v));
}

void divide(const RealPoly& num, const RealPoly& den, RealPoly& quotient, RealPoly& remainder) {
  if (den.is_zero()) throw DomainError("divide: zero divisor");
  const int n = num.degree();
  const int d = den.degree();
  if (n < d) {
    quotient = {};
    remainder = num;
    return;
  }
  std::vector<double> r = num.coeffs();
  std::vector<double> q(static_cast<std::size_t>(n - d + 1), 0.0);
  const double lead = den.leading();
  for (int k = n - d; k >= 0; --k) {
    const double c = r[static_cast<std::size_t>(k + d)] / lead;
    q[static_cast<std::size_t>(k)] = c;
    for (int j = 0; j <= d; ++j) r[static_cast<std::size_t>(k + j)] -= c * den.coeff(j);
    r[static_cast<std::size_t>(k + d)] = 0.0;
  }
  r.resize(static_cast<std::size_t>(d));
  quotient = RealPoly(std::move(q));
  remainder = RealPoly(std::move(r));
}

}  // namespace polyknot

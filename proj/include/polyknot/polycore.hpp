#pragma once

// Real polynomial algebra: univariate and bivariate polynomials, divided
// differences, resultants and certified real-root isolation.

#include <initializer_list>
#include <span>
#include <vector>

namespace polyknot {

/// Dense univariate polynomial with real coefficients in ascending degree.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient
/// is nonzero. Values are immutable once built.
class RealPoly {
 public:
  RealPoly() = default;
  explicit RealPoly(std::vector<double> coeffs);
  RealPoly(std::initializer_list<double> coeffs);

  static RealPoly constant(double c);
  static RealPoly monomial(int k, double c = 1.0);
  /// lead * prod (t - r).
  static RealPoly from_roots(std::span<const double> roots, double lead = 1.0);

  const std::vector<double>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  double leading() const { return coeffs_.empty() ? 0.0 : coeffs_.back(); }
  double coeff(int k) const;

  double operator()(double t) const;

  /// Sum of |c_k| |t|^k; the natural scale for rounding error of eval at t.
  double magnitude_at(double t) const;
  double max_abs_coeff() const;

  friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
  friend RealPoly operator*(double k, const RealPoly& a);
  friend RealPoly operator-(const RealPoly& a) { return -1.0 * a; }
  friend bool operator==(const RealPoly& a, const RealPoly& b) = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

/// Horner evaluation.
double eval(const RealPoly& p, double t);
RealPoly derivative(const RealPoly& p);
/// p(-t).
RealPoly reflect(const RealPoly& p);
/// Euclidean division; throws DomainError on a zero divisor.
void divide(const RealPoly& num, const RealPoly& den, RealPoly& quotient, RealPoly& remainder);

/// Bivariate polynomial sum c[i][j] t^i s^j with trailing zero rows/columns
/// trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<double>> coeffs);

  const std::vector<std::vector<double>>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  double coeff(int i, int j) const;
  int degree_t() const;
  int degree_s() const;
  int total_degree() const;

  double operator()(double t, double s) const;
  double magnitude_at(double t, double s) const;

  /// The univariate polynomial s -> P(t, s) for fixed t.
  RealPoly in_s_at(double t) const;
  /// The univariate polynomial t -> P(t, s) for fixed s.
  RealPoly in_t_at(double s) const;
  /// Partial derivatives.
  BiPoly d_dt() const;
  BiPoly d_ds() const;

  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  void trim();
  std::vector<std::vector<double>> c_;  // c_[i][j]: t^i s^j
};

/// (p(t) - p(s)) / (t - s). Throws DomainError when deg p < 1.
BiPoly divided_difference(const RealPoly& p);

/// Determinant of the Sylvester matrix of p and q taken with formal degrees
/// m >= deg p and n >= deg q (leading zeros allowed).
double sylvester_determinant(const RealPoly& p, const RealPoly& q, int m, int n);
double sylvester_determinant(const RealPoly& p, const RealPoly& q);

/// Resultant of P and Q with respect to s, as a polynomial in t.
///
/// Computed by evaluating the Sylvester determinant at Chebyshev nodes and
/// interpolating. Throws DomainError when either input is zero or has no
/// s-dependence.
RealPoly resultant_eliminate_s(const BiPoly& P, const BiPoly& Q);

/// Isolated real roots, ascending.
struct RootSet {
  std::vector<double> roots;
  /// Parallel to roots: the derivative also vanishes (within tolerance) or
  /// more than one root collapsed into a single isolating interval.
  std::vector<bool> multiple;
  double tolerance = 0.0;

  std::size_t size() const { return roots.size(); }
  bool any_multiple() const;
};

/// Number of distinct real roots of p in (a, b], by Sturm's theorem.
int sturm_count(const RealPoly& p, double a, double b);

/// All real roots of p. Intervals are bisected on Sturm counts until each
/// holds one root and is narrower than tol, then Newton polished.
/// Throws DomainError for the zero polynomial or tol <= 0.
RootSet real_roots(const RealPoly& p, double tol = 1e-10);

/// Upper bound on |r| for every complex root r of p (Fujiwara).
double root_bound(const RealPoly& p);

}  // namespace polyknot

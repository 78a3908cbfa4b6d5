#include "polyknot/lift.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "polyknot/error.hpp"
#include "simplex.hpp"

namespace polyknot {

namespace {

// Margins of the normalized LP at or below this are treated as zero.
constexpr double kMarginFloor = 1e-9;
// Singular values below this fraction of the largest count as zero.
constexpr double kRankTolerance = 1e-8;

double monomial_gap(int k, double t, double s) { return std::pow(t, k) - std::pow(s, k); }

std::vector<double> separations_of(const RealPoly& h, std::span<const ParameterPair> points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(h(p.t) - h(p.s));
  return out;
}

void check_lengths(std::size_t points, const SignPattern& pattern) {
  if (points != pattern.size())
    throw DomainError("sign pattern has " + std::to_string(pattern.size()) + " entries for " +
                      std::to_string(points) + " crossings");
}

}  // namespace

std::vector<ParameterPair> parameter_pairs(std::span<const DoublePoint> points) {
  std::vector<ParameterPair> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p.t, p.s});
  return out;
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<Passage> flags;
  for (char ch : text) {
    if (ch == 'U' || ch == 'u')
      flags.push_back(Passage::Under);
    else if (ch == 'O' || ch == 'o')
      flags.push_back(Passage::Over);
    else
      throw DomainError(std::string("sign pattern may only contain U and O, got '") + ch + "'");
  }
  return SignPattern(std::move(flags));
}

SignPattern SignPattern::alternating(std::size_t n) {
  std::vector<Passage> flags(n);
  for (std::size_t i = 0; i < n; ++i) flags[i] = i % 2 == 0 ? Passage::Under : Passage::Over;
  return SignPattern(std::move(flags));
}

SignPattern SignPattern::from_separations(std::span<const double> separations) {
  std::vector<Passage> flags;
  for (double d : separations) flags.push_back(d < 0.0 ? Passage::Under : Passage::Over);
  return SignPattern(std::move(flags));
}

SignPattern SignPattern::mirrored() const {
  std::vector<Passage> flags = flags_;
  for (auto& f : flags) f = f == Passage::Under ? Passage::Over : Passage::Under;
  return SignPattern(std::move(flags));
}

std::string SignPattern::to_string() const {
  std::string out;
  for (auto f : flags_) out += f == Passage::Under ? 'U' : 'O';
  return out;
}

LiftSpec LiftSpec::for_crossings(std::size_t n, int degree, double magnitude) {
  if (degree < 1) throw DomainError("lift degree must be at least 1");
  if (n == 0 || static_cast<int>(n) > degree)
    throw DomainError("cannot fit " + std::to_string(n) + " free monomials in degree " +
                      std::to_string(degree));
  LiftSpec spec;
  spec.degree = degree;
  spec.magnitude = magnitude;
  const int free = static_cast<int>(n);
  for (int k = free; k >= 1; --k) spec.free_monomials.push_back(k);
  for (int k = free + 1; k <= degree; ++k) spec.pinned[k] = k == degree ? 1.0 : 0.0;
  return spec;
}

void LiftSpec::validate(std::size_t crossings) const {
  if (free_monomials.size() != crossings)
    throw DomainError("lift basis has " + std::to_string(free_monomials.size()) +
                      " free monomials for " + std::to_string(crossings) + " crossings");
  if (!(magnitude > 0.0)) throw DomainError("lift magnitude must be positive");
  std::vector<int> seen;
  for (int k : free_monomials) {
    if (k < 1 || k > degree) throw DomainError("free monomial t^" + std::to_string(k) +
                                               " outside 1.." + std::to_string(degree));
    if (pinned.count(k) || std::find(seen.begin(), seen.end(), k) != seen.end())
      throw DomainError("monomial t^" + std::to_string(k) + " listed twice");
    seen.push_back(k);
  }
  for (const auto& [k, c] : pinned)
    if (k < 1 || k > degree) throw DomainError("pinned monomial t^" + std::to_string(k) +
                                               " outside 1.." + std::to_string(degree));
}

LinearSystem build_sign_system(std::span<const ParameterPair> points, const SignPattern& pattern,
                               const LiftSpec& spec) {
  check_lengths(points.size(), pattern);
  spec.validate(points.size());
  const std::size_t n = points.size();

  LinearSystem sys;
  sys.unknowns = spec.free_monomials;
  sys.matrix.assign(n, std::vector<double>(n, 0.0));
  sys.rhs.assign(n, 0.0);
  Eigen::MatrixXd M(n, n);
  double row_norm_product = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [t, s] = points[i];
    double norm2 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double v = monomial_gap(spec.free_monomials[j], t, s);
      sys.matrix[i][j] = M(i, j) = v;
      norm2 += v * v;
    }
    row_norm_product *= std::sqrt(norm2);
    double rhs = pattern.sign(i) * spec.magnitude;
    for (const auto& [k, c] : spec.pinned) rhs -= c * monomial_gap(k, t, s);
    sys.rhs[i] = rhs;
  }
  sys.determinant = n == 0 ? 1.0 : M.partialPivLu().determinant();
  sys.hadamard_ratio = row_norm_product > 0.0 ? std::abs(sys.determinant) / row_norm_product : 0.0;
  return sys;
}

LiftResult solve_lift(std::span<const ParameterPair> points, const SignPattern& pattern,
                      const LiftSpec& spec) {
  const LinearSystem sys = build_sign_system(points, pattern, spec);
  const std::size_t n = points.size();
  if (n == 0) throw DomainError("nothing to lift: no crossings");
  if (!(sys.hadamard_ratio >= spec.degeneracy_ratio))
  {
    std::ostringstream msg;
    msg << "lift system is singular: |det| / prod(row norms) = " << sys.hadamard_ratio
        << " < " << spec.degeneracy_ratio;
    throw DegenerateSystem(msg.str());
  }

  Eigen::MatrixXd M(n, n);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = sys.matrix[i][j];
    b(i) = sys.rhs[i];
  }
  const Eigen::VectorXd x = M.partialPivLu().solve(b);

  LiftResult res;
  res.determinant = sys.determinant;
  res.hadamard_ratio = sys.hadamard_ratio;
  std::vector<double> coeffs(spec.degree + 1, 0.0);
  for (const auto& [k, c] : spec.pinned) coeffs[k] = c;
  for (std::size_t j = 0; j < n; ++j) {
    coeffs[spec.free_monomials[j]] = x(j);
    res.coefficients[spec.free_monomials[j]] = x(j);
  }
  res.h = RealPoly(std::move(coeffs));
  res.residual = (M * x - b).lpNorm<Eigen::Infinity>() / std::max(1.0, b.lpNorm<Eigen::Infinity>());
  res.separations = separations_of(res.h, points);
  for (std::size_t i = 0; i < n; ++i)
    if (pattern.sign(i) * res.separations[i] <= 0.0)
      throw InternalError("solved lift misses the demanded sign at crossing " +
                          std::to_string(i + 1));
  return res;
}

PatternCheck verify_pattern(const RealPoly& h, std::span<const ParameterPair> points,
                            const SignPattern& pattern, double margin) {
  check_lengths(points.size(), pattern);
  PatternCheck out;
  out.separations = separations_of(h, points);
  out.ok = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double signed_sep = pattern.sign(i) * out.separations[i];
    if (!(signed_sep > 0.0) || signed_sep < margin) out.ok = false;
  }
  return out;
}

Realizability realize_pattern(std::span<const ParameterPair> points, const SignPattern& pattern,
                              int degree, double magnitude) {
  check_lengths(points.size(), pattern);
  if (degree < 1) throw DomainError("lift degree must be at least 1");
  if (!(magnitude > 0.0)) throw DomainError("lift magnitude must be positive");
  const std::size_t n = points.size();
  const std::size_t d = static_cast<std::size_t>(degree);

  // Separation map: row i, column k-1 holds t_i^k - s_i^k, rows normalized.
  Eigen::MatrixXd M(n, d);
  std::vector<double> row_scale(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k)
      M(i, k) = monomial_gap(static_cast<int>(k + 1), points[i].t, points[i].s);
    const double norm = M.row(i).norm();
    if (norm > 0.0) {
      M.row(i) /= norm;
      row_scale[i] = norm;
    }
  }
  std::vector<double> col_scale(d, 1.0);
  for (std::size_t k = 0; k < d; ++k) {
    const double m = n == 0 ? 0.0 : M.col(k).cwiseAbs().maxCoeff();
    if (m > 0.0) col_scale[k] = m;
  }

  Realizability out;
  if (n > 0) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double cutoff = kRankTolerance * (sv.size() ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
    out.rank = rank;
    const Eigen::MatrixXd& U = svd.matrixU();
    for (Eigen::Index c = rank; c < U.cols(); ++c) {
      Eigen::VectorXd w(n);
      for (std::size_t i = 0; i < n; ++i) w(i) = U(i, c) / row_scale[i];
      w.normalize();
      // Fix the sign so the first sizeable entry is positive.
      for (Eigen::Index i = 0; i < w.size(); ++i)
        if (std::abs(w(i)) > 1e-12) {
          if (w(i) < 0.0) w = -w;
          break;
        }
      out.null_vectors.emplace_back(w.data(), w.data() + w.size());
    }
  }

  // Variables u_k, v_k (c_k = u_k - v_k, both in [0, 1]) and the margin m:
  // maximize m subject to m - sign_i * sum_k Mhat_ik c_k <= 0.
  const std::size_t vars = 2 * d + 1;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row(vars, 0.0);
    for (std::size_t k = 0; k < d; ++k) {
      const double a = pattern.sign(i) * M(i, k) / col_scale[k];
      row[k] = -a;
      row[d + k] = a;
    }
    row[2 * d] = 1.0;
    A.push_back(std::move(row));
    b.push_back(0.0);
  }
  for (std::size_t k = 0; k < 2 * d; ++k) {
    std::vector<double> row(vars, 0.0);
    row[k] = 1.0;
    A.push_back(std::move(row));
    b.push_back(1.0);
  }
  std::vector<double> c(vars, 0.0);
  c[2 * d] = 1.0;
  const detail::LpResult lp = detail::maximize(A, b, c);
  if (!lp.bounded) throw InternalError("realizability LP reported an unbounded margin");

  out.margin = n == 0 ? 0.0 : lp.objective;
  out.realizable = n == 0 || out.margin > kMarginFloor;
  if (!out.realizable) return out;

  std::vector<double> coeffs(d + 1, 0.0);
  for (std::size_t k = 0; k < d; ++k) coeffs[k + 1] = (lp.x[k] - lp.x[d + k]) / col_scale[k];
  RealPoly h(coeffs);
  std::vector<double> sep = separations_of(h, points);
  double smallest = std::numeric_limits<double>::infinity();
  for (double v : sep) smallest = std::min(smallest, std::abs(v));
  const double scale = n == 0 || !(smallest > 0.0) ? 1.0 : magnitude / smallest;
  out.h = scale * h;
  out.separations = separations_of(out.h, points);
  for (std::size_t i = 0; i < n; ++i)
    if (pattern.sign(i) * out.separations[i] <= 0.0) {
      out.realizable = false;
      out.h = RealPoly();
      out.separations.clear();
      break;
    }
  return out;
}

}  // namespace polyknot

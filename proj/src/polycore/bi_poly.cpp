#include <algorithm>
#include <cmath>

#include "polyknot/error.hpp"
#include "polyknot/polycore.hpp"

namespace polyknot {

BiPoly::BiPoly(std::vector<std::vector<double>> coeffs) : c_(std::move(coeffs)) { trim(); }

void BiPoly::trim() {
  std::size_t cols = 0;
  for (auto& row : c_) cols = std::max(cols, row.size());
  for (auto& row : c_) row.resize(cols, 0.0);
  // Trailing zero columns.
  while (cols > 0) {
    bool zero = true;
    for (auto& row : c_) zero = zero && row[cols - 1] == 0.0;
    if (!zero) break;
    --cols;
    for (auto& row : c_) row.pop_back();
  }
  // Trailing zero rows.
  while (!c_.empty() &&
         std::all_of(c_.back().begin(), c_.back().end(), [](double v) { return v == 0.0; }))
    c_.pop_back();
  if (cols == 0) c_.clear();
}

double BiPoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(c_.size())) return 0.0;
  const auto& row = c_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return 0.0;
  return row[static_cast<std::size_t>(j)];
}

int BiPoly::degree_t() const { return static_cast<int>(c_.size()) - 1; }

int BiPoly::degree_s() const { return c_.empty() ? -1 : static_cast<int>(c_.front().size()) - 1; }

int BiPoly::total_degree() const {
  int d = -1;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j)
      if (c_[i][j] != 0.0) d = std::max(d, static_cast<int>(i + j));
  return d;
}

double BiPoly::operator()(double t, double s) const { return in_s_at(t)(s); }

double BiPoly::magnitude_at(double t, double s) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < c_[i].size(); ++j)
      acc += std::abs(c_[i][j]) * std::pow(std::abs(t), static_cast<double>(i)) *
             std::pow(std::abs(s), static_cast<double>(j));
  return acc;
}

RealPoly BiPoly::in_s_at(double t) const {
  if (c_.empty()) return {};
  std::vector<double> v(c_.front().size(), 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] * t + (*it)[j];
  return RealPoly(std::move(v));
}

RealPoly BiPoly::in_t_at(double s) const {
  std::vector<double> v(c_.size(), 0.0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = RealPoly(c_[i])(s);
  return RealPoly(std::move(v));
}

BiPoly BiPoly::d_dt() const {
  if (c_.size() < 2) return {};
  std::vector<std::vector<double>> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) {
    d[i - 1] = c_[i];
    for (double& v : d[i - 1]) v *= static_cast<double>(i);
  }
  return BiPoly(std::move(d));
}

BiPoly BiPoly::d_ds() const {
  std::vector<std::vector<double>> d(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 1; j < c_[i].size(); ++j)
      d[i].push_back(static_cast<double>(j) * c_[i][j]);
  }
  return BiPoly(std::move(d));
}

BiPoly divided_difference(const RealPoly& p) {
  const int n = p.degree();
  if (n < 1) throw DomainError("divided_difference: polynomial has degree < 1");
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  // (t^k - s^k)/(t - s) = sum_{i=0}^{k-1} t^i s^{k-1-i}
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i)
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1 - i)] += p.coeff(k);
  return BiPoly(std::move(c));
}

}  // namespace polyknot

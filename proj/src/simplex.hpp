#pragma once

#include <vector>

namespace polyknot::detail {

struct LpResult {
  bool bounded = true;
  double objective = 0.0;
  std::vector<double> x;
};

/// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so the origin is
/// feasible. Dense tableau with Bland's rule; meant for a few dozen variables.
LpResult maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                  const std::vector<double>& c);

}  // namespace polyknot::detail

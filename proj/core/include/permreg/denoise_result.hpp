#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "permreg/arrangement.hpp"
#include "permreg/matrix.hpp"

namespace permreg {

// Solver diagnostics. Keys are kept ordered so printed output is stable.
struct Diagnostics {
  std::map<std::string, double> values;
  std::vector<std::string> warnings;

  void set(const std::string& key, double value) { values[key] = value; }
  std::optional<double> get(const std::string& key) const;
  bool has_warning(const std::string& prefix) const;
};

struct DenoiseResult {
  Matrix y_hat;
  // Present for estimators that recover the parameters (MLE, LevSort).
  std::optional<Arrangement> arrangement_hat;
  std::optional<Matrix> x_hat;
  // Estimator-specific: squared residual for MLE/LevSort/SVT, the penalized
  // objective for the square-root LASSO.
  double objective = 0.0;
  Diagnostics diagnostics;
};

}  // namespace permreg

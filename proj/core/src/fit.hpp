#pragma once

#include <chrono>

#include "permreg/denoise_result.hpp"

namespace permreg::detail {

// Fills x_hat = (P A)† Y, y_hat = P A x_hat and objective = ‖Y − y_hat‖²_F
// for a chosen arrangement P.
DenoiseResult fit_given_arrangement(const Matrix& a, const Matrix& y,
                                    Arrangement arrangement);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace permreg::detail

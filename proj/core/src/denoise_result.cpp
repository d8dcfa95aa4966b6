#include "permreg/denoise_result.hpp"

namespace permreg {

std::optional<double> Diagnostics::get(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

bool Diagnostics::has_warning(const std::string& prefix) const {
  for (const auto& w : warnings) {
    if (w.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace permreg

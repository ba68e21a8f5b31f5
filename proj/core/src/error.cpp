#include "halfspace/error.hpp"

#include <utility>

namespace halfspace {
namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid parameters";
  for (const auto& v : violations) {
    out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

ConvergenceError::ConvergenceError(const std::string& what, double estimate, double error_bound)
    : Error(what), estimate_(estimate), error_bound_(error_bound) {}

ObstructedRayError::ObstructedRayError(const std::string& what, double clear_fraction)
    : Error(what), clear_fraction_(clear_fraction) {}

}  // namespace halfspace

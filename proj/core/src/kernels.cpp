#include "halfspace/kernels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "halfspace/error.hpp"

namespace halfspace {
namespace {

constexpr double kPoleTolerance = 1e-14;

void require_same_dim(std::span<const double> a, std::span<const double> b, const char* what) {
  if (a.size() != b.size()) throw DomainError(std::string(what) + ": dimension mismatch");
}

}  // namespace

double half_integer_gamma(int m) {
  if (m < 1) throw DomainError("half_integer_gamma: argument must be positive");
  double g;
  int k;
  if (m % 2 == 0) {
    g = 1.0;  // Gamma(1)
    k = 2;
  } else {
    g = std::sqrt(std::numbers::pi);  // Gamma(1/2)
    k = 1;
  }
  // Gamma(s + 1) = s Gamma(s), stepping s = k/2 up to m/2.
  for (; k < m; k += 2) g *= 0.5 * k;
  return g;
}

double surface_area(int n) {
  if (n < 2) throw DomainError("surface_area: n must be >= 2, got " + std::to_string(n));
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / half_integer_gamma(n);
}

KernelConstants KernelConstants::for_dimension(int n) {
  if (n < 3) throw DomainError("kernels need n >= 3, got " + std::to_string(n));
  const double omega = surface_area(n);
  return {n, omega, 1.0 / ((n - 2) * omega)};
}

bool near_singular(std::span<const double> a, std::span<const double> b) {
  return distance(a, b) < kPoleTolerance * (1.0 + norm(a) + norm(b));
}

double fundamental_solution(std::span<const double> x) {
  const auto k = KernelConstants::for_dimension(static_cast<int>(x.size()));
  const double r = norm(x);
  if (r < kPoleTolerance * (1.0 + r)) throw SingularityError("fundamental_solution: x = 0");
  return -k.r_n * std::pow(r, 2.0 - k.n);
}

double green(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "green");
  const auto k = KernelConstants::for_dimension(static_cast<int>(x.size()));
  if (x.back() < 0.0 || y.back() < 0.0) throw DomainError("green: points must lie in the closed half-space");
  if (near_singular(x, y)) throw SingularityError("green: x coincides with y");
  const Vector y_star = reflect(y);
  const double d = distance(x, y);
  const double d_star = distance(x, y_star);
  return -k.r_n * std::pow(d, 2.0 - k.n) + k.r_n * std::pow(d_star, 2.0 - k.n);
}

double poisson_kernel(std::span<const double> x, std::span<const double> y_tangential) {
  if (y_tangential.size() + 1 != x.size()) throw DomainError("poisson_kernel: dimension mismatch");
  const auto k = KernelConstants::for_dimension(static_cast<int>(x.size()));
  const double xn = x.back();
  if (!(xn > 0.0)) throw DomainError("poisson_kernel: x must lie in the open half-space");
  double d2 = xn * xn;
  for (std::size_t i = 0; i < y_tangential.size(); ++i) {
    const double t = x[i] - y_tangential[i];
    d2 += t * t;
  }
  return 2.0 * xn / (k.omega * std::pow(d2, 0.5 * k.n));
}

double green_abs_bound(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "green_abs_bound");
  const auto k = KernelConstants::for_dimension(static_cast<int>(x.size()));
  if (near_singular(x, y)) throw SingularityError("green_abs_bound: x coincides with y");
  return 2.0 * x.back() * y.back() / (k.omega * std::pow(distance(x, y), k.n));
}

FarBound kernel_far_bound(std::span<const double> x, std::span<const double> y) {
  require_same_dim(x, y, "kernel_far_bound");
  if (near_singular(x, y)) throw SingularityError("kernel_far_bound: x coincides with y");
  const int n = static_cast<int>(x.size());
  const double two_n = std::ldexp(1.0, n);
  const double rx = norm(x);
  const double ry = norm(y);
  if (ry <= 0.5 * rx) return {FarBranch::kNear, two_n / std::pow(rx, n)};
  if (ry >= 2.0 * rx) return {FarBranch::kFar, two_n / std::pow(ry, n)};
  throw DomainError("kernel_far_bound: |x|/2 < |y| < 2|x| has no distance-free bound");
}

}  // namespace halfspace

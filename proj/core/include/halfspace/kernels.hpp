#pragma once

#include <span>

#include "halfspace/params.hpp"

namespace halfspace {

/// Dimension-dependent constants of the Newtonian kernel in R^n.
struct KernelConstants {
  int n;
  double omega;  ///< surface area of the unit sphere S^{n-1}
  double r_n;    ///< 1 / ((n-2) * omega)

  /// Requires n >= 3.
  static KernelConstants for_dimension(int n);
};

/// Gamma(m/2) for a positive integer m, through the half-integer recurrence.
double half_integer_gamma(int m);

/// 2 pi^{n/2} / Gamma(n/2); requires n >= 2.
double surface_area(int n);

/// E(x) = -r_n |x|^{2-n}. Throws SingularityError at the origin.
double fundamental_solution(std::span<const double> x);

/// Half-space Green function E(x - y) - E(x - y*), for x, y in the closed
/// half-space. Non-positive, symmetric, and exactly zero when y_n = 0.
double green(std::span<const double> x, std::span<const double> y);
inline double green(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  return green(x.coords(), y.coords());
}

/// 2 x_n / (omega_n |x - (y', 0)|^n); x has n coordinates, y_tangential n-1.
double poisson_kernel(std::span<const double> x, std::span<const double> y_tangential);
inline double poisson_kernel(const HalfSpacePoint& x, const BoundaryPoint& y) {
  return poisson_kernel(x.coords(), y.tangential());
}

/// Majorant 2 x_n y_n / (omega_n |x - y|^n) of |green(x, y)|.
double green_abs_bound(std::span<const double> x, std::span<const double> y);

/// Which side of the kernel comparison a pair (x, y) falls on.
enum class FarBranch {
  kNear,  ///< |y| <= |x|/2, bound 2^n / |x|^n
  kFar,   ///< |y| >= 2|x|,  bound 2^n / |y|^n
};

struct FarBound {
  FarBranch branch;
  double value;
};

/// Upper bound for 1/|x - y|^n away from the diagonal.
///
/// The far branch is only certified for |y| >= 2|x| (where |x - y| >= |y|/2);
/// pairs with |x|/2 < |y| < 2|x| have no distance-free bound and raise DomainError.
FarBound kernel_far_bound(std::span<const double> x, std::span<const double> y);

/// True when |a - b| is below the relative pole threshold 1e-14 (1 + |a| + |b|).
bool near_singular(std::span<const double> a, std::span<const double> b);

}  // namespace halfspace

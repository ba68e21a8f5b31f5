#pragma once

#include <array>

#include "halfspace/boundary_data.hpp"
#include "halfspace/params.hpp"
#include "halfspace/quadrature.hpp"

namespace halfspace {

struct WeightedNorm {
  double value;       ///< int_{|y'| <= R} |f|^p (1+|y'|)^{-gamma} dy'
  double tail_bound;  ///< closed-form bound on the remainder |y'| > R
};

/// Weighted L^p mass of f inside |y'| <= r_max, requires n in {3, 4}.
WeightedNorm weighted_lp_norm(const BoundaryData& f, const ParamSet& params, double r_max,
                              const QuadConfig& cfg = {});

struct PoissonValue {
  double value = 0.0;
  double error_bound = 0.0;        ///< truncation tail beyond truncation_radius
  double abs_integral = 0.0;       ///< int P |f|, the scale of the relative tolerance
  double truncation_radius = 0.0;
  int panels = 0;
};

/// v(x) = int P(x, y') f(y') dy'.
///
/// Polar coordinates about x' with x_n-dyadic radial panels; the integrand is
/// cut at |y'| = R and the remainder bounded by 2^{n+1} x_n / omega_n times the
/// kernel tail moment of f. R starts at multiplier * max(|x|, support) and grows
/// until the bound meets the tolerance, or ConvergenceError is thrown.
PoissonValue poisson_integral(const BoundaryData& f, const HalfSpacePoint& x, const QuadConfig& cfg = {});

/// v restricted to inner < |y'| <= outer.
PoissonValue poisson_integral_shell(const BoundaryData& f, const HalfSpacePoint& x, double inner, double outer,
                                    const QuadConfig& cfg = {});

struct PoissonSplit {
  std::array<PoissonValue, 4> parts;  ///< indexed by RegionId - 1: R1, R2, R3, R4

  const PoissonValue& part(RegionId id) const { return parts[static_cast<int>(id) - 1]; }
  double total() const;
  double error_bound() const;
};

/// v = v1 + v2 + v3 + v4 over the regions of classify_boundary_region; requires |x| >= 2.
PoissonSplit poisson_integral_split(const BoundaryData& f, const HalfSpacePoint& x, const QuadConfig& cfg = {});

/// Smallest dyadic R in {2, 4, 8, ...} whose weighted tail bound is <= eps^p / 5^{pn - alpha}.
double tail_threshold(const BoundaryData& f, const ParamSet& params, double eps);

}  // namespace halfspace

#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "halfspace/boundary_data.hpp"
#include "halfspace/params.hpp"
#include "halfspace/quadrature.hpp"

namespace halfspace {

enum class MeasureDomain {
  kHalfSpace,  ///< every atom has last coordinate > 0
  kBoundary,   ///< every atom has last coordinate == 0
};

struct Atom {
  Vector location;
  double mass;
};

/// Finite positive combination of point masses in R^n.
class DiscreteMeasure {
 public:
  DiscreteMeasure(int n, MeasureDomain domain, std::vector<Atom> atoms = {});

  /// CSV with header `coord_1,...,coord_n,mass`.
  static DiscreteMeasure load_csv(int n, MeasureDomain domain, const std::filesystem::path& path);

  int dimension() const noexcept { return n_; }
  MeasureDomain domain() const noexcept { return domain_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  double total_mass() const;

  /// Atoms with |y| >= radius (the restriction of the measure to that exterior).
  DiscreteMeasure restricted_beyond(double radius) const;
  /// Every mass multiplied by c > 0.
  DiscreteMeasure scaled(double c) const;
  /// Superposition of two measures on the same domain.
  DiscreteMeasure combined(const DiscreteMeasure& other) const;

  /// True when x lies within rel * (1 + |x|) of an atom.
  bool near_atom(std::span<const double> x, double rel = 1e-6) const;

 private:
  int n_;
  MeasureDomain domain_;
  std::vector<Atom> atoms_;
};

struct MeasureConditions {
  double weighted_height;  ///< sum mass * y_n^p (1+|y|)^{-gamma}
  double decay;            ///< sum mass * (1+|y|)^{-(n-1)}
};

MeasureConditions measure_condition_check(const DiscreteMeasure& mu, const ParamSet& params);

/// Each mass multiplied by y_n^p (1+|y|)^{-gamma}; locations unchanged.
DiscreteMeasure weighted_measure(const DiscreteMeasure& mu, const ParamSet& params);

/// h(x) = sum mass * G(x, y). Non-positive; throws SingularityError on an atom.
double green_potential(const DiscreteMeasure& mu, const HalfSpacePoint& x);

/// sum mass * 2 x_n y_n / (omega_n |x - y|^n), a majorant of |h(x)|.
double green_potential_bound(const DiscreteMeasure& mu, const HalfSpacePoint& x);

/// u(x) = v(x) + h(x).
double subharmonic_value(const BoundaryData& f, const DiscreteMeasure& mu, const HalfSpacePoint& x,
                         const QuadConfig& cfg = {});

/// Discretization of dm(y') = |f|^p (1+|y'|)^{-gamma} dy' on |y'| <= radius into
/// boundary atoms, one per polar cell of relative size `resolution`.
DiscreteMeasure boundary_weighted_measure(const BoundaryData& f, const ParamSet& params, double radius,
                                          double resolution = 0.25);

}  // namespace halfspace

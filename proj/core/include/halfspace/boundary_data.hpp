#pragma once

#include <filesystem>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "halfspace/params.hpp"

namespace halfspace {

/// f(y') = (1 + |y'|)^exponent. The exponent 0 is the constant function 1.
struct RadialPower {
  double exponent;
};

/// f(y') = amplitude * exp(-|y'|^2 / width^2).
struct Gaussian {
  double amplitude;
  double width;
};

/// f(y') = amplitude on |y'| <= radius, 0 outside.
struct CompactBump {
  double amplitude;
  double radius;
};

/// Values on a tensor grid over R^{n-1}, interpolated multilinearly, zero off the grid.
class TabulatedGrid {
 public:
  TabulatedGrid(std::vector<Vector> axes, Vector values);

  /// CSV with header `coord_1,...,coord_{d},value`, one row per grid node.
  static TabulatedGrid load_csv(const std::filesystem::path& path);

  int dim() const noexcept { return static_cast<int>(axes_.size()); }
  const std::vector<Vector>& axes() const noexcept { return axes_; }
  const Vector& values() const noexcept { return values_; }
  double max_abs() const noexcept { return max_abs_; }
  /// Largest |y'| over the grid's bounding box.
  double extent() const noexcept { return extent_; }

  double operator()(std::span<const double> y) const;

 private:
  std::vector<Vector> axes_;
  Vector values_;  // row-major, last axis fastest
  double max_abs_ = 0.0;
  double extent_ = 0.0;
};

/// Boundary data f on R^{n-1}, optionally restricted to a radial shell
/// inner < |y'| <= outer outside of which it vanishes.
class BoundaryData {
 public:
  using Shape = std::variant<RadialPower, Gaussian, CompactBump, TabulatedGrid>;

  static BoundaryData radial_power(int n, double exponent);
  static BoundaryData gaussian(int n, double amplitude, double width);
  static BoundaryData compact_bump(int n, double amplitude, double radius);
  /// support_radius, when known, declares f = 0 beyond it and makes tails computable.
  static BoundaryData tabulated(int n, TabulatedGrid grid, std::optional<double> support_radius);
  /// Loads a tabulated CSV; a sidecar `<path>.meta` may carry `support_radius = R`.
  static BoundaryData load_csv(int n, const std::filesystem::path& path);

  /// The same function multiplied by the indicator of inner < |y'| <= outer.
  BoundaryData restricted_to_shell(double inner, double outer) const;

  int dimension() const noexcept { return n_; }
  const Shape& shape() const noexcept { return shape_; }
  std::string_view kind_name() const;

  double operator()(std::span<const double> y) const;

  double support_inner() const noexcept { return inner_; }
  /// +inf for data with unbounded support.
  double support_outer() const noexcept { return outer_; }
  bool compact() const noexcept { return outer_ < std::numeric_limits<double>::infinity(); }

  /// Value of f on its support when f is constant there (bumps, the constant 1).
  std::optional<double> constant_on_support() const;

  /// Radii about the origin where f has structure worth a quadrature breakpoint.
  std::vector<double> feature_radii() const;

  /// Whether the weighted condition  int |f|^p (1+|y'|)^{-gamma} dy' < inf  holds.
  bool admissible(const ParamSet& params) const;

  /// Closed-form upper bound on  int_{|y'|>R} |f|^p (1+|y'|)^{-gamma} dy'.
  /// Throws DomainError when f is inadmissible or a tabulated f has no declared support.
  double weighted_tail_bound(const ParamSet& params, double radius) const;

  /// Closed-form upper bound on  int_{|y'|>R} |f(y')| |y'|^{-n} dy'  (R > 0).
  double kernel_tail_moment(double radius) const;

 private:
  BoundaryData(int n, Shape shape, double inner, double outer, bool declared_support);

  int n_;
  Shape shape_;
  double inner_;
  double outer_;
  bool declared_support_;
};

}  // namespace halfspace

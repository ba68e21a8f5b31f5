#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "halfspace/key_value.hpp"

namespace halfspace {

using Vector = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> x);
double distance(std::span<const double> a, std::span<const double> b);

/// Mirror image across the boundary plane: the last coordinate is negated.
Vector reflect(std::span<const double> y);

// ---------------------------------------------------------------------------
// Parameters

/// Which growth regime a parameter set is validated against. The harmonic
/// regime admits 0 < alpha <= n, the subharmonic regime 0 < alpha < 2.
enum class TheoremMode { kHarmonic, kSubharmonic };

std::string_view to_string(TheoremMode mode);
TheoremMode parse_theorem_mode(std::string_view text);

/// Validated (n, p, q, gamma, alpha) with the covering exponent beta = p*n - alpha.
///
/// For p = 1 the conjugate exponent is infinite; every formula that needs
/// 1/q goes through inv_q(), which is exactly 0 in that case.
class ParamSet {
 public:
  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }
  double inv_q() const noexcept { return inv_q_; }
  double gamma() const noexcept { return gamma_; }
  double alpha() const noexcept { return alpha_; }
  TheoremMode mode() const noexcept { return mode_; }
  double beta() const noexcept { return beta_; }
  bool q_is_infinite() const noexcept { return inv_q_ == 0.0; }

  /// beta == 0 (p = 1, alpha = n): the exceptional set degenerates to finitely many balls.
  bool finite_cover_corner() const noexcept { return beta_ == 0.0; }

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

 private:
  friend ParamSet validate_params(int n, double p, double gamma, double alpha, TheoremMode mode);
  ParamSet() = default;

  int n_ = 3;
  double p_ = 1.0;
  double q_ = 0.0;
  double inv_q_ = 0.0;
  double gamma_ = 0.0;
  double alpha_ = 0.0;
  TheoremMode mode_ = TheoremMode::kHarmonic;
  double beta_ = 0.0;
};

/// Throws ValidationError listing every violated inequality.
ParamSet validate_params(int n, double p, double gamma, double alpha, TheoremMode mode);

/// Keys n, p, gamma, alpha, mode.
KeyValues to_key_values(const ParamSet& params);
ParamSet param_set_from_key_values(const KeyValues& kv);

// ---------------------------------------------------------------------------
// Points

/// A point x = (x', x_n) of the open upper half-space, x_n > 0.
class HalfSpacePoint {
 public:
  explicit HalfSpacePoint(Vector coords);

  int dim() const noexcept { return static_cast<int>(coords_.size()); }
  double height() const noexcept { return coords_.back(); }
  std::span<const double> coords() const noexcept { return coords_; }
  std::span<const double> tangential() const noexcept {
    return std::span<const double>(coords_).first(coords_.size() - 1);
  }
  double norm() const noexcept { return norm_; }

 private:
  Vector coords_;
  double norm_;
};

/// A point y' of the boundary R^{n-1}, identified with (y', 0).
class BoundaryPoint {
 public:
  explicit BoundaryPoint(Vector tangential);

  /// Ambient dimension n.
  int dim() const noexcept { return static_cast<int>(tangential_.size()) + 1; }
  std::span<const double> tangential() const noexcept { return tangential_; }
  Vector embedded() const;
  double norm() const noexcept { return norm_; }

 private:
  Vector tangential_;
  double norm_;
};

// ---------------------------------------------------------------------------
// Regions

/// The four radial regions used to split integrals against |x|:
///   R4: |y| <= 1,  R1: 1 < |y| <= |x|/2,  R2: |x|/2 < |y| <= 2|x|,  R3: |y| > 2|x|.
enum class RegionId { kR1 = 1, kR2 = 2, kR3 = 3, kR4 = 4 };

std::string_view to_string(RegionId id);

/// Radii (inner, outer] of a region for a given |x|; outer is +inf for R3.
struct RadialShell {
  double inner;
  double outer;
};

RadialShell region_shell(RegionId id, double x_norm);

/// Region of a radius |y| relative to |x|; requires |x| >= 2.
RegionId classify_radius(double x_norm, double y_norm);

RegionId classify_boundary_region(const HalfSpacePoint& x, const BoundaryPoint& y);
RegionId classify_halfspace_region(const HalfSpacePoint& x, const HalfSpacePoint& y);

}  // namespace halfspace

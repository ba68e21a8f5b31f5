#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "halfspace/covering.hpp"
#include "halfspace/measure.hpp"
#include "halfspace/params.hpp"

namespace halfspace {

/// x_n^{a} |x|^{b} (log |x|)^{1/q when log_factor}.
struct GrowthTarget {
  ParamSet params;
  double height_exponent;  ///< 1 - alpha/p
  double norm_exponent;    ///< gamma/p + (n-1)/q - n + alpha/p
  bool log_factor;

  /// Throws DomainError for |x| <= 1 when the log factor is active.
  double operator()(const HalfSpacePoint& x) const;
};

/// gamma equals -(n-1)(p-1) within 1e-12 and p > 1.
bool log_boundary_check(const ParamSet& params);

GrowthTarget make_growth_target(const ParamSet& params);
double growth_target(const ParamSet& params, const HalfSpacePoint& x);

/// The p = 1, gamma = alpha = n corner with exponents (1 - n, n); throws
/// DomainError elsewhere.
GrowthTarget theorem_a_mode(const ParamSet& params);

struct RayOptions {
  double aperture_degrees = 5.0;  ///< minimum elevation of the direction above the boundary
  double min_clear_fraction = 0.9;
};

struct RaySample {
  double t;
  Vector point;
  bool excluded;
};

/// x(t) = t * direction, flagged when inside the exceptional set or within
/// 1e-6 (1 + |x|) of an atom of `atoms` (when given). The direction is
/// normalized first. Throws ObstructedRayError when fewer than
/// min_clear_fraction of the samples are clear.
std::vector<RaySample> sample_ray(std::span<const double> direction, std::span<const double> t_values,
                                  const ExceptionalSet& exceptional, const RayOptions& options = {},
                                  const DiscreteMeasure* atoms = nullptr);

/// t = 2^k for k = first..last.
std::vector<double> dyadic_ladder(int first = 1, int last = 12);

struct GrowthRecord {
  double t;
  Vector x;
  double value;   ///< NaN for excluded records
  double target;
  double ratio;   ///< |value| / target, NaN for excluded records
  bool excluded;
};

struct TrendOptions {
  double threshold = 0.1;
  int tail_window = 4;
  int min_samples = 5;
};

struct GrowthSeries {
  std::vector<GrowthRecord> records;
  double trend = 0.0;         ///< last ratio / max of the first three ratios
  bool tail_monotone = false; ///< ratios non-increasing over the last tail_window entries
  bool witnessed = false;     ///< trend <= threshold and tail_monotone
  bool log_factor = false;

  /// `t,x_1..x_n,value,target,ratio,excluded`.
  std::string to_csv() const;
};

using Evaluator = std::function<double(const HalfSpacePoint&)>;

/// Ratios |evaluator(x)| / target(x) at the clear samples. Throws DomainError
/// when fewer than min_samples samples are clear.
GrowthSeries growth_ratio_series(const Evaluator& evaluator, const GrowthTarget& target,
                                 std::span<const RaySample> samples, const TrendOptions& options = {});

}  // namespace halfspace

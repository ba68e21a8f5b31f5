#include "halfspace/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "halfspace/error.hpp"

namespace halfspace {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

double GrowthTarget::operator()(const HalfSpacePoint& x) const {
  const double r = x.norm();
  double value = std::pow(x.height(), height_exponent) * std::pow(r, norm_exponent);
  if (log_factor) {
    if (!(r > 1.0)) throw DomainError("growth target with log factor needs |x| > 1");
    value *= std::pow(std::log(r), params.inv_q());
  }
  return value;
}

bool log_boundary_check(const ParamSet& params) {
  const double boundary = -(params.n() - 1.0) * (params.p() - 1.0);
  return params.p() > 1.0 && std::abs(params.gamma() - boundary) <= 1e-12;
}

GrowthTarget make_growth_target(const ParamSet& params) {
  const double n = params.n(), p = params.p();
  return GrowthTarget{params, 1.0 - params.alpha() / p,
                      params.gamma() / p + (n - 1.0) * params.inv_q() - n + params.alpha() / p,
                      log_boundary_check(params)};
}

double growth_target(const ParamSet& params, const HalfSpacePoint& x) { return make_growth_target(params)(x); }

GrowthTarget theorem_a_mode(const ParamSet& params) {
  const double n = params.n();
  if (params.p() != 1.0 || params.gamma() != n || params.alpha() != n) {
    throw DomainError("theorem_a_mode needs p = 1 and gamma = alpha = n");
  }
  GrowthTarget t{params, 1.0 - n, n, false};
  const GrowthTarget general = make_growth_target(params);
  if (general.height_exponent != t.height_exponent || general.norm_exponent != t.norm_exponent ||
      general.log_factor) {
    throw DomainError("theorem_a_mode: exponents disagree with the general target");
  }
  return t;
}

std::vector<RaySample> sample_ray(std::span<const double> direction, std::span<const double> t_values,
                                  const ExceptionalSet& exceptional, const RayOptions& options,
                                  const DiscreteMeasure* atoms) {
  const double len = norm(direction);
  if (!(len > 0.0)) throw DomainError("sample_ray: zero direction");
  const double min_sine = std::sin(options.aperture_degrees * std::numbers::pi / 180.0);
  if (!(direction.back() / len >= min_sine)) {
    throw DomainError("sample_ray: direction is within the tangential aperture of " +
                      format_double(options.aperture_degrees) + " degrees");
  }
  if (t_values.empty()) throw DomainError("sample_ray: no ray parameters");
  std::vector<RaySample> out;
  int clear = 0;
  double prev = 0.0;
  for (double t : t_values) {
    if (!(t > prev)) throw DomainError("sample_ray: ray parameters must be positive and increasing");
    prev = t;
    Vector x(direction.begin(), direction.end());
    for (auto& c : x) c *= t / len;
    const bool excluded = exceptional.contains(x) || (atoms != nullptr && atoms->near_atom(x));
    if (!excluded) ++clear;
    out.push_back({t, std::move(x), excluded});
  }
  const double fraction = static_cast<double>(clear) / static_cast<double>(out.size());
  if (fraction < options.min_clear_fraction) {
    throw ObstructedRayError("ray obstructed: clear fraction " + format_double(fraction), fraction);
  }
  return out;
}

std::vector<double> dyadic_ladder(int first, int last) {
  if (last < first) throw DomainError("dyadic_ladder: empty range");
  std::vector<double> t;
  for (int k = first; k <= last; ++k) t.push_back(std::ldexp(1.0, k));
  return t;
}

std::string GrowthSeries::to_csv() const {
  std::ostringstream out;
  const std::size_t n = records.empty() ? 0 : records.front().x.size();
  out << 't';
  for (std::size_t i = 1; i <= n; ++i) out << ",x_" << i;
  out << ",value,target,ratio,excluded\n";
  for (const auto& r : records) {
    out << format_double(r.t);
    for (double c : r.x) out << ',' << format_double(c);
    out << ',' << (r.excluded ? "" : format_double(r.value)) << ',' << format_double(r.target) << ','
        << (r.excluded ? "" : format_double(r.ratio)) << ',' << (r.excluded ? 1 : 0) << '\n';
  }
  return out.str();
}

GrowthSeries growth_ratio_series(const Evaluator& evaluator, const GrowthTarget& target,
                                 std::span<const RaySample> samples, const TrendOptions& options) {
  GrowthSeries series;
  series.log_factor = target.log_factor;
  std::vector<double> ratios;
  for (const auto& s : samples) {
    const HalfSpacePoint x(s.point);
    GrowthRecord rec{s.t, s.point, kNaN, target(x), kNaN, s.excluded};
    if (!(rec.target > 0.0) || !std::isfinite(rec.target)) {
      throw DomainError("growth target must be positive and finite at t = " + format_double(s.t));
    }
    if (!s.excluded) {
      rec.value = evaluator(x);
      rec.ratio = std::abs(rec.value) / rec.target;
      ratios.push_back(rec.ratio);
    }
    series.records.push_back(std::move(rec));
  }
  if (static_cast<int>(ratios.size()) < options.min_samples) {
    throw DomainError("growth_ratio_series: only " + std::to_string(ratios.size()) + " usable samples");
  }
  const double head = *std::max_element(ratios.begin(), ratios.begin() + 3);
  series.trend = head > 0.0 ? ratios.back() / head : 0.0;
  const int window = std::min<int>(options.tail_window, static_cast<int>(ratios.size()));
  series.tail_monotone = true;
  for (std::size_t i = ratios.size() - window + 1; i < ratios.size(); ++i) {
    if (ratios[i] > ratios[i - 1] * (1.0 + 1e-12)) series.tail_monotone = false;
  }
  series.witnessed = series.trend <= options.threshold && series.tail_monotone;
  return series;
}

}  // namespace halfspace

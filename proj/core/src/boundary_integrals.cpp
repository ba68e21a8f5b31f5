#include "halfspace/boundary_integrals.hpp"

#include <cmath>
#include <limits>

#include "halfspace/error.hpp"
#include "halfspace/kernels.hpp"

namespace halfspace {
namespace {

void require_dims(const BoundaryData& f, int n) {
  if (f.dimension() != n) throw DomainError("boundary data dimension does not match the point");
}

ShellQuadrature poisson_shell_quadrature(const BoundaryData& f, const HalfSpacePoint& x, const KernelConstants& k,
                                         double inner, double outer, const QuadConfig& cfg) {
  const double xn = x.height();
  const double scale = 2.0 * xn / k.omega;
  const double half_n = 0.5 * k.n;
  const auto features = f.feature_radii();
  auto weight = [&](double rho) { return scale / std::pow(xn * xn + rho * rho, half_n); };
  auto field = [&](std::span<const double> y) { return f(y); };
  // Dyadic shells about the origin keep each angular band narrow, so data
  // concentrated far from x' is still resolved by the circle rule.
  const double lo = std::max(inner, f.support_inner());
  const double hi = std::min(outer, f.support_outer());
  ShellQuadrature total;
  double a = lo;
  while (a < hi) {
    double b = 1.0;
    while (b <= a) b *= 2.0;
    b = std::min(b, hi);
    const auto q = integrate_shell(x.tangential(), a, b, xn, features, weight, field, f.constant_on_support(), cfg);
    total.value += q.value;
    total.abs_value += q.abs_value;
    total.panels += q.panels;
    a = b;
  }
  return total;
}

}  // namespace

WeightedNorm weighted_lp_norm(const BoundaryData& f, const ParamSet& params, double r_max, const QuadConfig& cfg) {
  cfg.validate();
  if (!(r_max > 0.0)) throw DomainError("weighted_lp_norm: R_max must be positive");
  if (!f.admissible(params)) throw DomainError("weighted_lp_norm: weighted condition diverges for this f");
  const double p = params.p();
  const double gamma = params.gamma();
  const Vector origin(f.dimension() - 1, 0.0);
  auto weight = [&](double r) { return std::pow(1.0 + r, -gamma); };
  auto field = [&](std::span<const double> y) { return std::pow(std::abs(f(y)), p); };
  std::optional<double> constant;
  if (auto c = f.constant_on_support()) constant = std::pow(std::abs(*c), p);
  const auto features = f.feature_radii();
  const auto q = integrate_shell(origin, f.support_inner(), std::min(r_max, f.support_outer()), 1.0, features,
                                 weight, field, constant, cfg);
  return {q.value, f.weighted_tail_bound(params, r_max)};
}

PoissonValue poisson_integral_shell(const BoundaryData& f, const HalfSpacePoint& x, double inner, double outer,
                                    const QuadConfig& cfg) {
  cfg.validate();
  require_dims(f, x.dim());
  const auto k = KernelConstants::for_dimension(x.dim());
  const double effective_outer = std::min(outer, f.support_outer());
  double radius = cfg.truncation_multiplier * std::max(x.norm(), std::isfinite(effective_outer) ? effective_outer : 0.0);

  // Far-field majorant: P(x, y') <= 2^{n+1} x_n / (omega_n |y'|^n) once |y'| >= 2|x|.
  const double far_factor = std::ldexp(1.0, k.n + 1) * x.height() / k.omega;
  auto tail_at = [&](double r) {
    if (effective_outer <= r) return 0.0;
    return far_factor * f.restricted_to_shell(inner, outer).kernel_tail_moment(r);
  };

  auto q = poisson_shell_quadrature(f, x, k, inner, std::min(effective_outer, radius), cfg);
  double tail = tail_at(radius);
  const double floor = std::numeric_limits<double>::min();
  if (tail > cfg.tolerance * std::max(q.abs_value, floor)) {
    // Grow R on the closed-form bound, then integrate once at the final radius.
    while (tail > cfg.tolerance * std::max(q.abs_value, floor)) {
      radius *= 2.0;
      if (!std::isfinite(radius) || radius > 1e150) {
        throw ConvergenceError("poisson integral: truncation tail does not meet the tolerance", q.value, tail);
      }
      tail = tail_at(radius);
    }
    try {
      q = poisson_shell_quadrature(f, x, k, inner, std::min(effective_outer, radius), cfg);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError(std::string("poisson integral: ") + e.what(), q.value, tail);
    }
    if (tail > cfg.tolerance * std::max(q.abs_value, floor)) {
      throw ConvergenceError("poisson integral: tolerance unreachable", q.value, tail);
    }
  }
  return {q.value, tail, q.abs_value, radius, q.panels};
}

PoissonValue poisson_integral(const BoundaryData& f, const HalfSpacePoint& x, const QuadConfig& cfg) {
  return poisson_integral_shell(f, x, 0.0, std::numeric_limits<double>::infinity(), cfg);
}

double PoissonSplit::total() const {
  double s = 0.0;
  for (const auto& p : parts) s += p.value;
  return s;
}

double PoissonSplit::error_bound() const {
  double s = 0.0;
  for (const auto& p : parts) s += p.error_bound;
  return s;
}

PoissonSplit poisson_integral_split(const BoundaryData& f, const HalfSpacePoint& x, const QuadConfig& cfg) {
  if (!(x.norm() >= 2.0)) throw DomainError("poisson_integral_split: requires |x| >= 2");
  PoissonSplit split;
  for (auto id : {RegionId::kR1, RegionId::kR2, RegionId::kR3, RegionId::kR4}) {
    const auto shell = region_shell(id, x.norm());
    split.parts[static_cast<int>(id) - 1] = poisson_integral_shell(f, x, shell.inner, shell.outer, cfg);
  }
  return split;
}

double tail_threshold(const BoundaryData& f, const ParamSet& params, double eps) {
  if (!(eps > 0.0)) throw DomainError("tail_threshold: eps must be positive");
  const double target = std::pow(eps, params.p()) / std::pow(5.0, params.beta());
  for (double r = 2.0; std::isfinite(r); r *= 2.0) {
    if (f.weighted_tail_bound(params, r) <= target) return r;
  }
  throw ConvergenceError("tail_threshold: no finite dyadic radius meets the target", INFINITY, target);
}

}  // namespace halfspace

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "halfspace/error.hpp"
#include "halfspace/params.hpp"

namespace halfspace {

/// Quadrature resolution for integrals over the boundary R^{n-1}.
struct QuadConfig {
  int panels_per_band = 2;            ///< sub-panels per dyadic radial band
  int nodes_per_panel = 16;           ///< Gauss-Legendre order per panel
  int angular_nodes = 64;             ///< circle nodes; sphere rules use angular_nodes/2 x angular_nodes
  double truncation_multiplier = 4.0; ///< initial truncation radius = multiplier * max(|x|, support)
  double tolerance = 1e-6;            ///< target relative error of the truncation tail
  int max_panels = 4096;

  /// Throws DomainError on counts below 2, multiplier below 2, or tolerance outside (0, 1e-2].
  void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

struct ShellQuadrature {
  double value = 0.0;
  double abs_value = 0.0;  ///< same rule applied to |field|
  int panels = 0;
};

namespace detail {

/// Polar layout about `center` in R^d (d = 2 or 3) restricted to the shell
/// inner < |y| <= outer about the origin.
struct ShellGeometry {
  int dim = 0;
  Vector center;
  double center_norm = 0.0;
  std::array<Vector, 3> frame;  ///< frame[0] points along center (or e_1 when center = 0)
  double inner = 0.0;
  double outer = 0.0;
  std::vector<double> breaks;   ///< radial panel edges, distance from center
  bool degenerate = false;      ///< center numerically at the origin
};

ShellGeometry make_shell_geometry(std::span<const double> center, double inner, double outer,
                                  double scale, std::span<const double> feature_radii);

/// The set of directions theta with inner < |center + rho theta| <= outer, as
/// limits on 1 + cos(angle to frame[0]) and 1 - cos, computed without cancellation.
struct AngularBand {
  double lo_plus, lo_minus;  ///< 1 + u and 1 - u at the inner limit
  double hi_plus, hi_minus;  ///< 1 + u and 1 - u at the outer limit
  bool empty = false;
  bool full = false;
};

AngularBand angular_band(const ShellGeometry& g, double rho);

/// Surface measure of the band on S^{d-1}.
double band_measure(int dim, const AngularBand& band);

inline double arc_angle(double plus, double minus) {
  return 2.0 * std::atan2(std::sqrt(minus), std::sqrt(plus));
}

}  // namespace detail

/// Integrates weight(|y - center|) * field(y) over inner < |y| <= outer in R^d,
/// d = center.size() in {2, 3}.
///
/// Radial panels follow `scale`-dyadic bands around the center plus every
/// tangency radius of the shell and of the `feature_radii` circles; angular
/// factors use a trapezoid circle rule, Gauss-Legendre arcs, or a
/// Gauss-Legendre x trapezoid sphere rule. When `constant` is set the field is
/// that constant on the shell and the angular factor is the exact band measure.
template <class Weight, class Field>
ShellQuadrature integrate_shell(std::span<const double> center, double inner, double outer,
                                double scale, std::span<const double> feature_radii,
                                Weight&& weight, Field&& field, std::optional<double> constant,
                                const QuadConfig& cfg) {
  ShellQuadrature out;
  if (!(outer > inner)) return out;
  const auto g = detail::make_shell_geometry(center, inner, outer, scale, feature_radii);
  const int d = g.dim;
  out.panels = static_cast<int>(g.breaks.size() - 1) * cfg.panels_per_band;
  if (out.panels > cfg.max_panels) {
    throw ConvergenceError("shell quadrature needs " + std::to_string(out.panels) +
                               " panels, budget is " + std::to_string(cfg.max_panels),
                           0.0, INFINITY);
  }

  const auto radial = gauss_legendre(cfg.nodes_per_panel);
  const int n_ang = cfg.angular_nodes;
  const auto arc = gauss_legendre(std::max(2, n_ang / 2));
  Vector y(d);

  auto eval = [&](double rho, double ux, double uy, double uz, double& acc, double& acc_abs, double w) {
    for (int i = 0; i < d; ++i) {
      double t = g.center[i] + rho * (ux * g.frame[0][i] + uy * g.frame[1][i]);
      if (d == 3) t += rho * uz * g.frame[2][i];
      y[i] = t;
    }
    const double f = field(std::span<const double>(y));
    acc += w * f;
    acc_abs += w * std::abs(f);
  };

  // Angular integral of the field over the band at radius rho.
  auto angular = [&](double rho, double& a, double& a_abs) {
    a = 0.0;
    a_abs = 0.0;
    const auto band = detail::angular_band(g, rho);
    if (band.empty) return;
    if (constant) {
      const double m = detail::band_measure(d, band);
      a = *constant * m;
      a_abs = std::abs(*constant) * m;
      return;
    }
    if (d == 2) {
      if (band.full) {
        const double w = 2.0 * std::numbers::pi / n_ang;
        for (int k = 0; k < n_ang; ++k) {
          const double phi = w * k;
          eval(rho, std::cos(phi), std::sin(phi), 0.0, a, a_abs, w);
        }
        return;
      }
      const double phi_lo = detail::arc_angle(band.hi_plus, band.hi_minus);
      const double phi_hi = detail::arc_angle(band.lo_plus, band.lo_minus);
      const double half = 0.5 * (phi_hi - phi_lo);
      const double mid = 0.5 * (phi_hi + phi_lo);
      for (std::size_t k = 0; k < arc.nodes.size(); ++k) {
        const double phi = mid + half * arc.nodes[k];
        const double w = half * arc.weights[k];
        const double c = std::cos(phi), s = std::sin(phi);
        eval(rho, c, s, 0.0, a, a_abs, w);
        eval(rho, c, -s, 0.0, a, a_abs, w);
      }
      return;
    }
    // d == 3: Gauss-Legendre in u = cos(angle) over the band, trapezoid in azimuth.
    const double dplus = band.hi_plus - band.lo_plus;
    const double dminus = band.lo_minus - band.hi_minus;
    const double wpsi = 2.0 * std::numbers::pi / n_ang;
    for (std::size_t k = 0; k < arc.nodes.size(); ++k) {
      const double t = 0.5 * (arc.nodes[k] + 1.0);
      const double plus = band.lo_plus + t * dplus;
      const double minus = band.lo_minus - t * dminus;
      const double u = 0.5 * (plus - minus);
      const double s = std::sqrt(std::max(0.0, plus * minus));
      const double wu = 0.5 * dplus * arc.weights[k];
      for (int j = 0; j < n_ang; ++j) {
        const double psi = wpsi * j;
        eval(rho, u, s * std::cos(psi), s * std::sin(psi), a, a_abs, wu * wpsi);
      }
    }
  };

  for (std::size_t b = 0; b + 1 < g.breaks.size(); ++b) {
    const double lo = g.breaks[b];
    const double width = (g.breaks[b + 1] - lo) / cfg.panels_per_band;
    for (int p = 0; p < cfg.panels_per_band; ++p) {
      const double a0 = lo + p * width;
      const double half = 0.5 * width;
      const double mid = a0 + half;
      double panel = 0.0, panel_abs = 0.0;
      for (std::size_t k = 0; k < radial.nodes.size(); ++k) {
        // The sine map flattens both panel ends, absorbing the square-root
        // behaviour of the band measure at tangency radii.
        const double s = 0.5 * std::numbers::pi * radial.nodes[k];
        const double rho = mid + half * std::sin(s);
        double a, a_abs;
        angular(rho, a, a_abs);
        if (a_abs == 0.0) continue;
        const double dr = half * 0.5 * std::numbers::pi * std::cos(s);
        const double jac = dr * radial.weights[k] * weight(rho) * (d == 2 ? rho : rho * rho);
        panel += jac * a;
        panel_abs += jac * a_abs;
      }
      out.value += panel;
      out.abs_value += panel_abs;
    }
  }
  return out;
}

}  // namespace halfspace

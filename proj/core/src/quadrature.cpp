#include "halfspace/quadrature.hpp"

#include <algorithm>
#include <string>

namespace halfspace {

void QuadConfig::validate() const {
  if (panels_per_band < 2 || nodes_per_panel < 2 || angular_nodes < 2) {
    throw DomainError("QuadConfig: panel, node and angular counts must be >= 2");
  }
  if (max_panels < panels_per_band) throw DomainError("QuadConfig: max_panels below panels_per_band");
  if (!(truncation_multiplier >= 2.0) || !std::isfinite(truncation_multiplier)) {
    throw DomainError("QuadConfig: truncation multiplier must be >= 2");
  }
  if (!(tolerance > 0.0 && tolerance <= 1e-2)) {
    throw DomainError("QuadConfig: tolerance must lie in (0, 1e-2]");
  }
}

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("gauss_legendre: order must be positive");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (order == 1) p0 = 1.0;
      // P_n(x) = p1, P_{n-1}(x) = p0
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order == 1 ? 1.0 : order * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[order - 1 - i] = x;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

namespace detail {

ShellGeometry make_shell_geometry(std::span<const double> center, double inner, double outer,
                                  double scale, std::span<const double> feature_radii) {
  ShellGeometry g;
  g.dim = static_cast<int>(center.size());
  if (g.dim != 2 && g.dim != 3) {
    throw DomainError("boundary quadrature supports n in {3, 4} only, got n = " + std::to_string(g.dim + 1));
  }
  if (!std::isfinite(outer)) throw DomainError("integrate_shell: outer radius must be finite");
  if (!(scale > 0.0)) throw DomainError("integrate_shell: scale must be positive");
  g.center.assign(center.begin(), center.end());
  g.center_norm = norm(center);
  g.inner = std::max(0.0, inner);
  g.outer = outer;
  g.degenerate = g.center_norm == 0.0;

  for (auto& e : g.frame) e.assign(g.dim, 0.0);
  if (g.degenerate) {
    g.frame[0][0] = 1.0;
  } else {
    for (int i = 0; i < g.dim; ++i) g.frame[0][i] = center[i] / g.center_norm;
  }
  const auto& e1 = g.frame[0];
  if (g.dim == 2) {
    g.frame[1] = {-e1[1], e1[0]};
  } else {
    int axis = 0;
    for (int i = 1; i < 3; ++i) {
      if (std::abs(e1[i]) < std::abs(e1[axis])) axis = i;
    }
    Vector e2(3, 0.0);
    e2[axis] = 1.0;
    const double proj = e1[axis];
    for (int i = 0; i < 3; ++i) e2[i] -= proj * e1[i];
    const double len = norm(e2);
    for (auto& v : e2) v /= len;
    g.frame[1] = e2;
    g.frame[2] = {e1[1] * e2[2] - e1[2] * e2[1], e1[2] * e2[0] - e1[0] * e2[2],
                  e1[0] * e2[1] - e1[1] * e2[0]};
  }

  const double m = g.center_norm;
  double rho_lo = 0.0;
  if (m <= g.inner) {
    rho_lo = g.inner - m;
  } else if (m > g.outer) {
    rho_lo = m - g.outer;
  }
  const double rho_hi = g.outer + m;

  std::vector<double> candidates;
  for (double b = 0.5 * scale; b < rho_hi; b *= 2.0) candidates.push_back(b);
  auto tangencies = [&](double r) {
    candidates.push_back(std::abs(r - m));
    candidates.push_back(r + m);
  };
  tangencies(g.inner);
  tangencies(g.outer);
  for (double r : feature_radii) tangencies(r);

  g.breaks.push_back(rho_lo);
  std::sort(candidates.begin(), candidates.end());
  for (double b : candidates) {
    if (!(b > rho_lo && b < rho_hi)) continue;
    if (b - g.breaks.back() <= 1e-13 * b) continue;
    g.breaks.push_back(b);
  }
  if (rho_hi - g.breaks.back() <= 1e-13 * rho_hi && g.breaks.size() > 1) g.breaks.pop_back();
  g.breaks.push_back(rho_hi);
  return g;
}

AngularBand angular_band(const ShellGeometry& g, double rho) {
  AngularBand band{0.0, 2.0, 2.0, 0.0};
  if (g.degenerate || rho == 0.0) {
    const double r = g.degenerate ? rho : g.center_norm;
    const bool inside = r > g.inner && r <= g.outer;
    band.full = inside;
    band.empty = !inside;
    return band;
  }
  const double m = g.center_norm;
  const double a = std::abs(m - rho);
  const double b = m + rho;
  const double den = 2.0 * m * rho;
  auto limit = [&](double L, double& plus, double& minus) {
    if (std::isinf(L)) {
      plus = 2.0;
      minus = 0.0;
      return;
    }
    plus = (L - a) * (L + a) / den;
    minus = (b - L) * (b + L) / den;
    if (plus <= 0.0) {
      plus = 0.0;
      minus = 2.0;
    } else if (minus <= 0.0) {
      plus = 2.0;
      minus = 0.0;
    }
  };
  limit(g.inner, band.lo_plus, band.lo_minus);
  limit(g.outer, band.hi_plus, band.hi_minus);
  band.empty = band.hi_plus <= band.lo_plus;
  band.full = !band.empty && band.lo_plus == 0.0 && band.hi_minus == 0.0;
  return band;
}

double band_measure(int dim, const AngularBand& band) {
  if (band.empty) return 0.0;
  if (dim == 2) return 2.0 * (arc_angle(band.lo_plus, band.lo_minus) - arc_angle(band.hi_plus, band.hi_minus));
  return 2.0 * std::numbers::pi * (band.hi_plus - band.lo_plus);
}

}  // namespace detail
}  // namespace halfspace

#include "halfspace/params.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "halfspace/error.hpp"

namespace halfspace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DomainError("distance: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Vector reflect(std::span<const double> y) {
  Vector out(y.begin(), y.end());
  if (!out.empty()) out.back() = -out.back();
  return out;
}

std::string_view to_string(TheoremMode mode) {
  return mode == TheoremMode::kHarmonic ? "theorem-1" : "theorem-2";
}

TheoremMode parse_theorem_mode(std::string_view text) {
  if (text == "theorem-1" || text == "harmonic") return TheoremMode::kHarmonic;
  if (text == "theorem-2" || text == "subharmonic") return TheoremMode::kSubharmonic;
  throw ParseError("unknown theorem mode '" + std::string(text) + "' (expected theorem-1 or theorem-2)");
}

ParamSet validate_params(int n, double p, double gamma, double alpha, TheoremMode mode) {
  std::vector<std::string> bad;
  auto fmt = [](double v) { return format_double(v); };

  if (n < 3) bad.push_back("n = " + std::to_string(n) + " violates n >= 3");
  if (!(p >= 1.0) || !std::isfinite(p)) bad.push_back("p = " + fmt(p) + " violates 1 <= p < inf");
  if (!std::isfinite(gamma)) bad.push_back("gamma must be finite");
  if (!std::isfinite(alpha)) bad.push_back("alpha must be finite");

  if (bad.empty()) {
    const double dn = n;
    if (p > 1.0) {
      const double lower = -(dn - 1.0) * (p - 1.0);
      const double upper = (dn - 1.0) + p;
      // The endpoint gamma = lower is admitted: it is the logarithmic variant of the growth bound.
      if (!(gamma >= lower - 1e-12)) bad.push_back("gamma = " + fmt(gamma) + " violates gamma >= -(n-1)(p-1) = " + fmt(lower));
      if (!(gamma < upper)) bad.push_back("gamma = " + fmt(gamma) + " violates gamma < (n-1)+p = " + fmt(upper));
    } else {
      if (!(gamma > 0.0)) bad.push_back("gamma = " + fmt(gamma) + " violates gamma > 0 (p = 1)");
      if (!(gamma <= dn)) bad.push_back("gamma = " + fmt(gamma) + " violates gamma <= n (p = 1)");
    }
    if (!(alpha > 0.0)) bad.push_back("alpha = " + fmt(alpha) + " violates alpha > 0");
    if (mode == TheoremMode::kHarmonic) {
      if (!(alpha <= dn)) bad.push_back("alpha = " + fmt(alpha) + " violates alpha <= n (theorem-1)");
    } else if (!(alpha < 2.0)) {
      bad.push_back("alpha = " + fmt(alpha) + " violates alpha < 2 (theorem-2)");
    }
  }
  if (!bad.empty()) throw ValidationError(std::move(bad));

  ParamSet ps;
  ps.n_ = n;
  ps.p_ = p;
  ps.gamma_ = gamma;
  ps.alpha_ = alpha;
  ps.mode_ = mode;
  if (p == 1.0) {
    ps.q_ = std::numeric_limits<double>::infinity();
    ps.inv_q_ = 0.0;
  } else {
    ps.q_ = p / (p - 1.0);
    ps.inv_q_ = 1.0 - 1.0 / p;
  }
  ps.beta_ = p * n - alpha;
  return ps;
}

KeyValues to_key_values(const ParamSet& params) {
  return {
      {"n", std::to_string(params.n())},
      {"p", format_double(params.p())},
      {"gamma", format_double(params.gamma())},
      {"alpha", format_double(params.alpha())},
      {"mode", std::string(to_string(params.mode()))},
  };
}

ParamSet param_set_from_key_values(const KeyValues& kv) {
  const auto n = parse_integer(require_value(kv, "n"), "n");
  const double p = parse_double(require_value(kv, "p"), "p");
  const double gamma = parse_double(require_value(kv, "gamma"), "gamma");
  const double alpha = parse_double(require_value(kv, "alpha"), "alpha");
  const auto mode = parse_theorem_mode(find_value(kv, "mode").value_or("theorem-1"));
  return validate_params(static_cast<int>(n), p, gamma, alpha, mode);
}

HalfSpacePoint::HalfSpacePoint(Vector coords) : coords_(std::move(coords)), norm_(0.0) {
  if (coords_.size() < 2) throw DomainError("HalfSpacePoint needs at least two coordinates");
  if (!(coords_.back() > 0.0)) {
    throw DomainError("HalfSpacePoint requires x_n > 0, got " + format_double(coords_.back()));
  }
  norm_ = halfspace::norm(coords_);
}

BoundaryPoint::BoundaryPoint(Vector tangential)
    : tangential_(std::move(tangential)), norm_(halfspace::norm(tangential_)) {
  if (tangential_.empty()) throw DomainError("BoundaryPoint needs at least one coordinate");
}

Vector BoundaryPoint::embedded() const {
  Vector out = tangential_;
  out.push_back(0.0);
  return out;
}

std::string_view to_string(RegionId id) {
  switch (id) {
    case RegionId::kR1: return "R1";
    case RegionId::kR2: return "R2";
    case RegionId::kR3: return "R3";
    case RegionId::kR4: return "R4";
  }
  return "?";
}

RadialShell region_shell(RegionId id, double x_norm) {
  switch (id) {
    case RegionId::kR4: return {0.0, 1.0};
    case RegionId::kR1: return {1.0, 0.5 * x_norm};
    case RegionId::kR2: return {0.5 * x_norm, 2.0 * x_norm};
    case RegionId::kR3: return {2.0 * x_norm, std::numeric_limits<double>::infinity()};
  }
  throw DomainError("unknown region");
}

RegionId classify_radius(double x_norm, double y_norm) {
  if (!(x_norm >= 2.0)) {
    throw DomainError("region split requires |x| >= 2, got |x| = " + format_double(x_norm));
  }
  if (y_norm <= 1.0) return RegionId::kR4;
  if (y_norm <= 0.5 * x_norm) return RegionId::kR1;
  if (y_norm <= 2.0 * x_norm) return RegionId::kR2;
  return RegionId::kR3;
}

RegionId classify_boundary_region(const HalfSpacePoint& x, const BoundaryPoint& y) {
  if (y.dim() != x.dim()) throw DomainError("classify_boundary_region: dimension mismatch");
  return classify_radius(x.norm(), y.norm());
}

RegionId classify_halfspace_region(const HalfSpacePoint& x, const HalfSpacePoint& y) {
  if (y.dim() != x.dim()) throw DomainError("classify_halfspace_region: dimension mismatch");
  return classify_radius(x.norm(), y.norm());
}

}  // namespace halfspace

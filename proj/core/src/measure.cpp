#include "halfspace/measure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "halfspace/boundary_integrals.hpp"
#include "halfspace/error.hpp"
#include "halfspace/kernels.hpp"

namespace halfspace {

DiscreteMeasure::DiscreteMeasure(int n, MeasureDomain domain, std::vector<Atom> atoms)
    : n_(n), domain_(domain), atoms_(std::move(atoms)) {
  if (n_ < 2) throw DomainError("DiscreteMeasure: dimension must be >= 2");
  for (const auto& a : atoms_) {
    if (static_cast<int>(a.location.size()) != n_) throw DomainError("DiscreteMeasure: atom dimension mismatch");
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw DomainError("DiscreteMeasure: masses must be positive and finite");
    const double last = a.location.back();
    if (domain_ == MeasureDomain::kHalfSpace && !(last > 0.0)) {
      throw DomainError("DiscreteMeasure: half-space atoms need last coordinate > 0");
    }
    if (domain_ == MeasureDomain::kBoundary && last != 0.0) {
      throw DomainError("DiscreteMeasure: boundary atoms need last coordinate == 0");
    }
  }
}

DiscreteMeasure DiscreteMeasure::load_csv(int n, MeasureDomain domain, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open measure file " + path.string());
  std::string line;
  std::getline(in, line);
  std::string expected;
  for (int i = 1; i <= n; ++i) expected += "coord_" + std::to_string(i) + ",";
  expected += "mass";
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != expected) throw ParseError(path.string() + ": header must be " + expected);
  std::vector<Atom> atoms;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    std::stringstream ss(line);
    std::string cell;
    Vector values;
    while (std::getline(ss, cell, ',')) values.push_back(parse_double(cell, "measure cell"));
    if (static_cast<int>(values.size()) != n + 1) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": wrong column count");
    }
    const double mass = values.back();
    values.pop_back();
    atoms.push_back({std::move(values), mass});
  }
  return DiscreteMeasure(n, domain, std::move(atoms));
}

double DiscreteMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

DiscreteMeasure DiscreteMeasure::restricted_beyond(double radius) const {
  std::vector<Atom> kept;
  for (const auto& a : atoms_) {
    if (norm(a.location) >= radius) kept.push_back(a);
  }
  return DiscreteMeasure(n_, domain_, std::move(kept));
}

DiscreteMeasure DiscreteMeasure::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("DiscreteMeasure::scaled: factor must be positive");
  auto atoms = atoms_;
  for (auto& a : atoms) a.mass *= c;
  return DiscreteMeasure(n_, domain_, std::move(atoms));
}

DiscreteMeasure DiscreteMeasure::combined(const DiscreteMeasure& other) const {
  if (other.n_ != n_ || other.domain_ != domain_) throw DomainError("DiscreteMeasure::combined: incompatible measures");
  auto atoms = atoms_;
  atoms.insert(atoms.end(), other.atoms_.begin(), other.atoms_.end());
  return DiscreteMeasure(n_, domain_, std::move(atoms));
}

bool DiscreteMeasure::near_atom(std::span<const double> x, double rel) const {
  const double radius = rel * (1.0 + norm(x));
  for (const auto& a : atoms_) {
    if (distance(x, a.location) < radius) return true;
  }
  return false;
}

namespace {

void require_half_space(const DiscreteMeasure& mu, const char* what) {
  if (mu.domain() != MeasureDomain::kHalfSpace) {
    throw DomainError(std::string(what) + ": measure must be tagged half-space");
  }
}

}  // namespace

MeasureConditions measure_condition_check(const DiscreteMeasure& mu, const ParamSet& params) {
  require_half_space(mu, "measure_condition_check");
  if (mu.dimension() != params.n()) throw DomainError("measure_condition_check: dimension mismatch");
  MeasureConditions out{0.0, 0.0};
  for (const auto& a : mu.atoms()) {
    const double r = norm(a.location);
    out.weighted_height += a.mass * std::pow(a.location.back(), params.p()) * std::pow(1.0 + r, -params.gamma());
    out.decay += a.mass * std::pow(1.0 + r, -(params.n() - 1.0));
  }
  return out;
}

DiscreteMeasure weighted_measure(const DiscreteMeasure& mu, const ParamSet& params) {
  require_half_space(mu, "weighted_measure");
  if (mu.dimension() != params.n()) throw DomainError("weighted_measure: dimension mismatch");
  std::vector<Atom> atoms;
  atoms.reserve(mu.size());
  for (const auto& a : mu.atoms()) {
    const double r = norm(a.location);
    const double w = std::pow(a.location.back(), params.p()) * std::pow(1.0 + r, -params.gamma());
    atoms.push_back({a.location, a.mass * w});
  }
  return DiscreteMeasure(mu.dimension(), mu.domain(), std::move(atoms));
}

double green_potential(const DiscreteMeasure& mu, const HalfSpacePoint& x) {
  require_half_space(mu, "green_potential");
  if (mu.dimension() != x.dim()) throw DomainError("green_potential: dimension mismatch");
  double h = 0.0;
  for (const auto& a : mu.atoms()) h += a.mass * green(x.coords(), a.location);
  return h;
}

double green_potential_bound(const DiscreteMeasure& mu, const HalfSpacePoint& x) {
  require_half_space(mu, "green_potential_bound");
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.mass * green_abs_bound(x.coords(), a.location);
  return s;
}

double subharmonic_value(const BoundaryData& f, const DiscreteMeasure& mu, const HalfSpacePoint& x,
                         const QuadConfig& cfg) {
  return poisson_integral(f, x, cfg).value + green_potential(mu, x);
}

DiscreteMeasure boundary_weighted_measure(const BoundaryData& f, const ParamSet& params, double radius,
                                          double resolution) {
  const int n = f.dimension();
  const int d = n - 1;
  if (d != 2 && d != 3) throw DomainError("boundary_weighted_measure supports n in {3, 4}");
  if (!(radius > 0.0) || !(resolution > 0.0 && resolution <= 1.0)) {
    throw DomainError("boundary_weighted_measure: radius must be positive and resolution in (0, 1]");
  }
  if (!f.admissible(params)) throw DomainError("boundary_weighted_measure: weighted condition diverges");
  const double top = std::min(radius, f.support_outer());

  std::vector<double> edges{0.0};
  for (double r = resolution; r < std::min(1.0, top); r += resolution) edges.push_back(r);
  for (double r = std::max(1.0, edges.back() + resolution); r < top; r *= 1.0 + resolution) edges.push_back(r);
  for (double extra : {f.support_inner(), top}) {
    if (extra > 0.0 && extra <= top) edges.push_back(extra);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(), [](double a, double b) { return b - a <= 1e-12 * b; }),
              edges.end());

  const int sectors = static_cast<int>(std::ceil(2.0 * std::numbers::pi / resolution));
  const int bands = d == 3 ? static_cast<int>(std::ceil(2.0 / resolution)) : 1;
  const double dpsi = 2.0 * std::numbers::pi / sectors;
  const double du = 2.0 / bands;

  const auto rule = gauss_legendre(8);
  std::vector<Atom> atoms;
  Vector y(d);
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double r1 = edges[i], r2 = edges[i + 1];
    const double rm = 0.5 * (r1 + r2);
    // int_{r1}^{r2} r^{d-1} (1+r)^{-gamma} dr; only f is sampled at the cell centre.
    double radial = 0.0;
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      const double r = rm + 0.5 * (r2 - r1) * rule.nodes[j];
      radial += 0.5 * (r2 - r1) * rule.weights[j] * std::pow(r, d - 1) * std::pow(1.0 + r, -params.gamma());
    }
    for (int b = 0; b < bands; ++b) {
      const double u = d == 3 ? -1.0 + (b + 0.5) * du : 0.0;
      const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
      for (int k = 0; k < sectors; ++k) {
        const double psi = (k + 0.5) * dpsi;
        if (d == 2) {
          y = {rm * std::cos(psi), rm * std::sin(psi)};
        } else {
          y = {rm * u, rm * s * std::cos(psi), rm * s * std::sin(psi)};
        }
        const double value = f(y);
        const double cell = radial * dpsi * (d == 3 ? du : 1.0);
        const double mass = cell * std::pow(std::abs(value), params.p());
        if (!(mass > 0.0)) continue;
        Vector location = y;
        location.push_back(0.0);
        atoms.push_back({std::move(location), mass});
      }
    }
  }
  return DiscreteMeasure(n, MeasureDomain::kBoundary, std::move(atoms));
}

}  // namespace halfspace

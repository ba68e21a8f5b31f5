#include "halfspace/boundary_data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include "halfspace/error.hpp"
#include "halfspace/kernels.hpp"

namespace halfspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// int_L^inf r^j exp(-c r^2) dr, bounded above in closed form.
double gauss_moment_tail(double j, double c, double lower) {
  const double full = 0.5 * std::pow(c, -(j + 1.0) / 2.0) * std::tgamma((j + 1.0) / 2.0);
  if (!(lower > 0.0)) return full;
  // log r^j e^{-c r^2} is concave with slope j/r - 2cr <= j/L - 2cL past L.
  const double slope = 2.0 * c * lower - j / lower;
  if (slope <= 0.0) return full;
  return std::min(full, std::pow(lower, j) * std::exp(-c * lower * lower) / slope);
}

// int_L^U (1 + r)^e dr
double shifted_power_integral(double e, double lower, double upper) {
  if (e == -1.0) return std::log((1.0 + upper) / (1.0 + lower));
  if (std::isinf(upper)) return std::pow(1.0 + lower, e + 1.0) / (-e - 1.0);
  return (std::pow(1.0 + upper, e + 1.0) - std::pow(1.0 + lower, e + 1.0)) / (e + 1.0);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  return cells;
}

}  // namespace

// ---------------------------------------------------------------------------
// TabulatedGrid

TabulatedGrid::TabulatedGrid(std::vector<Vector> axes, Vector values)
    : axes_(std::move(axes)), values_(std::move(values)) {
  if (axes_.empty()) throw DomainError("TabulatedGrid: need at least one axis");
  std::size_t count = 1;
  double corner2 = 0.0;
  for (const auto& axis : axes_) {
    if (axis.size() < 2) throw DomainError("TabulatedGrid: every axis needs at least two nodes");
    if (!std::is_sorted(axis.begin(), axis.end()) ||
        std::adjacent_find(axis.begin(), axis.end()) != axis.end()) {
      throw DomainError("TabulatedGrid: axis nodes must be strictly increasing");
    }
    count *= axis.size();
    const double far = std::max(std::abs(axis.front()), std::abs(axis.back()));
    corner2 += far * far;
  }
  if (values_.size() != count) throw DomainError("TabulatedGrid: value count does not match the grid");
  for (double v : values_) max_abs_ = std::max(max_abs_, std::abs(v));
  extent_ = std::sqrt(corner2);
}

double TabulatedGrid::operator()(std::span<const double> y) const {
  const int d = dim();
  std::vector<std::size_t> cell(d);
  std::vector<double> frac(d);
  for (int i = 0; i < d; ++i) {
    const auto& axis = axes_[i];
    if (y[i] < axis.front() || y[i] > axis.back()) return 0.0;
    auto it = std::upper_bound(axis.begin(), axis.end(), y[i]);
    std::size_t hi = std::min<std::size_t>(it - axis.begin(), axis.size() - 1);
    const std::size_t lo = hi - 1;
    cell[i] = lo;
    frac[i] = (y[i] - axis[lo]) / (axis[hi] - axis[lo]);
  }
  double acc = 0.0;
  for (unsigned corner = 0; corner < (1u << d); ++corner) {
    double w = 1.0;
    std::size_t index = 0;
    for (int i = 0; i < d; ++i) {
      const bool up = (corner >> i) & 1u;
      w *= up ? frac[i] : 1.0 - frac[i];
      index = index * axes_[i].size() + cell[i] + (up ? 1 : 0);
    }
    if (w != 0.0) acc += w * values_[index];
  }
  return acc;
}

TabulatedGrid TabulatedGrid::load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open boundary table " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header.back() != "value") {
    throw ParseError(path.string() + ": header must be coord_1,...,coord_{n-1},value");
  }
  const int d = static_cast<int>(header.size()) - 1;
  for (int i = 0; i < d; ++i) {
    if (header[i] != "coord_" + std::to_string(i + 1)) {
      throw ParseError(path.string() + ": unexpected column '" + header[i] + "'");
    }
  }
  std::vector<std::vector<double>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != d + 1) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": wrong column count");
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_double(c, "boundary table cell"));
    rows.push_back(std::move(row));
  }
  std::vector<Vector> axes(d);
  for (int i = 0; i < d; ++i) {
    for (const auto& r : rows) axes[i].push_back(r[i]);
    std::sort(axes[i].begin(), axes[i].end());
    axes[i].erase(std::unique(axes[i].begin(), axes[i].end()), axes[i].end());
  }
  std::size_t count = 1;
  for (const auto& a : axes) count *= a.size();
  if (count != rows.size()) throw ParseError(path.string() + ": rows do not form a full tensor grid");
  Vector values(count, 0.0);
  std::vector<bool> seen(count, false);
  for (const auto& r : rows) {
    std::size_t index = 0;
    for (int i = 0; i < d; ++i) {
      const auto pos = std::lower_bound(axes[i].begin(), axes[i].end(), r[i]) - axes[i].begin();
      index = index * axes[i].size() + pos;
    }
    if (seen[index]) throw ParseError(path.string() + ": duplicate grid node");
    seen[index] = true;
    values[index] = r[d];
  }
  return TabulatedGrid(std::move(axes), std::move(values));
}

// ---------------------------------------------------------------------------
// BoundaryData

BoundaryData::BoundaryData(int n, Shape shape, double inner, double outer, bool declared_support)
    : n_(n), shape_(std::move(shape)), inner_(inner), outer_(outer), declared_support_(declared_support) {
  if (n_ < 3) throw DomainError("BoundaryData: n must be >= 3");
}

BoundaryData BoundaryData::radial_power(int n, double exponent) {
  if (!std::isfinite(exponent)) throw DomainError("radial_power: exponent must be finite");
  return BoundaryData(n, RadialPower{exponent}, 0.0, kInf, false);
}

BoundaryData BoundaryData::gaussian(int n, double amplitude, double width) {
  if (!(width > 0.0)) throw DomainError("gaussian: width must be positive");
  return BoundaryData(n, Gaussian{amplitude, width}, 0.0, kInf, false);
}

BoundaryData BoundaryData::compact_bump(int n, double amplitude, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("compact_bump: radius must be positive");
  return BoundaryData(n, CompactBump{amplitude, radius}, 0.0, radius, true);
}

BoundaryData BoundaryData::tabulated(int n, TabulatedGrid grid, std::optional<double> support_radius) {
  if (grid.dim() != n - 1) throw DomainError("tabulated: grid dimension must be n - 1");
  double outer = grid.extent();
  if (support_radius) {
    if (!(*support_radius > 0.0)) throw DomainError("tabulated: support radius must be positive");
    outer = std::min(outer, *support_radius);
  }
  return BoundaryData(n, std::move(grid), 0.0, outer, support_radius.has_value());
}

BoundaryData BoundaryData::load_csv(int n, const std::filesystem::path& path) {
  auto grid = TabulatedGrid::load_csv(path);
  std::optional<double> support;
  std::filesystem::path meta = path;
  meta += ".meta";
  if (std::filesystem::exists(meta)) {
    const auto kv = load_key_values(meta);
    if (auto v = find_value(kv, "support_radius")) support = parse_double(*v, "support_radius");
  }
  return tabulated(n, std::move(grid), support);
}

BoundaryData BoundaryData::restricted_to_shell(double inner, double outer) const {
  BoundaryData out = *this;
  out.inner_ = std::max(inner_, inner);
  out.outer_ = std::min(outer_, outer);
  out.declared_support_ = declared_support_ || std::isfinite(outer);
  return out;
}

std::string_view BoundaryData::kind_name() const {
  return std::visit(Overloaded{
                        [](const RadialPower&) { return std::string_view("radial-power"); },
                        [](const Gaussian&) { return std::string_view("gaussian"); },
                        [](const CompactBump&) { return std::string_view("compact-bump"); },
                        [](const TabulatedGrid&) { return std::string_view("tabulated"); },
                    },
                    shape_);
}

double BoundaryData::operator()(std::span<const double> y) const {
  const double r = norm(y);
  if ((inner_ > 0.0 && r <= inner_) || r > outer_) return 0.0;
  return std::visit(Overloaded{
                        [&](const RadialPower& s) { return std::pow(1.0 + r, s.exponent); },
                        [&](const Gaussian& s) { return s.amplitude * std::exp(-(r * r) / (s.width * s.width)); },
                        [&](const CompactBump& s) { return s.amplitude; },
                        [&](const TabulatedGrid& s) { return s(y); },
                    },
                    shape_);
}

std::optional<double> BoundaryData::constant_on_support() const {
  if (const auto* b = std::get_if<CompactBump>(&shape_)) return b->amplitude;
  if (const auto* s = std::get_if<RadialPower>(&shape_); s && s->exponent == 0.0) return 1.0;
  return std::nullopt;
}

std::vector<double> BoundaryData::feature_radii() const {
  std::vector<double> out;
  if (const auto* g = std::get_if<Gaussian>(&shape_)) {
    for (double k : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0}) out.push_back(k * g->width);
  } else if (std::holds_alternative<RadialPower>(shape_)) {
    out.push_back(1.0);
  }
  return out;
}

bool BoundaryData::admissible(const ParamSet& params) const {
  if (params.n() != n_) throw DomainError("BoundaryData: dimension does not match the parameter set");
  if (const auto* s = std::get_if<RadialPower>(&shape_); s && !compact()) {
    return params.p() * s->exponent - params.gamma() + (n_ - 2) < -1.0;
  }
  return true;
}

double BoundaryData::weighted_tail_bound(const ParamSet& params, double radius) const {
  if (!admissible(params)) {
    throw DomainError("weighted condition diverges for this boundary data");
  }
  const int d = n_ - 1;
  const double omega = surface_area(d);
  const double lower = std::max(radius, inner_);
  const double upper = outer_;
  if (std::holds_alternative<TabulatedGrid>(shape_) && !declared_support_) {
    throw DomainError("tabulated boundary data has no declared support radius; tail bound unavailable");
  }
  if (!(upper > lower)) return 0.0;
  const double p = params.p();
  const double gamma = params.gamma();

  auto bounded_constant = [&](double magnitude, double top) {
    // |f|^p <= magnitude^p, (1+r)^{-gamma} maximal at an endpoint.
    const double w = std::max(std::pow(1.0 + lower, -gamma), std::pow(1.0 + top, -gamma));
    return omega * std::pow(magnitude, p) * w * (std::pow(top, d) - std::pow(lower, d)) / d;
  };

  return std::visit(
      Overloaded{
          [&](const RadialPower& s) {
            // r^{d-1} <= (1+r)^{d-1}
            const double e = p * s.exponent - gamma + (d - 1);
            return omega * shifted_power_integral(e, lower, upper);
          },
          [&](const Gaussian& s) {
            const double c = p / (s.width * s.width);
            const double amp = omega * std::pow(std::abs(s.amplitude), p);
            if (gamma >= 0.0) return amp * gauss_moment_tail(d - 1, c, lower);
            // (1+r)^{-gamma} <= 2^g (1 + r^g) with g = -gamma
            const double g = -gamma;
            return amp * std::pow(2.0, g) * (gauss_moment_tail(d - 1, c, lower) + gauss_moment_tail(d - 1 + g, c, lower));
          },
          [&](const CompactBump& s) { return bounded_constant(std::abs(s.amplitude), upper); },
          [&](const TabulatedGrid& s) { return bounded_constant(s.max_abs(), upper); },
      },
      shape_);
}

double BoundaryData::kernel_tail_moment(double radius) const {
  if (!(radius > 0.0)) throw DomainError("kernel_tail_moment: radius must be positive");
  const int d = n_ - 1;
  const double omega = surface_area(d);
  const double lower = std::max(radius, inner_);
  const double upper = outer_;
  if (!(upper > lower)) return 0.0;
  const double inv_span = 1.0 / lower - (std::isinf(upper) ? 0.0 : 1.0 / upper);

  return std::visit(
      Overloaded{
          [&](const RadialPower& s) {
            const double e = s.exponent;
            if (!std::isinf(upper)) return omega * std::max(std::pow(1.0 + lower, e), std::pow(1.0 + upper, e)) * inv_span;
            if (e >= 1.0) throw DomainError("kernel tail diverges for radial power exponent >= 1");
            auto power_tail = [&](double k) { return std::pow(lower, k - 1.0) / (1.0 - k); };  // int_L^inf r^{k-2}
            if (e <= 0.0) return omega * power_tail(e);
            // (1+r)^e <= 2^e (1 + r^e)
            return omega * std::pow(2.0, e) * (1.0 / lower + power_tail(e));
          },
          [&](const Gaussian& s) {
            const double w = s.width;
            const double tail = std::min(0.5 * std::sqrt(std::numbers::pi) * w,
                                         w * w * std::exp(-(lower * lower) / (w * w)) / (2.0 * lower));
            return omega * std::abs(s.amplitude) * tail / (lower * lower);
          },
          [&](const CompactBump& s) { return omega * std::abs(s.amplitude) * inv_span; },
          [&](const TabulatedGrid& s) { return omega * s.max_abs() * inv_span; },
      },
      shape_);
}

}  // namespace halfspace

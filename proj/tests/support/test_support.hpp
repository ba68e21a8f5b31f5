#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <halfspace/params.hpp>

namespace halfspace::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return lo + (hi - lo) * (static_cast<double>(engine_() >> 11) * 0x1.0p-53);
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double normal() {
    const double u1 = 1.0 - uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * uniform());
  }
  Vector vector(int n, double lo, double hi) {
    Vector v(n);
    for (auto& c : v) c = uniform(lo, hi);
    return v;
  }
  /// Point of the upper half-space with |x| in [r_lo, r_hi] (log-uniform) and x_n >= floor.
  Vector half_space_point(int n, double r_lo, double r_hi, double floor = 1e-3) {
    for (;;) {
      Vector v(n);
      for (auto& c : v) c = normal();
      v.back() = std::abs(v.back());
      const double len = norm(v);
      if (!(len > 0.0)) continue;
      const double r = r_lo * std::pow(r_hi / r_lo, uniform());
      for (auto& c : v) c *= r / len;
      if (v.back() >= floor) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Centered second-difference Laplacian with step h.
inline double fd_laplacian(const std::function<double(const Vector&)>& g, const Vector& x, double h) {
  const double c = g(x);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vector a = x, b = x;
    a[i] += h;
    b[i] -= h;
    sum += g(a) - 2.0 * c + g(b);
  }
  return sum / (h * h);
}

/// Average of g over the sphere |y - x0| = rho in R^3 (Gauss-Legendre in cos, trapezoid in azimuth).
double sphere_average3(const std::function<double(const Vector&)>& g, const Vector& x0, double rho, int order = 24);

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// Fresh directory under the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

}  // namespace halfspace::testing

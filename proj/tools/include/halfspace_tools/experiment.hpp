#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <halfspace/boundary_data.hpp>
#include <halfspace/growth.hpp>
#include <halfspace/key_value.hpp>
#include <halfspace/measure.hpp>
#include <halfspace/params.hpp>
#include <halfspace/quadrature.hpp>

namespace halfspace::tools {

struct RayConfig {
  std::vector<Vector> directions;
  int k_first = 1;
  int k_last = 12;
  RayOptions options;
};

struct CoveringConfig {
  int band_count = 6;
  int samples = 64;
  std::optional<std::uint64_t> seed;
  double resolution = 0.25;           ///< polar cell size of the boundary discretization
  std::optional<double> radius;       ///< discretization radius, default support or 2^(k_last + 2)
  std::optional<std::string> lambda;  ///< `gate` or a number: one vitali cover instead of the band union
  std::string source = "weighted";    ///< `weighted` (y_n^p (1+|y|)^{-gamma} dmu) or `raw` measure for `cover`
};

/// A parsed `key = value` experiment file. Relative paths resolve against the file's directory.
struct ExperimentConfig {
  ParamSet params;
  std::optional<BoundaryData> boundary;
  std::optional<DiscreteMeasure> measure;
  QuadConfig quadrature;
  RayConfig ray;
  CoveringConfig covering;
  TrendOptions trend;
  std::optional<std::filesystem::path> output_dir;
  std::vector<Vector> points;  ///< evaluation points for `poisson` and `potential`
};

ExperimentConfig experiment_from_key_values(const KeyValues& kv, const std::filesystem::path& base_dir);
ExperimentConfig load_experiment(const std::filesystem::path& path);

/// Points separated by `;`, coordinates by `,`.
std::vector<Vector> parse_point_list(std::string_view text);

}  // namespace halfspace::tools

#include "halfspace_tools/experiment.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include <halfspace/error.hpp>

namespace halfspace::tools {

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys{
      {"params", {"n", "p", "gamma", "alpha", "mode"}},
      {"boundary", {"kind", "amplitude", "radius", "width", "exponent", "path", "support_radius"}},
      {"measure", {"path"}},
      {"quadrature",
       {"panels_per_band", "nodes_per_panel", "angular_nodes", "truncation_multiplier", "tolerance", "max_panels"}},
      {"ray", {"directions", "k_first", "k_last", "aperture", "min_clear_fraction"}},
      {"covering", {"band_count", "samples", "seed", "resolution", "radius", "lambda", "source"}},
      {"trend", {"threshold", "tail_window", "min_samples"}},
      {"output", {"directory"}},
      {"evaluate", {"points"}},
  };
  return keys;
}

void check_keys(const KeyValues& kv) {
  for (const auto& [key, value] : kv) {
    const auto dot = key.find('.');
    if (dot == std::string::npos) throw ParseError("config key '" + key + "' must belong to a [section]");
    const auto it = allowed_keys().find(key.substr(0, dot));
    if (it == allowed_keys().end()) throw ParseError("unknown config section in '" + key + "'");
    if (!it->second.contains(key.substr(dot + 1))) throw ParseError("unknown config key '" + key + "'");
  }
}

int get_int(const KeyValues& kv, const std::string& key, int fallback) {
  return static_cast<int>(get_integer(kv, key, fallback));
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::optional<BoundaryData> boundary_from(const KeyValues& kv, int n, const std::filesystem::path& base) {
  const auto kind = find_value(kv, "kind");
  if (!kind) {
    if (!kv.empty()) throw ParseError("[boundary] needs a kind");
    return std::nullopt;
  }
  if (*kind == "compact-bump") {
    return BoundaryData::compact_bump(n, get_double(kv, "amplitude", 1.0), get_double(kv, "radius", 1.0));
  }
  if (*kind == "gaussian") {
    return BoundaryData::gaussian(n, get_double(kv, "amplitude", 1.0), get_double(kv, "width", 1.0));
  }
  if (*kind == "radial-power") {
    return BoundaryData::radial_power(n, parse_double(require_value(kv, "exponent"), "boundary.exponent"));
  }
  if (*kind == "tabulated") {
    const auto path = resolve(base, require_value(kv, "path"));
    if (!std::filesystem::exists(path)) throw ParseError("boundary file " + path.string() + " does not exist");
    if (auto s = find_value(kv, "support_radius")) {
      return BoundaryData::tabulated(n, TabulatedGrid::load_csv(path), parse_double(*s, "boundary.support_radius"));
    }
    return BoundaryData::load_csv(n, path);
  }
  throw ParseError("unknown boundary kind '" + *kind + "'");
}

}  // namespace

std::vector<Vector> parse_point_list(std::string_view text) {
  std::vector<Vector> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_double_list(item));
  }
  return out;
}

ExperimentConfig experiment_from_key_values(const KeyValues& kv, const std::filesystem::path& base_dir) {
  check_keys(kv);
  ExperimentConfig cfg{param_set_from_key_values(section(kv, "params")), {}, {}, {}, {}, {}, {}, {}, {}};
  const int n = cfg.params.n();

  cfg.boundary = boundary_from(section(kv, "boundary"), n, base_dir);

  const auto measure = section(kv, "measure");
  if (auto path = find_value(measure, "path")) {
    const auto full = resolve(base_dir, *path);
    if (!std::filesystem::exists(full)) throw ParseError("measure file " + full.string() + " does not exist");
    cfg.measure = DiscreteMeasure::load_csv(n, MeasureDomain::kHalfSpace, full);
  }

  const auto q = section(kv, "quadrature");
  auto& qc = cfg.quadrature;
  qc.panels_per_band = get_int(q, "panels_per_band", qc.panels_per_band);
  qc.nodes_per_panel = get_int(q, "nodes_per_panel", qc.nodes_per_panel);
  qc.angular_nodes = get_int(q, "angular_nodes", qc.angular_nodes);
  qc.truncation_multiplier = get_double(q, "truncation_multiplier", qc.truncation_multiplier);
  qc.tolerance = get_double(q, "tolerance", qc.tolerance);
  qc.max_panels = get_int(q, "max_panels", qc.max_panels);
  qc.validate();

  const auto ray = section(kv, "ray");
  if (auto dirs = find_value(ray, "directions")) cfg.ray.directions = parse_point_list(*dirs);
  for (const auto& d : cfg.ray.directions) {
    if (static_cast<int>(d.size()) != n) throw ParseError("ray direction has the wrong dimension");
  }
  cfg.ray.k_first = get_int(ray, "k_first", cfg.ray.k_first);
  cfg.ray.k_last = get_int(ray, "k_last", cfg.ray.k_last);
  cfg.ray.options.aperture_degrees = get_double(ray, "aperture", cfg.ray.options.aperture_degrees);
  cfg.ray.options.min_clear_fraction = get_double(ray, "min_clear_fraction", cfg.ray.options.min_clear_fraction);
  if (cfg.ray.k_last < cfg.ray.k_first) throw ParseError("ray.k_last must be >= ray.k_first");

  const auto cov = section(kv, "covering");
  cfg.covering.band_count = get_int(cov, "band_count", cfg.covering.band_count);
  cfg.covering.samples = get_int(cov, "samples", cfg.covering.samples);
  if (auto s = find_value(cov, "seed")) cfg.covering.seed = static_cast<std::uint64_t>(parse_integer(*s, "covering.seed"));
  cfg.covering.resolution = get_double(cov, "resolution", cfg.covering.resolution);
  if (auto r = find_value(cov, "radius")) cfg.covering.radius = parse_double(*r, "covering.radius");
  cfg.covering.lambda = find_value(cov, "lambda");
  cfg.covering.source = find_value(cov, "source").value_or("weighted");
  if (cfg.covering.source != "weighted" && cfg.covering.source != "raw") {
    throw ParseError("covering.source must be weighted or raw");
  }
  if (cfg.covering.band_count < 1) throw ParseError("covering.band_count must be >= 1");
  if (cfg.covering.samples < 0) throw ParseError("covering.samples must be >= 0");
  if (cfg.covering.samples > 0 && !cfg.covering.seed) {
    throw ParseError("covering.seed is required when covering.samples > 0");
  }

  const auto trend = section(kv, "trend");
  cfg.trend.threshold = get_double(trend, "threshold", cfg.trend.threshold);
  cfg.trend.tail_window = get_int(trend, "tail_window", cfg.trend.tail_window);
  cfg.trend.min_samples = get_int(trend, "min_samples", cfg.trend.min_samples);

  if (auto dir = find_value(section(kv, "output"), "directory")) cfg.output_dir = resolve(base_dir, *dir);
  if (auto pts = find_value(section(kv, "evaluate"), "points")) cfg.points = parse_point_list(*pts);
  return cfg;
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) throw ParseError("config file " + path.string() + " does not exist");
  return experiment_from_key_values(load_key_values(path), path.parent_path());
}

}  // namespace halfspace::tools

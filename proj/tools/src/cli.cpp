#include "halfspace_tools/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <halfspace/boundary_integrals.hpp>
#include <halfspace/covering.hpp>
#include <halfspace/error.hpp>
#include <halfspace/growth.hpp>
#include <halfspace/kernels.hpp>
#include <halfspace/measure.hpp>

#include "halfspace_tools/experiment.hpp"

namespace halfspace::tools {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return std::strtod(format_double(v).c_str(), nullptr);
}

json vector_json(std::span<const double> v) {
  auto arr = json::array();
  for (double c : v) arr.push_back(number(c));
  return arr;
}

std::string join(std::span<const double> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

fs::path output_directory(const ExperimentConfig& cfg, const std::string& flag) {
  fs::path dir;
  if (!flag.empty()) {
    dir = flag;
  } else if (cfg.output_dir) {
    dir = *cfg.output_dir;
  } else if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    dir = env;
  } else {
    dir = "halfspace-out";
  }
  fs::create_directories(dir);
  return dir;
}

const BoundaryData& require_boundary(const ExperimentConfig& cfg) {
  if (!cfg.boundary) throw ParseError("config needs a [boundary] block");
  return *cfg.boundary;
}

// Probe points just above every atom, where the superlevel sets concentrate.
std::vector<Vector> atom_probes(const DiscreteMeasure& mu) {
  std::vector<Vector> out;
  for (const auto& a : mu.atoms()) {
    for (double lift : {0.01, 0.1}) {
      Vector x = a.location;
      x.back() += lift * (1.0 + norm(a.location));
      out.push_back(std::move(x));
    }
  }
  return out;
}

double discretization_radius(const ExperimentConfig& cfg, const BoundaryData& f) {
  if (cfg.covering.radius) return *cfg.covering.radius;
  if (f.compact()) return f.support_outer();
  return std::ldexp(1.0, cfg.ray.k_last + 2);
}

ExceptionalSet build_exceptional_set(const ExperimentConfig& cfg, const DiscreteMeasure& source,
                                     const std::vector<Vector>& extra) {
  auto points = extra;
  const auto probes = atom_probes(source);
  points.insert(points.end(), probes.begin(), probes.end());
  const AnnulusSampler sampler(cfg.params.n(), cfg.covering.seed.value_or(0), cfg.covering.samples,
                               std::move(points));
  return exceptional_union(source, cfg.params, cfg.covering.band_count, sampler);
}

// Exceptional sets of dm (from f) and dn (from mu), merged.
ExceptionalSet experiment_exceptional_set(const ExperimentConfig& cfg, const std::vector<Vector>& extra) {
  ExceptionalSet set;
  set.beta = cfg.params.beta();
  set.finite_ball_path = cfg.params.finite_cover_corner();
  if (cfg.boundary) {
    const auto dm = boundary_weighted_measure(*cfg.boundary, cfg.params, discretization_radius(cfg, *cfg.boundary),
                                              cfg.covering.resolution);
    set = build_exceptional_set(cfg, dm, extra);
  }
  if (cfg.measure) set = set.merged(build_exceptional_set(cfg, weighted_measure(*cfg.measure, cfg.params), extra));
  return set;
}

int cmd_kernel_eval(int n, const std::string& xs, const std::string& yps, const std::string& ys,
                    std::ostream& sink) {
  std::ostringstream out;  // nothing is printed unless every value evaluates
  const Vector xv = parse_double_list(xs);
  if (static_cast<int>(xv.size()) != n) throw ParseError("--x needs " + std::to_string(n) + " coordinates");
  const HalfSpacePoint x(xv);
  if (yps.empty() && ys.empty()) throw ParseError("kernel-eval needs --yp or --y");
  if (!yps.empty()) {
    const Vector yp = parse_double_list(yps);
    if (static_cast<int>(yp.size()) != n - 1) throw ParseError("--yp needs " + std::to_string(n - 1) + " coordinates");
    out << "P = " << format_double(poisson_kernel(x, BoundaryPoint(yp))) << '\n';
  }
  if (!ys.empty()) {
    const Vector y = parse_double_list(ys);
    if (static_cast<int>(y.size()) != n) throw ParseError("--y needs " + std::to_string(n) + " coordinates");
    if (y.back() < 0.0) throw DomainError("--y must lie in the closed upper half-space");
    Vector diff(n);
    for (int i = 0; i < n; ++i) diff[i] = x.coords()[i] - y[i];
    out << "E = " << format_double(fundamental_solution(diff)) << '\n';
    out << "G = " << format_double(green(x.coords(), y)) << '\n';
    out << "bound = " << format_double(green_abs_bound(x.coords(), y)) << '\n';
    const double ry = norm(y);
    if (ry <= 0.5 * x.norm() || ry >= 2.0 * x.norm()) {
      const auto fb = kernel_far_bound(x.coords(), y);
      out << "far_bound = " << format_double(fb.value) << (fb.branch == FarBranch::kNear ? " (near)" : " (far)")
          << '\n';
    }
  }
  sink << out.str();
  return kExitOk;
}

std::vector<Vector> evaluation_points(const ExperimentConfig& cfg, const std::string& flag) {
  auto pts = flag.empty() ? cfg.points : parse_point_list(flag);
  if (pts.empty()) throw ParseError("no evaluation points: set [evaluate] points or pass --x");
  return pts;
}

std::string coordinate_header(int n) {
  std::string s;
  for (int i = 1; i <= n; ++i) s += "x_" + std::to_string(i) + ",";
  return s;
}

int cmd_poisson(const std::string& config, const std::string& xs, std::ostream& out) {
  const auto cfg = load_experiment(config);
  const auto& f = require_boundary(cfg);
  out << coordinate_header(cfg.params.n()) << "value,error_bound,truncation_radius\n";
  for (const auto& p : evaluation_points(cfg, xs)) {
    const auto v = poisson_integral(f, HalfSpacePoint(p), cfg.quadrature);
    out << join(p) << ',' << format_double(v.value) << ',' << format_double(v.error_bound) << ','
        << format_double(v.truncation_radius) << '\n';
  }
  return kExitOk;
}

int cmd_potential(const std::string& config, const std::string& xs, std::ostream& out) {
  const auto cfg = load_experiment(config);
  if (!cfg.measure) throw ParseError("potential needs a [measure] block");
  const auto c = measure_condition_check(*cfg.measure, cfg.params);
  out << "# weighted_height = " << format_double(c.weighted_height) << ", decay = " << format_double(c.decay) << '\n';
  out << coordinate_header(cfg.params.n()) << "h,bound" << (cfg.boundary ? ",v,u" : "") << '\n';
  for (const auto& p : evaluation_points(cfg, xs)) {
    const HalfSpacePoint x(p);
    const double h = green_potential(*cfg.measure, x);
    out << join(p) << ',' << format_double(h) << ',' << format_double(green_potential_bound(*cfg.measure, x));
    if (cfg.boundary) {
      const double v = poisson_integral(*cfg.boundary, x, cfg.quadrature).value;
      out << ',' << format_double(v) << ',' << format_double(v + h);
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_cover(const std::string& config, const std::string& outdir, std::ostream& out) {
  const auto cfg = load_experiment(config);
  const fs::path dir = output_directory(cfg, outdir);
  std::optional<DiscreteMeasure> source;
  if (cfg.measure) {
    source = cfg.covering.source == "raw" ? *cfg.measure : weighted_measure(*cfg.measure, cfg.params);
  } else if (cfg.boundary) {
    source = boundary_weighted_measure(*cfg.boundary, cfg.params, discretization_radius(cfg, *cfg.boundary),
                                       cfg.covering.resolution);
  } else {
    throw ParseError("cover needs a [measure] or [boundary] block");
  }

  if (cfg.covering.lambda) {
    const double beta = cfg.params.beta();
    const double gate = std::pow(5.0, beta) * source->total_mass();
    const double lambda = *cfg.covering.lambda == "gate" ? gate : parse_double(*cfg.covering.lambda, "covering.lambda");
    auto candidates = cfg.points;
    const auto probes = atom_probes(*source);
    candidates.insert(candidates.end(), probes.begin(), probes.end());
    const AnnulusSampler sampler(cfg.params.n(), cfg.covering.seed.value_or(0), cfg.covering.samples);
    const auto drawn = sampler(0, 2.0, std::ldexp(1.0, cfg.ray.k_last + 2));
    candidates.insert(candidates.end(), drawn.begin(), drawn.end());
    std::erase_if(candidates, [](const Vector& c) { return !(norm(c) >= 2.0); });
    const auto cover = vitali_cover(*source, beta, lambda, candidates);
    const auto text = to_json(cover) + "\n";
    write_file(dir / "cover.json", text);
    out << text;
    return cover.certified() ? kExitOk : kExitBudget;
  }

  const auto set = build_exceptional_set(cfg, *source, cfg.points);
  const auto text = to_json(set) + "\n";
  write_file(dir / "exceptional_set.json", text);
  out << text;
  return kExitOk;
}

int cmd_growth(const std::string& config, const std::string& outdir, std::ostream& out) {
  const auto cfg = load_experiment(config);
  const auto& f = require_boundary(cfg);
  if (cfg.ray.directions.empty()) throw ParseError("growth needs ray.directions");
  const fs::path dir = output_directory(cfg, outdir);
  const int n = cfg.params.n();
  const auto ladder = dyadic_ladder(cfg.ray.k_first, cfg.ray.k_last);

  std::vector<Vector> ray_points;
  for (const auto& d : cfg.ray.directions) {
    for (double t : ladder) {
      Vector x = d;
      const double len = norm(d);
      for (auto& c : x) c *= t / len;
      ray_points.push_back(std::move(x));
    }
  }
  const auto exceptional = experiment_exceptional_set(cfg, ray_points);
  write_file(dir / "exceptional_set.json", to_json(exceptional) + "\n");

  const GrowthTarget target = make_growth_target(cfg.params);
  const DiscreteMeasure empty(n, MeasureDomain::kHalfSpace);
  const DiscreteMeasure& mu = cfg.measure ? *cfg.measure : empty;
  const Evaluator evaluator = [&](const HalfSpacePoint& x) {
    const double v = poisson_integral(f, x, cfg.quadrature).value;
    return cfg.measure ? v + green_potential(mu, x) : v;
  };

  json rays = json::array();
  bool all_witnessed = true;
  for (std::size_t i = 0; i < cfg.ray.directions.size(); ++i) {
    const auto samples = sample_ray(cfg.ray.directions[i], ladder, exceptional, cfg.ray.options, &mu);
    const auto series = growth_ratio_series(evaluator, target, samples, cfg.trend);
    const auto name = "ray_" + std::to_string(i) + ".csv";
    write_file(dir / name, series.to_csv());
    std::size_t clear = 0;
    for (const auto& s : samples) clear += s.excluded ? 0 : 1;
    rays.push_back({{"index", i},
                    {"direction", vector_json(cfg.ray.directions[i])},
                    {"csv", name},
                    {"clear_fraction", number(static_cast<double>(clear) / samples.size())},
                    {"trend", number(series.trend)},
                    {"tail_monotone", series.tail_monotone},
                    {"witnessed", series.witnessed}});
    all_witnessed = all_witnessed && series.witnessed;
  }

  json summary;
  summary["params"] = {{"n", n},
                       {"p", number(cfg.params.p())},
                       {"gamma", number(cfg.params.gamma())},
                       {"alpha", number(cfg.params.alpha())},
                       {"mode", std::string(to_string(cfg.params.mode()))},
                       {"beta", number(cfg.params.beta())}};
  summary["boundary"] = std::string(f.kind_name());
  summary["measure_atoms"] = mu.size();
  summary["target"] = {{"height_exponent", number(target.height_exponent)},
                       {"norm_exponent", number(target.norm_exponent)},
                       {"log_factor", target.log_factor}};
  summary["exceptional_set"] = {{"finite_ball_path", exceptional.finite_ball_path},
                                {"ball_count", exceptional.ball_count()},
                                {"total_budget", number(exceptional.total_budget)},
                                {"budget_certified", exceptional.total_budget <= 1.0}};
  summary["trend_threshold"] = number(cfg.trend.threshold);
  summary["rays"] = std::move(rays);
  summary["all_witnessed"] = all_witnessed;
  const auto text = summary.dump(2) + "\n";
  write_file(dir / "summary.json", text);
  out << text;
  return all_witnessed ? kExitOk : kExitTrend;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth experiments for harmonic and subharmonic functions in the upper half-space"};
  app.require_subcommand(1);

  int n = 3;
  std::string xs, yps, ys, config, outdir;
  auto* kernel = app.add_subcommand("kernel-eval", "Evaluate E, G, P and the kernel bounds");
  kernel->add_option("--n", n, "Dimension")->required();
  kernel->add_option("--x", xs, "Point of the half-space, comma separated")->required();
  kernel->add_option("--yp", yps, "Boundary point y'");
  kernel->add_option("--y", ys, "Point of the closed half-space");

  auto* poisson = app.add_subcommand("poisson", "Poisson integral of the configured boundary data");
  auto* potential = app.add_subcommand("potential", "Green potential of the configured measure");
  auto* cover = app.add_subcommand("cover", "Exceptional-set cover as JSON");
  auto* growth = app.add_subcommand("growth", "Growth ratio series along rays");
  for (auto* sub : {poisson, potential, cover, growth}) sub->add_option("config", config, "Config file")->required();
  for (auto* sub : {poisson, potential}) sub->add_option("--x", xs, "Evaluation points (';' separated)");
  for (auto* sub : {cover, growth}) sub->add_option("--output", outdir, "Output directory");

  std::vector<const char*> argv{"halfspace"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (kernel->parsed()) return cmd_kernel_eval(n, xs, yps, ys, out);
    if (poisson->parsed()) return cmd_poisson(config, xs, out);
    if (potential->parsed()) return cmd_potential(config, xs, out);
    if (cover->parsed()) return cmd_cover(config, outdir, out);
    if (growth->parsed()) return cmd_growth(config, outdir, out);
  } catch (const SingularityError& e) {
    err << "singularity: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const ConvergenceError& e) {
    err << "convergence: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const BudgetError& e) {
    err << "budget: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ObstructedRayError& e) {
    err << "obstructed: " << e.what() << '\n';
    return kExitObstructed;
  } catch (const ValidationError& e) {
    err << "invalid parameters:\n";
    for (const auto& v : e.violations()) err << "  " << v << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace halfspace::tools

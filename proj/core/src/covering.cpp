#include "halfspace/covering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include <json.hpp>

#include "halfspace/error.hpp"
#include "halfspace/kernels.hpp"

namespace halfspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Rung {
  double distance;
  double cumulative;  // mass of the closed ball of this radius
};

// Distinct atom distances from x in increasing order with cumulative masses.
// A leading rung of distance 0 collects atoms at x.
std::vector<Rung> distance_ladder(const DiscreteMeasure& nu, std::span<const double> x) {
  std::vector<std::pair<double, double>> dm;
  dm.reserve(nu.size());
  for (const auto& a : nu.atoms()) {
    const double d = near_singular(x, a.location) ? 0.0 : distance(x, a.location);
    dm.emplace_back(d, a.mass);
  }
  std::sort(dm.begin(), dm.end());
  std::vector<Rung> ladder;
  double cum = 0.0;
  for (const auto& [d, m] : dm) {
    cum += m;
    if (!ladder.empty() && ladder.back().distance == d) {
      ladder.back().cumulative = cum;
    } else {
      ladder.push_back({d, cum});
    }
  }
  return ladder;
}

double density(const Rung& r, double beta) { return r.cumulative / std::pow(r.distance, beta); }

void check_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("maximal function needs finite beta >= 0");
}

double round9(double v) {
  return std::isfinite(v) ? std::strtod(format_double(v).c_str(), nullptr) : v;
}

nlohmann::json number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return round9(v);
}

nlohmann::json vector_json(std::span<const double> v) {
  auto arr = nlohmann::json::array();
  for (double c : v) arr.push_back(number(c));
  return arr;
}

nlohmann::json cover_json(const BallCover& cover) {
  nlohmann::json j;
  j["beta"] = number(cover.beta);
  j["lambda"] = number(cover.lambda);
  j["total_mass"] = number(cover.total_mass);
  j["members"] = cover.members;
  j["budget"] = number(cover.budget);
  j["certified_bound"] = number(cover.certified_bound);
  j["certified"] = cover.certified();
  auto balls = nlohmann::json::array();
  for (const auto& b : cover.balls) balls.push_back({{"center", vector_json(b.center)}, {"radius", number(b.radius)}});
  j["balls"] = std::move(balls);
  return j;
}

}  // namespace

double maximal_function(const DiscreteMeasure& nu, std::span<const double> x, double beta) {
  check_beta(beta);
  if (nu.empty()) return 0.0;
  if (beta == 0.0) return nu.total_mass();
  const auto ladder = distance_ladder(nu, x);
  if (ladder.front().distance == 0.0) return kInf;
  double best = 0.0;
  for (const auto& r : ladder) best = std::max(best, density(r, beta));
  return best;
}

bool superlevel_membership(const DiscreteMeasure& nu, std::span<const double> x, double beta, double lambda) {
  if (!(lambda > 0.0)) throw DomainError("superlevel_membership needs lambda > 0");
  const double r = norm(x);
  if (!(r >= 2.0)) return false;
  return maximal_function(nu, x, beta) > lambda / std::pow(r, beta);
}

double witness_radius(const DiscreteMeasure& nu, std::span<const double> x, double beta, double lambda) {
  if (!superlevel_membership(nu, x, beta, lambda)) {
    throw DomainError("witness_radius: point is not in the superlevel set");
  }
  const double level = lambda / std::pow(norm(x), beta);
  const auto ladder = distance_ladder(nu, x);
  if (beta == 0.0) return ladder.back().distance;  // M = total mass is reached once every atom is inside
  if (ladder.front().distance == 0.0) {
    // An atom at x: any radius below the next rung where lambda (r/|x|)^beta < mass works.
    const double m0 = ladder.front().cumulative;
    const double next = ladder.size() > 1 ? ladder[1].distance : kInf;
    return 0.5 * std::min(next, std::pow(m0 / level, 1.0 / beta));
  }
  for (const auto& r : ladder) {
    if (density(r, beta) > level) return r.distance;
  }
  throw DomainError("witness_radius: no ladder rung satisfies the density inequality");
}

bool BallCover::contains(std::span<const double> x) const {
  return std::any_of(balls.begin(), balls.end(), [&](const Ball& b) { return b.contains(x); });
}

BallCover vitali_cover(const DiscreteMeasure& nu, double beta, double lambda, std::span<const Vector> candidates) {
  check_beta(beta);
  const double mass = nu.total_mass();
  if (!(lambda > 0.0)) throw DomainError("vitali_cover needs lambda > 0");
  if (lambda < std::pow(5.0, beta) * mass) {
    throw DomainError("vitali_cover needs lambda >= 5^beta * total mass = " + format_double(std::pow(5.0, beta) * mass));
  }

  BallCover cover;
  cover.beta = beta;
  cover.lambda = lambda;
  cover.total_mass = mass;
  cover.certified_bound = 3.0 * std::pow(5.0, beta) * mass / lambda;

  struct Member {
    const Vector* center;
    double radius;
  };
  std::vector<Member> members;
  for (const auto& c : candidates) {
    if (static_cast<int>(c.size()) != nu.dimension()) throw DomainError("vitali_cover: candidate dimension mismatch");
    if (!(norm(c) >= 2.0)) throw DomainError("vitali_cover: candidates must satisfy |x| >= 2");
    if (superlevel_membership(nu, c, beta, lambda)) members.push_back({&c, witness_radius(nu, c, beta, lambda)});
  }
  cover.members = members.size();
  std::sort(members.begin(), members.end(), [](const Member& a, const Member& b) {
    if (a.radius != b.radius) return a.radius > b.radius;
    return *a.center < *b.center;
  });

  std::vector<Member> kept;
  for (const auto& m : members) {
    const bool blocked = std::any_of(kept.begin(), kept.end(), [&](const Member& k) {
      return distance(*k.center, *m.center) <= k.radius + m.radius;
    });
    if (blocked) continue;
    // Witness balls of the annulus 2^k <= |x| < 2^{k+1} have r <= 2^{k-1}.
    int e = 0;
    std::frexp(norm(*m.center), &e);
    const double half_annulus = std::ldexp(1.0, e - 2);
    if (m.radius > half_annulus) {
      throw BudgetError("vitali_cover: witness radius " + format_double(m.radius) + " leaves its annulus band");
    }
    kept.push_back(m);
  }

  for (const auto& k : kept) {
    cover.balls.push_back({*k.center, 5.0 * k.radius});
    cover.budget += std::pow(5.0 * k.radius / norm(*k.center), beta);
  }
  return cover;
}

bool ExceptionalSet::contains(std::span<const double> x) const {
  return std::any_of(bands.begin(), bands.end(), [&](const CoverBand& b) { return b.cover.contains(x); });
}

std::size_t ExceptionalSet::ball_count() const {
  std::size_t n = 0;
  for (const auto& b : bands) n += b.cover.balls.size();
  return n;
}

ExceptionalSet ExceptionalSet::merged(const ExceptionalSet& other) const {
  ExceptionalSet out = *this;
  out.bands.insert(out.bands.end(), other.bands.begin(), other.bands.end());
  out.total_budget += other.total_budget;
  out.finite_ball_path = finite_ball_path && other.finite_ball_path;
  return out;
}

ExceptionalSet exceptional_union(const DiscreteMeasure& source, const ParamSet& params, int band_count,
                                 const CandidateSampler& sampler) {
  if (band_count < 1) throw DomainError("exceptional_union needs band_count >= 1");
  if (source.dimension() != params.n()) throw DomainError("exceptional_union: dimension mismatch");

  ExceptionalSet set;
  set.beta = params.beta();
  set.finite_ball_path = params.finite_cover_corner();
  const double five_beta = std::pow(5.0, set.beta);

  double previous = 1.0;
  for (int j = 1; j <= band_count; ++j) {
    CoverBand band;
    band.index = j;
    band.inner = previous;
    band.epsilon = std::ldexp(1.0, -(j + 2));
    band.budget_limit = std::ldexp(1.0, -j);
    const double target = std::pow(band.epsilon, params.p()) / five_beta;

    double radius = 2.0;
    while (radius <= previous) radius *= 2.0;
    while (source.restricted_beyond(radius).total_mass() >= target) {
      radius *= 2.0;
      if (!std::isfinite(radius)) throw ConvergenceError("exceptional_union: tail threshold overflow", radius, 0.0);
    }
    band.threshold = radius;

    const DiscreteMeasure tail = source.restricted_beyond(radius);
    band.tail_mass = tail.total_mass();
    band.lambda = 3.0 * five_beta * std::ldexp(1.0, j) * band.tail_mass;

    if (band.tail_mass > 0.0 && !set.finite_ball_path) {
      const double lo = std::max(previous, 2.0);
      std::vector<Vector> candidates;
      for (auto& c : sampler(j, lo, radius)) {
        const double r = norm(c);
        if (r >= lo && r < radius) candidates.push_back(std::move(c));
      }
      band.cover = vitali_cover(tail, set.beta, band.lambda, candidates);
    } else {
      band.cover.beta = set.beta;
      band.cover.lambda = band.lambda;
      band.cover.total_mass = band.tail_mass;
    }

    if (!(band.cover.budget <= band.budget_limit)) {
      throw BudgetError("band " + std::to_string(j) + " budget " + format_double(band.cover.budget) +
                        " exceeds " + format_double(band.budget_limit));
    }
    set.total_budget += band.cover.budget;
    previous = radius;
    set.bands.push_back(std::move(band));
  }
  if (!(set.total_budget <= 1.0)) {
    throw BudgetError("exceptional set budget " + format_double(set.total_budget) + " exceeds 1");
  }
  return set;
}

bool point_excluded(const ExceptionalSet& set, std::span<const double> x) { return set.contains(x); }

AnnulusSampler::AnnulusSampler(int n, std::uint64_t seed, int count, std::vector<Vector> extra)
    : n_(n), seed_(seed), count_(count), extra_(std::move(extra)) {
  if (n_ < 2 || count_ < 0) throw DomainError("AnnulusSampler: need n >= 2 and count >= 0");
}

std::vector<Vector> AnnulusSampler::operator()(int band, double inner, double outer) const {
  std::vector<Vector> out;
  const double lo = std::max(inner, 2.0);
  if (lo < outer) {
    // Explicit seeding and bit-level conversions keep the stream identical across standard libraries.
    std::seed_seq seq{static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(band)};
    std::mt19937_64 rng(seq);
    auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto gaussian = [&] {
      const double u1 = 1.0 - uniform();
      const double u2 = uniform();
      return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    };
    const double log_lo = std::log(lo), log_hi = std::log(outer);
    for (int i = 0; i < count_; ++i) {
      Vector dir(n_);
      double len = 0.0;
      do {
        for (auto& c : dir) c = gaussian();
        dir.back() = std::abs(dir.back());
        len = norm(dir);
      } while (!(len > 0.0) || dir.back() == 0.0);
      const double r = std::exp(log_lo + (log_hi - log_lo) * uniform());
      for (auto& c : dir) c *= r / len;
      if (norm(dir) >= lo && norm(dir) < outer) out.push_back(std::move(dir));
    }
  }
  for (const auto& e : extra_) {
    const double r = norm(e);
    if (r >= lo && r < outer) out.push_back(e);
  }
  return out;
}

std::string to_json(const BallCover& cover) { return cover_json(cover).dump(2); }

std::string to_json(const ExceptionalSet& set) {
  nlohmann::json j;
  j["beta"] = number(set.beta);
  j["finite_ball_path"] = set.finite_ball_path;
  j["total_budget"] = number(set.total_budget);
  j["ball_count"] = set.ball_count();
  auto bands = nlohmann::json::array();
  for (const auto& b : set.bands) {
    nlohmann::json bj;
    bj["index"] = b.index;
    bj["inner"] = number(b.inner);
    bj["threshold"] = number(b.threshold);
    bj["epsilon"] = number(b.epsilon);
    bj["tail_mass"] = number(b.tail_mass);
    bj["lambda"] = number(b.lambda);
    bj["budget_limit"] = number(b.budget_limit);
    bj["cover"] = cover_json(b.cover);
    bands.push_back(std::move(bj));
  }
  j["bands"] = std::move(bands);
  return j.dump(2);
}

}  // namespace halfspace

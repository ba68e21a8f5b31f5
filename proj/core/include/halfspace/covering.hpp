#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "halfspace/measure.hpp"
#include "halfspace/params.hpp"

namespace halfspace {

/// sup_{r>0} nu(B(x, r)) / r^beta, evaluated exactly on the atom-distance ladder.
/// +inf when an atom sits at x and beta > 0; the total mass when beta = 0.
double maximal_function(const DiscreteMeasure& nu, std::span<const double> x, double beta);

/// |x| >= 2 and M(nu)(x) > lambda / |x|^beta.
bool superlevel_membership(const DiscreteMeasure& nu, std::span<const double> x, double beta, double lambda);

/// Smallest ladder distance d with nu(closed B(x, d)) > lambda (d / |x|)^beta.
/// Throws DomainError when x is not a member.
double witness_radius(const DiscreteMeasure& nu, std::span<const double> x, double beta, double lambda);

/// Open ball.
struct Ball {
  Vector center;
  double radius;

  bool contains(std::span<const double> x) const { return distance(x, center) < radius; }
};

struct BallCover {
  std::vector<Ball> balls;  ///< selected witness balls expanded by 5
  double beta = 0.0;
  double lambda = 0.0;
  double total_mass = 0.0;
  double budget = 0.0;           ///< sum (radius / |center|)^beta
  double certified_bound = 0.0;  ///< 3 5^beta total_mass / lambda
  std::size_t members = 0;       ///< candidates found in the superlevel set

  bool certified() const { return budget <= certified_bound; }
  bool contains(std::span<const double> x) const;
};

/// Greedy 5r cover of the candidate members of the superlevel set.
///
/// Members are ordered by witness radius (descending, ties by lexicographic
/// center) and a witness ball is kept when its closed ball misses every ball
/// kept so far; the kept balls are expanded by 5. Requires lambda > 0,
/// lambda >= 5^beta * total mass, and |x| >= 2 for every candidate.
BallCover vitali_cover(const DiscreteMeasure& nu, double beta, double lambda, std::span<const Vector> candidates);

struct CoverBand {
  int index = 0;           ///< j
  double inner = 0.0;      ///< R_{j-1}, lower edge of the candidate annulus
  double threshold = 0.0;  ///< R_j
  double epsilon = 0.0;    ///< 2^{-(j+2)}
  double tail_mass = 0.0;  ///< mass of the atoms with |y| >= R_j
  double lambda = 0.0;     ///< 3 5^beta 2^j tail_mass
  double budget_limit = 0.0;  ///< 2^{-j}
  BallCover cover;
};

struct ExceptionalSet {
  std::vector<CoverBand> bands;
  double beta = 0.0;
  bool finite_ball_path = false;  ///< beta = 0: finitely many balls
  double total_budget = 0.0;

  bool contains(std::span<const double> x) const;
  std::size_t ball_count() const;
  /// Superposition of two sets, e.g. the covers built from dm and from dn.
  ExceptionalSet merged(const ExceptionalSet& other) const;
};

/// Candidate points for band j in inner <= |x| < outer.
using CandidateSampler = std::function<std::vector<Vector>(int band, double inner, double outer)>;

/// Band-by-band exceptional cover with eps_j = 2^{-(j+2)}. Throws BudgetError
/// if a band exceeds 2^{-j} or the total exceeds 1.
ExceptionalSet exceptional_union(const DiscreteMeasure& source, const ParamSet& params, int band_count,
                                 const CandidateSampler& sampler);

bool point_excluded(const ExceptionalSet& set, std::span<const double> x);

/// Seeded candidates: `count` points per band with log-uniform radius and
/// uniform direction in the upper half of the sphere, plus every extra point
/// whose norm lies in the band.
class AnnulusSampler {
 public:
  AnnulusSampler(int n, std::uint64_t seed, int count, std::vector<Vector> extra = {});

  std::vector<Vector> operator()(int band, double inner, double outer) const;

 private:
  int n_;
  std::uint64_t seed_;
  int count_;
  std::vector<Vector> extra_;
};

/// JSON renderings with every value printed to 9 significant digits.
std::string to_json(const BallCover& cover);
std::string to_json(const ExceptionalSet& set);

}  // namespace halfspace

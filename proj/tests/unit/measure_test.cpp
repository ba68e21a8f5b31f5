#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <halfspace/boundary_integrals.hpp>
#include <halfspace/error.hpp>
#include <halfspace/kernels.hpp>
#include <halfspace/measure.hpp>

#include "test_support.hpp"

namespace halfspace {
namespace {

DiscreteMeasure atoms3(std::vector<Atom> atoms) { return DiscreteMeasure(3, MeasureDomain::kHalfSpace, std::move(atoms)); }

TEST(DiscreteMeasure, Invariants) {
  EXPECT_THROW(atoms3({{{0, 0, 1}, 0.0}}), DomainError);
  EXPECT_THROW(atoms3({{{0, 0, 0}, 1.0}}), DomainError);
  EXPECT_THROW(DiscreteMeasure(3, MeasureDomain::kBoundary, {{{0, 0, 1}, 1.0}}), DomainError);
  EXPECT_THROW(atoms3({{{0, 1}, 1.0}}), DomainError);
  const auto mu = atoms3({{{0, 0, 1}, 1.0}, {{0, 0, 4}, 2.0}});
  EXPECT_EQ(mu.total_mass(), 3.0);
  EXPECT_EQ(mu.restricted_beyond(4.0).size(), 1u);
  EXPECT_EQ(mu.restricted_beyond(4.1).size(), 0u);
  EXPECT_EQ(mu.scaled(2.0).total_mass(), 6.0);
  EXPECT_EQ(mu.combined(mu).size(), 4u);
  EXPECT_TRUE(mu.near_atom(Vector{0, 0, 1 + 1e-7}));
  EXPECT_FALSE(mu.near_atom(Vector{0, 0, 1.01}));
}

TEST(DiscreteMeasure, CsvLoading) {
  const auto dir = testing::scratch_dir("measure");
  testing::write_text(dir / "mu.csv", "coord_1,coord_2,coord_3,mass\n0,0,1,1\n1,2,3,0.5\n");
  const auto mu = DiscreteMeasure::load_csv(3, MeasureDomain::kHalfSpace, dir / "mu.csv");
  EXPECT_EQ(mu.size(), 2u);
  EXPECT_EQ(mu.atoms()[1].location, (Vector{1, 2, 3}));
  testing::write_text(dir / "bad.csv", "coord_1,coord_2,mass\n0,1,1\n");
  EXPECT_THROW(DiscreteMeasure::load_csv(3, MeasureDomain::kHalfSpace, dir / "bad.csv"), ParseError);
  testing::write_text(dir / "short.csv", "coord_1,coord_2,coord_3,mass\n0,1,1\n");
  EXPECT_THROW(DiscreteMeasure::load_csv(3, MeasureDomain::kHalfSpace, dir / "short.csv"), ParseError);
}

TEST(MeasureConditions, Examples) {
  const auto p = validate_params(3, 2.0, 2.0, 1.0, TheoremMode::kSubharmonic);
  const auto c = measure_condition_check(atoms3({{{0, 0, 1}, 1.0}}), p);
  EXPECT_DOUBLE_EQ(c.weighted_height, 0.25);
  EXPECT_DOUBLE_EQ(c.decay, 0.25);
  const auto e = measure_condition_check(atoms3({}), p);
  EXPECT_EQ(e.weighted_height, 0.0);
  EXPECT_EQ(e.decay, 0.0);
  const auto mu = atoms3({{{1, 0, 1}, 1.0}, {{0, 3, 2}, 0.5}});
  const auto c1 = measure_condition_check(mu, p);
  const auto c3 = measure_condition_check(mu.scaled(3.0), p);
  EXPECT_NEAR(c3.weighted_height, 3.0 * c1.weighted_height, 1e-15);
  EXPECT_NEAR(c3.decay, 3.0 * c1.decay, 1e-15);
  EXPECT_THROW(measure_condition_check(DiscreteMeasure(3, MeasureDomain::kBoundary), p), DomainError);
}

TEST(WeightedMeasure, Examples) {
  const auto p = validate_params(3, 2.0, 2.0, 1.0, TheoremMode::kSubharmonic);
  const auto w = weighted_measure(atoms3({{{0, 0, 1}, 1.0}}), p);
  EXPECT_DOUBLE_EQ(w.atoms()[0].mass, 0.25);
  EXPECT_EQ(w.atoms()[0].location, (Vector{0, 0, 1}));
  std::vector<Atom> line;
  for (int k = 0; k < 6; ++k) line.push_back({{0, 0, std::ldexp(1.0, k)}, 1.0});
  const auto wl = weighted_measure(atoms3(line), p);
  for (int k = 0; k < 6; ++k) {
    const double y = std::ldexp(1.0, k);
    EXPECT_NEAR(wl.atoms()[k].mass, std::pow(y, 2.0) * std::pow(1 + y, -2.0), 1e-15);
  }
}

TEST(GreenPotential, Examples) {
  const HalfSpacePoint x(Vector{0, 0, 1});
  EXPECT_NEAR(green_potential(atoms3({{{0, 0, 2}, 1.0}}), x), -0.0530516476972984453, 1e-16);
  EXPECT_EQ(green_potential(atoms3({}), x), 0.0);
  EXPECT_THROW(green_potential(atoms3({{{0, 0, 1}, 1.0}}), x), SingularityError);
}

TEST(GreenPotential, LinearAndDominated) {
  testing::Rng rng(9);
  std::vector<Atom> a1, a2;
  for (int i = 0; i < 10; ++i) a1.push_back({rng.half_space_point(3, 0.5, 20.0), rng.uniform(0.1, 2.0)});
  for (int i = 0; i < 7; ++i) a2.push_back({rng.half_space_point(3, 0.5, 20.0), rng.uniform(0.1, 2.0)});
  const auto m1 = atoms3(a1), m2 = atoms3(a2);
  for (int i = 0; i < 100; ++i) {
    const HalfSpacePoint x(rng.half_space_point(3, 0.1, 50.0));
    const double h1 = green_potential(m1, x), h2 = green_potential(m2, x);
    EXPECT_LE(h1, 0.0);
    EXPECT_NEAR(green_potential(m1.combined(m2), x), h1 + h2, 1e-14 * (std::abs(h1) + std::abs(h2)));
    EXPECT_LE(std::abs(h1), green_potential_bound(m1, x) * (1 + 1e-12));
  }
}

TEST(SubharmonicValue, Reductions) {
  const auto f = BoundaryData::gaussian(3, 1.0, 1.0);
  const auto zero = BoundaryData::compact_bump(3, 0.0, 1.0);
  const auto mu = atoms3({{{3, 0, 2}, 1.0}});
  const HalfSpacePoint x(Vector{0.5, 0.5, 0.5});
  EXPECT_EQ(subharmonic_value(f, atoms3({}), x), poisson_integral(f, x).value);
  EXPECT_EQ(subharmonic_value(zero, mu, x), green_potential(mu, x));
  // f = 1 with one distant atom: 1 - bound <= u <= 1.
  const auto one = BoundaryData::radial_power(3, 0.0);
  const auto far = atoms3({{{40, 0, 30}, 1.0}});
  const double u = subharmonic_value(one, far, x);
  EXPECT_LE(u, 1.0 + 1e-6);
  EXPECT_GE(u, 1.0 - 1e-6 - green_potential_bound(far, x));
}

TEST(SubharmonicValue, SphericalMeans) {
  const auto f = BoundaryData::gaussian(3, 1.0, 1.0);
  const Vector x0{0.3, -0.2, 2.0};
  const double rho = 0.8;
  const auto outside = atoms3({{{0.0, 0.0, 4.0}, 1.0}, {{2.0, 1.0, 1.0}, 0.5}});
  const auto inside = atoms3({{{0.5, -0.1, 2.3}, 1.0}});
  const auto u_out = [&](const Vector& y) { return subharmonic_value(f, outside, HalfSpacePoint(y)); };
  const auto u_in = [&](const Vector& y) { return subharmonic_value(f, inside, HalfSpacePoint(y)); };
  // Atoms off the ball: u is harmonic there and the mean equals the centre value.
  EXPECT_NEAR(testing::sphere_average3(u_out, x0, rho), u_out(x0), 1e-7);
  // An atom inside: the signed Green potential is subharmonic, so the mean dominates.
  EXPECT_GT(testing::sphere_average3(u_in, x0, rho), u_in(x0));
}

TEST(BoundaryWeightedMeasure, MassMatchesWeightedNorm) {
  const auto p = validate_params(3, 2.0, 2.0, 1.0, TheoremMode::kHarmonic);
  for (const auto& f : {BoundaryData::compact_bump(3, 1.0, 1.0), BoundaryData::gaussian(3, 1.0, 2.0)}) {
    const auto dm = boundary_weighted_measure(f, p, 20.0, 0.1);
    EXPECT_EQ(dm.domain(), MeasureDomain::kBoundary);
    for (const auto& a : dm.atoms()) EXPECT_EQ(a.location.back(), 0.0);
    const double exact = weighted_lp_norm(f, p, 20.0).value;
    EXPECT_NEAR(dm.total_mass(), exact, 0.01 * exact);
  }
  const auto p4 = validate_params(4, 1.0, 2.0, 1.0, TheoremMode::kHarmonic);
  const auto b4 = BoundaryData::compact_bump(4, 1.0, 1.0);
  const auto dm4 = boundary_weighted_measure(b4, p4, 5.0, 0.25);
  const double exact4 = weighted_lp_norm(b4, p4, 5.0).value;
  EXPECT_NEAR(dm4.total_mass(), exact4, 0.01 * exact4);
}

}  // namespace
}  // namespace halfspace

#include <gtest/gtest.h>

#include <cmath>

#include <halfspace/error.hpp>
#include <halfspace/params.hpp>

#include "test_support.hpp"

namespace halfspace {
namespace {

TEST(ValidateParams, CornerIsAcceptedWithZeroBeta) {
  const auto ps = validate_params(3, 1.0, 3.0, 3.0, TheoremMode::kHarmonic);
  EXPECT_TRUE(ps.q_is_infinite());
  EXPECT_EQ(ps.inv_q(), 0.0);
  EXPECT_EQ(ps.beta(), 0.0);
  EXPECT_TRUE(ps.finite_cover_corner());
}

TEST(ValidateParams, InteriorPoint) {
  const auto ps = validate_params(3, 2.0, 2.0, 1.0, TheoremMode::kHarmonic);
  EXPECT_DOUBLE_EQ(ps.q(), 2.0);
  EXPECT_DOUBLE_EQ(ps.beta(), 5.0);
  EXPECT_NEAR(1.0 / ps.p() + ps.inv_q(), 1.0, 1e-12);
}

TEST(ValidateParams, UpperGammaBoundIsOpen) {
  try {
    validate_params(3, 2.0, 5.0, 1.0, TheoremMode::kHarmonic);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    ASSERT_EQ(e.violations().size(), 1u);
    EXPECT_NE(e.violations()[0].find("(n-1)+p"), std::string::npos);
  }
  EXPECT_THROW(validate_params(3, 2.0, 4.0, 1.0, TheoremMode::kHarmonic), ValidationError);
}

TEST(ValidateParams, ListsEveryViolation) {
  try {
    validate_params(2, 0.5, 1.0, -1.0, TheoremMode::kHarmonic);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 2u);  // n and p; range checks need a valid p first
  }
  try {
    validate_params(3, 2.0, 9.0, 2.5, TheoremMode::kSubharmonic);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 2u);
  }
}

TEST(ValidateParams, LogBoundaryEndpointIsAdmitted) {
  EXPECT_NO_THROW(validate_params(3, 2.0, -2.0, 1.0, TheoremMode::kHarmonic));
  EXPECT_THROW(validate_params(3, 2.0, -2.001, 1.0, TheoremMode::kHarmonic), ValidationError);
}

TEST(ValidateParams, InequalityTableOnGrid) {
  // (p, gamma) straddling each boundary of the admissible region for n = 3.
  const int n = 3;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    const double lo = p > 1.0 ? -(n - 1) * (p - 1.0) : 0.0;
    const double hi = p > 1.0 ? (n - 1) + p : n;
    for (double d : {-1e-3, 1e-3}) {
      const bool lo_ok = d > 0;
      const bool hi_ok = d < 0;
      auto accepted = [&](double g) {
        try {
          validate_params(n, p, g, 1.0, TheoremMode::kHarmonic);
          return true;
        } catch (const ValidationError&) {
          return false;
        }
      };
      EXPECT_EQ(accepted(lo + d), lo_ok) << "p=" << p << " gamma=" << lo + d;
      EXPECT_EQ(accepted(hi + d), hi_ok) << "p=" << p << " gamma=" << hi + d;
    }
  }
  // p = 1 closes the upper end at gamma = n.
  EXPECT_NO_THROW(validate_params(n, 1.0, 3.0, 1.0, TheoremMode::kHarmonic));
}

TEST(ValidateParams, ModeRanges) {
  EXPECT_NO_THROW(validate_params(3, 2.0, 1.0, 3.0, TheoremMode::kHarmonic));
  EXPECT_THROW(validate_params(3, 2.0, 1.0, 3.5, TheoremMode::kHarmonic), ValidationError);
  EXPECT_NO_THROW(validate_params(3, 2.0, 1.0, 1.9, TheoremMode::kSubharmonic));
  EXPECT_THROW(validate_params(3, 2.0, 1.0, 2.0, TheoremMode::kSubharmonic), ValidationError);
  EXPECT_THROW(validate_params(3, 2.0, 1.0, 0.0, TheoremMode::kSubharmonic), ValidationError);
}

TEST(ParamSetKeyValues, RoundTrip) {
  const auto ps = validate_params(4, 1.5, 0.25, 1.25, TheoremMode::kSubharmonic);
  const auto kv = to_key_values(ps);
  EXPECT_EQ(kv.at("mode"), "theorem-2");
  EXPECT_EQ(param_set_from_key_values(kv), ps);
  EXPECT_THROW(parse_theorem_mode("theorem-3"), ParseError);
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect(Vector{0, 0, 2}), (Vector{0, 0, -2}));
  EXPECT_EQ(reflect(Vector{1, -1, 0}), (Vector{1, -1, 0}));
}

TEST(Reflect, InvolutionIsometryAndFarther) {
  testing::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Vector x = rng.half_space_point(3, 0.1, 10.0);
    const Vector y = rng.half_space_point(3, 0.1, 10.0);
    EXPECT_EQ(reflect(reflect(y)), y);
    EXPECT_DOUBLE_EQ(distance(reflect(x), reflect(y)), distance(x, y));
    EXPECT_GE(distance(x, reflect(y)), distance(x, y));
  }
}

TEST(Points, HalfSpacePointNeedsPositiveHeight) {
  EXPECT_THROW(HalfSpacePoint(Vector{1, 2, 0}), DomainError);
  EXPECT_THROW(HalfSpacePoint(Vector{1, 2, -1}), DomainError);
  const HalfSpacePoint x(Vector{3, 0, 4});
  EXPECT_DOUBLE_EQ(x.norm(), 5.0);
  EXPECT_EQ(x.tangential().size(), 2u);
  EXPECT_EQ(BoundaryPoint(Vector{1, 2}).embedded(), (Vector{1, 2, 0}));
}

TEST(Regions, BoundaryExamples) {
  const HalfSpacePoint x(Vector{0, 0, 4});
  EXPECT_EQ(classify_boundary_region(x, BoundaryPoint(Vector{1, 0})), RegionId::kR4);
  EXPECT_EQ(classify_boundary_region(x, BoundaryPoint(Vector{2, 0})), RegionId::kR1);
  EXPECT_EQ(classify_boundary_region(x, BoundaryPoint(Vector{0, 10})), RegionId::kR3);
  EXPECT_EQ(classify_boundary_region(x, BoundaryPoint(Vector{0, 8})), RegionId::kR2);
  EXPECT_THROW(classify_boundary_region(HalfSpacePoint(Vector{0, 0, 1}), BoundaryPoint(Vector{0, 0})), DomainError);
}

TEST(Regions, HalfSpaceExamples) {
  const HalfSpacePoint x(Vector{0, 0, 4});
  EXPECT_EQ(classify_halfspace_region(x, HalfSpacePoint(Vector{0, 0, 0.5})), RegionId::kR4);
  EXPECT_EQ(classify_halfspace_region(x, HalfSpacePoint(Vector{0, 0, 6})), RegionId::kR2);
  EXPECT_EQ(classify_halfspace_region(x, HalfSpacePoint(Vector{0, 0, 3})), RegionId::kR2);
}

TEST(Regions, ShellsPartitionTheRadii) {
  testing::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const double xr = rng.uniform(2.0, 50.0);
    const double yr = rng.uniform(0.0, 150.0);
    int hits = 0;
    for (auto id : {RegionId::kR1, RegionId::kR2, RegionId::kR3, RegionId::kR4}) {
      const auto s = region_shell(id, xr);
      const bool in = (id == RegionId::kR4 ? yr >= s.inner : yr > s.inner) && yr <= s.outer;
      if (in) {
        ++hits;
        EXPECT_EQ(classify_radius(xr, yr), id);
      }
    }
    EXPECT_EQ(hits, 1);
  }
}

}  // namespace
}  // namespace halfspace

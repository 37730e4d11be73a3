#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "symplectica/bunch.hpp"
#include "symplectica/dirac.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/sampling.hpp"
#include "symplectica/smallmat.hpp"

using namespace symplectica;

namespace {

const Mat4 kGamma1 = symplectic_form<4>();

BeamMatrix4 reference_beam() {
  CliffordElement4 z;
  z.comp = Mat4{{4.4, 0, 0, 0, 0, -1.5, -1.6, 0.9, 0, -1.5, 0.7, -0.9, 0, 1.7, -1.6, -2.6}};
  return BeamMatrix4::from_components(z);
}

void expect_components_near(const BeamMatrix4& b, const Mat4& printed, double tol) {
  const Mat4 c = b.components().comp;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(c(i, j), printed(i, j), tol) << "cell " << i << "," << j;
}

Vec3 perp(const Vec3& v, const Vec3& e) { return v - dot(v, e) * e; }

std::vector<double> zeta_invariants(const BeamMatrix4& b, const Vec3& e) {
  return {b.s, dot(b.v1, b.v1), dot(b.v2, b.v2), dot(b.v3, b.v3), dot(b.v1, b.v2), dot(b.v1, b.v3), dot(b.v2, b.v3),
          dot(b.v1, e), dot(b.v2, e), dot(b.v3, e)};
}

std::vector<double> gamma_invariants(const BeamMatrix4& b) {
  const Vec3 c = cross(b.v2, b.v3);
  return {b.s, b.v1[0], b.v1[1], b.v1[2], c[0], c[1], c[2], dot(b.v2, b.v2) + dot(b.v3, b.v3),
          std::pow(dot(b.v2, b.v1), 2) + std::pow(dot(b.v3, b.v1), 2)};
}

std::vector<double> beta2_invariants(const BeamMatrix4& b, const Vec3& e) {
  const Vec3 p = perp(b.v2, e);
  const Vec3 w = cross(b.v2, b.v3) - b.s * b.v1;
  return {dot(b.v1, e), p[0], p[1], p[2], dot(b.v3, e), dot(b.v3, b.v1), b.s * b.s - dot(b.v2, b.v2),
          dot(b.v1, b.v1) - dot(b.v3, b.v3), dot(w, w) - std::pow(dot(b.v2, b.v1), 2)};
}

std::vector<double> beta3_invariants(const BeamMatrix4& b, const Vec3& e) {
  const Vec3 p = perp(b.v3, e);
  const Vec3 w = cross(b.v2, b.v3) - b.s * b.v1;
  return {dot(b.v1, e), dot(b.v2, e), p[0], p[1], p[2], dot(b.v2, b.v1), b.s * b.s - dot(b.v3, b.v3),
          dot(b.v1, b.v1) - dot(b.v2, b.v2), dot(w, w) - std::pow(dot(b.v3, b.v1), 2)};
}

void expect_same(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << "invariant " << i;
}

}  // namespace

TEST(Dirac, ComponentRoundTrip) {
  Rng rng(1);
  const BeamMatrix4 b = random_physical_beam4(rng);
  const BeamMatrix4 back = BeamMatrix4::from_matrix(b.representative());
  EXPECT_NEAR(back.s, b.s, 1e-14);
  EXPECT_LE(max_abs_diff(back.v1, b.v1) + max_abs_diff(back.v2, b.v2) + max_abs_diff(back.v3, b.v3), 1e-13);
  EXPECT_LE(max_abs_diff(compose4(b.components()), b.representative()), 1e-14);
}

TEST(Dirac, SkewProductMatchesMatrixProduct) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    const BeamMatrix4 b = BeamMatrix4::from_matrix(oracle::random_symmetric<4>(rng));
    const Mat4 sig = b.representative();
    EXPECT_LE(max_abs_diff(skew_of_sigma(b).representative(), sig * kGamma1 * sig), 1e-12);
    CliffordElement4 z{oracle::random_matrix<4>(rng)};
    const Mat4 m = compose4(z);
    EXPECT_LE(max_abs_diff(skew_of_general(z).representative(), m * kGamma1 * m.transpose()), 1e-12);
  }
}

TEST(Dirac, DeterminantsMatchCofactorExpansion) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const Mat4 sym = oracle::random_symmetric<4>(rng);
    const double d0 = oracle::laplace_det<4>(sym);
    EXPECT_NEAR(det_sym4(BeamMatrix4::from_matrix(sym)), d0, 1e-11 * std::max(1.0, std::abs(d0)));

    const Mat4 g = oracle::random_matrix<4>(rng);
    const double dg = oracle::laplace_det<4>(g);
    EXPECT_NEAR(det_general4(decompose4(g)), dg, 1e-11 * std::max(1.0, std::abs(dg)));

    const Mat4 anti = g - g.transpose();
    const double da = oracle::laplace_det<4>(anti);
    EXPECT_NEAR(det_antisym4(skew_from_components(decompose4(anti))), da, 1e-11 * std::max(1.0, std::abs(da)));
  }
}

TEST(Dirac, InversesMatchIdentity) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    const Mat4 sym = oracle::random_symmetric<4>(rng);
    EXPECT_LE(max_abs_diff(inv_sym4(BeamMatrix4::from_matrix(sym)) * sym, Mat4::identity()), 1e-8);
    const Mat4 g = oracle::random_matrix<4>(rng);
    EXPECT_LE(max_abs_diff(inv_general4(decompose4(g)) * g, Mat4::identity()), 1e-8);
    const Mat4 anti = g - g.transpose();
    EXPECT_LE(max_abs_diff(inv_antisym4(skew_from_components(decompose4(anti))) * anti, Mat4::identity()), 1e-8);
  }
}

TEST(Dirac, SingularInverseThrows) {
  EXPECT_THROW(inv_sym4(BeamMatrix4{1.0, {1.0, 0, 0}, {}, {}}), Error);
}

TEST(Dirac, EmittancesMatchJacobiOracle) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const BeamMatrix4 b = random_physical_beam4(rng);
    const Emittances4 e = emittances4(b);
    const auto ref = oracle::emittances_by_jacobi<2>(b.representative());
    EXPECT_NEAR(e.eps1, ref[0], 1e-9 * ref[0]);
    EXPECT_NEAR(e.eps2, ref[1], 1e-9 * ref[0]);
    EXPECT_GE(e.eps1, e.eps2);
  }
}

TEST(Dirac, IdentityHasUnitEmittances) {
  const Emittances4 e = emittances4(BeamMatrix4{1.0, {}, {}, {}});
  EXPECT_DOUBLE_EQ(e.eps1, 1.0);
  EXPECT_DOUBLE_EQ(e.eps2, 1.0);
}

TEST(Dirac, PositiveScalarAndEmittancesAreNotEnough) {
  const BeamMatrix4 b = BeamMatrix4::from_matrix(Mat4::diag({3, 3, -1, -1}));
  EXPECT_GT(b.s, 0.0);
  EXPECT_FALSE(is_physical(b));
  try {
    require_physical(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::nonphysical);
  }
}

TEST(Dirac, ElementaryClosedFormsAndInvariants) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    const BeamMatrix4 b = random_physical_beam4(rng);
    const Vec3 e = random_unit_vector(rng);
    const double a = random_angle(rng, 1.0);
    const ElementaryTransform ts[4] = {ElementaryTransform::zeta(e, a), ElementaryTransform::gamma(a),
                                       ElementaryTransform::beta2(e, 0.5 * a), ElementaryTransform::beta3(e, 0.5 * a)};
    for (const auto& tr : ts) {
      const Mat4 r = tr.representative();
      EXPECT_TRUE(is_symplectic(r)) << to_string(tr.kind);
      const BeamMatrix4 out = apply(b, tr);
      const Mat4 expect = r * b.representative() * r.transpose();
      EXPECT_LE(max_abs_diff(out.representative(), expect), 1e-12 * max_abs(expect)) << to_string(tr.kind);
    }
    const double tol = 1e-11 * std::pow(max_abs(b.representative()), 2);
    expect_same(zeta_invariants(b, e), zeta_invariants(apply(b, ts[0]), e), tol);
    expect_same(gamma_invariants(b), gamma_invariants(apply(b, ts[1])), tol);
    expect_same(beta2_invariants(b, e), beta2_invariants(apply(b, ts[2]), e), tol);
    expect_same(beta3_invariants(b, e), beta3_invariants(apply(b, ts[3]), e), tol);
  }
}

TEST(Dirac, ScaleTransformValidation) {
  EXPECT_NO_THROW(ElementaryTransform::scale({2.0, 0.5, 4.0, 0.25}));
  EXPECT_THROW(ElementaryTransform::scale({2.0, 2.0, 1.0, 1.0}), Error);
  EXPECT_THROW(ElementaryTransform::scale({0.0, 1.0, 1.0, 1.0}), Error);
  const BeamMatrix4 b = reference_beam();
  const std::array<double, 4> f{1.3, 1 / 1.3, 0.7, 1 / 0.7};
  const Mat4 r = ElementaryTransform::scale(f).representative();
  EXPECT_TRUE(is_symplectic(r));
  EXPECT_LE(max_abs_diff(apply_scale(b, f).representative(), r * b.representative() * r.transpose()), 1e-12);
}

TEST(Dirac, BoostSelectorsReachTheirGoals) {
  Rng rng(7);
  const BoostGoal goals[] = {BoostGoal::kill_v2_dot_v1, BoostGoal::kill_v3_dot_v1, BoostGoal::kill_v2_dot_v3_via_beta2,
                             BoostGoal::kill_v3_dot_v2_via_beta3};
  for (int t = 0; t < 100; ++t) {
    const BeamMatrix4 b = random_physical_beam4(rng);
    for (BoostGoal g : goals) {
      const BeamMatrix4 out = apply(b, select_boost(b, g));
      EXPECT_NEAR(boost_goal_value(out, g), 0.0, 1e-10 * std::pow(max_abs(b.representative()), 2));
    }
  }
}

TEST(Dirac, SuppressSelectorsRemoveVector) {
  BeamMatrix4 b{3.0, {0.5, 0.1, 0.0}, {0.4, -0.3, 0.2}, {0.1, 0.2, 0.3}};
  const BeamMatrix4 o2 = apply(b, select_boost(b, BoostGoal::suppress_v2));
  EXPECT_LE(norm(o2.v2), 1e-12);
  const BeamMatrix4 o3 = apply(b, select_boost(b, BoostGoal::suppress_v3));
  EXPECT_LE(norm(o3.v3), 1e-12);
  EXPECT_THROW(select_boost(BeamMatrix4{1.0, {}, {2.0, 0, 0}, {}}, BoostGoal::suppress_v2), Error);
}

TEST(Dirac, SelectorsOnNormalFormDoNothing) {
  const BeamMatrix4 n{3.0, {-2.0, 0, 0}, {}, {}};
  EXPECT_EQ(select_boost(n, BoostGoal::kill_v2_dot_v1).angle, 0.0);
  EXPECT_EQ(select_gamma_orthogonalize(n), 0.0);
  EXPECT_EQ(select_align(n, 1).angle, 0.0);
}

TEST(Dirac, AlignAndOrthogonalize) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const BeamMatrix4 b = random_physical_beam4(rng);
    for (int m = 1; m <= 3; ++m) {
      const BeamMatrix4 out = apply(b, select_align(b, m));
      const Vec3& v = out.vec(m);
      const double n = norm(v);
      EXPECT_NEAR(std::abs(v[m - 1]), n, 1e-12 * n);
      EXPECT_GE(v[m - 1] * b.vec(m)[m - 1], 0.0);
    }
    const BeamMatrix4 g = apply_gamma(b, select_gamma_orthogonalize(b));
    EXPECT_NEAR(dot(g.v2, g.v3), 0.0, 1e-12 * std::pow(max_abs(b.representative()), 2));
  }
}

namespace {

struct Recipe {
  const char* name;
  std::function<RecipeResult(const BeamMatrix4&)> run;
  Pattern pattern;
};

std::vector<Recipe> all_recipes() {
  std::vector<Recipe> r;
  for (Pairing p : {Pairing::XX_YY, Pairing::XY_XpYp, Pairing::XYp_XpY})
    r.push_back({"pair", [p](const BeamMatrix4& b) { return decouple_pair(b, p); }, zero_pattern(p)});
  for (Coord c : {Coord::x, Coord::xp, Coord::y, Coord::yp})
    r.push_back({"single", [c](const BeamMatrix4& b) { return decouple_single(b, c); }, zero_pattern(c)});
  for (DiagStrategy s : {DiagStrategy::block_first, DiagStrategy::direct}) {
    r.push_back({"diagonalize", [s](const BeamMatrix4& b) { return diagonalize4(b, s); }, diagonal_pattern()});
    r.push_back({"normalize", [s](const BeamMatrix4& b) { return normalize4(b, s); }, diagonal_pattern()});
  }
  return r;
}

}  // namespace

TEST(Dirac, RecipesReachPatternAndKeepEmittances) {
  Rng rng(9);
  const auto recipes = all_recipes();
  for (int t = 0; t < 50; ++t) {
    const BeamMatrix4 b = random_physical_beam4(rng);
    const Emittances4 e0 = emittances4(b);
    for (const auto& rc : recipes) {
      const RecipeResult r = rc.run(b);
      const Mat4 out = r.beam.representative();
      EXPECT_LE(pattern_residual(out, rc.pattern), 1e-9) << rc.name;
      EXPECT_LE(r.pipeline.symplectic_residual(), 1e-9) << rc.name;
      EXPECT_LE(max_abs_diff(r.pipeline.map * b.representative() * r.pipeline.map.transpose(), out), 1e-9) << rc.name;
      const Emittances4 e1 = emittances4(r.beam);
      EXPECT_NEAR(e1.eps1, e0.eps1, 1e-10) << rc.name;
      EXPECT_NEAR(e1.eps2, e0.eps2, 1e-10) << rc.name;
      ASSERT_EQ(r.stages.size(), r.pipeline.steps.size());
    }
    const RecipeResult n = normalize4(b);
    const Mat4 out = n.beam.representative();
    EXPECT_NEAR(out(0, 0), out(1, 1), 1e-9);
    EXPECT_NEAR(out(2, 2), out(3, 3), 1e-9);
    EXPECT_NEAR(std::max(out(0, 0), out(2, 2)), e0.eps1, 1e-9);
    EXPECT_NEAR(std::min(out(0, 0), out(2, 2)), e0.eps2, 1e-9);
  }
}

TEST(Dirac, RecipesRejectNonphysicalBeams) {
  const BeamMatrix4 b = BeamMatrix4::from_matrix(Mat4::diag({3, 3, -1, -1}));
  EXPECT_THROW(normalize4(b), Error);
  EXPECT_THROW(decouple_pair(b, Pairing::XX_YY), Error);
}

TEST(Dirac, StabilizersPreserveTargetPatterns) {
  Rng rng(10);
  const BeamMatrix4 b = random_physical_beam4(rng);
  auto check = [&](const BeamMatrix4& target, const Pattern& p, const std::vector<Mat4>& gens) {
    ASSERT_LE(pattern_residual(target.representative(), p), 1e-9);
    for (const Mat4& g : gens)
      for (double t : {-0.7, 0.3, 1.1}) {
        const Mat4 r = expm(g * t);
        EXPECT_TRUE(is_symplectic(r));
        EXPECT_LE(pattern_residual(r * target.representative() * r.transpose(), p), 1e-9);
      }
  };
  for (Pairing p : {Pairing::XX_YY, Pairing::XY_XpYp, Pairing::XYp_XpY})
    check(decouple_pair(b, p).beam, zero_pattern(p), stabilizer_generators(p));
  for (Coord c : {Coord::x, Coord::xp, Coord::y, Coord::yp})
    check(decouple_single(b, c).beam, zero_pattern(c), stabilizer_generators(c));
  check(diagonalize4(b, DiagStrategy::direct).beam, diagonal_pattern(), diagonal_stabilizer_generators());
}

TEST(Dirac, InvarianceGroupFixesBeam) {
  Rng rng(11);
  const BeamMatrix4 b = random_physical_beam4(rng);
  const Mat4 n = normalize4(b).pipeline.normalizer();
  for (int t = 0; t < 50; ++t) {
    const Mat4 i = invariance4(n, random_angle(rng, std::numbers::pi), random_angle(rng, std::numbers::pi));
    EXPECT_LE(max_abs_diff(i * b.representative() * i.transpose(), b.representative()), 1e-9);
  }
}

TEST(Dirac, PolarDecomposition) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const Mat3 m = oracle::random_matrix<3>(rng);
    const Polar3 p = polar3(m);
    EXPECT_LE(max_abs_diff(p.o * p.s, m), 1e-10);
    EXPECT_LE(max_abs_diff(p.o * p.o.transpose(), Mat3::identity()), 1e-12);
    EXPECT_NEAR(oracle::laplace_det<3>(p.o), 1.0, 1e-12);
    EXPECT_LE(asymmetry(p.s), 1e-10);
  }
}

TEST(Dirac, AxisAngleRoundTrip) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Vec3 e = random_unit_vector(rng);
    const double psi = random_angle(rng, std::numbers::pi / 2);
    const Mat3 o = rotation_from_axis_angle(e, psi);
    const AxisAngle aa = axis_angle_from_rotation(o);
    EXPECT_GE(aa.psi, 0.0);
    EXPECT_LE(max_abs_diff(rotation_from_axis_angle(aa.e, aa.psi), o), 1e-12);
  }
  const Mat3 q = rotation_from_axis_angle({0, 0, 1}, std::numbers::pi / 4);
  EXPECT_NEAR(q(1, 0), 1.0, 1e-15);  // x goes to y
  const AxisAngle half = axis_angle_from_rotation(Mat3::diag({1, -1, -1}));
  EXPECT_NEAR(half.psi, std::numbers::pi / 2, 1e-15);
  EXPECT_NEAR(std::abs(half.e[0]), 1.0, 1e-15);
  EXPECT_EQ(axis_angle_from_rotation(Mat3::identity()).psi, 0.0);
}

TEST(Dirac, SideMultiplicationMatchesMatrixProducts) {
  std::mt19937_64 rng(14);
  const CliffordElement4 z{oracle::random_matrix<4>(rng)};
  const Mat4 m = compose4(z);
  for (UnitId u : all_units(Algebra::Cl31)) {
    EXPECT_LE(max_abs_diff(compose4(component_side_mul(z, u, Side::left)), unit_rep4(u) * m), 1e-13) << unit_name(u);
    EXPECT_LE(max_abs_diff(compose4(component_side_mul(z, u, Side::right)), m * unit_rep4(u)), 1e-13) << unit_name(u);
  }
}

TEST(Dirac, ComponentRotationsMatchConjugation) {
  std::mt19937_64 rng(15);
  Rng rng2(15);
  for (int t = 0; t < 20; ++t) {
    const CliffordElement4 z{oracle::random_matrix<4>(rng)};
    const Vec3 e = random_unit_vector(rng2);
    const double a = random_angle(rng2, 2.0);
    const Mat4 rz = ElementaryTransform::zeta(e, a).representative();
    EXPECT_LE(max_abs_diff(compose4(zeta_rotate_components(z, e, a)), rz * compose4(z) * rz.transpose()), 1e-12);
    const Mat4 rg = ElementaryTransform::gamma(a).representative();
    EXPECT_LE(max_abs_diff(compose4(gamma_rotate_components(z, a)), rg * compose4(z) * rg.transpose()), 1e-12);
  }
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(j_matrix(k).transpose(), -j_matrix(k));
}

// Reference values are printed with one decimal, so tolerances are loose.
TEST(DiracReference, Emittances) {
  const Emittances4 e = emittances4(reference_beam());
  EXPECT_NEAR(e.eps1, 5.0, 0.3);
  EXPECT_NEAR(e.eps2, 1.0, 0.3);
}

TEST(DiracReference, XXYYSequence) {
  const RecipeResult r = decouple_pair(reference_beam(), Pairing::XX_YY);
  ASSERT_EQ(r.stages.size(), 3u);
  expect_components_near(r.stages[0], Mat4{{4.3, 0, 0, 0, 0, -1.3, -1.9, 0.7, 0, -1.6, 0.6, -0.8, 0, 1.8, -0.9, -2.7}}, 0.15);
  expect_components_near(r.stages[1], Mat4{{3.5, 0, 0, 0, 0, -1.1, -1.6, -0.5, 0, -0.3, 0.5, -1.2, 0, 2.1, -0.7, -0.4}}, 0.15);
  expect_components_near(r.stages[2], Mat4{{3.5, 0, 0, 0, 0, -2.3, 0, 0, 0, 0, 0.6, -1.1, 0, 0, -1.7, -0.7}}, 0.15);
}

TEST(DiracReference, XYSequenceFinalStep) {
  const RecipeResult r = decouple_pair(reference_beam(), Pairing::XY_XpYp);
  expect_components_near(r.beam, Mat4{{4.3, 0, 0, 0, 0, -2.5, 0, 0.6, 0, 0, 2.2, 0, 0, 1.0, 0, -2.7}}, 0.15);
}

TEST(DiracReference, NormalForm) {
  for (DiagStrategy s : {DiagStrategy::block_first, DiagStrategy::direct})
    expect_components_near(normalize4(reference_beam(), s).beam, Mat4{{3, 0, 0, 0, 0, -2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}, 0.3);
}

TEST(DiracReference, SingleCoordinateX) {
  const RecipeResult r = decouple_single(reference_beam(), Coord::x);
  expect_components_near(r.beam, Mat4{{4.4, 0, 0, 0, 0, 2.6, -0.2, -0.8, 0, -0.2, 2.3, 0.4, 0, -0.8, 0.4, 2.8}}, 0.2);
}

TEST(DiracReference, SingleCoordinateVariantsFlipSigns) {
  const Mat4 x = decouple_single(reference_beam(), Coord::x).beam.components().comp;
  const Mat4 xp = decouple_single(reference_beam(), Coord::xp).beam.components().comp;
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(xp(1, i), x(1, i), 1e-9);
  for (int r = 2; r < 4; ++r)
    for (int i = 1; i < 4; ++i) EXPECT_NEAR(xp(r, i), -x(r, i), 1e-9);
}

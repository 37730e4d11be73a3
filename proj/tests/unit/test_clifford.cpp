#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "symplectica/clifford.hpp"
#include "symplectica/errors.hpp"

using namespace symplectica;

namespace {

const IMat2 kI{{1, 0, 0, 1}};
const IMat2 kB1{{1, 0, 0, -1}};
const IMat2 kB2{{0, 1, 1, 0}};
const IMat2 kG{{0, 1, -1, 0}};

// Printed tensor-product table, by component-matrix cell.
struct Entry {
  int sign;
  const IMat2* a;
  const IMat2* b;
};

const Entry kTable[16] = {
    {+1, &kI, &kI},   {+1, &kI, &kG},   {+1, &kG, &kB1},  {+1, &kG, &kB2},
    {-1, &kB1, &kG},  {+1, &kB1, &kI},  {+1, &kB2, &kB2}, {-1, &kB2, &kB1},
    {-1, &kG, &kI},   {-1, &kG, &kG},   {+1, &kI, &kB1},  {+1, &kI, &kB2},
    {-1, &kB2, &kG},  {+1, &kB2, &kI},  {-1, &kB1, &kB2}, {+1, &kB1, &kB1},
};

IMat4 scaled(int s, const IMat4& m) {
  IMat4 out = m;
  for (int& x : out.a) x *= s;
  return out;
}

}  // namespace

TEST(Clifford, Cl20RepresentativesMatchDefinitions) {
  EXPECT_EQ(unit_rep2_int(units::one2), kI);
  EXPECT_EQ(unit_rep2_int(units::beta1), kB1);
  EXPECT_EQ(unit_rep2_int(units::beta2), kB2);
  EXPECT_EQ(unit_rep2_int(units::gamma), kG);
}

TEST(Clifford, Cl31RepresentativesMatchTensorTable) {
  for (int cell = 0; cell < 16; ++cell) {
    const Entry& e = kTable[cell];
    const UnitId u{Algebra::Cl31, static_cast<std::uint8_t>(cell)};
    EXPECT_EQ(unit_rep4_int(u), scaled(e.sign, oracle::kron(*e.a, *e.b))) << unit_name(u);
  }
}

TEST(Clifford, Gamma1IsBlockDiagonalSymplecticForm) {
  const IMat4 expect{{0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0}};
  EXPECT_EQ(unit_rep4_int(units::gamma_(1)), expect);
}

TEST(Clifford, AllProductsAreSignedUnitsExactly) {
  for (Algebra alg : {Algebra::Cl20, Algebra::Cl31}) {
    for (UnitId a : all_units(alg))
      for (UnitId b : all_units(alg)) {
        const SignedUnit p = mul_units(a, b);
        ASSERT_TRUE(p.sign == 1 || p.sign == -1);
        ASSERT_EQ(p.unit.algebra, alg);
        if (alg == Algebra::Cl20) {
          IMat2 lhs = unit_rep2_int(a) * unit_rep2_int(b);
          IMat2 rhs = unit_rep2_int(p.unit);
          for (int& x : rhs.a) x *= p.sign;
          EXPECT_EQ(lhs, rhs) << unit_name(a) << "*" << unit_name(b);
        } else {
          EXPECT_EQ(unit_rep4_int(a) * unit_rep4_int(b), scaled(p.sign, unit_rep4_int(p.unit)))
              << unit_name(a) << "*" << unit_name(b);
        }
      }
  }
}

TEST(Clifford, PrintedProducts) {
  EXPECT_EQ(mul_units(units::beta1, units::beta2), (SignedUnit{1, units::gamma}));
  EXPECT_EQ(mul_units(units::gamma, units::gamma), (SignedUnit{-1, units::one2}));
  for (int k = 1; k <= 3; ++k)
    EXPECT_EQ(mul_units(units::beta(2, k), units::gamma_(1)), (SignedUnit{1, units::beta(3, k)}));
}

TEST(Clifford, SquaresAndSymmetryAgree) {
  int complex_count = 0, bireal_count = 0;
  for (UnitId u : all_units(Algebra::Cl31)) {
    const SignedUnit sq = mul_units(u, u);
    EXPECT_EQ(sq.unit, units::one4);
    const IMat4& r = unit_rep4_int(u);
    if (is_complex(u)) {
      ++complex_count;
      EXPECT_EQ(sq.sign, -1);
      EXPECT_EQ(r.transpose(), scaled(-1, r));
    } else {
      EXPECT_EQ(sq.sign, 1);
      EXPECT_EQ(r.transpose(), r);
      if (u != units::one4) {
        EXPECT_TRUE(is_bireal(u));
        EXPECT_EQ(r.trace(), 0);
        ++bireal_count;
      }
    }
  }
  EXPECT_EQ(complex_count, 6);
  EXPECT_EQ(bireal_count, 9);
}

TEST(Clifford, RepresentativesAreTraceOrthogonal) {
  const auto us = all_units(Algebra::Cl31);
  for (UnitId a : us)
    for (UnitId b : us) EXPECT_EQ((unit_rep4_int(a).transpose() * unit_rep4_int(b)).trace(), a == b ? 4 : 0);
}

TEST(Clifford, BaumgartenMapIsSignedBijection) {
  std::set<int> seen;
  for (int n = 0; n < 16; ++n) {
    const SignedUnit s = baumgarten_map(n);
    EXPECT_TRUE(s.sign == 1 || s.sign == -1);
    EXPECT_EQ(s.unit.algebra, Algebra::Cl31);
    seen.insert(s.unit.index);
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_EQ(baumgarten_map(0), (SignedUnit{1, units::gamma_(1)}));
  EXPECT_EQ(baumgarten_map(3), (SignedUnit{-1, units::beta(2, 2)}));
  EXPECT_EQ(baumgarten_map(14), (SignedUnit{-1, units::gamma_(3)}));
  EXPECT_EQ(baumgarten_map(15), (SignedUnit{1, units::one4}));
  EXPECT_THROW(baumgarten_map(16), Error);
}

TEST(Clifford, MixedAlgebraProductIsRejected) {
  try {
    mul_units(units::beta1, units::zeta(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
  }
}

TEST(Clifford, UnitNames) {
  EXPECT_EQ(unit_name(units::zeta(1)), "zeta1");
  EXPECT_EQ(unit_name(units::gamma_(2)), "gamma2");
  EXPECT_EQ(unit_name(units::beta(2, 1)), "beta2_1");
}

TEST(Clifford, Compose2MatchesPrintedLayout) {
  const CliffordElement2 z{1.5, -0.25, 2.0, 0.75};
  const Mat2 m = compose2(z);
  EXPECT_DOUBLE_EQ(m(0, 0), 1.25);
  EXPECT_DOUBLE_EQ(m(0, 1), 2.75);
  EXPECT_DOUBLE_EQ(m(1, 0), 1.25);
  EXPECT_DOUBLE_EQ(m(1, 1), 1.75);
  const CliffordElement2 back = decompose2(m);
  EXPECT_DOUBLE_EQ(back.z0, z.z0);
  EXPECT_DOUBLE_EQ(back.z1, z.z1);
  EXPECT_DOUBLE_EQ(back.z2, z.z2);
  EXPECT_DOUBLE_EQ(back.z3, z.z3);
}

TEST(Clifford, Decompose4RoundTripAndTraceFormula) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 m = oracle::random_matrix<4>(rng);
    const CliffordElement4 z = decompose4(m);
    EXPECT_LE(max_abs_diff(compose4(z), m), 1e-14);
    for (UnitId u : all_units(Algebra::Cl31))
      EXPECT_NEAR(z.coeff(u), 0.25 * (unit_rep4(u).transpose() * m).trace(), 1e-14);
  }
}

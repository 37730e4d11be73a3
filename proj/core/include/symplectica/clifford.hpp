#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symplectica/matrix.hpp"

namespace symplectica {

enum class Algebra : std::uint8_t { Cl20, Cl31 };

using IMat2 = Matrix<int, 2, 2>;
using IMat4 = Matrix<int, 4, 4>;

// A basis unit. For Cl20 the index is 0..3 for {1, beta1, beta2, gamma}.
// For Cl31 the index is the cell kappa*4 + lambda of the component matrix:
// (0,0) is 1, (k,0) is zeta_k, (0,m) is gamma^m and (k,m) is beta^m_k.
struct UnitId {
  Algebra algebra = Algebra::Cl31;
  std::uint8_t index = 0;

  friend constexpr bool operator==(const UnitId&, const UnitId&) = default;
};

struct SignedUnit {
  int sign = 1;
  UnitId unit;

  friend constexpr bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

namespace units {
inline constexpr UnitId one2{Algebra::Cl20, 0};
inline constexpr UnitId beta1{Algebra::Cl20, 1};
inline constexpr UnitId beta2{Algebra::Cl20, 2};
inline constexpr UnitId gamma{Algebra::Cl20, 3};

inline constexpr UnitId one4{Algebra::Cl31, 0};
constexpr UnitId cell(int kappa, int lambda) {
  return UnitId{Algebra::Cl31, static_cast<std::uint8_t>(kappa * 4 + lambda)};
}
// k, m in 1..3
constexpr UnitId zeta(int k) { return cell(k, 0); }
constexpr UnitId gamma_(int m) { return cell(0, m); }
constexpr UnitId beta(int m, int k) { return cell(k, m); }
}  // namespace units

constexpr int row_of(UnitId u) { return u.index / 4; }
constexpr int col_of(UnitId u) { return u.index % 4; }

std::vector<UnitId> all_units(Algebra a);
std::string unit_name(UnitId u);

// Units squaring to -1 (antisymmetric representatives).
bool is_complex(UnitId u);
// Units squaring to +1 other than the identity (symmetric traceless representatives).
bool is_bireal(UnitId u);

const IMat2& unit_rep2_int(UnitId u);
const IMat4& unit_rep4_int(UnitId u);
Mat2 unit_rep2(UnitId u);
Mat4 unit_rep4(UnitId u);

SignedUnit mul_units(UnitId a, UnitId b);

// Signed unit named gamma_n in the alternative 0..15 numbering.
SignedUnit baumgarten_map(int n);

struct CliffordElement2 {
  double z0 = 0, z1 = 0, z2 = 0, z3 = 0;  // on 1, beta1, beta2, gamma

  friend constexpr bool operator==(const CliffordElement2&, const CliffordElement2&) = default;
};

// Coefficients Z_kappa^lambda laid out as in the component matrix.
struct CliffordElement4 {
  Mat4 comp{};

  double& operator()(int kappa, int lambda) { return comp(kappa, lambda); }
  double operator()(int kappa, int lambda) const { return comp(kappa, lambda); }
  double coeff(UnitId u) const { return comp.a[u.index]; }

  friend constexpr bool operator==(const CliffordElement4&, const CliffordElement4&) = default;
};

CliffordElement2 decompose2(const Mat2& m);
Mat2 compose2(const CliffordElement2& z);
CliffordElement4 decompose4(const Mat4& m);
Mat4 compose4(const CliffordElement4& z);

}  // namespace symplectica

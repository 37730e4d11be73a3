#include "symplectica/clifford.hpp"

#include <array>

#include "symplectica/errors.hpp"

namespace symplectica {

namespace {

enum Pauli { I = 0, B1 = 1, B2 = 2, G = 3 };

constexpr std::array<IMat2, 4> kPauli = {
    IMat2{{1, 0, 0, 1}},
    IMat2{{1, 0, 0, -1}},
    IMat2{{0, 1, 1, 0}},
    IMat2{{0, 1, -1, 0}},
};

struct Kron {
  int sign;
  Pauli left;
  Pauli right;
};

// Cl31 units as signed Kronecker products of real Pauli matrices, by cell.
constexpr std::array<Kron, 16> kDiracTable = {{
    {+1, I, I}, {+1, I, G}, {+1, G, B1}, {+1, G, B2},      // 1, gamma^1..3
    {-1, B1, G}, {+1, B1, I}, {+1, B2, B2}, {-1, B2, B1},  // zeta_1, beta^1_1, beta^2_1, beta^3_1
    {-1, G, I}, {-1, G, G}, {+1, I, B1}, {+1, I, B2},      // zeta_2, beta^1_2, beta^2_2, beta^3_2
    {-1, B2, G}, {+1, B2, I}, {-1, B1, B2}, {+1, B1, B1},  // zeta_3, beta^1_3, beta^2_3, beta^3_3
}};

constexpr IMat4 kron(const Kron& k) {
  IMat4 out{};
  const IMat2& a = kPauli[k.left];
  const IMat2& b = kPauli[k.right];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) out(2 * i + p, 2 * j + q) = k.sign * a(i, j) * b(p, q);
  return out;
}

constexpr std::array<IMat4, 16> build_dirac() {
  std::array<IMat4, 16> out{};
  for (std::size_t n = 0; n < 16; ++n) out[n] = kron(kDiracTable[n]);
  return out;
}

constexpr std::array<IMat4, 16> kDirac = build_dirac();

constexpr std::array<SignedUnit, 16> kBaumgarten = {{
    {+1, units::gamma_(1)},
    {+1, units::beta(2, 3)},
    {+1, units::beta(2, 1)},
    {-1, units::beta(2, 2)},
    {-1, units::beta(3, 3)},
    {-1, units::beta(3, 1)},
    {+1, units::beta(3, 2)},
    {-1, units::zeta(3)},
    {-1, units::zeta(1)},
    {+1, units::zeta(2)},
    {+1, units::gamma_(2)},
    {-1, units::beta(1, 3)},
    {-1, units::beta(1, 1)},
    {+1, units::beta(1, 2)},
    {-1, units::gamma_(3)},
    {+1, units::one4},
}};

const IMat2& rep_int(UnitId u, const IMat2*) { return unit_rep2_int(u); }
const IMat4& rep_int(UnitId u, const IMat4*) { return unit_rep4_int(u); }

template <class IM>
SignedUnit find_signed(const IM& p, Algebra alg) {
  for (const UnitId& c : all_units(alg)) {
    const IM& r = rep_int(c, static_cast<const IM*>(nullptr));
    if (p == r) return {+1, c};
    if (p == -r) return {-1, c};
  }
  throw Error(ErrorKind::invalid_argument, "product is not a signed unit");
}

}  // namespace

std::vector<UnitId> all_units(Algebra a) {
  std::vector<UnitId> out;
  const int n = a == Algebra::Cl20 ? 4 : 16;
  for (int i = 0; i < n; ++i) out.push_back(UnitId{a, static_cast<std::uint8_t>(i)});
  return out;
}

std::string unit_name(UnitId u) {
  if (u.algebra == Algebra::Cl20) {
    static const char* names[] = {"1", "beta1", "beta2", "gamma"};
    return names[u.index & 3];
  }
  const int k = row_of(u), m = col_of(u);
  if (k == 0 && m == 0) return "1";
  if (m == 0) return "zeta" + std::to_string(k);
  if (k == 0) return "gamma" + std::to_string(m);
  return "beta" + std::to_string(m) + "_" + std::to_string(k);
}

bool is_complex(UnitId u) {
  if (u.algebra == Algebra::Cl20) return u.index == 3;
  return u.index != 0 && (row_of(u) == 0 || col_of(u) == 0);
}

bool is_bireal(UnitId u) { return u.index != 0 && !is_complex(u); }

const IMat2& unit_rep2_int(UnitId u) {
  if (u.algebra != Algebra::Cl20 || u.index > 3) throw Error(ErrorKind::invalid_argument, "not a Cl20 unit");
  return kPauli[u.index];
}

const IMat4& unit_rep4_int(UnitId u) {
  if (u.algebra != Algebra::Cl31 || u.index > 15) throw Error(ErrorKind::invalid_argument, "not a Cl31 unit");
  return kDirac[u.index];
}

Mat2 unit_rep2(UnitId u) {
  const IMat2& r = unit_rep2_int(u);
  Mat2 out;
  for (int k = 0; k < 4; ++k) out.a[k] = r.a[k];
  return out;
}

Mat4 unit_rep4(UnitId u) {
  const IMat4& r = unit_rep4_int(u);
  Mat4 out;
  for (int k = 0; k < 16; ++k) out.a[k] = r.a[k];
  return out;
}

SignedUnit mul_units(UnitId a, UnitId b) {
  if (a.algebra != b.algebra) throw Error(ErrorKind::invalid_argument, "units from different algebras");
  if (a.algebra == Algebra::Cl20) return find_signed(unit_rep2_int(a) * unit_rep2_int(b), a.algebra);
  return find_signed(unit_rep4_int(a) * unit_rep4_int(b), a.algebra);
}

SignedUnit baumgarten_map(int n) {
  if (n < 0 || n > 15) throw Error(ErrorKind::invalid_argument, "index must be in 0..15");
  return kBaumgarten[n];
}

CliffordElement2 decompose2(const Mat2& m) {
  double c[4];
  for (int u = 0; u < 4; ++u) {
    const IMat2& r = kPauli[u];
    double s = 0;
    for (int k = 0; k < 4; ++k) s += r.a[k] * m.a[k];
    c[u] = 0.5 * s;
  }
  return {c[0], c[1], c[2], c[3]};
}

Mat2 compose2(const CliffordElement2& z) {
  return Mat2{{z.z0 + z.z1, z.z2 + z.z3, z.z2 - z.z3, z.z0 - z.z1}};
}

CliffordElement4 decompose4(const Mat4& m) {
  CliffordElement4 z;
  for (int u = 0; u < 16; ++u) {
    double s = 0;
    for (int k = 0; k < 16; ++k) s += kDirac[u].a[k] * m.a[k];
    z.comp.a[u] = 0.25 * s;
  }
  return z;
}

Mat4 compose4(const CliffordElement4& z) {
  Mat4 out{};
  for (int u = 0; u < 16; ++u) {
    const double c = z.comp.a[u];
    if (c == 0.0) continue;
    for (int k = 0; k < 16; ++k) out.a[k] += c * kDirac[u].a[k];
  }
  return out;
}

}  // namespace symplectica

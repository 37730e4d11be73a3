#include "symplectica/pauli.hpp"

#include <cmath>

#include "angles.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/smallmat.hpp"

namespace symplectica {

namespace {

void check_axis(const Vec2& e) {
  if (std::abs(std::hypot(e[0], e[1]) - 1.0) > 1e-12) throw Error(ErrorKind::invalid_argument, "boost axis must be a unit vector");
}

}  // namespace

BeamMatrix2 BeamMatrix2::from_matrix(const Mat2& m) {
  const CliffordElement2 z = decompose2(m);
  return {z.z0, {z.z1, z.z2}};
}

Mat2 BeamMatrix2::representative() const { return compose2({sigma0, v[0], v[1], 0.0}); }

Mat2 PauliTransform::representative() const {
  if (kind == PauliKind::rotation) {
    const double c = std::cos(angle), s = std::sin(angle);
    return Mat2{{c, s, -s, c}};
  }
  const double c = std::cosh(angle), s = std::sinh(angle);
  return compose2({c, axis[0] * s, axis[1] * s, 0.0});
}

void PauliPipeline::push(const PauliTransform& t) {
  steps.push_back(t);
  map = t.representative() * map;
}

Mat2 PauliPipeline::normalizer() const { return symplectic_inverse(map); }

double emittance2(const BeamMatrix2& s) {
  const double d = s.sigma0 * s.sigma0 - s.v[0] * s.v[0] - s.v[1] * s.v[1];
  if (d < -1e-14 * s.sigma0 * s.sigma0 || s.sigma0 < 0) throw Error(ErrorKind::nonphysical, "negative emittance discriminant");
  return std::sqrt(std::max(d, 0.0));
}

BeamMatrix2 apply_boost2(const BeamMatrix2& s, const Vec2& e, double chi) {
  check_axis(e);
  const double ch = std::cosh(2 * chi), sh = std::sinh(2 * chi);
  const double par = s.v[0] * e[0] + s.v[1] * e[1];
  const double perp = -s.v[0] * e[1] + s.v[1] * e[0];
  const double par2 = ch * par + sh * s.sigma0;
  return {ch * s.sigma0 + sh * par, {par2 * e[0] - perp * e[1], par2 * e[1] + perp * e[0]}};
}

BeamMatrix2 apply_rotation2(const BeamMatrix2& s, double psi) {
  const double c = std::cos(2 * psi), sn = std::sin(2 * psi);
  return {s.sigma0, {c * s.v[0] + sn * s.v[1], c * s.v[1] - sn * s.v[0]}};
}

BeamMatrix2 apply2(const BeamMatrix2& s, const PauliTransform& t) {
  return t.kind == PauliKind::boost ? apply_boost2(s, t.axis, t.angle) : apply_rotation2(s, t.angle);
}

std::pair<PauliTransform, BeamMatrix2> diagonalize2(const BeamMatrix2& s) {
  PauliTransform t{PauliKind::rotation, {1.0, 0.0}, 0.5 * std::atan2(s.v[1], s.v[0])};
  return {t, apply_rotation2(s, t.angle)};
}

std::pair<PauliPipeline, BeamMatrix2> normalize2(const BeamMatrix2& s, Normalize2Strategy strategy) {
  const double eps = emittance2(s);
  if (!(eps > 0.0)) throw Error(ErrorKind::nonphysical, "zero emittance");
  PauliPipeline p;
  BeamMatrix2 cur = s;
  PauliTransform boost{PauliKind::boost, {1.0, 0.0}, 0.0};
  if (strategy == Normalize2Strategy::two_step) {
    auto [rot, diag] = diagonalize2(s);
    p.push(rot);
    cur = diag;
    boost.angle = detail::half_atanh(-cur.v[0] / cur.sigma0);
  } else {
    const double len = std::hypot(s.v[0], s.v[1]);
    if (len > 0.0) boost.axis = {s.v[0] / len, s.v[1] / len};
    boost.angle = detail::half_atanh(-len / s.sigma0);
  }
  p.push(boost);
  cur = apply2(cur, boost);
  return {p, cur};
}

Mat2 invariance2(const Mat2& n, double psi) {
  const PauliTransform rot{PauliKind::rotation, {1.0, 0.0}, psi};
  return n * rot.representative() * symplectic_inverse(n);
}

CockleSpectrum cockle_det_eig_inv(const CliffordElement2& z) {
  CockleSpectrum out;
  out.det = z.z0 * z.z0 - z.z1 * z.z1 - z.z2 * z.z2 + z.z3 * z.z3;
  const std::complex<double> root = std::sqrt(std::complex<double>(z.z1 * z.z1 + z.z2 * z.z2 - z.z3 * z.z3, 0.0));
  out.lambda_plus = z.z0 + root;
  out.lambda_minus = z.z0 - root;
  const double scale = z.z0 * z.z0 + z.z1 * z.z1 + z.z2 * z.z2 + z.z3 * z.z3;
  if (std::abs(out.det) <= 1e-14 * scale) throw Error(ErrorKind::singular_matrix, "singular Cockle quaternion");
  out.inverse = {z.z0 / out.det, -z.z1 / out.det, -z.z2 / out.det, -z.z3 / out.det};
  return out;
}

}  // namespace symplectica

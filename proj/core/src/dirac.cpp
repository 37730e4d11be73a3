#include "symplectica/dirac.hpp"

#include <cmath>
#include <numbers>

#include "angles.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/smallmat.hpp"

namespace symplectica {

namespace {

constexpr Mat4 kGamma1 = symplectic_form<4>();

void check_axis(const Vec3& e) {
  if (std::abs(norm(e) - 1.0) > 1e-12) throw Error(ErrorKind::invalid_argument, "axis must be a unit vector");
}

// Natural size of quadratic quantities such as v2 x v3 - s v1.
double quad_scale(const BeamMatrix4& b) {
  const double q = b.s * b.s + dot(b.v1, b.v1) + dot(b.v2, b.v2) + dot(b.v3, b.v3);
  return q > 0.0 ? q : 1.0;
}

double lin_scale(const BeamMatrix4& b) { return std::sqrt(quad_scale(b)); }

Mat4 rep_sum(double c0, const Vec3& e, double c1, int col_or_row, bool zeta_row) {
  Mat4 m = Mat4::identity() * c0;
  for (int k = 1; k <= 3; ++k) {
    const UnitId u = zeta_row ? units::zeta(k) : units::beta(col_or_row, k);
    m += unit_rep4(u) * (e[k - 1] * c1);
  }
  return m;
}

Vec3 parallel_part(const Vec3& e, const Vec3& v) { return dot(e, v) * e; }

void record(RecipeResult& r, const ElementaryTransform& t) {
  r.pipeline.push(t);
  r.beam = apply(r.beam, t);
  r.stages.push_back(r.beam);
}

}  // namespace

BeamMatrix4 BeamMatrix4::from_components(const CliffordElement4& z) {
  BeamMatrix4 b;
  b.s = z(0, 0);
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 3; ++k) b.vec(m)[k - 1] = z(k, m);
  return b;
}

BeamMatrix4 BeamMatrix4::from_matrix(const Mat4& m) { return from_components(decompose4(m)); }

CliffordElement4 BeamMatrix4::components() const {
  CliffordElement4 z;
  z(0, 0) = s;
  for (int m = 1; m <= 3; ++m)
    for (int k = 1; k <= 3; ++k) z(k, m) = vec(m)[k - 1];
  return z;
}

Mat4 BeamMatrix4::representative() const { return compose4(components()); }

CliffordElement4 SkewA::components() const {
  CliffordElement4 z;
  z(0, 1) = a10;
  z(0, 2) = a20;
  z(0, 3) = a30;
  for (int k = 1; k <= 3; ++k) z(k, 0) = a0[k - 1];
  return z;
}

Mat4 SkewA::representative() const { return compose4(components()); }

double SkewA::bracket() const { return a10 * a10 + a20 * a20 + a30 * a30 - dot(a0, a0); }

SkewA skew_of_sigma(const BeamMatrix4& b) {
  SkewA a;
  a.a10 = b.s * b.s + dot(b.v1, b.v1) - dot(b.v2, b.v2) - dot(b.v3, b.v3);
  a.a20 = 2 * dot(b.v2, b.v1);
  a.a30 = 2 * dot(b.v3, b.v1);
  a.a0 = 2.0 * (cross(b.v2, b.v3) - b.s * b.v1);
  return a;
}

SkewA skew_of_general(const CliffordElement4& z) {
  auto col_dot = [&](int l, int m) {
    double d = 0;
    for (int mu = 0; mu < 4; ++mu) d += z(mu, l) * z(mu, m);
    return d;
  };
  auto vec = [&](int m) { return Vec3{z(1, m), z(2, m), z(3, m)}; };
  SkewA a;
  a.a10 = col_dot(0, 0) + col_dot(1, 1) - col_dot(2, 2) - col_dot(3, 3);
  a.a20 = 2 * (col_dot(2, 1) - col_dot(0, 3));
  a.a30 = 2 * (col_dot(0, 2) + col_dot(3, 1));
  a.a0 = 2.0 * (z(0, 1) * vec(0) - z(0, 0) * vec(1) + cross(vec(0), vec(1)) + z(0, 3) * vec(2) -
                z(0, 2) * vec(3) + cross(vec(2), vec(3)));
  return a;
}

SkewA skew_from_components(const CliffordElement4& z) {
  SkewA a;
  a.a10 = z(0, 1);
  a.a20 = z(0, 2);
  a.a30 = z(0, 3);
  a.a0 = {z(1, 0), z(2, 0), z(3, 0)};
  return a;
}

double det_sym4(const BeamMatrix4& s) { return skew_of_sigma(s).bracket(); }

double det_antisym4(const SkewA& a) {
  const double b = a.bracket();
  return b * b;
}

double det_general4(const CliffordElement4& z) { return skew_of_general(z).bracket(); }

Mat4 inv_antisym4(const SkewA& a) {
  const double b = a.bracket();
  const double scale = a.a10 * a.a10 + a.a20 * a.a20 + a.a30 * a.a30 + dot(a.a0, a.a0);
  if (!(std::abs(b) > 1e-14 * scale)) throw Error(ErrorKind::singular_matrix, "antisymmetric matrix is singular");
  SkewA inv;
  inv.a10 = -a.a10 / b;
  inv.a20 = -a.a20 / b;
  inv.a30 = -a.a30 / b;
  inv.a0 = (1.0 / b) * a.a0;
  return inv.representative();
}

Mat4 inv_sym4(const BeamMatrix4& s) { return kGamma1 * s.representative() * inv_antisym4(skew_of_sigma(s)); }

Mat4 inv_general4(const CliffordElement4& z) {
  return kGamma1 * compose4(z).transpose() * inv_antisym4(skew_of_general(z));
}

Emittances4 emittances4(const BeamMatrix4& s) {
  const SkewA a = skew_of_sigma(s);
  double rad = dot(a.a0, a.a0) - a.a20 * a.a20 - a.a30 * a.a30;
  if (rad < -1e-12 * quad_scale(s) * quad_scale(s)) throw Error(ErrorKind::nonphysical, "complex emittances");
  rad = std::sqrt(std::max(rad, 0.0));
  const double e1 = a.a10 + rad, e2 = a.a10 - rad;
  if (!(e2 > 0.0)) throw Error(ErrorKind::nonphysical, "non-positive squared emittance");
  return {std::sqrt(e1), std::sqrt(e2)};
}

bool is_physical(const BeamMatrix4& s) {
  if (!is_positive_definite(s.representative())) return false;
  try {
    emittances4(s);
  } catch (const Error&) {
    return false;
  }
  return true;
}

void require_physical(const BeamMatrix4& s) {
  if (!is_positive_definite(s.representative())) throw Error(ErrorKind::nonphysical, "beam matrix is not positive definite");
  emittances4(s);
}

const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::zeta_rot: return "zeta_rot";
    case TransformKind::gamma_rot: return "gamma_rot";
    case TransformKind::beta2_boost: return "beta2_boost";
    case TransformKind::beta3_boost: return "beta3_boost";
    case TransformKind::scale: return "scale";
  }
  return "unknown";
}

ElementaryTransform ElementaryTransform::zeta(const Vec3& e, double psi) {
  check_axis(e);
  return {TransformKind::zeta_rot, e, psi};
}

ElementaryTransform ElementaryTransform::gamma(double phi) { return {TransformKind::gamma_rot, {1.0, 0.0, 0.0}, phi}; }

ElementaryTransform ElementaryTransform::beta2(const Vec3& e, double chi) {
  check_axis(e);
  return {TransformKind::beta2_boost, e, chi};
}

ElementaryTransform ElementaryTransform::beta3(const Vec3& e, double chi) {
  check_axis(e);
  return {TransformKind::beta3_boost, e, chi};
}

ElementaryTransform ElementaryTransform::scale(const std::array<double, 4>& f) {
  for (double x : f)
    if (!(x > 0.0)) throw Error(ErrorKind::invalid_argument, "scale factors must be positive");
  if (std::abs(f[0] * f[1] - 1.0) > 1e-12 || std::abs(f[2] * f[3] - 1.0) > 1e-12)
    throw Error(ErrorKind::invalid_argument, "scale factors must pair as (a, 1/a, b, 1/b)");
  ElementaryTransform t{TransformKind::scale, {1.0, 0.0, 0.0}, 0.0};
  t.factors = f;
  return t;
}

Mat4 ElementaryTransform::representative() const {
  switch (kind) {
    case TransformKind::zeta_rot: return rep_sum(std::cos(angle), axis, std::sin(angle), 0, true);
    case TransformKind::gamma_rot: return Mat4::identity() * std::cos(angle) + kGamma1 * std::sin(angle);
    case TransformKind::beta2_boost: return rep_sum(std::cosh(angle), axis, std::sinh(angle), 2, false);
    case TransformKind::beta3_boost: return rep_sum(std::cosh(angle), axis, std::sinh(angle), 3, false);
    case TransformKind::scale: return Mat4::diag(factors);
  }
  return Mat4::identity();
}

BeamMatrix4 apply_zeta(const BeamMatrix4& s, const Vec3& e, double psi) {
  check_axis(e);
  const double c = std::cos(2 * psi), sn = std::sin(2 * psi);
  auto rot = [&](const Vec3& v) {
    const Vec3 par = parallel_part(e, v);
    return par + c * (v - par) - sn * cross(e, v);
  };
  return {s.s, rot(s.v1), rot(s.v2), rot(s.v3)};
}

BeamMatrix4 apply_gamma(const BeamMatrix4& s, double phi) {
  const double c = std::cos(2 * phi), sn = std::sin(2 * phi);
  return {s.s, s.v1, c * s.v2 + sn * s.v3, c * s.v3 - sn * s.v2};
}

BeamMatrix4 apply_beta2(const BeamMatrix4& s, const Vec3& e, double chi) {
  check_axis(e);
  const double ch = std::cosh(2 * chi), sh = std::sinh(2 * chi);
  const double p1 = dot(e, s.v1), p2 = dot(e, s.v2), p3 = dot(e, s.v3);
  BeamMatrix4 out;
  out.s = ch * s.s + sh * p2;
  out.v1 = p1 * e + sh * cross(e, s.v3) + ch * (s.v1 - p1 * e);
  out.v2 = (sh * s.s + ch * p2) * e + (s.v2 - p2 * e);
  out.v3 = p3 * e + ch * (s.v3 - p3 * e) - sh * cross(e, s.v1);
  return out;
}

BeamMatrix4 apply_beta3(const BeamMatrix4& s, const Vec3& e, double chi) {
  check_axis(e);
  const double ch = std::cosh(2 * chi), sh = std::sinh(2 * chi);
  const double p1 = dot(e, s.v1), p2 = dot(e, s.v2), p3 = dot(e, s.v3);
  BeamMatrix4 out;
  out.s = ch * s.s + sh * p3;
  out.v1 = p1 * e - sh * cross(e, s.v2) + ch * (s.v1 - p1 * e);
  out.v2 = p2 * e + ch * (s.v2 - p2 * e) + sh * cross(e, s.v1);
  out.v3 = (sh * s.s + ch * p3) * e + (s.v3 - p3 * e);
  return out;
}

BeamMatrix4 apply_scale(const BeamMatrix4& s, const std::array<double, 4>& f) {
  const Mat4 r = Mat4::diag(f);
  return BeamMatrix4::from_matrix(r * s.representative() * r);
}

BeamMatrix4 apply(const BeamMatrix4& s, const ElementaryTransform& t) {
  switch (t.kind) {
    case TransformKind::zeta_rot: return apply_zeta(s, t.axis, t.angle);
    case TransformKind::gamma_rot: return apply_gamma(s, t.angle);
    case TransformKind::beta2_boost: return apply_beta2(s, t.axis, t.angle);
    case TransformKind::beta3_boost: return apply_beta3(s, t.axis, t.angle);
    case TransformKind::scale: return apply_scale(s, t.factors);
  }
  return s;
}

void TransformPipeline::push(const ElementaryTransform& t) {
  steps.push_back(t);
  map = t.representative() * map;
}

Mat4 TransformPipeline::normalizer() const { return symplectic_inverse(map); }

double TransformPipeline::symplectic_residual() const { return symplectica::symplectic_residual(map); }

double boost_goal_value(const BeamMatrix4& s, BoostGoal goal) {
  switch (goal) {
    case BoostGoal::suppress_v2: return norm(s.v2);
    case BoostGoal::suppress_v3: return norm(s.v3);
    case BoostGoal::kill_v2_dot_v1: return dot(s.v2, s.v1);
    case BoostGoal::kill_v3_dot_v1: return dot(s.v3, s.v1);
    case BoostGoal::kill_v2_dot_v3_via_beta2:
    case BoostGoal::kill_v3_dot_v2_via_beta3: return dot(s.v2, s.v3);
  }
  return 0.0;
}

ElementaryTransform select_boost(const BeamMatrix4& s, BoostGoal goal) {
  bool beta2 = true;
  Vec3 w{};
  double t = 0;
  const double goal_value = boost_goal_value(s, goal);
  switch (goal) {
    case BoostGoal::suppress_v2:
    case BoostGoal::suppress_v3: {
      beta2 = goal == BoostGoal::suppress_v2;
      const Vec3& v = beta2 ? s.v2 : s.v3;
      if (goal_value <= 1e-12 * lin_scale(s)) {
        return beta2 ? ElementaryTransform::beta2({1.0, 0.0, 0.0}, 0.0) : ElementaryTransform::beta3({1.0, 0.0, 0.0}, 0.0);
      }
      const double chi = detail::half_atanh(-goal_value / s.s);
      const Vec3 e = (1.0 / goal_value) * v;
      return beta2 ? ElementaryTransform::beta2(e, chi) : ElementaryTransform::beta3(e, chi);
    }
    case BoostGoal::kill_v2_dot_v1:
      w = cross(s.v2, s.v3) - s.s * s.v1;
      break;
    case BoostGoal::kill_v3_dot_v1:
      beta2 = false;
      w = cross(s.v2, s.v3) - s.s * s.v1;
      break;
    case BoostGoal::kill_v2_dot_v3_via_beta2:
      w = cross(s.v1, s.v2) - s.s * s.v3;
      break;
    case BoostGoal::kill_v3_dot_v2_via_beta3:
      beta2 = false;
      w = cross(s.v3, s.v1) - s.s * s.v2;
      break;
  }
  const double wn = norm(w);
  const double tol = 1e-12 * quad_scale(s);
  Vec3 e{1.0, 0.0, 0.0};
  if (wn <= tol) {
    if (std::abs(goal_value) > tol) throw Error(ErrorKind::degenerate_direction, "boost direction is undefined");
  } else {
    e = (1.0 / wn) * w;
    t = goal_value / wn;
  }
  const double chi = detail::half_atanh(t);
  return beta2 ? ElementaryTransform::beta2(e, chi) : ElementaryTransform::beta3(e, chi);
}

double select_gamma_orthogonalize(const BeamMatrix4& s) {
  const double num = 2 * dot(s.v2, s.v3);
  const double den = dot(s.v2, s.v2) - dot(s.v3, s.v3);
  if (std::abs(num) <= 1e-15 * quad_scale(s)) return 0.0;
  return 0.25 * std::atan2(num, den);
}

ElementaryTransform select_align(const BeamMatrix4& s, int m) {
  const Vec3& v = s.vec(m);
  Vec3 axis{};
  axis[m - 1] = 1.0;
  const Vec3 c = cross(v, axis);
  const double n = norm(c);
  if (n <= 1e-15 * lin_scale(s)) return ElementaryTransform::zeta({1.0, 0.0, 0.0}, 0.0);
  const double vm = v[m - 1];
  const double two_psi = vm == 0.0 ? -std::numbers::pi / 2 : std::atan(-n / vm);
  return ElementaryTransform::zeta((1.0 / n) * c, 0.5 * two_psi);
}

namespace {

RecipeResult start(const BeamMatrix4& s) {
  require_physical(s);
  RecipeResult r;
  r.beam = s;
  return r;
}

void run_pair(RecipeResult& r, Pairing pairing) {
  switch (pairing) {
    case Pairing::XX_YY:
      record(r, select_boost(r.beam, BoostGoal::kill_v2_dot_v1));
      record(r, select_boost(r.beam, BoostGoal::kill_v3_dot_v1));
      record(r, select_align(r.beam, 1));
      break;
    case Pairing::XY_XpYp:
      record(r, select_boost(r.beam, BoostGoal::kill_v2_dot_v1));
      record(r, select_boost(r.beam, BoostGoal::kill_v3_dot_v2_via_beta3));
      record(r, select_align(r.beam, 2));
      break;
    case Pairing::XYp_XpY:
      record(r, select_boost(r.beam, BoostGoal::kill_v3_dot_v1));
      record(r, select_boost(r.beam, BoostGoal::kill_v2_dot_v3_via_beta2));
      record(r, select_align(r.beam, 3));
      break;
  }
}

// Orthonormal frame from mutually perpendicular vectors, filling in zero ones
// from the coordinate axes.
std::array<Vec3, 3> frame_of(const BeamMatrix4& b) {
  std::array<Vec3, 3> f{};
  std::array<bool, 3> known{};
  const double tol = 1e-12 * lin_scale(b);
  for (int l = 0; l < 3; ++l) {
    const double n = norm(b.vec(l + 1));
    if (n > tol) {
      f[l] = (1.0 / n) * b.vec(l + 1);
      known[l] = true;
    }
  }
  for (int l = 0; l < 3; ++l) {
    if (known[l]) continue;
    for (int a = 0; a < 3; ++a) {
      Vec3 u{};
      u[(l + a) % 3] = 1.0;
      for (int j = 0; j < 3; ++j)
        if (known[j]) u = u - dot(u, f[j]) * f[j];
      const double n = norm(u);
      if (n > 0.5) {
        f[l] = (1.0 / n) * u;
        known[l] = true;
        break;
      }
    }
  }
  return f;
}

}  // namespace

RecipeResult decouple_pair(const BeamMatrix4& s, Pairing pairing) {
  RecipeResult r = start(s);
  run_pair(r, pairing);
  return r;
}

RecipeResult diagonalize4(const BeamMatrix4& s, DiagStrategy strategy) {
  RecipeResult r = start(s);
  if (strategy == DiagStrategy::block_first) {
    run_pair(r, Pairing::XX_YY);
    record(r, ElementaryTransform::gamma(select_gamma_orthogonalize(r.beam)));
    const double a = r.beam.v2[1], b = r.beam.v2[2];
    double two_psi = 0.0;
    if (a != 0.0)
      two_psi = std::atan(b / a);
    else if (b != 0.0)
      two_psi = std::copysign(std::numbers::pi / 2, b);
    record(r, ElementaryTransform::zeta({1.0, 0.0, 0.0}, 0.5 * two_psi));
    return r;
  }
  record(r, select_boost(r.beam, BoostGoal::kill_v2_dot_v1));
  record(r, select_boost(r.beam, BoostGoal::kill_v3_dot_v1));
  record(r, ElementaryTransform::gamma(select_gamma_orthogonalize(r.beam)));

  const std::array<Vec3, 3> f = frame_of(r.beam);
  Mat3 best{};
  double best_trace = -1e300;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1}) {
      const Vec3 t1 = static_cast<double>(s1) * f[0];
      const Vec3 t2 = static_cast<double>(s2) * f[1];
      const Vec3 t3 = cross(t1, t2);
      Mat3 t;
      for (int k = 0; k < 3; ++k) {
        t(k, 0) = t1[k];
        t(k, 1) = t2[k];
        t(k, 2) = t3[k];
      }
      if (t.trace() > best_trace + 1e-15) {
        best_trace = t.trace();
        best = t;
      }
    }
  const AxisAngle aa = axis_angle_from_rotation(best);
  record(r, ElementaryTransform::zeta(aa.e, aa.psi));
  return r;
}

RecipeResult normalize4(const BeamMatrix4& s, DiagStrategy strategy) {
  RecipeResult r = diagonalize4(s, strategy);
  const Mat4 m = r.beam.representative();
  const double a = std::pow(m(1, 1) / m(0, 0), 0.25);
  const double b = std::pow(m(3, 3) / m(2, 2), 0.25);
  record(r, ElementaryTransform::scale({a, 1.0 / a, b, 1.0 / b}));
  return r;
}

RecipeResult decouple_single(const BeamMatrix4& s, Coord coord) {
  RecipeResult r = start(s);
  Mat3 v;
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) v(k, m) = s.vec(m + 1)[k];
  const Polar3 pd = polar3(v);
  const AxisAngle aa = axis_angle_from_rotation(pd.o);
  record(r, ElementaryTransform::zeta(aa.e, aa.psi));
  if (coord != Coord::x) {
    Vec3 e{};
    e[coord == Coord::xp ? 0 : coord == Coord::y ? 1 : 2] = 1.0;
    record(r, ElementaryTransform::zeta(e, std::numbers::pi / 2));
  }
  return r;
}

Pattern zero_pattern(Pairing p) {
  switch (p) {
    case Pairing::XX_YY: return {{0, 2}, {0, 3}, {1, 2}, {1, 3}};
    case Pairing::XY_XpYp: return {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    case Pairing::XYp_XpY: return {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  }
  return {};
}

Pattern zero_pattern(Coord c) {
  const int i = static_cast<int>(c);
  Pattern p;
  for (int j = 0; j < 4; ++j)
    if (j != i) p.emplace_back(i, j);
  return p;
}

Pattern diagonal_pattern() {
  Pattern p;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p.emplace_back(i, j);
  return p;
}

double pattern_residual(const Mat4& m, const Pattern& p) {
  double r = 0.0;
  for (auto [i, j] : p) r = std::max({r, std::abs(m(i, j)), std::abs(m(j, i))});
  return r;
}

std::vector<Mat4> stabilizer_generators(Pairing p) {
  using namespace units;
  auto reps = [](std::initializer_list<UnitId> us) {
    std::vector<Mat4> out;
    for (UnitId u : us) out.push_back(unit_rep4(u));
    return out;
  };
  switch (p) {
    case Pairing::XX_YY: return reps({zeta(1), gamma_(1), beta(2, 2), beta(2, 3), beta(3, 2), beta(3, 3)});
    case Pairing::XY_XpYp: return reps({zeta(2), beta(2, 2), beta(3, 1), beta(3, 3)});
    case Pairing::XYp_XpY: return reps({zeta(3), beta(2, 1), beta(2, 2), beta(3, 3)});
  }
  return {};
}

std::vector<Mat4> stabilizer_generators(Coord c) {
  using namespace units;
  const double sg = (c == Coord::x || c == Coord::xp) ? 1.0 : -1.0;
  return {
      0.5 * (unit_rep4(zeta(1)) + sg * unit_rep4(gamma_(1))),
      0.5 * (unit_rep4(beta(2, 3)) + sg * unit_rep4(beta(3, 2))),
      unit_rep4(beta(2, 2)),
      unit_rep4(beta(3, 3)),
  };
}

std::vector<Mat4> diagonal_stabilizer_generators() {
  return {unit_rep4(units::beta(2, 2)), unit_rep4(units::beta(3, 3))};
}

Polar3 polar3(const Mat3& m) {
  const double d = det_oracle(m);
  const double scale = max_abs(m);
  if (!(std::abs(d) > 1e-12 * scale * scale * scale)) throw Error(ErrorKind::singular_matrix, "singular 3x3 block");
  Mat3 x = m;
  for (int it = 0; it < 100; ++it) {
    const Mat3 next = 0.5 * (x + inv_oracle(x).transpose());
    const double change = max_abs_diff(next, x);
    x = next;
    if (change <= 1e-15) break;
  }
  if (d < 0) x = -x;
  Mat3 s = x.transpose() * m;
  s = 0.5 * (s + s.transpose());
  return {x, s};
}

AxisAngle axis_angle_from_rotation(const Mat3& o) {
  const Vec3 w{o(2, 1) - o(1, 2), o(0, 2) - o(2, 0), o(1, 0) - o(0, 1)};
  const double c = std::clamp(0.5 * (o.trace() - 1.0), -1.0, 1.0);
  const double wn = norm(w);
  AxisAngle out;
  if (c > -0.5) {
    if (wn <= 1e-14) return out;
    out.e = (1.0 / wn) * w;
  } else {
    // near a half turn the antisymmetric part vanishes; use the symmetric part
    int p = 0;
    for (int k = 1; k < 3; ++k)
      if (o(k, k) > o(p, p)) p = k;
    Vec3 e{};
    e[p] = std::sqrt(std::max((o(p, p) - c) / (1.0 - c), 0.0));
    for (int j = 0; j < 3; ++j)
      if (j != p) e[j] = (o(p, j) + o(j, p)) / (2.0 * (1.0 - c) * e[p]);
    if (dot(e, w) < 0) e = -e;
    out.e = (1.0 / norm(e)) * e;
  }
  out.psi = 0.5 * std::atan2(0.5 * wn, c);
  return out;
}

Mat3 rotation_from_axis_angle(const Vec3& e, double psi) {
  const double c = std::cos(2 * psi), s = std::sin(2 * psi);
  Mat3 r;
  const Mat3 k{{0, -e[2], e[1], e[2], 0, -e[0], -e[1], e[0], 0}};
  r = Mat3::identity() * c + k * s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) += (1 - c) * e[i] * e[j];
  return r;
}

CliffordElement4 component_side_mul(const CliffordElement4& z, UnitId u, Side side) {
  if (u.algebra != Algebra::Cl31) throw Error(ErrorKind::invalid_argument, "not a Cl31 unit");
  const int k = row_of(u), l = col_of(u);
  const Mat4& c = z.comp;
  CliffordElement4 out;
  if (k == 0 && l == 0) return z;
  const bool left = side == Side::left;
  if (l == 0) {
    out.comp = left ? unit_rep4(units::zeta(k)) * c : -(unit_rep4(units::gamma_(k)) * c);
  } else if (k == 0) {
    out.comp = left ? -(c * unit_rep4(units::zeta(l))) : c * unit_rep4(units::gamma_(l));
  } else if (left) {
    out.comp = -(unit_rep4(units::zeta(k)) * c * unit_rep4(units::zeta(l)));
  } else {
    out.comp = -(unit_rep4(units::gamma_(k)) * c * unit_rep4(units::gamma_(l)));
  }
  return out;
}

Mat4 j_matrix(int k) {
  Mat4 j{};
  const int a = k % 3 + 1, b = (k + 1) % 3 + 1;
  j(a, b) = 1.0;
  j(b, a) = -1.0;
  return j;
}

CliffordElement4 zeta_rotate_components(const CliffordElement4& z, const Vec3& e, double psi) {
  Mat4 g{};
  for (int k = 1; k <= 3; ++k) g += j_matrix(k) * (2.0 * psi * e[k - 1]);
  return {expm(g) * z.comp};
}

CliffordElement4 gamma_rotate_components(const CliffordElement4& z, double phi) {
  return {z.comp * expm(j_matrix(1) * (-2.0 * phi))};
}

Mat4 invariance4(const Mat4& n, double psi, double phi) {
  const Mat4 g = unit_rep4(units::zeta(1)) * psi + kGamma1 * phi;
  return n * expm(g) * symplectic_inverse(n);
}

}  // namespace symplectica

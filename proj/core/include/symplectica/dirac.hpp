#pragma once

#include <array>
#include <utility>
#include <vector>

#include "symplectica/clifford.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

// Two degrees of freedom: Sigma = 1*s + beta^m . v_m.
struct BeamMatrix4 {
  double s = 0;
  Vec3 v1{}, v2{}, v3{};

  // Keeps only the symmetric part of the input.
  static BeamMatrix4 from_components(const CliffordElement4& z);
  static BeamMatrix4 from_matrix(const Mat4& m);

  CliffordElement4 components() const;
  Mat4 representative() const;

  Vec3& vec(int m) { return m == 1 ? v1 : m == 2 ? v2 : v3; }
  const Vec3& vec(int m) const { return m == 1 ? v1 : m == 2 ? v2 : v3; }
};

// A = gamma^m a_m0 + zeta_k a0_k
struct SkewA {
  double a10 = 0, a20 = 0, a30 = 0;
  Vec3 a0{};

  CliffordElement4 components() const;
  Mat4 representative() const;
  double bracket() const;  // (a10)^2 + (a20)^2 + (a30)^2 - a0.a0
};

SkewA skew_of_sigma(const BeamMatrix4& s);          // Sigma gamma^1 Sigma
SkewA skew_of_general(const CliffordElement4& z);   // Z gamma^1 Z^T
SkewA skew_from_components(const CliffordElement4& z);

double det_sym4(const BeamMatrix4& s);
double det_antisym4(const SkewA& a);
double det_general4(const CliffordElement4& z);

Mat4 inv_antisym4(const SkewA& a);
Mat4 inv_sym4(const BeamMatrix4& s);
Mat4 inv_general4(const CliffordElement4& z);

struct Emittances4 {
  double eps1 = 0;  // larger
  double eps2 = 0;
};

Emittances4 emittances4(const BeamMatrix4& s);

// Positive-definite representative and two positive emittances.
bool is_physical(const BeamMatrix4& s);
void require_physical(const BeamMatrix4& s);

enum class TransformKind { zeta_rot, gamma_rot, beta2_boost, beta3_boost, scale };

const char* to_string(TransformKind k);

struct ElementaryTransform {
  TransformKind kind = TransformKind::zeta_rot;
  Vec3 axis{1.0, 0.0, 0.0};
  double angle = 0;  // psi, phi or chi
  std::array<double, 4> factors{1.0, 1.0, 1.0, 1.0};  // scale only

  static ElementaryTransform zeta(const Vec3& e, double psi);
  static ElementaryTransform gamma(double phi);
  static ElementaryTransform beta2(const Vec3& e, double chi);
  static ElementaryTransform beta3(const Vec3& e, double chi);
  static ElementaryTransform scale(const std::array<double, 4>& f);

  Mat4 representative() const;
};

BeamMatrix4 apply_zeta(const BeamMatrix4& s, const Vec3& e, double psi);
BeamMatrix4 apply_gamma(const BeamMatrix4& s, double phi);
BeamMatrix4 apply_beta2(const BeamMatrix4& s, const Vec3& e, double chi);
BeamMatrix4 apply_beta3(const BeamMatrix4& s, const Vec3& e, double chi);
BeamMatrix4 apply_scale(const BeamMatrix4& s, const std::array<double, 4>& f);
BeamMatrix4 apply(const BeamMatrix4& s, const ElementaryTransform& t);

// steps in application order; map = R_n ... R_1.
struct TransformPipeline {
  std::vector<ElementaryTransform> steps;
  Mat4 map = Mat4::identity();

  void push(const ElementaryTransform& t);
  Mat4 normalizer() const;  // inverse of map
  double symplectic_residual() const;
};

enum class BoostGoal {
  suppress_v2,
  suppress_v3,
  kill_v2_dot_v1,
  kill_v3_dot_v1,
  kill_v2_dot_v3_via_beta2,
  kill_v3_dot_v2_via_beta3,
};

ElementaryTransform select_boost(const BeamMatrix4& s, BoostGoal goal);
double boost_goal_value(const BeamMatrix4& s, BoostGoal goal);

double select_gamma_orthogonalize(const BeamMatrix4& s);

// zeta rotation that makes v_m parallel to the m-axis, keeping the sign of its m-th entry
ElementaryTransform select_align(const BeamMatrix4& s, int m);

struct RecipeResult {
  TransformPipeline pipeline;
  BeamMatrix4 beam;
  std::vector<BeamMatrix4> stages;  // beam after each step
};

enum class Pairing { XX_YY, XY_XpYp, XYp_XpY };
enum class DiagStrategy { block_first, direct };
enum class Coord { x, xp, y, yp };

RecipeResult decouple_pair(const BeamMatrix4& s, Pairing pairing);
RecipeResult diagonalize4(const BeamMatrix4& s, DiagStrategy strategy);
RecipeResult normalize4(const BeamMatrix4& s, DiagStrategy strategy = DiagStrategy::block_first);
RecipeResult decouple_single(const BeamMatrix4& s, Coord coord);

using Pattern = std::vector<std::pair<int, int>>;

Pattern zero_pattern(Pairing p);
Pattern zero_pattern(Coord c);
Pattern diagonal_pattern();
double pattern_residual(const Mat4& m, const Pattern& p);

// Generators whose exponentials preserve the target zero pattern.
std::vector<Mat4> stabilizer_generators(Pairing p);
std::vector<Mat4> stabilizer_generators(Coord c);
std::vector<Mat4> diagonal_stabilizer_generators();

struct Polar3 {
  Mat3 o;
  Mat3 s;
};

Polar3 polar3(const Mat3& m);

struct AxisAngle {
  Vec3 e{0.0, 0.0, 1.0};
  double psi = 0;  // rotation angle is 2 psi
};

AxisAngle axis_angle_from_rotation(const Mat3& o);
// counter-clockwise rotation about e by 2 psi
Mat3 rotation_from_axis_angle(const Vec3& e, double psi);

enum class Side { left, right };

CliffordElement4 component_side_mul(const CliffordElement4& z, UnitId u, Side side);
Mat4 j_matrix(int k);
CliffordElement4 zeta_rotate_components(const CliffordElement4& z, const Vec3& e, double psi);
CliffordElement4 gamma_rotate_components(const CliffordElement4& z, double phi);

// N exp(zeta_1 psi + gamma^1 phi) N^{-1}
Mat4 invariance4(const Mat4& n, double psi, double phi);

}  // namespace symplectica

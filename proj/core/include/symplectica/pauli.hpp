#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "symplectica/clifford.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

// One degree of freedom: Sigma = 1*sigma0 + beta1*v[0] + beta2*v[1].
struct BeamMatrix2 {
  double sigma0 = 0;
  Vec2 v{};

  static BeamMatrix2 from_matrix(const Mat2& m);
  Mat2 representative() const;
};

enum class PauliKind { boost, rotation };

struct PauliTransform {
  PauliKind kind = PauliKind::rotation;
  Vec2 axis{1.0, 0.0};  // boosts only
  double angle = 0;     // chi or psi

  Mat2 representative() const;
};

// steps in application order; map is the product R_n ... R_1, so map*Sigma*map^T
// is the result.
struct PauliPipeline {
  std::vector<PauliTransform> steps;
  Mat2 map = Mat2::identity();

  void push(const PauliTransform& t);
  Mat2 normalizer() const;  // inverse of map
};

double emittance2(const BeamMatrix2& s);

BeamMatrix2 apply_boost2(const BeamMatrix2& s, const Vec2& e, double chi);
BeamMatrix2 apply_rotation2(const BeamMatrix2& s, double psi);
BeamMatrix2 apply2(const BeamMatrix2& s, const PauliTransform& t);

std::pair<PauliTransform, BeamMatrix2> diagonalize2(const BeamMatrix2& s);

enum class Normalize2Strategy { two_step, direct };

std::pair<PauliPipeline, BeamMatrix2> normalize2(const BeamMatrix2& s, Normalize2Strategy strategy);

// N exp(gamma psi) N^{-1}
Mat2 invariance2(const Mat2& n, double psi);

struct CockleSpectrum {
  double det = 0;
  std::complex<double> lambda_plus, lambda_minus;
  CliffordElement2 inverse;
};

CockleSpectrum cockle_det_eig_inv(const CliffordElement2& z);

}  // namespace symplectica

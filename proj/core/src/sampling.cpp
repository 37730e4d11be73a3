#include "symplectica/sampling.hpp"

#include <cmath>
#include <numbers>

#include "symplectica/smallmat.hpp"

namespace symplectica {

template <std::size_t N>
Mat<N> random_physical_matrix(Rng& rng) {
  std::normal_distribution<double> nd;
  Mat<N> m;
  for (double& x : m.a) x = nd(rng);
  m = m + m.transpose();
  // shift at least once, then until positive definite
  do {
    for (std::size_t i = 0; i < N; ++i) m(i, i) += 1.0;
  } while (!is_positive_definite(m));
  return m;
}

BeamMatrix4 random_physical_beam4(Rng& rng) {
  for (;;) {
    BeamMatrix4 b = BeamMatrix4::from_matrix(random_physical_matrix<4>(rng));
    if (is_physical(b)) return b;
  }
}

template <std::size_t N>
Mat<N> random_symplectic(Rng& rng, double scale) {
  std::normal_distribution<double> nd(0.0, scale);
  Mat<N> s;
  for (double& x : s.a) x = nd(rng);
  s = (s + s.transpose()) * 0.5;
  return make_symplectic_from_symmetric(s);
}

Vec3 random_unit_vector(Rng& rng) {
  std::normal_distribution<double> nd;
  for (;;) {
    Vec3 v{nd(rng), nd(rng), nd(rng)};
    const double n = norm(v);
    if (n > 1e-3) return v * (1.0 / n);
  }
}

double random_angle(Rng& rng, double half_width) {
  std::uniform_real_distribution<double> ud(-half_width, half_width);
  return ud(rng);
}

template Mat<2> random_physical_matrix<2>(Rng&);
template Mat<4> random_physical_matrix<4>(Rng&);
template Mat<6> random_physical_matrix<6>(Rng&);
template Mat<2> random_symplectic<2>(Rng&, double);
template Mat<4> random_symplectic<4>(Rng&, double);
template Mat<6> random_symplectic<6>(Rng&, double);

}  // namespace symplectica

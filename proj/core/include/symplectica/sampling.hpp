#pragma once

#include <cstdint>
#include <random>

#include "symplectica/dirac.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

using Rng = std::mt19937_64;

// M + M^T from a standard normal M, shifted by the identity until physical.
template <std::size_t N>
Mat<N> random_physical_matrix(Rng& rng);

BeamMatrix4 random_physical_beam4(Rng& rng);

// exp(gamma S) for random symmetric S with entries of size ~scale.
template <std::size_t N>
Mat<N> random_symplectic(Rng& rng, double scale = 0.5);

Vec3 random_unit_vector(Rng& rng);
double random_angle(Rng& rng, double half_width);

}  // namespace symplectica

#pragma once

#include <array>
#include <complex>
#include <cstddef>

#include "symplectica/matrix.hpp"

namespace symplectica {

// P planes, order 2P. Instantiated for P = 1, 2, 3.

// alpha, beta, gamma extended block-diagonally; plane < 0 means all planes.
template <std::size_t P>
Mat<2 * P> bunch_alpha(int plane = -1);
template <std::size_t P>
Mat<2 * P> bunch_beta(int plane = -1);
template <std::size_t P>
Mat<2 * P> bunch_gamma(int plane = -1);

// Coefficients c[0..2P] of det(lambda I - M), c[2P] = 1.
template <std::size_t N>
std::array<double, N + 1> char_poly(const Mat<N>& m);

// Largest |odd coefficient| of char(Sigma gamma), relative to max|Sigma|^(2P).
template <std::size_t P>
double char_poly_oddness(const Mat<2 * P>& sigma);

// Descending.
template <std::size_t P>
std::array<double, P> emittances_bunch(const Mat<2 * P>& sigma);

template <std::size_t P>
struct Eigenpairs {
  std::array<std::complex<double>, 2 * P> lambda;  // -i eps_r, +i eps_r per plane
  CMat<2 * P> e;                                   // columns
};

template <std::size_t P>
Eigenpairs<P> eig_sigma_gamma(const Mat<2 * P>& sigma);

template <std::size_t P>
CMat<2 * P> symplectic_normalize_eigvecs(const CMat<2 * P>& e);

template <std::size_t P>
struct NormalDecomposition {
  Mat<2 * P> n;
  std::array<double, P> emittances{};
  Mat<2 * P> normal;  // diag(eps_1, eps_1, eps_2, eps_2, ...)
  double imag_residue = 0;
};

template <std::size_t P>
NormalDecomposition<P> normalize_bunch(const Mat<2 * P>& sigma);

// N exp(sum_r gamma^r psi_r) N^{-1}
template <std::size_t P>
Mat<2 * P> invariance_bunch(const Mat<2 * P>& n, const std::array<double, P>& psi);

inline std::array<double, 3> emittances6(const Mat6& s) { return emittances_bunch<3>(s); }
inline NormalDecomposition<3> normalize6(const Mat6& s) { return normalize_bunch<3>(s); }
inline Mat6 invariance6(const Mat6& n, double psi1, double psi2, double psi3) {
  return invariance_bunch<3>(n, {psi1, psi2, psi3});
}

}  // namespace symplectica

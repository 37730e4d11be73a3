#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

#include "symplectica/errors.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

// Determinant by LU with partial pivoting.
template <std::size_t N>
double det_oracle(Mat<N> m) {
  double det = 1.0;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    if (m(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < N; ++r) {
      const double f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < N; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Gauss-Jordan inverse with partial pivoting. A pivot below rel_tol * max|M|
// is treated as singular.
template <std::size_t N>
Mat<N> inv_oracle(Mat<N> m, double rel_tol = 1e-14) {
  Mat<N> inv = Mat<N>::identity();
  const double scale = max_abs(m);
  if (scale == 0.0) throw Error(ErrorKind::singular_matrix, "zero matrix");
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    if (std::abs(m(p, c)) <= rel_tol * scale) throw Error(ErrorKind::singular_matrix, "matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < N; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const double d = m(c, c);
    for (std::size_t j = 0; j < N; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c) continue;
      const double f = m(r, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < N; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

template <std::size_t N>
double norm_inf(const Mat<N>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < N; ++j) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

// Scaling and squaring with a truncated Taylor series on a matrix of norm <= 1/2.
template <std::size_t N>
Mat<N> expm(const Mat<N>& m) {
  const double nrm = norm_inf(m);
  int squarings = 0;
  if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
  const Mat<N> a = m * std::ldexp(1.0, -squarings);

  Mat<N> sum = Mat<N>::identity();
  Mat<N> term = Mat<N>::identity();
  for (int k = 1; k <= 30; ++k) {
    term = term * a;
    term *= 1.0 / k;
    sum += term;
    if (max_abs(term) <= 1e-18 * max_abs(sum)) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

// Cholesky on the symmetric part.
template <std::size_t N>
bool is_positive_definite(const Mat<N>& m) {
  Mat<N> l{};
  for (std::size_t j = 0; j < N; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) return false;
    l(j, j) = std::sqrt(d);
    for (std::size_t i = j + 1; i < N; ++i) {
      double v = 0.5 * (m(i, j) + m(j, i));
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return true;
}

// Block-diagonal form with one [[0,1],[-1,0]] block per plane.
template <std::size_t N>
constexpr Mat<N> symplectic_form() {
  static_assert(N % 2 == 0);
  Mat<N> g{};
  for (std::size_t p = 0; p < N; p += 2) {
    g(p, p + 1) = 1.0;
    g(p + 1, p) = -1.0;
  }
  return g;
}

template <std::size_t N>
double symplectic_residual(const Mat<N>& r, const Mat<N>& form = symplectic_form<N>()) {
  return max_abs_diff(r * form * r.transpose(), form);
}

template <std::size_t N>
bool is_symplectic(const Mat<N>& r, const Mat<N>& form = symplectic_form<N>(), double tol = 1e-9) {
  return symplectic_residual(r, form) <= tol;
}

// R^{-1} = -gamma R^T gamma for symplectic R.
template <std::size_t N>
Mat<N> symplectic_inverse(const Mat<N>& r, const Mat<N>& form = symplectic_form<N>()) {
  return -(form * r.transpose() * form);
}

template <std::size_t N>
Mat<N> make_symplectic_from_symmetric(const Mat<N>& s, const Mat<N>& form = symplectic_form<N>()) {
  if (asymmetry(s) > 1e-12 * std::max(1.0, max_abs(s)))
    throw Error(ErrorKind::invalid_argument, "generator must be symmetric");
  return expm(form * s);
}

}  // namespace symplectica

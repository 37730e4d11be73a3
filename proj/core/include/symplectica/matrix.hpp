#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace symplectica {

// Small dense row-major matrix with compile-time shape.
template <class T, std::size_t R, std::size_t C = R>
struct Matrix {
  std::array<T, R * C> a{};

  static constexpr std::size_t rows = R;
  static constexpr std::size_t cols = C;

  constexpr T& operator()(std::size_t i, std::size_t j) { return a[i * C + j]; }
  constexpr const T& operator()(std::size_t i, std::size_t j) const { return a[i * C + j]; }

  static constexpr Matrix zero() { return Matrix{}; }

  static constexpr Matrix identity() {
    static_assert(R == C);
    Matrix m{};
    for (std::size_t i = 0; i < R; ++i) m(i, i) = T(1);
    return m;
  }

  static constexpr Matrix diag(const std::array<T, R>& d) {
    static_assert(R == C);
    Matrix m{};
    for (std::size_t i = 0; i < R; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr Matrix<T, C, R> transpose() const {
    Matrix<T, C, R> t{};
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  constexpr T trace() const {
    static_assert(R == C);
    T s{};
    for (std::size_t i = 0; i < R; ++i) s += (*this)(i, i);
    return s;
  }

  constexpr Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < R * C; ++k) a[k] += o.a[k];
    return *this;
  }
  constexpr Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < R * C; ++k) a[k] -= o.a[k];
    return *this;
  }
  constexpr Matrix& operator*=(T s) {
    for (auto& x : a) x *= s;
    return *this;
  }

  friend constexpr Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
  friend constexpr Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }
  friend constexpr Matrix operator-(Matrix x) {
    for (auto& v : x.a) v = -v;
    return x;
  }
  friend constexpr Matrix operator*(Matrix x, T s) { return x *= s; }
  friend constexpr Matrix operator*(T s, Matrix x) { return x *= s; }
  friend constexpr Matrix operator/(Matrix x, T s) {
    for (auto& v : x.a) v /= s;
    return x;
  }
  friend constexpr bool operator==(const Matrix&, const Matrix&) = default;
};

template <class T, std::size_t R, std::size_t K, std::size_t C>
constexpr Matrix<T, R, C> operator*(const Matrix<T, R, K>& x, const Matrix<T, K, C>& y) {
  Matrix<T, R, C> out{};
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t k = 0; k < K; ++k) {
      const T xik = x(i, k);
      for (std::size_t j = 0; j < C; ++j) out(i, j) += xik * y(k, j);
    }
  return out;
}

template <std::size_t N>
using Mat = Matrix<double, N, N>;
template <std::size_t N>
using CMat = Matrix<std::complex<double>, N, N>;

using Mat2 = Mat<2>;
using Mat3 = Mat<3>;
using Mat4 = Mat<4>;
using Mat6 = Mat<6>;

template <class T, std::size_t R, std::size_t C>
double max_abs(const Matrix<T, R, C>& m) {
  double best = 0.0;
  for (const auto& x : m.a) best = std::max(best, static_cast<double>(std::abs(x)));
  return best;
}

template <class T, std::size_t R, std::size_t C>
double max_abs_diff(const Matrix<T, R, C>& x, const Matrix<T, R, C>& y) {
  double best = 0.0;
  for (std::size_t k = 0; k < R * C; ++k)
    best = std::max(best, static_cast<double>(std::abs(x.a[k] - y.a[k])));
  return best;
}

template <std::size_t N>
double asymmetry(const Mat<N>& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) best = std::max(best, std::abs(m(i, j) - m(j, i)));
  return best;
}

template <std::size_t N>
CMat<N> complexify(const Mat<N>& m) {
  CMat<N> c{};
  for (std::size_t k = 0; k < N * N; ++k) c.a[k] = m.a[k];
  return c;
}

template <std::size_t N>
Mat<N> real_part(const CMat<N>& m) {
  Mat<N> r{};
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = m.a[k].real();
  return r;
}

template <std::size_t N>
Mat<N> imag_part(const CMat<N>& m) {
  Mat<N> r{};
  for (std::size_t k = 0; k < N * N; ++k) r.a[k] = m.a[k].imag();
  return r;
}

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

inline constexpr Vec3 operator+(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
inline constexpr Vec3 operator-(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
inline constexpr Vec3 operator-(const Vec3& x) { return {-x[0], -x[1], -x[2]}; }
inline constexpr Vec3 operator*(double s, const Vec3& x) { return {s * x[0], s * x[1], s * x[2]}; }
inline constexpr Vec3 operator*(const Vec3& x, double s) { return s * x; }

inline constexpr double dot(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

inline constexpr Vec3 cross(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

inline double norm(const Vec3& x) { return std::sqrt(dot(x, x)); }

inline double max_abs_diff(const Vec3& x, const Vec3& y) {
  return std::max({std::abs(x[0] - y[0]), std::abs(x[1] - y[1]), std::abs(x[2] - y[2])});
}

}  // namespace symplectica

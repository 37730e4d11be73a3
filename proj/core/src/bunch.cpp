#include "symplectica/bunch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symplectica/errors.hpp"
#include "symplectica/smallmat.hpp"

namespace symplectica {

namespace {

using cd = std::complex<double>;

template <std::size_t P>
Mat<2 * P> plane_blocks(int plane, double a00, double a01, double a10, double a11) {
  Mat<2 * P> m{};
  for (std::size_t r = 0; r < P; ++r) {
    if (plane >= 0 && static_cast<std::size_t>(plane) != r) continue;
    m(2 * r, 2 * r) = a00;
    m(2 * r, 2 * r + 1) = a01;
    m(2 * r + 1, 2 * r) = a10;
    m(2 * r + 1, 2 * r + 1) = a11;
  }
  return m;
}

// Monic polynomial in nu = eps^2: sum_j d[j] nu^j with d[P] = 1.
template <std::size_t P>
double eval_poly(const std::array<double, P + 1>& d, double x) {
  double v = 0;
  for (std::size_t j = P + 1; j-- > 0;) v = v * x + d[j];
  return v;
}

template <std::size_t P>
double eval_dpoly(const std::array<double, P + 1>& d, double x) {
  double v = 0;
  for (std::size_t j = P; j >= 1; --j) v = v * x + static_cast<double>(j) * d[j];
  return v;
}

template <std::size_t P>
std::array<double, P> real_roots(const std::array<double, P + 1>& d, double scale) {
  // scale is the size of nu
  std::array<double, P> r{};
  const double tol = 1e-9;
  if constexpr (P == 1) {
    r[0] = -d[0];
  } else if constexpr (P == 2) {
    const double a = d[1], b = d[0];
    double disc = a * a - 4 * b;
    if (disc < -tol * a * a) throw Error(ErrorKind::nonphysical, "complex emittance roots");
    disc = std::sqrt(std::max(disc, 0.0));
    const double q = -0.5 * (a + std::copysign(disc, a));
    r[0] = q;
    r[1] = q != 0.0 ? b / q : 0.0;
  } else {
    static_assert(P == 3);
    const double a = d[2], b = d[1], c = d[0];
    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;
    if (-p <= 1e-14 * scale * scale) {
      const double t = std::cbrt(-q);
      r = {t + shift, t + shift, t + shift};
    } else {
      const double m = 2.0 * std::sqrt(-p / 3.0);
      double arg = 3.0 * q / (p * m);
      if (std::abs(arg) > 1.0 + tol) throw Error(ErrorKind::nonphysical, "complex emittance roots");
      arg = std::clamp(arg, -1.0, 1.0);
      const double th = std::acos(arg) / 3.0;
      for (int k = 0; k < 3; ++k) r[k] = m * std::cos(th - 2.0 * std::numbers::pi * k / 3.0) + shift;
    }
  }
  for (double& x : r) {
    for (int it = 0; it < 4; ++it) {
      const double f = eval_poly<P>(d, x), df = eval_dpoly<P>(d, x);
      if (df == 0.0) break;
      const double step = f / df;
      if (!std::isfinite(step) || std::abs(step) > 1e-6 * std::max(std::abs(x), scale)) break;
      x -= step;
    }
  }
  return r;
}

template <std::size_t N>
std::array<cd, N> null_vector(CMat<N> a) {
  const double tiny = 1e-15 * std::max(max_abs(a), 1e-300);
  std::array<std::size_t, N> perm{};
  for (std::size_t i = 0; i < N; ++i) perm[i] = i;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(a(r, c)) > std::abs(a(p, c))) p = r;
    if (p != c) {
      for (std::size_t j = 0; j < N; ++j) std::swap(a(p, j), a(c, j));
      std::swap(perm[p], perm[c]);
    }
    if (std::abs(a(c, c)) < tiny) a(c, c) = tiny;
    for (std::size_t r = c + 1; r < N; ++r) {
      const cd f = a(r, c) / a(c, c);
      a(r, c) = f;
      for (std::size_t j = c + 1; j < N; ++j) a(r, j) -= f * a(c, j);
    }
  }
  std::array<cd, N> x{};
  for (std::size_t i = 0; i < N; ++i) x[i] = cd(1.0 + 0.1 * i, 0.05 * i);
  for (int it = 0; it < 3; ++it) {
    std::array<cd, N> y{};
    for (std::size_t i = 0; i < N; ++i) y[i] = x[perm[i]];
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < i; ++k) y[i] -= a(i, k) * y[k];
    for (std::size_t i = N; i-- > 0;) {
      for (std::size_t k = i + 1; k < N; ++k) y[i] -= a(i, k) * y[k];
      y[i] /= a(i, i);
    }
    double big = 0;
    for (const cd& v : y) big = std::max(big, std::abs(v));
    for (std::size_t i = 0; i < N; ++i) x[i] = y[i] / big;
  }
  return x;
}

}  // namespace

template <std::size_t P>
Mat<2 * P> bunch_alpha(int plane) {
  return plane_blocks<P>(plane, 1, 0, 0, -1);
}
template <std::size_t P>
Mat<2 * P> bunch_beta(int plane) {
  return plane_blocks<P>(plane, 0, 1, 1, 0);
}
template <std::size_t P>
Mat<2 * P> bunch_gamma(int plane) {
  return plane_blocks<P>(plane, 0, 1, -1, 0);
}

template <std::size_t N>
std::array<double, N + 1> char_poly(const Mat<N>& a) {
  std::array<double, N + 1> c{};
  c[N] = 1.0;
  Mat<N> m{};
  for (std::size_t k = 1; k <= N; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) += c[N - k + 1];
    c[N - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

template <std::size_t P>
double char_poly_oddness(const Mat<2 * P>& sigma) {
  const auto c = char_poly<2 * P>(sigma * bunch_gamma<P>());
  const double s = std::max(max_abs(sigma), 1e-300);
  double worst = 0;
  for (std::size_t j = 1; j < 2 * P; j += 2) worst = std::max(worst, std::abs(c[j]) / std::pow(s, 2.0 * P - j));
  return worst;
}

template <std::size_t P>
std::array<double, P> emittances_bunch(const Mat<2 * P>& sigma) {
  if (asymmetry(sigma) > 1e-9 * std::max(max_abs(sigma), 1.0))
    throw Error(ErrorKind::invalid_argument, "bunch matrix is not symmetric");
  const auto c = char_poly<2 * P>(sigma * bunch_gamma<P>());
  const double scale = std::max(max_abs(sigma), 1e-300);
  std::array<double, P + 1> d{};
  for (std::size_t j = 0; j <= P; ++j) d[j] = ((P - j) % 2 ? -1.0 : 1.0) * c[2 * j];
  std::array<double, P> nu = real_roots<P>(d, scale * scale);
  std::array<double, P> eps{};
  for (std::size_t r = 0; r < P; ++r) {
    if (!(nu[r] > 0.0)) throw Error(ErrorKind::nonphysical, "non-positive squared emittance");
    eps[r] = std::sqrt(nu[r]);
  }
  std::sort(eps.begin(), eps.end(), std::greater<>());
  return eps;
}

template <std::size_t P>
Eigenpairs<P> eig_sigma_gamma(const Mat<2 * P>& sigma) {
  constexpr std::size_t N = 2 * P;
  if (!is_positive_definite(sigma)) throw Error(ErrorKind::nonphysical, "bunch matrix is not positive definite");
  const std::array<double, P> eps = emittances_bunch<P>(sigma);
  for (std::size_t r = 0; r + 1 < P; ++r)
    if (eps[r] - eps[r + 1] <= 1e-8 * eps[0]) throw Error(ErrorKind::degenerate_emittance, "emittances are not distinct");
  const CMat<N> a = complexify(sigma * bunch_gamma<P>());
  Eigenpairs<P> out;
  for (std::size_t r = 0; r < P; ++r) {
    const cd lam(0.0, -eps[r]);
    CMat<N> shifted = a;
    for (std::size_t i = 0; i < N; ++i) shifted(i, i) -= lam;
    const std::array<cd, N> u = null_vector<N>(shifted);
    out.lambda[2 * r] = lam;
    out.lambda[2 * r + 1] = std::conj(lam);
    for (std::size_t i = 0; i < N; ++i) {
      out.e(i, 2 * r) = u[i];
      out.e(i, 2 * r + 1) = std::conj(u[i]);
    }
  }
  return out;
}

template <std::size_t P>
CMat<2 * P> symplectic_normalize_eigvecs(const CMat<2 * P>& e) {
  constexpr std::size_t N = 2 * P;
  const CMat<N> h = e.transpose() * complexify(bunch_gamma<P>()) * e;
  const double scale = std::max(max_abs(e), 1e-300);
  CMat<N> out = e;
  for (std::size_t r = 0; r < P; ++r) {
    const cd c = h(2 * r, 2 * r + 1);
    if (!(std::abs(c) > 1e-14 * scale * scale)) throw Error(ErrorKind::degenerate_eigvec, "eigenvector pair has zero symplectic product");
    const cd s = std::sqrt(c);
    for (std::size_t i = 0; i < N; ++i) {
      out(i, 2 * r) /= s;
      out(i, 2 * r + 1) /= s;
    }
  }
  return out;
}

template <std::size_t P>
NormalDecomposition<P> normalize_bunch(const Mat<2 * P>& sigma) {
  constexpr std::size_t N = 2 * P;
  const Eigenpairs<P> ep = eig_sigma_gamma<P>(sigma);
  const CMat<N> e = symplectic_normalize_eigvecs<P>(ep.e);
  CMat<N> t = complexify(Mat<N>::identity());
  const Mat<N> b = bunch_beta<P>();
  for (std::size_t k = 0; k < N * N; ++k) t.a[k] += cd(0.0, b.a[k]);
  const CMat<N> nc = e * t * cd(1.0 / std::numbers::sqrt2, 0.0);

  NormalDecomposition<P> out;
  out.n = real_part(nc);
  out.imag_residue = max_abs(imag_part(nc));
  for (std::size_t r = 0; r < P; ++r) {
    out.emittances[r] = -ep.lambda[2 * r].imag();
    out.normal(2 * r, 2 * r) = out.emittances[r];
    out.normal(2 * r + 1, 2 * r + 1) = out.emittances[r];
  }
  return out;
}

template <std::size_t P>
Mat<2 * P> invariance_bunch(const Mat<2 * P>& n, const std::array<double, P>& psi) {
  Mat<2 * P> rot{};
  for (std::size_t r = 0; r < P; ++r) {
    const double c = std::cos(psi[r]), s = std::sin(psi[r]);
    rot(2 * r, 2 * r) = c;
    rot(2 * r, 2 * r + 1) = s;
    rot(2 * r + 1, 2 * r) = -s;
    rot(2 * r + 1, 2 * r + 1) = c;
  }
  return n * rot * symplectic_inverse(n);
}

#define SYMPLECTICA_INSTANTIATE(P)                                                        \
  template Mat<2 * P> bunch_alpha<P>(int);                                                \
  template Mat<2 * P> bunch_beta<P>(int);                                                 \
  template Mat<2 * P> bunch_gamma<P>(int);                                                \
  template std::array<double, 2 * P + 1> char_poly<2 * P>(const Mat<2 * P>&);             \
  template double char_poly_oddness<P>(const Mat<2 * P>&);                                \
  template std::array<double, P> emittances_bunch<P>(const Mat<2 * P>&);                  \
  template Eigenpairs<P> eig_sigma_gamma<P>(const Mat<2 * P>&);                           \
  template CMat<2 * P> symplectic_normalize_eigvecs<P>(const CMat<2 * P>&);               \
  template NormalDecomposition<P> normalize_bunch<P>(const Mat<2 * P>&);                  \
  template Mat<2 * P> invariance_bunch<P>(const Mat<2 * P>&, const std::array<double, P>&);

SYMPLECTICA_INSTANTIATE(1)
SYMPLECTICA_INSTANTIATE(2)
SYMPLECTICA_INSTANTIATE(3)

#undef SYMPLECTICA_INSTANTIATE

}  // namespace symplectica

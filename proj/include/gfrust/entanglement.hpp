#ifndef GFRUST_ENTANGLEMENT_HPP
#define GFRUST_ENTANGLEMENT_HPP

#include <cmath>
#include <cstddef>
#include <string>

#include "gfrust/sym_matrix.hpp"
#include "gfrust/symplectic.hpp"

namespace gfrust {

/// EoF of a symmetric two-mode state as a function of the EPR uncertainty,
/// in ebits: c+(d) log2 c+(d) - c-(d) log2 c-(d) with
/// c+-(d) = (d^(-1/2) +- d^(1/2))^2 / 4. Zero for d >= 1, divergent as
/// d -> 0+.
inline double eof_from_delta(double delta) {
  if (!(delta > 0.0)) throw Error("eof_from_delta: Delta must be positive");
  if (delta >= 1.0) return 0.0;
  const double a = 1.0 / std::sqrt(delta), b = std::sqrt(delta);
  const double cp = 0.25 * (a + b) * (a + b);
  const double cm = 0.25 * (a - b) * (a - b);
  double e = cp * std::log2(cp);
  if (cm > 0.0) e -= cm * std::log2(cm);
  return e;
}

/// Rows/columns (k, l, N+k, N+l) of a 2N-mode CM, giving a two-mode CM in
/// the (Q_A, Q_B, P_A, P_B) ordering.
inline CovarianceMatrix reduce_two_mode(const CovarianceMatrix& cm, int k, int l) {
  const int n = static_cast<int>(cm.modes());
  if (k == l || k < 0 || l < 0 || k >= n || l >= n)
    throw Error("reduce_two_mode: invalid mode pair");
  const std::size_t idx[4] = {static_cast<std::size_t>(k), static_cast<std::size_t>(l),
                              static_cast<std::size_t>(n + k), static_cast<std::size_t>(n + l)};
  SymMatrix g(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) g.set(i, j, cm.gamma()(idx[i], idx[j]));
  return CovarianceMatrix(SymplecticSpace(2), g);
}

/// Local symplectic invariants of a two-mode CM: the standard form
/// diag-block values n_A, n_B and the correlation pair (k_q, k_p).
struct TwoModeStandardForm {
  double n_a = 1.0;
  double n_b = 1.0;
  double k_q = 0.0;
  double k_p = 0.0;
};

namespace detail {

inline double det2(double a, double b, double c, double d) { return a * d - b * c; }

inline double det4(const SymMatrix& m) {
  // Gaussian elimination with partial pivoting
  double a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m(i, j);
  double det = 1.0;
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (piv != c) {
      for (int j = 0; j < 4; ++j) std::swap(a[c][j], a[piv][j]);
      det = -det;
    }
    if (a[c][c] == 0.0) return 0.0;
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int j = c; j < 4; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace detail

/// Reconstructs the Eq.-(15)-shaped CM in (Q_A, Q_B, P_A, P_B) ordering.
inline CovarianceMatrix standard_form_cm(const TwoModeStandardForm& sf) {
  SymMatrix g(4);
  g.set(0, 0, sf.n_a);
  g.set(1, 1, sf.n_b);
  g.set(2, 2, sf.n_a);
  g.set(3, 3, sf.n_b);
  g.set(0, 1, sf.k_q);
  g.set(2, 3, sf.k_p);
  return CovarianceMatrix(SymplecticSpace(2), g);
}

/// Invariant-determinant extraction of the standard form; signs resolved
/// so that k_q >= k_p, which a local pi rotation or mode-local Fourier
/// transform can always arrange.
inline TwoModeStandardForm standard_form(const CovarianceMatrix& cm) {
  if (cm.modes() != 2) throw Error("standard_form: need a two-mode CM");
  const CmValidity v = validate_cm(cm);
  if (!v.ok) throw Error("standard_form: " + v.detail);
  const SymMatrix& g = cm.gamma();
  // mode A lives on indices (0, 2), mode B on (1, 3)
  const double det_a = detail::det2(g(0, 0), g(0, 2), g(2, 0), g(2, 2));
  const double det_b = detail::det2(g(1, 1), g(1, 3), g(3, 1), g(3, 3));
  const double det_c = detail::det2(g(0, 1), g(0, 3), g(2, 1), g(2, 3));
  const double det_g = detail::det4(g);

  TwoModeStandardForm sf;
  sf.n_a = std::sqrt(std::max(det_a, 0.0));
  sf.n_b = std::sqrt(std::max(det_b, 0.0));
  const double nn = sf.n_a * sf.n_b;
  const double p = det_c;  // k_q * k_p
  // det Gamma = (nn - k_q^2)(nn - k_p^2) fixes k_q^2 + k_p^2
  const double sum_sq = (nn * nn + p * p - det_g) / nn;
  const double disc = std::max(sum_sq * sum_sq - 4.0 * p * p, 0.0);
  const double hi = 0.5 * (sum_sq + std::sqrt(disc));
  const double lo = std::max(sum_sq - hi, 0.0);
  sf.k_q = std::sqrt(std::max(hi, 0.0));
  sf.k_p = (p >= 0.0 ? 1.0 : -1.0) * std::sqrt(lo);
  return sf;
}

/// EPR uncertainty of a symmetric (n_A = n_B) standard form; the closed
/// AM-GM infimum over the scale s, minimized over both EPR pairings.
inline double epr_uncertainty_local(const TwoModeStandardForm& sf,
                                    double sym_tol = 1e-8) {
  const double scale = std::max({1.0, sf.n_a, sf.n_b});
  if (std::abs(sf.n_a - sf.n_b) > sym_tol * scale)
    throw Error("epr_uncertainty_local: asymmetric reduction, n_A = " +
                std::to_string(sf.n_a) + " n_B = " + std::to_string(sf.n_b));
  const double n = 0.5 * (sf.n_a + sf.n_b);
  const double d1 = (n + sf.k_q) * (n - sf.k_p);
  const double d2 = (n - sf.k_q) * (n + sf.k_p);
  return std::sqrt(std::max(std::min(d1, d2), 0.0));
}

/// Global route: Delta = 2 sqrt(tr[Gamma_qq H+] tr[Gamma_pp H-]).
/// Precondition (not checked here): Gamma is invariant under the symmetry
/// group that produced the pair.
inline double epr_uncertainty_global(const CovarianceMatrix& cm,
                                     const SymMatrix& h_plus,
                                     const SymMatrix& h_minus) {
  if (cm.modes() != h_plus.dim() || h_plus.dim() != h_minus.dim())
    throw Error("epr_uncertainty_global: dimension mismatch");
  const std::size_t n = cm.modes();
  double tq = 0.0, tp = 0.0;
  const SymMatrix qq = cm.qq(), pp = cm.pp();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      tq += qq(i, j) * h_plus(i, j);
      tp += pp(i, j) * h_minus(i, j);
    }
  return 2.0 * std::sqrt(std::max(tq * tp, 0.0));
}

/// Pure-state CM parameterization Gamma = (X, XY; YX, YXY + X^-1) with
/// X > 0 and Y symmetric; all symplectic eigenvalues equal 1.
inline CovarianceMatrix pure_cm_from_xy(const SymMatrix& x, const SymMatrix& y) {
  if (x.dim() != y.dim()) throw Error("pure_cm_from_xy: dimension mismatch");
  const std::size_t n = x.dim();
  const EigResult ex = sym_eig(x);
  if (ex.values.back() <= 1e-12)
    throw Error("pure_cm_from_xy: X not positive definite");
  const SymMatrix xinv = mat_func(x, MatFunc::Inv);
  const Matrix xy = x.full() * y.full();
  const Matrix yxy = y.full() * x.full() * y.full();
  SymMatrix gamma(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j >= i) {
        gamma.set(i, j, x(i, j));
        gamma.set(n + i, n + j, 0.5 * (yxy(i, j) + yxy(j, i)) + xinv(i, j));
      }
      gamma.set(i, n + j, xy(i, j));  // mirrors to (n+j, i) = (YX)_{ji}
    }
  return CovarianceMatrix(SymplecticSpace(n), gamma);
}

}  // namespace gfrust

#endif  // GFRUST_ENTANGLEMENT_HPP

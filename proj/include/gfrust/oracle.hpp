#ifndef GFRUST_ORACLE_HPP
#define GFRUST_ORACLE_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "gfrust/frustration.hpp"
#include "gfrust/perm_group.hpp"
#include "gfrust/sym_matrix.hpp"

namespace gfrust {

namespace detail {

// Symmetric matrix from a packed upper-triangle parameter vector.
inline SymMatrix unpack_sym(std::span<const double> s, std::size_t n) {
  SymMatrix m(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m.set(i, j, s[idx++]);
  return m;
}

inline SymMatrix sym_exp(const SymMatrix& s, double scale) {
  const EigResult e = sym_eig(s);
  const std::size_t n = s.dim();
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = std::exp(scale * e.values[i]);
  return SymMatrix::symmetrized(e.vectors * d * e.vectors.transposed(), 1e-6);
}

inline double trace_prod(const SymMatrix& a, const SymMatrix& b) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t += a(i, j) * b(i, j);
  return t;
}

}  // namespace detail

struct BruteForceResult {
  double delta_hat = 0.0;       // best objective found
  SymMatrix x_hat{1};           // argmin X
  double delta_analytic = 0.0;  // objective at the regularized stationary X*
  bool converged = false;
};

/// Desk-scale oracle: minimize f(X) = tr[X H+] + tr[X^-1 H-] over
/// positive-definite X via Adam on the matrix-log parameterization with
/// finite-difference gradients and multi-start. Independent of the
/// trace-norm route it certifies.
inline BruteForceResult bruteforce_min_delta(const HamiltonianPair& hp,
                                             int iterations = 6000,
                                             int restarts = 4,
                                             unsigned seed = 12345) {
  const std::size_t n = hp.modes();
  if (n > 8) throw Error("bruteforce_min_delta: oracle limited to N <= 8");
  const std::size_t params = n * (n + 1) / 2;

  // Parameterize logX in the H- eigenbasis: a pure basis change, but it makes
  // the flat large-|logX| valleys (kernel directions of H-/H+) axis-aligned,
  // which the coordinate polish below exploits.
  const Matrix vbasis = sym_eig(hp.h_minus).vectors;
  auto objective = [&](std::span<const double> s) {
    // barrier: beyond e^20 the exactly-zero eigenvalues of H+/H- are swamped
    // by roundoff and the objective turns into exploitable garbage
    for (double v : s)
      if (std::abs(v) > 20.0) return 1e100;
    const SymMatrix raw = detail::unpack_sym(s, n);
    const SymMatrix logx = SymMatrix::symmetrized(
        vbasis * raw.full() * vbasis.transposed(), 1e-7);
    return detail::trace_prod(detail::sym_exp(logx, 1.0), hp.h_plus) +
           detail::trace_prod(detail::sym_exp(logx, -1.0), hp.h_minus);
  };

  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 0.7);

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> best_s(params, 0.0);
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> s(params, 0.0);
    if (r > 0)
      for (double& v : s) v = gauss(rng);
    std::vector<double> m(params, 0.0), v2(params, 0.0);
    const double lr = 0.05, b1 = 0.9, b2 = 0.999, fd = 1e-5;
    double local_best = objective(s);
    std::vector<double> local_best_s = s;
    for (int it = 1; it <= iterations; ++it) {
      std::vector<double> grad(params);
      for (std::size_t p = 0; p < params; ++p) {
        std::vector<double> sp = s;
        sp[p] += fd;
        const double fp = objective(sp);
        sp[p] -= 2.0 * fd;
        const double fm = objective(sp);
        grad[p] = (fp - fm) / (2.0 * fd);
      }
      // exponential decay over three decades kills the Adam plateau
      const double lr_t = lr * std::pow(10.0, -3.0 * it / iterations);
      for (std::size_t p = 0; p < params; ++p) {
        m[p] = b1 * m[p] + (1.0 - b1) * grad[p];
        v2[p] = b2 * v2[p] + (1.0 - b2) * grad[p] * grad[p];
        const double mh = m[p] / (1.0 - std::pow(b1, it));
        const double vh = v2[p] / (1.0 - std::pow(b2, it));
        s[p] -= lr_t * mh / (std::sqrt(vh) + 1e-12);
      }
      const double f = objective(s);
      if (f < local_best) {
        local_best = f;
        local_best_s = s;
      }
    }
    // polish: cyclic coordinate descent with per-coordinate adaptive steps;
    // expanding steps keep making linear progress along the flat
    // large-|logX| valleys where Adam's decayed steps stall
    s = local_best_s;
    std::vector<double> steps(params, 0.25);
    const int sweeps = std::max(iterations / 50, 40);
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      double max_step = 0.0;
      for (std::size_t p = 0; p < params; ++p) {
        bool moved = false;
        for (double dir : {-1.0, 1.0}) {
          std::vector<double> trial = s;
          trial[p] += dir * steps[p];
          const double f = objective(trial);
          if (f < local_best) {
            local_best = f;
            s = trial;
            moved = true;
            break;
          }
        }
        steps[p] *= moved ? 2.0 : 0.5;
        max_step = std::max(max_step, steps[p]);
      }
      if (max_step < 1e-10) break;
    }
    local_best_s = s;
    if (local_best < best) {
      best = local_best;
      best_s = local_best_s;
    }
  }

  const SymMatrix best_logx = SymMatrix::symmetrized(
      vbasis * detail::unpack_sym(best_s, n).full() * vbasis.transposed(), 1e-7);
  BruteForceResult out{best, detail::sym_exp(best_logx, 1.0), 0.0, true};

  // Regularized stationary point, certified by agreement rather than assumed.
  const double eps = 1e-9;
  SymMatrix hm_reg = hp.h_minus;
  SymMatrix hp_reg = hp.h_plus;
  for (std::size_t i = 0; i < n; ++i) {
    hm_reg.add(i, i, eps);
    hp_reg.add(i, i, eps);  // bipartite graphs make H+ singular
  }
  const SymMatrix rp = mat_func(hp_reg, MatFunc::Sqrt);
  const SymMatrix rp_inv = mat_func(hp_reg, MatFunc::InvSqrt);
  const SymMatrix mid = mat_func(
      SymMatrix::symmetrized(rp.full() * hm_reg.full() * rp.full(), 1e-7),
      MatFunc::Sqrt);
  const SymMatrix x_star = SymMatrix::symmetrized(
      rp_inv.full() * mid.full() * rp_inv.full(), 1e-6);
  const SymMatrix x_star_inv = mat_func(x_star, MatFunc::Inv);
  out.delta_analytic = detail::trace_prod(x_star, hp.h_plus) +
                       detail::trace_prod(x_star_inv, hp.h_minus);
  return out;
}

struct YProbeReport {
  int trials = 0;
  double min_gap = 0.0;   // min over trials of f(X, Y) - f(X, 0)
  double max_gap = 0.0;
};

/// Checks that switching on Y never lowers the objective at the
/// optimizer's X: f(X, Y) - f(X, 0) = tr[Y X Y H-] >= 0.
inline YProbeReport probe_y_nonzero(const HamiltonianPair& hp,
                                    const SymMatrix& x_hat, int trials = 100,
                                    unsigned seed = 777) {
  const std::size_t n = hp.modes();
  if (n > 8) throw Error("probe_y_nonzero: oracle limited to N <= 8");
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  YProbeReport rep;
  rep.trials = trials;
  rep.min_gap = std::numeric_limits<double>::infinity();
  rep.max_gap = -rep.min_gap;
  for (int t = 0; t < trials; ++t) {
    SymMatrix y(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) y.set(i, j, gauss(rng));
    const Matrix yxy = y.full() * x_hat.full() * y.full();
    const SymMatrix yxy_sym = SymMatrix::symmetrized(yxy, 1e-6);
    const double gap = detail::trace_prod(yxy_sym, hp.h_minus);
    rep.min_gap = std::min(rep.min_gap, gap);
    rep.max_gap = std::max(rep.max_gap, gap);
  }
  return rep;
}

/// Direct evaluation of the Y-term for a caller-chosen Y.
inline double y_term(const HamiltonianPair& hp, const SymMatrix& x,
                     const SymMatrix& y) {
  const SymMatrix yxy =
      SymMatrix::symmetrized(y.full() * x.full() * y.full(), 1e-6);
  return detail::trace_prod(yxy, hp.h_minus);
}

struct ThetaScanReport {
  std::vector<double> s_values;
  std::vector<double> theta_values;
  std::vector<std::vector<double>> objective;  // [s][theta]
  std::vector<double> argmin_theta;            // per s
  double min_positivity = 0.0;   // min over mu of l00 l11 - |l01|^2
  double theta0_residual = 0.0;  // worst |block objective - direct route| at theta = 0
  double s1_theta_spread = 0.0;  // objective spread across theta at s = 1
};

namespace detail {

struct AppendixBlocks {
  // 2 x 2 Hamiltonian blocks of the rotated two-mode EPR operator
  double qq[2][2];
  double qp[2][2];
  double pp[2][2];
};

inline AppendixBlocks appendix_blocks(double s, double theta) {
  const double c = std::cos(theta), sn = std::sin(theta);
  AppendixBlocks b{};
  b.qq[0][0] = s * c * c + sn * sn / s;
  b.qq[0][1] = s * c;
  b.qq[1][0] = s * c;
  b.qq[1][1] = s;
  b.qp[0][0] = (1.0 / s - s) * c * sn;
  b.qp[0][1] = -sn / s;
  b.qp[1][0] = -s * sn;
  b.qp[1][1] = 0.0;
  b.pp[0][0] = s * sn * sn + c * c / s;
  b.pp[0][1] = -c / s;
  b.pp[1][0] = -c / s;
  b.pp[1][1] = 1.0 / s;
  return b;
}

}  // namespace detail

/// Scans the orthogonal-rotation angle of the two-mode EPR operator over a
/// translation-only ring group: the block objective
/// sum_mu sqrt(b_qq b_pp - Re(b_qp)^2) must be minimized at theta = 0
/// (mod pi) for every scale s, and at theta = 0 must agree with the direct
/// symplectic-eigenvalue route.
inline ThetaScanReport appendix_theta_scan(int n_ring,
                                           int theta_points = 64,
                                           std::vector<double> s_values = {}) {
  if (n_ring < 2) throw Error("appendix_theta_scan: ring size >= 2 required");
  if (s_values.empty()) {
    // logarithmic grid over [1/8, 8]
    const int m = 33;
    for (int i = 0; i < m; ++i)
      s_values.push_back(std::pow(2.0, -3.0 + 6.0 * i / (m - 1)));
  }
  // cyclic translations only, no reflection
  Perm shift(n_ring);
  for (int i = 0; i < n_ring; ++i) shift[i] = (i + 1) % n_ring;
  PermGroup grp = group_closure(n_ring, {shift});
  grp.set_designated_pair(0, 1);
  const CommutantBlockData cb = commutant_blocks(grp);

  ThetaScanReport rep;
  rep.s_values = s_values;
  rep.min_positivity = std::numeric_limits<double>::infinity();
  for (int mu = 0; mu < n_ring; ++mu)
    rep.min_positivity = std::min(
        rep.min_positivity,
        cb.l00[mu] * cb.l11[mu] - std::norm(cb.l01[mu]));

  for (int t = 0; t < theta_points; ++t)
    rep.theta_values.push_back(2.0 * std::numbers::pi * t / theta_points);

  const Matrix a00 = detail::averaged_pair_matrix(grp, 0, 0);
  const Matrix a01 = detail::averaged_pair_matrix(grp, 0, 1);
  const Matrix a10 = detail::averaged_pair_matrix(grp, 1, 0);
  const Matrix a11 = detail::averaged_pair_matrix(grp, 1, 1);

  auto block_objective = [&](double s, double theta) {
    const detail::AppendixBlocks hb = detail::appendix_blocks(s, theta);
    double total = 0.0;
    for (int mu = 0; mu < n_ring; ++mu) {
      const std::complex<double> l01 = cb.l01[mu];
      const std::complex<double> l10 = std::conj(l01);
      const double bqq = hb.qq[0][0] * cb.l00[mu] + hb.qq[1][1] * cb.l11[mu] +
                         (hb.qq[0][1] * l01 + hb.qq[1][0] * l10).real();
      const double bpp = hb.pp[0][0] * cb.l00[mu] + hb.pp[1][1] * cb.l11[mu] +
                         (hb.pp[0][1] * l01 + hb.pp[1][0] * l10).real();
      const std::complex<double> bqp =
          hb.qp[0][0] * cb.l00[mu] + hb.qp[1][1] * cb.l11[mu] +
          hb.qp[0][1] * l01 + hb.qp[1][0] * l10;
      const double rad = bqq * bpp - bqp.real() * bqp.real();
      // exact cancellations leave O(eps)-scale residue; snap those to zero
      if (rad > 1e-13 * std::abs(bqq * bpp)) total += std::sqrt(rad);
    }
    return total;
  };

  auto direct_objective = [&](double s, double theta) {
    const detail::AppendixBlocks hb = detail::appendix_blocks(s, theta);
    auto combine = [&](const double w[2][2]) {
      Matrix m(n_ring, n_ring);
      m = w[0][0] * a00 + w[0][1] * a01 + w[1][0] * a10 + w[1][1] * a11;
      return m;
    };
    const Matrix hqq = combine(hb.qq), hqp = combine(hb.qp), hpp = combine(hb.pp);
    SymMatrix big(2 * n_ring);
    for (int i = 0; i < n_ring; ++i)
      for (int j = 0; j < n_ring; ++j) {
        if (j >= i) {
          big.set(i, j, 0.5 * (hqq(i, j) + hqq(j, i)));
          big.set(n_ring + i, n_ring + j, 0.5 * (hpp(i, j) + hpp(j, i)));
        }
        big.set(i, n_ring + j, hqp(i, j));
      }
    // the mirror write big(n+j, i) = hqp(i, j) realizes the h_pq = h_qp^T block
    const std::vector<double> d =
        symplectic_eigenvalues(big, SymplecticSpace(n_ring));
    double total = 0.0;
    for (double v : d) total += v;
    return total;
  };

  rep.theta0_residual = 0.0;
  for (double s : s_values) {
    std::vector<double> row;
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0;
    for (double theta : rep.theta_values) {
      const double obj = block_objective(s, theta);
      row.push_back(obj);
      if (obj < best - 1e-14) {
        best = obj;
        best_theta = theta;
      }
    }
    rep.objective.push_back(row);
    rep.argmin_theta.push_back(best_theta);
    rep.theta0_residual = std::max(
        rep.theta0_residual, std::abs(block_objective(s, 0.0) - direct_objective(s, 0.0)));
  }

  double s1_min = std::numeric_limits<double>::infinity();
  double s1_max = -s1_min;
  for (double theta : rep.theta_values) {
    const double obj = block_objective(1.0, theta);
    s1_min = std::min(s1_min, obj);
    s1_max = std::max(s1_max, obj);
  }
  rep.s1_theta_spread = s1_max - s1_min;
  return rep;
}

}  // namespace gfrust

#endif  // GFRUST_ORACLE_HPP

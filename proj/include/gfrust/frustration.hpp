#ifndef GFRUST_FRUSTRATION_HPP
#define GFRUST_FRUSTRATION_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "gfrust/entanglement.hpp"
#include "gfrust/graph.hpp"
#include "gfrust/perm_group.hpp"
#include "gfrust/sym_matrix.hpp"
#include "gfrust/symplectic.hpp"

namespace gfrust {

/// The QQ/PP Hamiltonian blocks H+ and H- in the edge-average
/// normalization (1/|E|); for a degree-d symmetric graph
/// H+ + H- = identity / N and H- annihilates (1, ..., 1).
struct HamiltonianPair {
  SymMatrix h_plus;
  SymMatrix h_minus;
  std::string provenance;  // "edge-averaged" | "group-twirled"

  std::size_t modes() const { return h_plus.dim(); }
};

/// Single-edge blocks h+- = (|k><k| + |l><l| +- |k><l| +- |l><k|) / 4.
inline HamiltonianPair edge_pair(std::size_t n, int k, int l) {
  SymMatrix hp(n), hm(n);
  hp.set(k, k, 0.25);
  hp.set(l, l, 0.25);
  hp.set(k, l, 0.25);
  hm.set(k, k, 0.25);
  hm.set(l, l, 0.25);
  hm.set(k, l, -0.25);
  return {hp, hm, "edge"};
}

/// Edge average over the graph; equals (1/2N)(1 +- A/d) for a symmetric
/// graph of degree d (the spectral shortcut used elsewhere).
inline HamiltonianPair build_pair_edges(const Graph& g,
                                        std::size_t cap = 1'000'000) {
  const SymmetryCheck chk = check_symmetric_graph(g, cap);
  if (!chk.ok) throw Error("build_pair_edges: graph not symmetric: " + chk.reason);
  const std::size_t n = g.n;
  SymMatrix hp(n), hm(n);
  const double w = 0.25 / static_cast<double>(g.edges.size());
  for (auto [k, l] : g.edges) {
    hp.add(k, k, w);
    hp.add(l, l, w);
    hp.add(k, l, w);
    hm.add(k, k, w);
    hm.add(l, l, w);
    hm.add(k, l, -w);
  }
  return {hp, hm, "edge-averaged"};
}

/// Group twirl of the single-edge blocks; requires a k <-> l swap element.
inline HamiltonianPair build_pair_group(const PermGroup& grp, int k, int l) {
  if (!grp.contains_swap(k, l))
    throw Error("build_pair_group: swap hypothesis violated for pair (" +
                std::to_string(k) + ", " + std::to_string(l) + ")");
  const HamiltonianPair local = edge_pair(grp.degree(), k, l);
  return {twirl(local.h_plus, grp), twirl(local.h_minus, grp), "group-twirled"};
}

/// E0 = 2 ||sqrt(H+^(1/2) H- H+^(1/2))||_1, the trace-norm route.
inline double ground_energy(const HamiltonianPair& hp) {
  const SymMatrix root = mat_func(hp.h_plus, MatFunc::Sqrt);
  const Matrix inner = root.full() * hp.h_minus.full() * root.full();
  const SymMatrix m = SymMatrix::symmetrized(inner, 1e-7);
  const EigResult e = sym_eig(m);
  const double tol = 1e-12 * std::max(m.frobenius_norm(), 1e-30);
  double s = 0.0;
  for (double x : e.values)
    if (x > tol) s += std::sqrt(x);  // roundoff-scale modes are exact zeros
  return 2.0 * s;
}

/// E0 = 2 sum_i sqrt(lp_i lm_i) over simultaneously diagonalized spectra;
/// valid only for commuting pairs.
inline double ground_energy_spectral(const HamiltonianPair& hp) {
  const SimultaneousEig se = simultaneous_eig(hp.h_plus, hp.h_minus);
  double amax = 0.0, bmax = 0.0;
  for (double v : se.a_values) amax = std::max(amax, std::abs(v));
  for (double v : se.b_values) bmax = std::max(bmax, std::abs(v));
  const double tol = 1e-12 * std::max(amax * bmax, 1e-30);
  double s = 0.0;
  for (std::size_t i = 0; i < se.a_values.size(); ++i) {
    const double prod = se.a_values[i] * se.b_values[i];
    if (prod > tol) s += std::sqrt(prod);  // exact-zero modes carry roundoff only
  }
  return 2.0 * s;
}

/// E0 = (1/N) sum_i sqrt(1 - (a_i/d)^2) from the adjacency spectrum.
inline double ground_energy_adjacency(const Graph& g) {
  const EigResult e = sym_eig(adjacency(g));
  double s = 0.0;
  for (double a : e.values) {
    const double x = 1.0 - (a / g.degree) * (a / g.degree);
    if (x > 1e-12) s += std::sqrt(x);  // |a| = degree modes are exact zeros
  }
  return s / g.n;
}

enum class ClosedFormFamily { Ring, Torus, MeanField };

/// Closed forms: ring cotangent branches by parity, the d-dimensional
/// torus cosine sum, and the mean-field sqrt((N-2)/N).
inline double closed_form_energy(ClosedFormFamily family, int n, int dim = 1) {
  if (n < 3) throw Error("closed_form_energy: N >= 3 required");
  const double pi = std::numbers::pi;
  switch (family) {
    case ClosedFormFamily::Ring:
      return (n % 2 == 0) ? (2.0 / n) / std::tan(pi / n)
                          : (1.0 / n) / std::tan(pi / (2.0 * n));
    case ClosedFormFamily::MeanField:
      return std::sqrt((n - 2.0) / n);
    case ClosedFormFamily::Torus: {
      if (dim < 1) throw Error("closed_form_energy: torus needs d >= 1");
      long total = 1;
      for (int a = 0; a < dim; ++a) total *= n;
      if (total > 100'000'000) throw Error("closed_form_energy: torus too large");
      // iterate over (l_1 .. l_d) in [0, N)^d
      std::vector<int> l(dim, 0);
      double sum = 0.0;
      for (long it = 0; it < total; ++it) {
        double c = 0.0;
        for (int a = 0; a < dim; ++a) c += std::cos(2.0 * pi * l[a] / n);
        c /= dim;
        sum += std::sqrt(std::max(0.0, 1.0 - c * c));
        for (int a = 0; a < dim; ++a) {
          if (++l[a] < n) break;
          l[a] = 0;
        }
      }
      return sum / static_cast<double>(total);
    }
  }
  throw Error("closed_form_energy: unknown family");
}

inline double ring_limit_energy() { return 2.0 / std::numbers::pi; }

enum class LatticeKind { Square, Cubic, Honeycomb, Triangular };

inline const char* lattice_name(LatticeKind k) {
  switch (k) {
    case LatticeKind::Square: return "square";
    case LatticeKind::Cubic: return "cubic";
    case LatticeKind::Honeycomb: return "honeycomb";
    case LatticeKind::Triangular: return "triangular";
  }
  return "?";
}

namespace detail {

inline double bz_midpoint(LatticeKind kind, long n) {
  const double step = 2.0 * std::numbers::pi / n;
  double sum = 0.0;
  const bool three_d = (kind == LatticeKind::Cubic);
  const long nz = three_d ? n : 1;
  for (long i = 0; i < n; ++i) {
    const double x = (i + 0.5) * step;
    for (long j = 0; j < n; ++j) {
      const double y = (j + 0.5) * step;
      for (long k = 0; k < nz; ++k) {
        double lam2;
        switch (kind) {
          case LatticeKind::Square: {
            const double l = 0.5 * (std::cos(x) + std::cos(y));
            lam2 = l * l;
            break;
          }
          case LatticeKind::Cubic: {
            const double z = (k + 0.5) * step;
            const double l = (std::cos(x) + std::cos(y) + std::cos(z)) / 3.0;
            lam2 = l * l;
            break;
          }
          case LatticeKind::Triangular: {
            const double l = (std::cos(x) + std::cos(y) + std::cos(x + y)) / 3.0;
            lam2 = l * l;
            break;
          }
          case LatticeKind::Honeycomb: {
            // |1 + e^{ix} + e^{iy}|^2 / 9; both bands share |lambda|
            const double re = 1.0 + std::cos(x) + std::cos(y);
            const double im = std::sin(x) + std::sin(y);
            lam2 = (re * re + im * im) / 9.0;
            break;
          }
        }
        sum += std::sqrt(std::max(0.0, 1.0 - lam2));
      }
    }
  }
  double cells = static_cast<double>(n) * n * (three_d ? n : 1);
  return sum / cells;
}

}  // namespace detail

/// Brillouin-zone average of sqrt(1 - lambda(k)^2) with the
/// degree-normalized dispersion; midpoint rule with Richardson
/// step-doubling until successive extrapolants differ by < 1e-7.
inline double infinite_lattice_energy(LatticeKind kind, long resolution = 64) {
  if (resolution < 32) throw Error("infinite_lattice_energy: resolution >= 32 required");
  const long cap = (kind == LatticeKind::Cubic) ? 512 : 4096;
  double prev = detail::bz_midpoint(kind, resolution);
  std::optional<double> prev_rich;
  for (long n = 2 * resolution; n <= cap; n *= 2) {
    const double cur = detail::bz_midpoint(kind, n);
    const double rich = (4.0 * cur - prev) / 3.0;
    if (prev_rich && std::abs(rich - *prev_rich) < 1e-7) return rich;
    prev_rich = rich;
    prev = cur;
  }
  throw Error(std::string("infinite_lattice_energy: no convergence for ") +
              lattice_name(kind) + "; last estimates " + std::to_string(prev) +
              ", " + std::to_string(prev_rich.value_or(0.0)));
}

/// Regularized ground-state CM
/// Gamma_eps = sqrt((H- + eps)(H+ + eps)^-1) (+) sqrt((H+ + eps)(H- + eps)^-1).
/// Commuting pairs only.
inline CovarianceMatrix ground_cm(const HamiltonianPair& hp, double eps) {
  if (!(eps > 0.0)) throw Error("ground_cm: eps must be positive");
  const std::size_t n = hp.modes();
  // Work in the common eigenbasis: the regularized ratio is then formed
  // mode by mode, which stays accurate even when eps makes it huge.
  const SimultaneousEig se = simultaneous_eig(hp.h_plus, hp.h_minus);
  std::vector<double> ratio(n);
  for (std::size_t i = 0; i < n; ++i)
    ratio[i] = std::sqrt((se.b_values[i] + eps) / (se.a_values[i] + eps));
  SymMatrix gamma(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double q = 0.0, p = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double vv = se.basis(i, k) * se.basis(j, k);
        q += vv * ratio[k];
        p += vv / ratio[k];
      }
      gamma.set(i, j, q);
      gamma.set(n + i, n + j, p);
    }
  return CovarianceMatrix(SymplecticSpace(n), gamma);
}

/// Headline output pair: minimal EPR uncertainty and the resulting EoF.
struct FrustrationResult {
  double e0 = 0.0;
  double emax_ebits = 0.0;
  std::string graph;
  int modes = 0;
  int degree = 0;
  std::string method;
  bool unbounded = false;  // N = 2 singular EPR case
};

/// Cheapest exact route per family, cross-checked against the literal
/// trace-norm formula for N <= 64.
inline FrustrationResult emax_for_graph(const GraphSpec& spec,
                                        std::size_t cap = 1'000'000) {
  const Graph g = build_graph(spec);
  FrustrationResult r;
  r.graph = g.name;
  r.modes = g.n;
  r.degree = g.degree;
  switch (spec.family) {
    case GraphFamily::Ring:
      r.e0 = closed_form_energy(ClosedFormFamily::Ring, spec.n);
      r.method = "closed-form";
      break;
    case GraphFamily::Torus:
      r.e0 = closed_form_energy(ClosedFormFamily::Torus, spec.n, spec.dim);
      r.method = "closed-form";
      break;
    case GraphFamily::Complete:
      r.e0 = closed_form_energy(ClosedFormFamily::MeanField, spec.n);
      r.method = "closed-form";
      break;
    default:
      r.e0 = ground_energy_adjacency(g);
      r.method = "spectral";
      break;
  }
  if (g.n <= 64) {
    const double tn = ground_energy(build_pair_edges(g, cap));
    if (std::abs(tn - r.e0) > 1e-9)
      throw Error("emax_for_graph: route disagreement on " + g.name + ": " +
                  std::to_string(r.e0) + " vs trace-norm " + std::to_string(tn));
    r.method += "+trace-norm";
  }
  if (r.e0 > 1.0 + 1e-12)
    throw Error("emax_for_graph: E0 = " + std::to_string(r.e0) + " exceeds 1");
  r.emax_ebits = eof_from_delta(r.e0);
  return r;
}

/// Result for a user-supplied symmetric graph (no closed form).
inline FrustrationResult emax_for_custom_graph(const Graph& g,
                                               std::size_t cap = 1'000'000) {
  const HamiltonianPair hp = build_pair_edges(g, cap);  // validates symmetry
  FrustrationResult r;
  r.graph = g.name;
  r.modes = g.n;
  r.degree = g.degree;
  r.e0 = ground_energy(hp);
  r.method = "trace-norm";
  const double spectral = ground_energy_adjacency(g);
  if (std::abs(spectral - r.e0) > 1e-9)
    throw Error("emax_for_custom_graph: route disagreement");
  if (r.e0 < 1e-12) {
    // singular EPR regime: entanglement grows without bound (N = 2 pair)
    r.unbounded = true;
    r.emax_ebits = std::numeric_limits<double>::infinity();
    return r;
  }
  r.emax_ebits = eof_from_delta(r.e0);
  return r;
}

}  // namespace gfrust

#endif  // GFRUST_FRUSTRATION_HPP

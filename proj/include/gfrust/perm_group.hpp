#ifndef GFRUST_PERM_GROUP_HPP
#define GFRUST_PERM_GROUP_HPP

#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gfrust/graph.hpp"
#include "gfrust/sym_matrix.hpp"
#include "gfrust/symplectic.hpp"

namespace gfrust {

/// Permutation group materialized as an explicit element list, optionally
/// with a designated mode pair (k, l).
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> elements,
            std::optional<std::pair<int, int>> pair = std::nullopt)
      : degree_(degree), elements_(std::move(elements)), pair_(pair) {
    if (elements_.empty()) throw Error("PermGroup: empty element list");
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::optional<std::pair<int, int>>& designated_pair() const { return pair_; }

  void set_designated_pair(int k, int l) { pair_ = {k, l}; }

  bool contains_swap(int k, int l) const {
    for (const Perm& e : elements_)
      if (e[k] == l && e[l] == k) return true;
    return false;
  }

 private:
  int degree_;
  std::vector<Perm> elements_;
  std::optional<std::pair<int, int>> pair_;
};

inline std::size_t group_cap_from_env() {
  if (const char* v = std::getenv("GF_MAX_GROUP")) {
    const long n = std::atol(v);
    if (n > 0) return static_cast<std::size_t>(n);
  }
  return 1'000'000;
}

/// Breadth-first closure of a generating set; an empty set yields the
/// trivial group.
inline PermGroup group_closure(int degree, const std::vector<Perm>& generators,
                               std::size_t cap = 1'000'000) {
  Perm id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;
  for (const Perm& p : generators) {
    if (static_cast<int>(p.size()) != degree)
      throw Error("group_closure: generator degree mismatch");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        throw Error("group_closure: generator is not a bijection");
      seen[v] = 1;
    }
  }
  std::set<Perm> elems{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& p : generators) {
        Perm c(degree);
        for (int i = 0; i < degree; ++i) c[i] = p[e[i]];
        if (elems.insert(c).second) {
          if (elems.size() > cap)
            throw Error("group_closure: cap of " + std::to_string(cap) +
                        " elements exceeded");
          next.push_back(std::move(c));
        }
      }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::vector<Perm>(elems.begin(), elems.end()));
}

inline PermGroup graph_symmetry_group(const Graph& g,
                                      std::size_t cap = 1'000'000) {
  PermGroup grp = group_closure(g.n, g.generators, cap);
  grp.set_designated_pair(g.edges.front().first, g.edges.front().second);
  return grp;
}

/// Group average (1/|G|) sum_g T_g M T_g^T.
inline SymMatrix twirl(const SymMatrix& m, const PermGroup& grp) {
  const int n = grp.degree();
  if (static_cast<int>(m.dim()) != n) throw Error("twirl: dimension mismatch");
  Matrix acc(n, n);
  for (const Perm& g : grp.elements())
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc(g[i], g[j]) += m(i, j);
  const double w = 1.0 / static_cast<double>(grp.order());
  SymMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) r.set(i, j, w * 0.5 * (acc(i, j) + acc(j, i)));
  return r;
}

/// Group average of a CM with T_g acting identically on the Q and P blocks.
inline CovarianceMatrix twirl_cm(const CovarianceMatrix& cm, const PermGroup& grp) {
  const int n = grp.degree();
  if (static_cast<int>(cm.modes()) != n) throw Error("twirl_cm: dimension mismatch");
  const std::size_t dim = 2 * n;
  Matrix acc(dim, dim);
  auto image = [&](const Perm& g, std::size_t i) {
    return i < static_cast<std::size_t>(n) ? static_cast<std::size_t>(g[i])
                                           : static_cast<std::size_t>(n + g[i - n]);
  };
  for (const Perm& g : grp.elements())
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        acc(image(g, i), image(g, j)) += cm.gamma()(i, j);
  const double w = 1.0 / static_cast<double>(grp.order());
  SymMatrix r(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      r.set(i, j, w * 0.5 * (acc(i, j) + acc(j, i)));
  return CovarianceMatrix(cm.space(), r);
}

inline double twirl_residual(const CovarianceMatrix& cm, const PermGroup& grp) {
  const CovarianceMatrix t = twirl_cm(cm, grp);
  return (t.gamma().full() - cm.gamma().full()).frobenius_norm();
}

/// Simultaneous diagonal data of the averaged matrices
/// A_ij = (1/|G|) sum_g T_g |i><j| T_g^T for i, j in the designated pair.
struct CommutantBlockData {
  std::vector<double> l00;
  std::vector<double> l11;
  std::vector<std::complex<double>> l01;
};

namespace detail {

inline Matrix averaged_pair_matrix(const PermGroup& grp, int i, int j) {
  const int n = grp.degree();
  Matrix a(n, n);
  const double w = 1.0 / static_cast<double>(grp.order());
  for (const Perm& g : grp.elements()) a(g[i], g[j]) += w;
  return a;
}

// Detects a regular cyclic action: some element whose powers enumerate the
// whole group while visiting every point.
inline std::optional<Perm> cyclic_generator(const PermGroup& grp) {
  const int n = grp.degree();
  if (grp.order() != static_cast<std::size_t>(n)) return std::nullopt;
  for (const Perm& g : grp.elements()) {
    // orbit of point 0 under powers of g must be everything
    std::vector<char> seen(n, 0);
    int p = 0;
    int steps = 0;
    while (!seen[p]) {
      seen[p] = 1;
      p = g[p];
      ++steps;
    }
    if (steps == n) {
      // powers of g are n distinct elements = whole group
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Requires an Abelian commutant: the four averaged matrices must pairwise
/// commute. Cyclic regular groups use the discrete Fourier basis; other
/// groups fall back to a common unitary eigenbasis found via a generic
/// Hermitian combination (complex arithmetic stays inside this function).
inline CommutantBlockData commutant_blocks(const PermGroup& grp) {
  using cplx = std::complex<double>;
  if (!grp.designated_pair()) throw Error("commutant_blocks: no designated pair");
  const auto [k, l] = *grp.designated_pair();
  const int n = grp.degree();
  const Matrix a00 = detail::averaged_pair_matrix(grp, k, k);
  const Matrix a01 = detail::averaged_pair_matrix(grp, k, l);
  const Matrix a10 = detail::averaged_pair_matrix(grp, l, k);
  const Matrix a11 = detail::averaged_pair_matrix(grp, l, l);

  const Matrix* mats[4] = {&a00, &a01, &a10, &a11};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Matrix c = (*mats[i]) * (*mats[j]) - (*mats[j]) * (*mats[i]);
      if (c.frobenius_norm() > 1e-10)
        throw Error("commutant not Abelian: [A_" + std::to_string(i) + ", A_" +
                    std::to_string(j) + "] residual " +
                    std::to_string(c.frobenius_norm()));
    }

  // common unitary eigenbasis
  std::vector<std::vector<cplx>> basis;  // basis[mu][j]
  if (const auto gen = detail::cyclic_generator(grp)) {
    // relabel points as powers of the generator; Fourier in that labeling
    std::vector<int> pos(n);  // pos[point] = power index m with g^m(k) = point
    int p = k;
    for (int m = 0; m < n; ++m) {
      pos[p] = m;
      p = (*gen)[p];
    }
    basis.resize(n, std::vector<cplx>(n));
    const double w = 2.0 * std::numbers::pi / n;
    for (int mu = 0; mu < n; ++mu)
      for (int j = 0; j < n; ++j)
        basis[mu][j] = std::polar(1.0 / std::sqrt(double(n)), -w * mu * pos[j]);
  } else {
    // Hermitian combination with generic coefficients; real 2n x 2n embedding
    const double c[4] = {1.0, std::sqrt(2.0), std::sqrt(3.0), std::sqrt(5.0)};
    SymMatrix x(n);
    Matrix y(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        y(i, j) = c[3] * 0.5 * (a01(i, j) - a10(i, j));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const double v = c[0] * a00(i, j) + c[1] * a11(i, j) +
                         c[2] * 0.5 * (a01(i, j) + a10(i, j));
        const double vt = c[0] * a00(j, i) + c[1] * a11(j, i) +
                          c[2] * 0.5 * (a01(j, i) + a10(j, i));
        x.set(i, j, 0.5 * (v + vt));
      }
    SymMatrix emb(2 * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (j >= i) {
          emb.set(i, j, x(i, j));
          emb.set(n + i, n + j, x(i, j));
        }
        emb.set(n + i, j, y(i, j));  // mirrors to (j, n+i) = -y(j,i) = y(i,j)
      }
    const EigResult e = sym_eig(emb);
    for (int col = 0; col < 2 * n && static_cast<int>(basis.size()) < n; ++col) {
      std::vector<cplx> u(n);
      for (int i = 0; i < n; ++i)
        u[i] = cplx(e.vectors(i, col), e.vectors(n + i, col));
      // Gram-Schmidt against accepted vectors
      for (const auto& v : basis) {
        cplx ip = 0.0;
        for (int i = 0; i < n; ++i) ip += std::conj(v[i]) * u[i];
        for (int i = 0; i < n; ++i) u[i] -= ip * v[i];
      }
      double norm = 0.0;
      for (const cplx& z : u) norm += std::norm(z);
      norm = std::sqrt(norm);
      if (norm > 0.3) {
        for (cplx& z : u) z /= norm;
        basis.push_back(std::move(u));
      }
    }
    if (static_cast<int>(basis.size()) != n)
      throw Error("commutant_blocks: failed to assemble a common eigenbasis");
  }

  auto diag_element = [&](const Matrix& a, int mu) {
    cplx s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        s += std::conj(basis[mu][i]) * a(i, j) * basis[mu][j];
    return s;
  };
  auto offdiag_residual = [&](const Matrix& a) {
    double worst = 0.0;
    for (int mu = 0; mu < n; ++mu)
      for (int nu = 0; nu < n; ++nu) {
        if (mu == nu) continue;
        cplx s = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            s += std::conj(basis[mu][i]) * a(i, j) * basis[nu][j];
        worst = std::max(worst, std::abs(s));
      }
    return worst;
  };
  for (const Matrix* a : mats)
    if (offdiag_residual(*a) > 1e-8)
      throw Error("commutant_blocks: basis does not diagonalize the averages");

  CommutantBlockData out;
  out.l00.resize(n);
  out.l11.resize(n);
  out.l01.resize(n);
  for (int mu = 0; mu < n; ++mu) {
    out.l00[mu] = diag_element(a00, mu).real();
    out.l11[mu] = diag_element(a11, mu).real();
    out.l01[mu] = diag_element(a01, mu);
    if (out.l00[mu] < -1e-10 || out.l11[mu] < -1e-10 ||
        out.l00[mu] * out.l11[mu] - std::norm(out.l01[mu]) < -1e-10)
      throw Error("commutant_blocks: principal-minor positivity violated");
  }
  return out;
}

}  // namespace gfrust

#endif  // GFRUST_PERM_GROUP_HPP

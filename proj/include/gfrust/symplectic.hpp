#ifndef GFRUST_SYMPLECTIC_HPP
#define GFRUST_SYMPLECTIC_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gfrust/sym_matrix.hpp"

namespace gfrust {

/// Phase space of N modes in the (Q_1..Q_N, P_1..P_N) operator ordering.
/// The symplectic form is sigma = [[0, 1], [-1, 0]] in N x N blocks.
struct SymplecticSpace {
  std::size_t modes;

  explicit SymplecticSpace(std::size_t n) : modes(n) {
    if (n == 0) throw Error("SymplecticSpace: need at least one mode");
  }

  std::size_t dim() const { return 2 * modes; }

  Matrix form() const {
    Matrix s(dim(), dim());
    for (std::size_t i = 0; i < modes; ++i) {
      s(i, modes + i) = 1.0;
      s(modes + i, i) = -1.0;
    }
    return s;
  }
};

/// The N nonnegative invariants d_i with spectrum(sigma M sigma^T M) =
/// {d_i^2}, each doubled. Computed through the symmetric congruence
/// sqrt(M) sigma M sigma^T sqrt(M), which shares that spectrum.
inline std::vector<double> symplectic_eigenvalues(const SymMatrix& m,
                                                  const SymplecticSpace& space) {
  if (m.dim() != space.dim())
    throw Error("symplectic_eigenvalues: matrix/space dimension mismatch");
  const SymMatrix root = mat_func(m, MatFunc::Sqrt);
  const Matrix sigma = space.form();
  const Matrix k = root.full() * sigma * m.full() * sigma.transposed() * root.full();
  const SymMatrix ks = SymMatrix::symmetrized(k, 1e-7);
  const EigResult e = sym_eig(ks);
  const double kfn = ks.frobenius_norm();
  const double tol = 1e-8 * (1.0 + kfn);
  // roundoff-scale d^2 snaps to zero: sqrt must not inflate O(eps) to O(sqrt(eps))
  const double zero_tol = 1e-12 * std::max(kfn, 1e-30);
  std::vector<double> d(space.modes);
  for (std::size_t i = 0; i < space.modes; ++i) {
    const double sq = e.values[2 * i];  // descending, values come in pairs
    if (sq < -tol)
      throw Error("symplectic_eigenvalues: negative d^2 = " + std::to_string(sq));
    d[i] = (std::abs(sq) <= zero_tol) ? 0.0 : std::sqrt(std::max(sq, 0.0));
  }
  return d;
}

/// 2N x 2N covariance matrix over a symplectic space. The physicality
/// contract Gamma >= i sigma is checked by validate_cm; the vacuum is the
/// identity in this normalization.
class CovarianceMatrix {
 public:
  CovarianceMatrix(SymplecticSpace space, SymMatrix gamma)
      : space_(space), gamma_(std::move(gamma)) {
    if (gamma_.dim() != space_.dim())
      throw Error("CovarianceMatrix: matrix dimension != 2N");
  }

  static CovarianceMatrix vacuum(std::size_t modes) {
    return CovarianceMatrix(SymplecticSpace(modes), SymMatrix::identity(2 * modes));
  }

  const SymplecticSpace& space() const { return space_; }
  const SymMatrix& gamma() const { return gamma_; }
  std::size_t modes() const { return space_.modes; }

  SymMatrix qq() const { return block_sym(0, 0); }
  SymMatrix pp() const { return block_sym(space_.modes, space_.modes); }

  Matrix qp() const {
    const std::size_t n = space_.modes;
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = gamma_(i, n + j);
    return b;
  }

 private:
  SymMatrix block_sym(std::size_t r0, std::size_t c0) const {
    const std::size_t n = space_.modes;
    SymMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) b.set(i, j, gamma_(r0 + i, c0 + j));
    return b;
  }

  SymplecticSpace space_;
  SymMatrix gamma_;
};

struct CmValidity {
  bool ok;
  double min_symplectic_eigenvalue;
  std::string detail;
};

/// Gamma >= i sigma, i.e. every symplectic eigenvalue >= 1 - 1e-8.
inline CmValidity validate_cm(const CovarianceMatrix& cm) {
  const std::vector<double> d = symplectic_eigenvalues(cm.gamma(), cm.space());
  double min_d = d.empty() ? 0.0 : d.back();
  for (double v : d) min_d = std::min(min_d, v);
  CmValidity r{min_d >= 1.0 - 1e-8, min_d, ""};
  if (!r.ok)
    r.detail = "uncertainty violation: min symplectic eigenvalue " +
               std::to_string(min_d);
  return r;
}

}  // namespace gfrust

#endif  // GFRUST_SYMPLECTIC_HPP

#ifndef GFRUST_SYM_MATRIX_HPP
#define GFRUST_SYM_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfrust {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Minimal dense real matrix, row-major. Used for non-symmetric
/// intermediates (eigenbases, block extraction, products).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (double v : data_) s += v * v;
    return std::sqrt(s);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  friend Matrix operator*(double s, const Matrix& a) {
    Matrix c = a;
    for (double& v : c.data_) v *= s;
    return c;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Dense real symmetric matrix. Writes mirror both triangles; constructors
/// reject non-finite entries.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t dim) : m_(dim, dim) {
    if (dim == 0) throw Error("SymMatrix: dimension must be positive");
  }

  static SymMatrix identity(std::size_t n) {
    SymMatrix s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, i, 1.0);
    return s;
  }

  static SymMatrix diagonal(std::span<const double> d) {
    SymMatrix s(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) s.set(i, i, d[i]);
    return s;
  }

  /// Accepts a nearly-symmetric matrix (e.g. a product of commuting
  /// symmetric factors) by averaging the triangles. The asymmetry must stay
  /// below max_asym relative to the Frobenius norm.
  static SymMatrix symmetrized(const Matrix& m, double max_asym = 1e-9) {
    if (m.rows() != m.cols()) throw Error("symmetrized: matrix not square");
    const std::size_t n = m.rows();
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const double d = m(i, j) - m(j, i);
        asym += d * d;
      }
    asym = std::sqrt(asym);
    const double scale = 1.0 + m.frobenius_norm();
    if (asym > max_asym * scale)
      throw Error("symmetrized: asymmetry " + std::to_string(asym) +
                  " exceeds tolerance");
    SymMatrix s(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s.set(i, j, 0.5 * (m(i, j) + m(j, i)));
    return s;
  }

  std::size_t dim() const { return m_.rows(); }

  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  void set(std::size_t i, std::size_t j, double v) {
    if (!std::isfinite(v)) throw Error("SymMatrix: non-finite entry");
    m_(i, j) = v;
    m_(j, i) = v;
  }

  void add(std::size_t i, std::size_t j, double v) { set(i, j, m_(i, j) + v); }

  const Matrix& full() const { return m_; }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i);
    return t;
  }

  double frobenius_norm() const { return m_.frobenius_norm(); }

  friend SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw Error("SymMatrix sum: dimension mismatch");
    SymMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) + b(i, j));
    return c;
  }

  friend SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw Error("SymMatrix diff: dimension mismatch");
    SymMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) c.set(i, j, a(i, j) - b(i, j));
    return c;
  }

  friend SymMatrix operator*(double s, const SymMatrix& a) {
    SymMatrix c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = i; j < a.dim(); ++j) c.set(i, j, s * a(i, j));
    return c;
  }

 private:
  Matrix m_;
};

inline double commutator_norm(const SymMatrix& a, const SymMatrix& b) {
  const Matrix ab = a.full() * b.full();
  return (ab - ab.transposed()).frobenius_norm();
}

struct EigResult {
  std::vector<double> values;  // descending
  Matrix vectors;              // columns, orthonormal
};

/// Cyclic Jacobi sweeps. Converged when the off-diagonal Frobenius norm
/// drops below 1e-12 * ||M||_F.
inline EigResult sym_eig(const SymMatrix& mat) {
  const std::size_t n = mat.dim();
  Matrix a = mat.full();
  Matrix v = Matrix::identity(n);
  const double norm = std::max(a.frobenius_norm(), 1e-300);
  const double target = 1e-12 * norm;

  auto offdiag = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  const int max_sweeps = 64;
  int sweep = 0;
  while (offdiag() > target) {
    if (++sweep > max_sweeps)
      throw Error("sym_eig: no convergence after " + std::to_string(max_sweeps) +
                  " sweeps, off-diagonal residual " + std::to_string(offdiag()));
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigResult r;
  r.values.resize(n);
  r.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = a(order[j], order[j]);
    for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = v(i, order[j]);
  }
  return r;
}

enum class MatFunc { Sqrt, Inv, InvSqrt };

/// Applies f to the spectrum in the eigenbasis. Negative roundoff in
/// [-tol, 0] is clamped to zero for Sqrt; Inv/InvSqrt reject eigenvalues
/// below tol.
inline SymMatrix mat_func(const SymMatrix& m, MatFunc f) {
  const EigResult e = sym_eig(m);
  const double tol = 1e-10 * std::max(m.frobenius_norm(), 1.0);
  const std::size_t n = m.dim();
  std::vector<double> fd(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = e.values[i];
    switch (f) {
      case MatFunc::Sqrt:
        if (x < -tol)
          throw Error("mat_func sqrt: negative eigenvalue " + std::to_string(x));
        // roundoff-scale eigenvalues snap to zero so sqrt does not turn an
        // O(eps) error into an O(sqrt(eps)) one
        fd[i] = (std::abs(x) <= tol) ? 0.0 : std::sqrt(x);
        break;
      case MatFunc::Inv:
      case MatFunc::InvSqrt:
        if (x <= tol)
          throw Error("mat_func: singular matrix, eigenvalue " + std::to_string(x));
        fd[i] = (f == MatFunc::Inv) ? 1.0 / x : 1.0 / std::sqrt(x);
        break;
    }
  }
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = fd[i];
  return SymMatrix::symmetrized(e.vectors * d * e.vectors.transposed(), 1e-7);
}

/// Sum of absolute eigenvalues.
inline double trace_norm(const SymMatrix& m) {
  const EigResult e = sym_eig(m);
  double s = 0.0;
  for (double v : e.values) s += std::abs(v);
  return s;
}

struct SimultaneousEig {
  Matrix basis;                 // diagonalizes both inputs
  std::vector<double> a_values; // diag of basis^T A basis
  std::vector<double> b_values; // diag of basis^T B basis
};

/// Common eigenbasis of two commuting symmetric matrices: diagonalize A,
/// then diagonalize B restricted to each (near-)degenerate A-eigenspace.
inline SimultaneousEig simultaneous_eig(const SymMatrix& a, const SymMatrix& b) {
  if (a.dim() != b.dim()) throw Error("simultaneous_eig: dimension mismatch");
  if (commutator_norm(a, b) > 1e-9 * (1.0 + a.frobenius_norm() * b.frobenius_norm()))
    throw Error("simultaneous_eig: inputs do not commute");
  const std::size_t n = a.dim();
  const EigResult ea = sym_eig(a);
  Matrix basis = ea.vectors;
  const double cluster_tol = 1e-9 * (1.0 + a.frobenius_norm());

  // B in the A eigenbasis; block diagonal over A clusters.
  Matrix bt = basis.transposed() * b.full() * basis;
  std::size_t lo = 0;
  while (lo < n) {
    std::size_t hi = lo + 1;
    while (hi < n && std::abs(ea.values[hi] - ea.values[hi - 1]) < cluster_tol) ++hi;
    const std::size_t k = hi - lo;
    if (k > 1) {
      SymMatrix block(k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j)
          block.set(i, j, 0.5 * (bt(lo + i, lo + j) + bt(lo + j, lo + i)));
      const EigResult eb = sym_eig(block);
      Matrix rotated(n, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
          double s = 0.0;
          for (std::size_t m = 0; m < k; ++m) s += basis(i, lo + m) * eb.vectors(m, j);
          rotated(i, j) = s;
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) basis(i, lo + j) = rotated(i, j);
    }
    lo = hi;
  }

  SimultaneousEig r;
  r.basis = basis;
  r.a_values.resize(n);
  r.b_values.resize(n);
  const Matrix at = basis.transposed() * a.full() * basis;
  bt = basis.transposed() * b.full() * basis;
  for (std::size_t i = 0; i < n; ++i) {
    r.a_values[i] = at(i, i);
    r.b_values[i] = bt(i, i);
  }
  return r;
}

}  // namespace gfrust

#endif  // GFRUST_SYM_MATRIX_HPP

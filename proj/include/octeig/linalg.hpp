#pragma once

// Dense real/complex matrix kernel: LU solves, rank, Hessenberg reduction,
// implicit double-shift QR to real Schur form, eigenvalue extraction and
// eigenvectors by inverse iteration.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace octeig {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

inline constexpr std::uint64_t kDefaultSeed = 24301;

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      std::size_t j = 0;
      for (const T& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(T s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, T s) { return a *= s; }
  friend Matrix operator*(T s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
      }
    }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::vector<T> operator*(std::span<const T> v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T s{};
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

RealMatrix transpose(const RealMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);
double frobenius_norm(const RealMatrix& a);
double frobenius_norm(const ComplexMatrix& a);
double max_abs(const RealMatrix& a);
double max_abs(const ComplexMatrix& a);
ComplexMatrix to_complex(const RealMatrix& re, const RealMatrix* im = nullptr);
RealMatrix real_part(const ComplexMatrix& a);
RealMatrix imag_part(const ComplexMatrix& a);
/// X + iY  ->  [[X, -Y], [Y, X]]
RealMatrix realify(const ComplexMatrix& a);
double norm2(std::span<const Complex> v);
double norm2(std::span<const double> v);

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(std::size_t pivot)
      : std::runtime_error("singular matrix: pivot " + std::to_string(pivot) + " below threshold"),
        pivot_(pivot) {}
  std::size_t pivot() const { return pivot_; }

 private:
  std::size_t pivot_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t lo, std::size_t hi)
      : std::runtime_error(what + " (active submatrix rows " + std::to_string(lo) + ".." +
                           std::to_string(hi) + ")"),
        lo_(lo),
        hi_(hi) {}
  std::size_t lo() const { return lo_; }
  std::size_t hi() const { return hi_; }

 private:
  std::size_t lo_;
  std::size_t hi_;
};

/// Solves AX = B by LU with partial pivoting. Throws SingularMatrixError when a
/// pivot falls below n * eps * ||A||_F.
RealMatrix lu_solve(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);

/// Numerical rank by Gaussian elimination with complete pivoting. A pivot
/// counts when it exceeds rel_tol * max|a_ij|.
std::size_t rank(const RealMatrix& a, double rel_tol = 1e-10);

struct SchurForm {
  RealMatrix q;  // orthogonal
  RealMatrix t;  // quasi-upper-triangular, standardized 2x2 blocks
};

/// A = Q T Q^T. Throws ConvergenceError after 40 n double-shift sweeps.
SchurForm real_schur(const RealMatrix& a);

/// Upper Hessenberg H = Q^T A Q.
SchurForm hessenberg(const RealMatrix& a);

/// Diagonal similarity scaling by powers of two; returns the scale vector d
/// with balanced = D^-1 A D.
std::vector<double> balance(RealMatrix& a);

struct EigenOptions {
  bool balance = true;
  std::uint64_t seed = kDefaultSeed;
  double residual_tol = 1e-8;
};

/// Eigenvalues read off the Schur blocks, sorted by real part ascending then
/// imaginary part descending. Conjugate pairs are exact mirrors.
std::vector<Complex> eigenvalues(const RealMatrix& a, const EigenOptions& opts = {});

/// Eigenvalues of a quasi-upper-triangular matrix in diagonal order.
std::vector<Complex> schur_eigenvalues(const RealMatrix& t);

struct EigenCluster {
  Complex value;                // mean of members
  std::size_t multiplicity = 0;  // number of members
  std::vector<Complex> members;
};

/// Groups values whose distance chains within tol (union-find); clusters
/// are returned in the sort order of eigenvalues().
std::vector<EigenCluster> cluster_eigenvalues(std::span<const Complex> values, double tol);
/// max(1e-8, 1e-12 ||A||_F)
double cluster_tolerance(double frobenius);

struct EigenPair {
  Complex value;
  ComplexVector vector;  // unit 2-norm
  double residual = 0.0;  // ||Av - zv|| / max(1, ||v|| ||A||_F)
};

double relative_residual(const RealMatrix& a, Complex z, std::span<const Complex> v);
double relative_residual(const ComplexMatrix& a, Complex z, std::span<const Complex> v);

/// Orthonormal eigenvectors for the eigenvalue z by block inverse iteration
/// with `count` seeded start vectors. Only vectors meeting
/// opts.residual_tol are returned, so the result size is the number of
/// independent eigenvectors found (at most count).
std::vector<EigenPair> eigenspace(const RealMatrix& a, Complex z, std::size_t count,
                                  const EigenOptions& opts = {});
std::vector<EigenPair> eigenspace(const ComplexMatrix& a, Complex z, std::size_t count,
                                  const EigenOptions& opts = {});

/// A single eigenvector for z. Throws ConvergenceError when the residual
/// stays above opts.residual_tol.
EigenPair eigenvector(const RealMatrix& a, Complex z, const EigenOptions& opts = {});

/// All eigenpairs of a real matrix, one per independent eigenvector, grouped
/// by cluster in eigenvalue order.
std::vector<EigenPair> real_eigen(const RealMatrix& a, const EigenOptions& opts = {});

/// All eigenpairs of a complex matrix, computed through the real 2n x 2n
/// embedding. Each eigenvalue of A appears once per independent eigenvector.
std::vector<EigenPair> complex_eigen(const ComplexMatrix& a, const EigenOptions& opts = {});

/// Eigen-decomposition of a Hermitian matrix by cyclic Jacobi rotations.
/// Eigenvalues ascending; eigenvectors are the columns of `vectors`.
struct HermitianEigen {
  std::vector<double> values;
  ComplexMatrix vectors;
};
HermitianEigen hermitian_jacobi(const ComplexMatrix& a);

/// Fixed-width text grid.
std::string format_matrix(const RealMatrix& a, int precision = 6);
std::string format_matrix(const ComplexMatrix& a, int precision = 6);

}  // namespace octeig

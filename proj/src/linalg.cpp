#include "octeig/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

namespace octeig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs_val(double v) { return std::abs(v); }
double abs_val(Complex v) { return std::abs(v); }
double conj_val(double v) { return v; }
Complex conj_val(Complex v) { return std::conj(v); }

template <typename T>
double frob(const Matrix<T>& a) {
  double s = 0.0;
  for (const T& v : a.data()) s += abs_val(v) * abs_val(v);
  return std::sqrt(s);
}

}  // namespace

RealMatrix transpose(const RealMatrix& a) {
  RealMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

double frobenius_norm(const RealMatrix& a) { return frob(a); }
double frobenius_norm(const ComplexMatrix& a) { return frob(a); }

double max_abs(const RealMatrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (Complex v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

ComplexMatrix to_complex(const RealMatrix& re, const RealMatrix* im) {
  if (im && (im->rows() != re.rows() || im->cols() != re.cols())) {
    throw std::invalid_argument("to_complex: shape mismatch");
  }
  ComplexMatrix c(re.rows(), re.cols());
  for (std::size_t i = 0; i < re.rows(); ++i)
    for (std::size_t j = 0; j < re.cols(); ++j) c(i, j) = {re(i, j), im ? (*im)(i, j) : 0.0};
  return c;
}

RealMatrix real_part(const ComplexMatrix& a) {
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).real();
  return r;
}

RealMatrix imag_part(const ComplexMatrix& a) {
  RealMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).imag();
  return r;
}

RealMatrix realify(const ComplexMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  RealMatrix r(2 * m, 2 * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex v = a(i, j);
      r(i, j) = v.real();
      r(i, j + n) = -v.imag();
      r(i + m, j) = v.imag();
      r(i + m, j + n) = v.real();
    }
  }
  return r;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (Complex x : v) s += std::norm(x);
  return std::sqrt(s);
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// LU

namespace {

template <typename T>
struct LuFactors {
  Matrix<T> lu;
  std::vector<std::size_t> perm;
};

// Partial-pivot LU. Pivots at or below `floor` either raise
// SingularMatrixError or, with perturb set, are replaced by `floor`
// (inverse iteration wants the near-singular solve).
template <typename T>
LuFactors<T> lu_factor(Matrix<T> a, double floor, bool perturb) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = abs_val(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (abs_val(a(i, k)) > best) {
        best = abs_val(a(i, k));
        p = i;
      }
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(perm[k], perm[p]);
    }
    if (best <= floor) {
      if (!perturb) throw SingularMatrixError(k);
      a(k, k) = best == 0.0 ? T(floor) : a(k, k) * (floor / best);
    }
    const T pivot = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = a(i, k) / pivot;
      a(i, k) = f;
      if (f == T{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return {std::move(a), std::move(perm)};
}

template <typename T>
Matrix<T> lu_apply(const LuFactors<T>& f, const Matrix<T>& b) {
  const std::size_t n = f.lu.rows();
  Matrix<T> x(n, b.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(i, j) = b(f.perm[i], j);
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      T s = x(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= f.lu(i, k) * x(k, c);
      x(i, c) = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      T s = x(ii, c);
      for (std::size_t k = ii + 1; k < n; ++k) s -= f.lu(ii, k) * x(k, c);
      x(ii, c) = s / f.lu(ii, ii);
    }
  }
  return x;
}

template <typename T>
Matrix<T> lu_solve_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square()) throw std::invalid_argument("lu_solve: matrix must be square");
  if (b.rows() != a.rows()) throw std::invalid_argument("lu_solve: right-hand side shape mismatch");
  const double floor = static_cast<double>(a.rows()) * kEps * frob(a);
  return lu_apply(lu_factor(a, floor, false), b);
}

}  // namespace

RealMatrix lu_solve(const RealMatrix& a, const RealMatrix& b) { return lu_solve_impl(a, b); }
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) { return lu_solve_impl(a, b); }

std::size_t rank(const RealMatrix& input, double rel_tol) {
  RealMatrix a = input;
  const std::size_t m = a.rows(), n = a.cols();
  const double tol = rel_tol * std::max(max_abs(a), std::numeric_limits<double>::min());
  std::size_t r = 0;
  for (; r < std::min(m, n); ++r) {
    std::size_t pi = r, pj = r;
    double best = 0.0;
    for (std::size_t i = r; i < m; ++i) {
      for (std::size_t j = r; j < n; ++j) {
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (best <= tol) break;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(r, j), a(pi, j));
    for (std::size_t i = 0; i < m; ++i) std::swap(a(i, r), a(i, pj));
    for (std::size_t i = r + 1; i < m; ++i) {
      const double f = a(i, r) / a(r, r);
      if (f == 0.0) continue;
      for (std::size_t j = r; j < n; ++j) a(i, j) -= f * a(r, j);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Hessenberg reduction and Francis double-shift QR

namespace {

// Householder vector v (v[0] = 1 not assumed) and beta so that
// (I - beta v v^T) x = alpha e_0.
double householder(std::span<double> x) {
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  if (norm == 0.0) return 0.0;
  const double alpha = x[0] >= 0 ? -norm : norm;
  x[0] -= alpha;
  double vtv = 0.0;
  for (double v : x) vtv += v * v;
  return vtv == 0.0 ? 0.0 : 2.0 / vtv;
}

// Applies P = I - beta v v^T from the left to rows r0..r0+len-1, columns c0..c1-1.
void reflect_rows(RealMatrix& h, std::span<const double> v, double beta, std::size_t r0,
                  std::size_t c0, std::size_t c1) {
  for (std::size_t j = c0; j < c1; ++j) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += v[k] * h(r0 + k, j);
    s *= beta;
    for (std::size_t k = 0; k < v.size(); ++k) h(r0 + k, j) -= s * v[k];
  }
}

// Applies P from the right to columns c0..c0+len-1, rows r0..r1-1.
void reflect_cols(RealMatrix& h, std::span<const double> v, double beta, std::size_t c0,
                  std::size_t r0, std::size_t r1) {
  for (std::size_t i = r0; i < r1; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) s += h(i, c0 + k) * v[k];
    s *= beta;
    for (std::size_t k = 0; k < v.size(); ++k) h(i, c0 + k) -= s * v[k];
  }
}

void reduce_hessenberg(RealMatrix& h, RealMatrix* q) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<double> v;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    v.assign(n - k - 1, 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i - k - 1] = h(i, k);
    const double beta = householder(v);
    if (beta == 0.0) continue;
    reflect_rows(h, v, beta, k + 1, k, n);
    reflect_cols(h, v, beta, k + 1, 0, n);
    if (q) reflect_cols(*q, v, beta, k + 1, 0, n);
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

double fsign(double a, double b) { return b >= 0.0 ? std::abs(a) : -std::abs(a); }

struct Rotation {
  double cs = 1.0;
  double sn = 0.0;
};

// Schur factorization of a real 2x2 nonsymmetric matrix in standardized
// form (port of LAPACK dlanv2). On return either c == 0 (real eigenvalues)
// or a == d and b*c < 0 (complex pair a +- i sqrt(|b c|)).
Rotation standardize_2x2(double& a, double& b, double& c, double& d) {
  static const double safmn2 =
      std::pow(2.0, static_cast<int>(std::log2(std::numeric_limits<double>::min() / kEps) / 2.0));
  static const double safmx2 = 1.0 / safmn2;
  constexpr double multpl = 4.0;
  Rotation rot;
  if (c == 0.0) {
    return rot;
  }
  if (b == 0.0) {
    rot = {0.0, 1.0};
    std::swap(a, d);
    b = -c;
    c = 0.0;
    return rot;
  }
  if (a - d == 0.0 && (b >= 0.0) != (c >= 0.0)) {
    return rot;
  }
  double temp = a - d;
  double p = 0.5 * temp;
  const double bcmax = std::max(std::abs(b), std::abs(c));
  const double bcmis = std::min(std::abs(b), std::abs(c)) * fsign(1.0, b) * fsign(1.0, c);
  double scale = std::max(std::abs(p), bcmax);
  double z = (p / scale) * p + (bcmax / scale) * bcmis;
  if (z >= multpl * kEps) {
    // Real eigenvalues.
    z = p + fsign(std::sqrt(scale) * std::sqrt(z), p);
    a = d + z;
    d = d - (bcmax / z) * bcmis;
    const double tau = std::hypot(c, z);
    rot = {z / tau, c / tau};
    b = b - c;
    c = 0.0;
    return rot;
  }
  // Complex or nearly equal real eigenvalues: equalize the diagonal.
  double sigma = b + c;
  for (int count = 0; count < 20; ++count) {
    scale = std::max(std::abs(temp), std::abs(sigma));
    if (scale >= safmx2) {
      sigma *= safmn2;
      temp *= safmn2;
      continue;
    }
    if (scale <= safmn2) {
      sigma *= safmx2;
      temp *= safmx2;
      continue;
    }
    break;
  }
  p = 0.5 * temp;
  double tau = std::hypot(sigma, temp);
  rot.cs = std::sqrt(0.5 * (1.0 + std::abs(sigma) / tau));
  rot.sn = -(p / (tau * rot.cs)) * fsign(1.0, sigma);
  const double aa = a * rot.cs + b * rot.sn;
  const double bb = -a * rot.sn + b * rot.cs;
  const double cc = c * rot.cs + d * rot.sn;
  const double dd = -c * rot.sn + d * rot.cs;
  a = aa * rot.cs + cc * rot.sn;
  b = bb * rot.cs + dd * rot.sn;
  c = -aa * rot.sn + cc * rot.cs;
  d = -bb * rot.sn + dd * rot.cs;
  temp = 0.5 * (a + d);
  a = temp;
  d = temp;
  if (c != 0.0) {
    if (b != 0.0) {
      if ((b >= 0.0) == (c >= 0.0)) {
        // Real eigenvalues after all.
        const double sab = std::sqrt(std::abs(b));
        const double sac = std::sqrt(std::abs(c));
        p = fsign(sab * sac, c);
        tau = 1.0 / std::sqrt(std::abs(b + c));
        a = temp + p;
        d = temp - p;
        b = b - c;
        c = 0.0;
        const double cs1 = sab * tau;
        const double sn1 = sac * tau;
        temp = rot.cs * cs1 - rot.sn * sn1;
        rot.sn = rot.cs * sn1 + rot.sn * cs1;
        rot.cs = temp;
      }
    } else {
      b = -c;
      c = 0.0;
      temp = rot.cs;
      rot.cs = -rot.sn;
      rot.sn = temp;
    }
  }
  return rot;
}

// Standardizes the 2x2 diagonal block at (k, k+1) of the full matrix and
// propagates the rotation to the rest of T and to Q.
void standardize_block(RealMatrix& t, RealMatrix* q, std::size_t k) {
  const std::size_t n = t.rows();
  double a = t(k, k), b = t(k, k + 1), c = t(k + 1, k), d = t(k + 1, k + 1);
  const Rotation r = standardize_2x2(a, b, c, d);
  t(k, k) = a;
  t(k, k + 1) = b;
  t(k + 1, k) = c;
  t(k + 1, k + 1) = d;
  for (std::size_t j = k + 2; j < n; ++j) {
    const double x = t(k, j), y = t(k + 1, j);
    t(k, j) = r.cs * x + r.sn * y;
    t(k + 1, j) = r.cs * y - r.sn * x;
  }
  for (std::size_t i = 0; i < k; ++i) {
    const double x = t(i, k), y = t(i, k + 1);
    t(i, k) = r.cs * x + r.sn * y;
    t(i, k + 1) = r.cs * y - r.sn * x;
  }
  if (q) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = (*q)(i, k), y = (*q)(i, k + 1);
      (*q)(i, k) = r.cs * x + r.sn * y;
      (*q)(i, k + 1) = r.cs * y - r.sn * x;
    }
  }
}

// Implicit double-shift QR on an upper Hessenberg matrix, reducing it to
// standardized real Schur form in place. Transformations are applied to the
// full matrix so T is a genuine Schur factor.
void francis_qr(RealMatrix& h, RealMatrix* q) {
  const std::size_t n = h.rows();
  if (n == 0) return;
  const std::size_t max_sweeps = 40 * n;
  std::size_t sweeps = 0;
  std::size_t stalled = 0;
  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  std::vector<double> v(3);

  while (hi >= 0) {
    // Deflation search: |h(k,k-1)| <= eps (|h(k-1,k-1)| + |h(k,k)|).
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const auto k = static_cast<std::size_t>(lo);
      double s = std::abs(h(k - 1, k - 1)) + std::abs(h(k, k));
      if (s == 0.0) s = frobenius_norm(h);
      if (std::abs(h(k, k - 1)) <= kEps * s) {
        h(k, k - 1) = 0.0;
        break;
      }
      --lo;
    }
    const auto l = static_cast<std::size_t>(lo);
    const auto ih = static_cast<std::size_t>(hi);

    if (l == ih) {
      --hi;
      stalled = 0;
      continue;
    }
    if (l + 1 == ih) {
      standardize_block(h, q, l);
      hi -= 2;
      stalled = 0;
      continue;
    }

    if (++sweeps > max_sweeps) {
      throw ConvergenceError("real_schur: no convergence after " + std::to_string(max_sweeps) +
                                 " double-shift sweeps",
                             l, ih);
    }
    ++stalled;

    const std::size_t m = ih - 1;
    double s, t;
    if (stalled % 10 == 0) {
      // Exceptional shift.
      const double w = std::abs(h(ih, m)) + std::abs(h(m, m - 1));
      const double a = 0.75 * w + h(ih, ih);
      s = 2.0 * a;
      t = a * a + 0.4375 * w * w;
    } else {
      s = h(m, m) + h(ih, ih);
      t = h(m, m) * h(ih, ih) - h(m, ih) * h(ih, m);
    }

    double x = h(l, l) * h(l, l) + h(l, l + 1) * h(l + 1, l) - s * h(l, l) + t;
    double y = h(l + 1, l) * (h(l, l) + h(l + 1, l + 1) - s);
    double z = h(l + 1, l) * h(l + 2, l + 1);

    for (std::size_t k = l; k + 2 <= ih; ++k) {
      v = {x, y, z};
      const double beta = householder(v);
      if (beta != 0.0) {
        const std::size_t c0 = k > l ? k - 1 : l;
        reflect_rows(h, v, beta, k, c0, n);
        const std::size_t r1 = std::min(k + 3, ih) + 1;
        reflect_cols(h, v, beta, k, 0, r1);
        if (q) reflect_cols(*q, v, beta, k, 0, n);
        if (k > l) {
          h(k + 1, k - 1) = 0.0;
          h(k + 2, k - 1) = 0.0;
        }
      }
      x = h(k + 1, k);
      y = h(k + 2, k);
      if (k + 3 <= ih) z = h(k + 3, k);
    }
    // Final 2-element reflector on rows ih-1, ih.
    std::vector<double> v2{x, y};
    const double beta = householder(v2);
    if (beta != 0.0) {
      reflect_rows(h, v2, beta, ih - 1, ih - 2, n);
      reflect_cols(h, v2, beta, ih - 1, 0, ih + 1);
      if (q) reflect_cols(*q, v2, beta, ih - 1, 0, n);
      h(ih, ih - 2) = 0.0;
    }
  }

  for (std::size_t i = 2; i < n; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) h(i, j) = 0.0;
}

}  // namespace

SchurForm hessenberg(const RealMatrix& a) {
  if (!a.square()) throw std::invalid_argument("hessenberg: matrix must be square");
  SchurForm f{RealMatrix::identity(a.rows()), a};
  reduce_hessenberg(f.t, &f.q);
  return f;
}

SchurForm real_schur(const RealMatrix& a) {
  if (!a.square() || a.rows() == 0) throw std::invalid_argument("real_schur: matrix must be square, n >= 1");
  SchurForm f = hessenberg(a);
  francis_qr(f.t, &f.q);
  return f;
}

std::vector<double> balance(RealMatrix& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = a.rows();
  std::vector<double> scale(n, 1.0);
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        scale[i] *= f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= g;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
  return scale;
}

std::vector<Complex> schur_eigenvalues(const RealMatrix& t) {
  const std::size_t n = t.rows();
  std::vector<Complex> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n;) {
    if (k + 1 < n && t(k + 1, k) != 0.0) {
      const double a = t(k, k);
      const double im = std::sqrt(std::abs(t(k, k + 1))) * std::sqrt(std::abs(t(k + 1, k)));
      out.emplace_back(a, im);
      out.emplace_back(a, -im);
      k += 2;
    } else {
      out.emplace_back(t(k, k), 0.0);
      ++k;
    }
  }
  return out;
}

namespace {

bool eig_less(const Complex& x, const Complex& y) {
  if (x.real() != y.real()) return x.real() < y.real();
  return x.imag() > y.imag();
}

}  // namespace

std::vector<Complex> eigenvalues(const RealMatrix& a, const EigenOptions& opts) {
  if (!a.square()) throw std::invalid_argument("eigenvalues: matrix must be square");
  RealMatrix h = a;
  if (opts.balance) balance(h);
  reduce_hessenberg(h, nullptr);
  francis_qr(h, nullptr);
  std::vector<Complex> vals = schur_eigenvalues(h);
  std::sort(vals.begin(), vals.end(), eig_less);
  return vals;
}

double cluster_tolerance(double frobenius) { return std::max(1e-8, 1e-12 * frobenius); }

std::vector<EigenCluster> cluster_eigenvalues(std::span<const Complex> values, double tol) {
  std::vector<Complex> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end(), eig_less);
  const std::size_t n = sorted.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(sorted[i] - sorted[j]) <= tol) parent[find(j)] = find(i);

  std::vector<EigenCluster> clusters;
  std::vector<std::ptrdiff_t> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[root])].members.push_back(sorted[i]);
  }
  for (auto& c : clusters) {
    Complex sum{};
    bool all_real = true;
    for (const Complex& v : c.members) {
      sum += v;
      all_real = all_real && v.imag() == 0.0;
    }
    c.multiplicity = c.members.size();
    c.value = sum / static_cast<double>(c.multiplicity);
    if (all_real) c.value = {c.value.real(), 0.0};
  }
  return clusters;
}

// ---------------------------------------------------------------------------
// Hermitian Jacobi

HermitianEigen hermitian_jacobi(const ComplexMatrix& input) {
  if (!input.square()) throw std::invalid_argument("hermitian_jacobi: matrix must be square");
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  ComplexMatrix v = ComplexMatrix::identity(n);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += std::norm(a(i, i));
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
    }
    if (off <= 1e-32 * diag || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag == 0.0) continue;
        const Complex ph = g / mag;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U = diag(1, conj(ph)) * [[c, s], [-s, c]]
        const Complex upp = c, upq = s, uqp = -s * std::conj(ph), uqq = c * std::conj(ph);
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = a(i, p), y = a(i, q);
          a(i, p) = x * upp + y * uqp;
          a(i, q) = x * upq + y * uqq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex x = a(p, j), y = a(q, j);
          a(p, j) = std::conj(upp) * x + std::conj(uqp) * y;
          a(q, j) = std::conj(upq) * x + std::conj(uqq) * y;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = v(i, p), y = v(i, q);
          v(i, p) = x * upp + y * uqp;
          v(i, q) = x * upq + y * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Eigenvectors

namespace {

template <typename T>
double residual_impl(const Matrix<T>& a, Complex z, std::span<const Complex> v) {
  const std::size_t n = a.rows();
  double r2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = -z * v[i];
    for (std::size_t j = 0; j < n; ++j) s += Complex(a(i, j)) * v[j];
    r2 += std::norm(s);
  }
  return std::sqrt(r2) / std::max(1.0, norm2(v) * frob(a));
}

// Modified Gram-Schmidt with one reorthogonalization pass. Columns whose norm
// collapses below drop_tol relative to their incoming norm are removed.
template <typename T>
Matrix<T> orthonormalize(const Matrix<T>& x, double drop_tol) {
  const std::size_t n = x.rows();
  std::vector<std::vector<T>> kept;
  for (std::size_t c = 0; c < x.cols(); ++c) {
    std::vector<T> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = x(i, c);
    double incoming = 0.0;
    for (const T& v : col) incoming += abs_val(v) * abs_val(v);
    incoming = std::sqrt(incoming);
    if (incoming == 0.0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& k : kept) {
        T dot{};
        for (std::size_t i = 0; i < n; ++i) dot += conj_val(k[i]) * col[i];
        for (std::size_t i = 0; i < n; ++i) col[i] -= dot * k[i];
      }
    }
    double nrm = 0.0;
    for (const T& v : col) nrm += abs_val(v) * abs_val(v);
    nrm = std::sqrt(nrm);
    if (nrm <= drop_tol * incoming) continue;
    for (T& v : col) v /= nrm;
    kept.push_back(std::move(col));
  }
  Matrix<T> out(n, kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c)
    for (std::size_t i = 0; i < n; ++i) out(i, c) = kept[c][i];
  return out;
}

template <typename T>
T random_entry(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  if constexpr (std::is_same_v<T, double>) {
    return dist(rng);
  } else {
    const double re = dist(rng);
    return Complex(re, dist(rng));
  }
}

// Fixes the global phase so the largest-modulus entry is real positive.
void fix_phase(ComplexVector& v) {
  double best = 0.0;
  for (const Complex& x : v) best = std::max(best, std::abs(x));
  if (best == 0.0) return;
  for (const Complex& x : v) {
    if (std::abs(x) >= best * (1.0 - 1e-9)) {
      const Complex ph = std::conj(x) / std::abs(x);
      for (Complex& y : v) y *= ph;
      for (Complex& y : v) {
        if (y.imag() == -0.0) y = {y.real(), 0.0};
      }
      return;
    }
  }
}

template <typename T>
std::vector<EigenPair> eigenspace_impl(const Matrix<T>& a, T z, std::size_t count, const EigenOptions& opts) {
  if (!a.square()) throw std::invalid_argument("eigenspace: matrix must be square");
  const std::size_t n = a.rows();
  count = std::min(count, n);
  if (n == 0 || count == 0) return {};
  const double anorm = frob(a);
  const double scale = std::max(1.0, anorm);

  // Shift slightly off the eigenvalue so the solve stays finite; the
  // eigen-directions are still amplified by ~1e10 per step.
  Matrix<T> shifted = a;
  const T sigma = z + T(1e-10 * scale);
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= sigma;
  const auto lu = lu_factor(shifted, kEps * scale, true);

  std::mt19937_64 rng(opts.seed);
  Matrix<T> x(n, count);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < count; ++c) x(i, c) = random_entry<T>(rng);
  x = orthonormalize(x, 1e-8);

  auto column_residuals_ok = [&](const Matrix<T>& basis) {
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      ComplexVector col(n);
      for (std::size_t i = 0; i < n; ++i) col[i] = Complex(basis(i, c));
      if (residual_impl(a, Complex(z), col) > opts.residual_tol * 1e-3) return false;
    }
    return true;
  };

  for (int it = 0; it < 10; ++it) {
    x = orthonormalize(lu_apply(lu, x), 1e-8);
    if (it >= 1 && column_residuals_ok(x)) break;
  }

  // Rayleigh-Ritz on ||(A - zI) X c||: picks the best eigenvectors inside
  // span(X), which matters when the cluster is defective.
  const std::size_t k = x.cols();
  Matrix<T> w = a * x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < k; ++c) w(i, c) -= z * x(i, c);
  ComplexMatrix g(k, k);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < k; ++q) {
      Complex s{};
      for (std::size_t i = 0; i < n; ++i) s += std::conj(Complex(w(i, p))) * Complex(w(i, q));
      g(p, q) = s;
    }
  }
  const HermitianEigen ritz = hermitian_jacobi(g);

  std::vector<EigenPair> out;
  for (std::size_t r = 0; r < k; ++r) {
    ComplexVector v(n, Complex{});
    for (std::size_t c = 0; c < k; ++c) {
      Complex coeff = ritz.vectors(c, r);
      if constexpr (std::is_same_v<T, double>) coeff = coeff.real();
      for (std::size_t i = 0; i < n; ++i) v[i] += Complex(x(i, c)) * coeff;
    }
    const double nv = norm2(v);
    if (nv == 0.0) continue;
    for (Complex& e : v) e /= nv;
    fix_phase(v);
    const double res = residual_impl(a, Complex(z), v);
    if (res <= opts.residual_tol) out.push_back({Complex(z), std::move(v), res});
  }
  return out;
}

}  // namespace

double relative_residual(const RealMatrix& a, Complex z, std::span<const Complex> v) {
  return residual_impl(a, z, v);
}

double relative_residual(const ComplexMatrix& a, Complex z, std::span<const Complex> v) {
  return residual_impl(a, z, v);
}

std::vector<EigenPair> eigenspace(const RealMatrix& a, Complex z, std::size_t count,
                                  const EigenOptions& opts) {
  if (z.imag() == 0.0) return eigenspace_impl<double>(a, z.real(), count, opts);
  return eigenspace_impl<Complex>(to_complex(a), z, count, opts);
}

std::vector<EigenPair> eigenspace(const ComplexMatrix& a, Complex z, std::size_t count,
                                  const EigenOptions& opts) {
  return eigenspace_impl<Complex>(a, z, count, opts);
}

EigenPair eigenvector(const RealMatrix& a, Complex z, const EigenOptions& opts) {
  auto pairs = eigenspace(a, z, 1, opts);
  if (pairs.empty()) {
    throw ConvergenceError("eigenvector: inverse iteration did not reach the residual tolerance", 0,
                           a.rows() == 0 ? 0 : a.rows() - 1);
  }
  return std::move(pairs.front());
}

std::vector<EigenPair> real_eigen(const RealMatrix& a, const EigenOptions& opts) {
  const auto vals = eigenvalues(a, opts);
  const auto clusters = cluster_eigenvalues(vals, cluster_tolerance(frobenius_norm(a)));
  std::vector<EigenPair> out;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    EigenOptions local = opts;
    local.seed = opts.seed + c;
    auto pairs = eigenspace(a, clusters[c].value, clusters[c].multiplicity, local);
    for (auto& p : pairs) out.push_back(std::move(p));
  }
  return out;
}

std::vector<EigenPair> complex_eigen(const ComplexMatrix& a, const EigenOptions& opts) {
  if (!a.square()) throw std::invalid_argument("complex_eigen: matrix must be square");
  const std::size_t n = a.rows();
  const RealMatrix r = realify(a);
  const auto vals = eigenvalues(r, opts);
  const auto clusters = cluster_eigenvalues(vals, cluster_tolerance(frobenius_norm(r)));

  std::vector<EigenPair> out;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    EigenOptions local = opts;
    local.seed = opts.seed + c;
    const Complex mu = clusters[c].value;
    const auto embedded = eigenspace(r, mu, clusters[c].multiplicity, local);

    // An embedded eigenvector w = (u; v) splits into (x; -ix) with Ax = mu x
    // and (y; iy) with A y-bar = mu-bar y-bar. (u + iv)/2 keeps the first part.
    ComplexMatrix proj(n, embedded.size());
    for (std::size_t k = 0; k < embedded.size(); ++k) {
      const auto& w = embedded[k].vector;
      for (std::size_t i = 0; i < n; ++i) proj(i, k) = 0.5 * (w[i] + Complex(0.0, 1.0) * w[i + n]);
    }
    ComplexMatrix basis(n, 0);
    {
      // Drop projections that vanish: they came from the conjugate family.
      std::vector<std::size_t> live;
      for (std::size_t k = 0; k < proj.cols(); ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += std::norm(proj(i, k));
        if (std::sqrt(s) > 1e-6) live.push_back(k);
      }
      ComplexMatrix sel(n, live.size());
      for (std::size_t k = 0; k < live.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) sel(i, k) = proj(i, live[k]);
      basis = orthonormalize(sel, 1e-6);
    }
    for (std::size_t k = 0; k < basis.cols(); ++k) {
      ComplexVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = basis(i, k);
      fix_phase(v);
      const double res = relative_residual(a, mu, v);
      if (res <= opts.residual_tol) out.push_back({mu, std::move(v), res});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_matrix(const RealMatrix& a, int precision) {
  std::ostringstream os;
  const int width = precision + 4;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      char buf[64];
      const double v = a(i, j) == 0.0 ? 0.0 : a(i, j);
      std::snprintf(buf, sizeof(buf), "%*.*g", width, precision, v);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_matrix(const ComplexMatrix& a, int precision) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      char buf[96];
      const double re = a(i, j).real() == 0.0 ? 0.0 : a(i, j).real();
      const double im = a(i, j).imag() == 0.0 ? 0.0 : a(i, j).imag();
      std::snprintf(buf, sizeof(buf), " %*.*g%+.*gi", precision + 3, precision, re, precision, im);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace octeig

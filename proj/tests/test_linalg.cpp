#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "octeig/linalg.hpp"

using namespace octeig;

namespace {

RealMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d;
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = d(rng);
  return a;
}

// Greedy nearest matching; every value must find a partner within tol.
bool same_multiset(std::vector<Complex> a, std::vector<Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const auto& z : a) {
    auto best = std::min_element(b.begin(), b.end(),
                                 [&](Complex x, Complex y) { return std::abs(x - z) < std::abs(y - z); });
    if (std::abs(*best - z) > tol) return false;
    b.erase(best);
  }
  return true;
}

Complex trace(const RealMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
  return s;
}

}  // namespace

TEST_CASE("LU solve") {
  const RealMatrix a = RealMatrix::from_rows({{0, 2, 1}, {1, 1, 1}, {2, 1, 0}});
  const RealMatrix b = RealMatrix::from_rows({{3}, {3}, {3}});
  const RealMatrix x = lu_solve(a, b);
  CHECK(max_abs(a * x - b) <= 1e-14);
  CHECK(max_abs(x - RealMatrix::from_rows({{1}, {1}, {1}})) <= 1e-14);
  CHECK_THROWS_AS(lu_solve(RealMatrix::from_rows({{1, 2}, {2, 4}}), RealMatrix::identity(2)), SingularMatrixError);

  std::mt19937_64 rng(31);
  const RealMatrix r = random_matrix(rng, 12);
  const ComplexMatrix c = to_complex(r, &r);
  const ComplexMatrix inv = lu_solve(c, to_complex(RealMatrix::identity(12)));
  CHECK(max_abs(c * inv - to_complex(RealMatrix::identity(12))) <= 1e-10);
}

TEST_CASE("rank") {
  CHECK(rank(RealMatrix::identity(5)) == 5);
  CHECK(rank(RealMatrix(3, 4)) == 0);
  const RealMatrix u = RealMatrix::from_rows({{1}, {2}, {3}});
  const RealMatrix v = RealMatrix::from_rows({{4, 5, 6, 7}});
  const RealMatrix w = RealMatrix::from_rows({{0}, {1}, {-1}});
  const RealMatrix z = RealMatrix::from_rows({{1, 0, 0, 2}});
  CHECK(rank(u * v) == 1);
  CHECK(rank(u * v + w * z) == 2);
}

TEST_CASE("Hessenberg reduction") {
  std::mt19937_64 rng(32);
  const RealMatrix a = random_matrix(rng, 10);
  const SchurForm h = hessenberg(a);
  for (std::size_t i = 2; i < 10; ++i)
    for (std::size_t j = 0; j + 1 < i; ++j) CHECK(h.t(i, j) == 0.0);
  CHECK(max_abs(h.q * h.t * transpose(h.q) - a) <= 1e-12 * frobenius_norm(a));
}

TEST_CASE("real Schur form of 50 random matrices") {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<std::size_t> dim(1, 32);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = dim(rng);
    const RealMatrix a = random_matrix(rng, n);
    const SchurForm s = real_schur(a);
    CHECK(frobenius_norm(s.q * s.t * transpose(s.q) - a) <= 1e-9 * frobenius_norm(a));
    CHECK(max_abs(transpose(s.q) * s.q - RealMatrix::identity(n)) <= 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < i; ++j) CHECK(s.t(i, j) == 0.0);
    }
    // Standardized 2x2 blocks: equal diagonal, off-diagonals of opposite sign.
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (s.t(i + 1, i) == 0.0) continue;
      CHECK(s.t(i, i) == doctest::Approx(s.t(i + 1, i + 1)).epsilon(1e-12));
      CHECK(s.t(i, i + 1) * s.t(i + 1, i) < 0.0);
      if (i + 2 < n) CHECK(s.t(i + 2, i + 1) == 0.0);
    }
  }
}

TEST_CASE("eigenvalues against closed forms") {
  // Companion matrix of (x-1)(x-2)(x-3)(x-4).
  const RealMatrix c = RealMatrix::from_rows({{10, -35, 50, -24}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
  CHECK(same_multiset(eigenvalues(c), {1, 2, 3, 4}, 1e-9));

  const double th = 0.7;
  const RealMatrix rot = RealMatrix::from_rows({{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}});
  const auto ev = eigenvalues(rot);
  REQUIRE(ev.size() == 2);
  CHECK(std::abs(ev[0] - std::polar(1.0, th)) <= 1e-14);
  CHECK(ev[1] == std::conj(ev[0]));

  const RealMatrix upper = RealMatrix::from_rows({{3, 1, 4}, {0, -1, 5}, {0, 0, 2}});
  CHECK(eigenvalues(upper) == std::vector<Complex>{-1, 2, 3});
}

TEST_CASE("spectral invariants on random matrices") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + static_cast<std::size_t>(t);
    const RealMatrix a = random_matrix(rng, n);
    const auto ev = eigenvalues(a);
    CHECK(same_multiset(ev, eigenvalues(transpose(a)), 1e-9));

    Complex tr{}, tr2{};
    for (const auto& z : ev) {
      tr += z;
      tr2 += z * z;
    }
    CHECK(std::abs(tr - trace(a)) <= 1e-10 * frobenius_norm(a));
    CHECK(std::abs(tr2 - trace(a * a)) <= 1e-10 * frobenius_norm(a) * frobenius_norm(a));

    for (const auto& z : ev) {
      if (z.imag() == 0.0) continue;
      CHECK(std::count(ev.begin(), ev.end(), std::conj(z)) >= 1);
    }

    EigenOptions raw;
    raw.balance = false;
    CHECK(same_multiset(ev, eigenvalues(a, raw), 1e-9));
  }
}

TEST_CASE("realification doubles the spectrum") {
  std::mt19937_64 rng(35);
  const std::size_t n = 6;
  const RealMatrix x = random_matrix(rng, n), y = random_matrix(rng, n);
  const ComplexMatrix a = to_complex(x, &y);
  std::vector<Complex> expected;
  for (const auto& p : complex_eigen(a)) {
    expected.push_back(p.value);
    expected.push_back(std::conj(p.value));
  }
  CHECK(same_multiset(eigenvalues(realify(a)), expected, 1e-9));
}

TEST_CASE("clustering") {
  const std::vector<Complex> v{{1, 0}, {1 + 4e-9, 0}, {1 + 8e-9, 0}, {2, 0}, {0, 1}, {0, -1}};
  const auto cl = cluster_eigenvalues(v, 5e-9);
  REQUIRE(cl.size() == 4);
  CHECK(std::any_of(cl.begin(), cl.end(), [](const EigenCluster& c) { return c.multiplicity == 3; }));
  CHECK(cluster_tolerance(1.0) == 1e-8);
  CHECK(cluster_tolerance(1e6) == 1e-6);
}

TEST_CASE("eigenvectors, defective and repeated eigenvalues") {
  // Jordan block: algebraic 3, geometric 1.
  const RealMatrix j = RealMatrix::from_rows({{2, 1, 0}, {0, 2, 1}, {0, 0, 2}});
  const auto cl = cluster_eigenvalues(eigenvalues(j), 1e-4);
  REQUIRE(cl.size() == 1);
  CHECK(cl[0].multiplicity == 3);
  const auto js = eigenspace(j, 2.0, 3);
  REQUIRE(js.size() == 1);
  CHECK(std::abs(std::abs(js[0].vector[0]) - 1.0) <= 1e-8);

  const auto id = eigenspace(RealMatrix::identity(5), 1.0, 5);
  CHECK(id.size() == 5);
  for (std::size_t a = 0; a < id.size(); ++a) {
    for (std::size_t b = 0; b < id.size(); ++b) {
      Complex dot{};
      for (std::size_t k = 0; k < 5; ++k) dot += std::conj(id[a].vector[k]) * id[b].vector[k];
      CHECK(std::abs(dot - (a == b ? 1.0 : 0.0)) <= 1e-12);
    }
  }

  const RealMatrix rot = RealMatrix::from_rows({{0, -1}, {1, 0}});
  const EigenPair p = eigenvector(rot, Complex(0, 1));
  CHECK(p.residual <= 1e-14);
  CHECK(std::abs(norm2(std::span<const Complex>(p.vector)) - 1.0) <= 1e-14);
}

TEST_CASE("every emitted eigenpair meets the residual bound") {
  std::mt19937_64 rng(36);
  std::uniform_int_distribution<std::size_t> dim(1, 32);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = dim(rng);
    const RealMatrix a = random_matrix(rng, n);
    const auto pairs = real_eigen(a);
    CHECK(pairs.size() == n);
    for (const auto& p : pairs) {
      CHECK(p.residual <= 1e-8);
      CHECK(relative_residual(a, p.value, p.vector) == doctest::Approx(p.residual).epsilon(1e-6));
    }
  }
}

TEST_CASE("Hermitian matrices: Jacobi and the general path agree") {
  std::mt19937_64 rng(37);
  const std::size_t n = 8;
  const RealMatrix x = random_matrix(rng, n), y = random_matrix(rng, n);
  const ComplexMatrix g = to_complex(x, &y);
  ComplexMatrix h = g + adjoint(g);
  const HermitianEigen he = hermitian_jacobi(h);
  CHECK(std::is_sorted(he.values.begin(), he.values.end()));
  CHECK(max_abs(h * he.vectors - he.vectors * to_complex([&] {
                  RealMatrix d(n, n);
                  for (std::size_t i = 0; i < n; ++i) d(i, i) = he.values[i];
                  return d;
                }())) <= 1e-10);
  std::vector<Complex> jac(he.values.begin(), he.values.end());
  std::vector<Complex> gen;
  for (const auto& p : complex_eigen(h)) {
    gen.push_back(p.value);
    CHECK(p.residual <= 1e-8);
  }
  CHECK(same_multiset(jac, gen, 1e-9));
}

TEST_CASE("text grid") {
  const std::string s = format_matrix(RealMatrix::from_rows({{1, -2}, {0, 0.5}}));
  CHECK(s.find("-2") != std::string::npos);
  CHECK(std::count(s.begin(), s.end(), '\n') == 2);
}

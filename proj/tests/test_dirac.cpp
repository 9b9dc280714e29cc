#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "octeig/dirac.hpp"
#include "octeig/operators.hpp"

using namespace octeig;

namespace {

ComplexMatrix identity8() { return to_complex(RealMatrix::identity(8)); }

}  // namespace

TEST_CASE("representation entries") {
  const DiracRep rep = dirac_representation();
  const Complex i{0, 1};
  for (int k = 0; k < 3; ++k) CHECK(rep.alpha[k] == i * to_complex(left_matrix(Octonion::unit(k + 1))));
  CHECK(rep.beta == i * to_complex(left_matrix(Octonion::unit(4))));
  CHECK(real_part(rep.beta) == RealMatrix(8, 8));
}

TEST_CASE("Dirac algebra is exact") {
  const DiracRep rep = dirac_representation();
  const ComplexMatrix zero(8, 8);
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      const ComplexMatrix ac = rep.alpha[m] * rep.alpha[n] + rep.alpha[n] * rep.alpha[m];
      CHECK(ac == (m == n ? Complex(2.0) * identity8() : zero));
    }
    CHECK(rep.alpha[m] * rep.beta + rep.beta * rep.alpha[m] == zero);
  }
  CHECK(rep.beta * rep.beta == identity8());
  const auto lines = dirac_algebra_check(rep);
  CHECK(lines.size() == 10);
  for (const auto& l : lines) CHECK(l.passed);
}

TEST_CASE("dispersion identity") {
  const DiracRep rep = dirac_representation();
  CHECK(dispersion_check(rep, {0, 0, 0}, 1).max_error == 0.0);
  CHECK(dispersion_check(rep, {1, 0, 0}, 0).max_error == 0.0);
  const ComplexMatrix h = dirac_hamiltonian(rep, {1, 2, 2}, 3);
  CHECK(h * h == Complex(18.0) * identity8());
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> p(-10, 10), m(0, 10);
  for (int t = 0; t < 100; ++t) CHECK(dispersion_check(rep, {p(rng), p(rng), p(rng)}, m(rng)).passed);
}

TEST_CASE("anticommutator source") {
  for (int a = 1; a <= 7; ++a) {
    for (int b = 1; b <= 7; ++b) {
      const RealMatrix la = left_matrix(Octonion::unit(a)), lb = left_matrix(Octonion::unit(b));
      CHECK(la * lb + lb * la == (a == b ? -2.0 : 0.0) * RealMatrix::identity(8));
    }
  }
  CHECK(anticommutator_source_check().passed);
}

TEST_CASE("orthogonal doublet") {
  const ComplexOctonion one(Octonion(1.0)), e4(Octonion::unit(4));
  CHECK(projected_product(one, one) == Complex(1.0));
  CHECK(projected_product(e4, e4) == Complex(1.0));
  CHECK(projected_product(ComplexOctonion(Octonion(), Octonion(1.0)), one) == Complex(0, -1));
  for (int a = 0; a < 4; ++a) {
    for (int b = 4; b < 8; ++b) {
      CHECK(projected_product(ComplexOctonion(Octonion::unit(a)), ComplexOctonion(Octonion::unit(b))) == Complex(0));
    }
  }
  const ComplexOctonion x(parse_octonion("1 + 2e3 - e5"), parse_octonion("e2 + 4e7"));
  const auto [psi, phi] = doublet_split(x);
  CHECK(psi + e4 * phi == x);
  for (int k = 4; k < 8; ++k) {
    CHECK(psi.re()[k] == 0.0);
    CHECK(phi.im()[k] == 0.0);
  }
  for (const auto& l : orthogonal_doublet_check()) CHECK(l.passed);
}

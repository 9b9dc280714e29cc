#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "octeig/octonion.hpp"
#include "support.hpp"

using namespace octeig;
using octeig::test::random_octonion;

namespace {

// Row m, column n: signed index of e_m e_n for m, n = 1..7 (0 on the diagonal).
constexpr int kGrid[7][7] = {
    {+0, +3, -2, +5, -4, -7, +6},
    {-3, +0, +1, +6, +7, -4, -5},
    {+2, -1, +0, +7, -6, +5, -4},
    {-5, -6, -7, +0, +1, +2, +3},
    {+4, -7, +6, -1, +0, -3, +2},
    {+7, +4, -5, -2, +3, +0, -1},
    {-6, +5, +4, -3, -2, +1, +0},
};

Octonion e(int k) { return Octonion::unit(k); }

}  // namespace

TEST_CASE("structure table matches both hand-entered encodings") {
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      const Octonion p = e(m) * e(n);
      if (m == n) {
        CHECK(p == Octonion(-1.0));
        continue;
      }
      const int g = kGrid[m - 1][n - 1];
      CHECK(p == Octonion::unit(std::abs(g), g > 0 ? 1.0 : -1.0));
      CHECK(e(n) * e(m) == -p);
    }
  }
  for (const char* t : {"123", "145", "176", "246", "257", "347", "365"}) {
    const int a = t[0] - '0', b = t[1] - '0', c = t[2] - '0';
    CHECK(e(a) * e(b) == e(c));
    CHECK(e(b) * e(c) == e(a));
    CHECK(e(c) * e(a) == e(b));
  }
}

TEST_CASE("structure_constant lookups") {
  CHECK(structure_constant(1, 2) == SignedUnit{1, 3});
  CHECK(structure_constant(2, 1) == SignedUnit{-1, 3});
  CHECK(structure_constant(2, 5) == SignedUnit{1, 7});
  CHECK(structure_constant(7, 2) == SignedUnit{1, 5});
  CHECK(structure_constant(4, 4) == SignedUnit{-1, 0});
  CHECK_THROWS_AS(structure_constant(0, 1), std::out_of_range);
  CHECK_THROWS_AS(structure_constant(1, 8), std::out_of_range);
}

TEST_CASE("norm, conjugate and inverse") {
  CHECK(norm(parse_octonion("3 + 4e2")) == 5.0);
  CHECK(conj(parse_octonion("1 - 2e3 + e7")) == parse_octonion("1 + 2e3 - e7"));
  CHECK(inverse(e(4)) == -e(4));
  CHECK(inverse(Octonion(2.0)) == Octonion(0.5));
  // N = 2 distinguishes conj/N^2 from conj/N.
  const Octonion o = parse_octonion("1 + e1 + e2 + e3");
  CHECK(max_abs_diff(o * inverse(o), 1.0) <= 1e-15);
  CHECK_THROWS_AS(inverse(Octonion{}), std::domain_error);
}

TEST_CASE("nonassociativity witness") {
  CHECK(associator(e(2), e(4), e(3)) == parse_octonion("-2e5"));
  CHECK((e(1) * e(2)) * e(4) == -(e(1) * (e(2) * e(4))));
  CHECK(associator(e(1), e(2), e(3)).is_zero());
}

TEST_CASE("alternativity on basis pairs and random pairs") {
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n < 8; ++n) {
      const Octonion a = e(m), b = e(n);
      CHECK(a * (a * b) == (a * a) * b);
      CHECK((a * b) * b == a * (b * b));
    }
  }
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK(max_abs_diff(a * (a * b), (a * a) * b) <= 1e-12);
    CHECK(max_abs_diff((a * b) * b, a * (b * b)) <= 1e-12);
  }
}

TEST_CASE("conj(o1)(o1 o2) = (conj(o1) o1) o2 = (o2 conj(o1)) o1") {
  for (int m = 0; m < 8; ++m) {
    for (int n = 0; n < 8; ++n) {
      const Octonion a = e(m), b = e(n);
      CHECK(conj(a) * (a * b) == (conj(a) * a) * b);
      CHECK((b * conj(a)) * a == (conj(a) * a) * b);
    }
  }
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    const Octonion mid = (conj(a) * a) * b;
    CHECK(max_abs_diff(conj(a) * (a * b), mid) <= 1e-12);
    CHECK(max_abs_diff((b * conj(a)) * a, mid) <= 1e-12);
  }
}

TEST_CASE("norm composition and conjugation reverses products") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 500; ++t) {
    const Octonion a = random_octonion(rng), b = random_octonion(rng);
    CHECK(std::abs(norm(a * b) - norm(a) * norm(b)) <= 1e-12);
    CHECK(max_abs_diff(conj(a * b), conj(b) * conj(a)) <= 1e-12);
  }
}

TEST_CASE("literal parsing and printing") {
  const Octonion o = parse_octonion("1 - 2e3 + e7");
  CHECK(o[0] == 1.0);
  CHECK(o[3] == -2.0);
  CHECK(o[7] == 1.0);
  CHECK(parse_octonion(" -e1+0.5e2 ") == parse_octonion("-1e1 + 0.5 e2"));
  CHECK(parse_octonion("e2 + e2") == parse_octonion("2e2"));
  CHECK(to_string(Octonion{}) == "0");
  CHECK(to_string(parse_octonion("2 - 2e6")) == "2 - 2e6");
  CHECK(to_string(parse_octonion("-e1 + 0.25e4")) == "-e1 + 0.25e4");

  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    const Octonion r = random_octonion(rng, 100.0);
    CHECK(parse_octonion(to_string(r)) == r);
  }

  CHECK_THROWS_AS(parse_octonion("e9"), ParseError);
  CHECK_THROWS_AS(parse_octonion("e0"), ParseError);
  CHECK_THROWS_AS(parse_octonion(""), ParseError);
  CHECK_THROWS_AS(parse_octonion("1 +"), ParseError);
  CHECK_THROWS_AS(parse_octonion("1 * e2"), ParseError);
  CHECK(parse_octonion("2 3") == Octonion(23.0));
  try {
    parse_octonion("1 + e9");
    FAIL("no throw");
  } catch (const ParseError& err) {
    CHECK(err.column() == 5);
  }
}

TEST_CASE("complexified octonions") {
  const ComplexOctonion i = ComplexOctonion::i_unit();
  for (int m = 0; m < 8; ++m) CHECK(i * ComplexOctonion(e(m)) == ComplexOctonion(e(m)) * i);
  CHECK(i * i == ComplexOctonion(Octonion(-1.0)));
  CHECK(i * ComplexOctonion(e(1)) != ComplexOctonion(e(1)) * ComplexOctonion(e(1)));

  const ComplexOctonion x = parse_complex_octonion("(e4) + i(-1)");
  CHECK(x.re() == e(4));
  CHECK(x.im() == Octonion(-1.0));
  CHECK(parse_complex_octonion(to_string(x)) == x);
  CHECK(parse_complex_octonion("e3") == ComplexOctonion(e(3)));

  // e4 (e5 + i e1) = (e5 + i e1)(-i)
  const ComplexOctonion phi(e(5), e(1));
  CHECK(ComplexOctonion(e(4)) * phi == phi * std::complex<double>(0, -1));
  CHECK(conj(phi) == ComplexOctonion(-e(5), e(1)));
}

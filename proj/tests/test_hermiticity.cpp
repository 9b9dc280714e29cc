#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "octeig/hermiticity.hpp"

using namespace octeig;

namespace {

Octonion e(int k) { return Octonion::unit(k); }

OctVector octs(std::initializer_list<const char*> items) {
  OctVector v;
  for (const char* s : items) v.push_back(parse_octonion(s));
  return v;
}

bool supported_on(const Octonion& o, std::initializer_list<int> idx) {
  for (int k = 0; k < 8; ++k) {
    if (o[k] != 0.0 && std::find(idx.begin(), idx.end(), k) == idx.end()) return false;
  }
  return true;
}

// Sector k is u_k * span(1, e1) with u = 1, e2, e4, e6.
const std::array<std::array<Octonion, 2>, 4> kSectors{{
    {Octonion(1.0), e(1)},
    {e(2), e(2) * e(1)},
    {e(4), e(4) * e(1)},
    {e(6), e(6) * e(1)},
}};

}  // namespace

TEST_CASE("inner products for [[1, e4], [-e4, 1]]") {
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"});
  const OctVector psi = octs({"e5", "e7"});
  const Octonion left = inner(psi, apply(m, psi));
  const Octonion right = inner(apply(m, psi), psi);
  CHECK(left == parse_octonion("2 - 2e6"));
  CHECK(right == parse_octonion("2 + 2e6"));
  CHECK(complex_project(left) == Octonion(2.0));
  CHECK(complex_project(right) == Octonion(2.0));
  CHECK(inner(psi, psi) == Octonion(2.0));
}

TEST_CASE("complex projection") {
  for (int k = 0; k < 8; ++k) {
    const Octonion p = complex_project(e(k));
    CHECK(p == (k <= 1 ? e(k) : Octonion{}));
    CHECK(complex_project(p) == p);
  }
  CHECK(complex_project(parse_octonion("3 - 2e1 + 5e4 + e7")) == parse_octonion("3 - 2e1"));
}

TEST_CASE("projection annuls cross-sector terms") {
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t k = 0; k < 4; ++k) {
      for (const auto& psi : kSectors[j]) {
        for (const auto& phi : kSectors[k]) {
          const Octonion a = conj(psi) * (e(1) * phi);
          const Octonion b = conj(e(1) * psi) * phi;
          if (j != k) {
            CHECK(complex_project(a).is_zero());
            CHECK(complex_project(b).is_zero());
          } else {
            CHECK(complex_project(a) == -complex_project(b));
          }
        }
      }
    }
  }
}

TEST_CASE("diagonal terms live in quaternionic subalgebras") {
  // (conj(alpha) u) [e1 (u beta)] for alpha, beta in span(1, e1).
  const std::array<std::initializer_list<int>, 4> sub{{{0, 1}, {0, 1, 2, 3}, {0, 1, 4, 5}, {0, 1, 6, 7}}};
  const std::array<Octonion, 4> u{Octonion(1.0), e(2), e(4), e(6)};
  for (std::size_t k = 0; k < 4; ++k) {
    for (const auto& alpha : {Octonion(1.0), e(1)}) {
      for (const auto& beta : {Octonion(1.0), e(1)}) {
        const Octonion left = (conj(alpha) * conj(u[k])) * (e(1) * (u[k] * beta));
        const Octonion right = ((conj(alpha) * conj(u[k])) * e(1)) * (u[k] * beta);
        CHECK(supported_on(left, sub[k]));
        CHECK(supported_on(right, sub[k]));
      }
    }
  }
}

TEST_CASE("e1 is anti-hermitian under the projected product, dimensions 1 and 2") {
  for (std::size_t n : {1u, 2u}) {
    OperatorMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.re(i, i) = GeneralizedOperator::left(e(1));
    const auto r = classify(m, ProductKind::ComplexProjected);
    CHECK(r.classification == Classification::AntiHermitian);
    CHECK(r.exhaustive);
    CHECK(r.pairs_checked == 64 * n * n);
    CHECK(r.witnesses.empty());
  }
}

TEST_CASE("classification under the full product") {
  const auto e1 = classify(OperatorMatrix::from_literals(1, {"e1"}), ProductKind::Full);
  CHECK(e1.classification == Classification::Neither);
  REQUIRE_FALSE(e1.witnesses.empty());
  for (const auto& w : e1.witnesses) {
    const OperatorMatrix m = OperatorMatrix::from_literals(1, {"e1"});
    CHECK(w.left == inner(w.psi, apply(m, w.phi)));
    CHECK(w.right == inner(apply(m, w.psi), w.phi));
  }
  bool h = false, ah = false;
  for (const auto& w : e1.witnesses) {
    h = h || w.breaks_hermitian;
    ah = ah || w.breaks_anti_hermitian;
  }
  CHECK(h);
  CHECK(ah);

  const OperatorMatrix hm = OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"});
  const OctVector psi = octs({"e5", "e7"});
  const auto r = classify(hm, ProductKind::Full, {{psi, psi}});
  CHECK(r.classification == Classification::Neither);
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].psi == psi);
  CHECK(r.witnesses[0].left == parse_octonion("2 - 2e6"));
  CHECK(r.witnesses[0].right == parse_octonion("2 + 2e6"));
  CHECK(r.witnesses[0].breaks_hermitian);
  CHECK(r.witnesses[0].breaks_anti_hermitian);

  const auto real = classify(OperatorMatrix::from_literals(2, {"2", "1", "1", "3"}), ProductKind::Full);
  CHECK(real.classification == Classification::Hermitian);
  CHECK(real.witnesses.empty());
  const auto zero = classify(OperatorMatrix::from_literals(1, {"0"}), ProductKind::Full);
  CHECK(zero.classification == Classification::Hermitian);
}

TEST_CASE("spectrum theorem check") {
  const auto ok = hermitian_spectrum_theorem_check(OperatorMatrix::from_literals(2, {"2", "1", "1", "3"}));
  CHECK(ok.applicable);
  CHECK(ok.passed);
  for (const auto& [a, b] : ok.clusters) CHECK(b == doctest::Approx(0.0));

  const auto hm = hermitian_spectrum_theorem_check(OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"}));
  CHECK_FALSE(hm.applicable);
  CHECK(hm.classification == Classification::Neither);
}

TEST_CASE("unit reports are recorded, not asserted as a law") {
  const auto projected = unit_reports(ProductKind::ComplexProjected);
  REQUIRE(projected.size() == 7);
  CHECK(projected[0].classification == Classification::AntiHermitian);
  for (std::size_t m = 1; m < 7; ++m) {
    CAPTURE(m + 1);
    CHECK(projected[m].classification == Classification::Neither);
  }
  for (const auto& r : unit_reports(ProductKind::Full)) CHECK(r.classification == Classification::Neither);
  CHECK(to_string(ProductKind::ComplexProjected) == "complex-projected");
  CHECK(to_string(Classification::AntiHermitian) == "anti-hermitian");
}

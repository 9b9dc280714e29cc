// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "octeig/dirac.hpp"
#include "octeig/eigen_engine.hpp"
#include "octeig/hermiticity.hpp"
#include "octeig/operators.hpp"

using namespace octeig;

namespace {

Octonion e(int k) { return Octonion::unit(k); }
Octonion lit(const char* s) { return parse_octonion(s); }

OctVector octs(std::initializer_list<const char*> items) {
  OctVector v;
  for (const char* s : items) v.push_back(lit(s));
  return v;
}

using Clock = std::chrono::steady_clock;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool has_clusters(const std::vector<EigenCluster>& cl, const std::vector<std::pair<Complex, std::size_t>>& want) {
  if (cl.size() != want.size()) return false;
  for (const auto& [z, mult] : want) {
    if (std::none_of(cl.begin(), cl.end(), [&, z = z, mult = mult](const EigenCluster& c) {
          return std::abs(c.value - z) <= 1e-9 && c.multiplicity == mult;
        })) {
      return false;
    }
  }
  return true;
}

// 1. All 49 products e_m e_n against the seven triples.
std::string criterion1(bool& ok) {
  const auto t0 = Clock::now();
  int bad = 0;
  for (int m = 1; m <= 7; ++m) {
    for (int n = 1; n <= 7; ++n) {
      Octonion expect = Octonion(-1.0);
      if (m != n) {
        for (const char* t : {"123", "145", "176", "246", "257", "347", "365"}) {
          for (int r = 0; r < 3; ++r) {
            const int a = t[r] - '0', b = t[(r + 1) % 3] - '0', c = t[(r + 2) % 3] - '0';
            if (a == m && b == n) expect = e(c);
            if (a == n && b == m) expect = -e(c);
          }
        }
      }
      bad += !(e(m) * e(n) == expect);
    }
  }
  const double ms = seconds_since(t0) * 1e3;
  ok = bad == 0 && ms < 1.0;
  return std::to_string(49 - bad) + "/49 products, " + sci(ms) + " ms";
}

// 2. R1, L2, R1 L3, L3 R1 from their action vectors.
std::string criterion2(bool& ok) {
  struct Golden {
    const char* word;
    std::array<int, 8> sign;
    std::array<int, 8> index;
  };
  const Golden goldens[] = {
      {"R1", {-1, 1, 1, -1, 1, -1, -1, 1}, {1, 0, 3, 2, 5, 4, 7, 6}},
      {"L2", {-1, 1, 1, -1, -1, -1, 1, 1}, {2, 3, 0, 1, 6, 7, 4, 5}},
      {"R1 L3", {1, -1, 1, -1, 1, 1, -1, -1}, {2, 3, 0, 1, 6, 7, 4, 5}},
      {"L3 R1", {1, -1, 1, -1, -1, -1, 1, 1}, {2, 3, 0, 1, 6, 7, 4, 5}},
  };
  int matched = 0;
  for (const auto& g : goldens) {
    RealMatrix expect(8, 8);
    for (std::size_t i = 0; i < 8; ++i) expect(i, static_cast<std::size_t>(g.index[i])) = g.sign[i];
    matched += word_to_matrix(OperatorWord::parse(g.word)) == expect;
  }
  // The displayed R1 grid carries stray leading 1s in its last two rows; the
  // action vector above is authoritative.
  ok = matched == 4;
  return std::to_string(matched) + "/4 matrices";
}

// 3. Operator identities and basis rank.
std::string criterion3(bool& ok) {
  const auto t0 = Clock::now();
  auto L = [](int k) { return left_matrix(e(k)); };
  auto R = [](int k) { return right_matrix(e(k)); };
  bool first = L(1) * L(2) == L(3) + R(2) * L(1) - L(1) * R(2);
  int bad = 0;
  for (int m = 1; m <= 7; ++m)
    for (int n = 1; n <= 7; ++n) bad += !(L(m) * R(n) + L(n) * R(m) == R(n) * L(m) + R(m) * L(n));
  const std::size_t r = basis_rank();
  const double s = seconds_since(t0);
  ok = first && bad == 0 && r == 64 && s < 1.0;
  return std::string("L1L2 identity ") + (first ? "exact" : "FAILS") + ", symmetric identity " +
         std::to_string(49 - bad) + "/49, rank " + std::to_string(r) + ", " + sci(s) + " s";
}

// 4. The e4 eigenproblem.
std::string criterion4(bool& ok) {
  const OperatorMatrix m = OperatorMatrix::from_literals(1, {"e4"});
  const auto cl = cluster_eigenvalues(eigenvalues(operator_matrix_to_real(m)), 1e-9);
  const bool spectrum = has_clusters(cl, {{{0, 1}, 4}, {{0, -1}, 4}});
  // (xi, eta) = (e7, e3) solves the system at b = -1; its b >= 0 image is
  // (e7, -e3) at (a, b) = (0, 1).
  const CoupledCheck printed = verify_coupled(m, 0, -1, octs({"e7"}), octs({"e3"}));
  const CoupledCheck oriented = verify_coupled(m, 0, 1, octs({"e7"}), octs({"-e3"}));
  ok = spectrum && printed.exact && printed.residual == 0.0 && oriented.exact && oriented.residual == 0.0;
  return std::string("spectrum ") + (spectrum ? "{i x4, -i x4}" : "WRONG") + ", pair residuals " +
         sci(printed.residual) + " / " + sci(oriented.residual);
}

// 5. The 2x2 example [[1, e4], [0, e5]].
std::string criterion5(bool& ok) {
  const auto t0 = Clock::now();
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e4", "0", "e5"});
  const auto cl = cluster_eigenvalues(eigenvalues(operator_matrix_to_real(m)), 1e-9);
  const bool spectrum = has_clusters(cl, {{{0, 1}, 4}, {{0, -1}, 4}, {{1, 0}, 8}});
  const bool pair = verify_coupled(m, 0, -1, octs({"-e3 + e6", "2e7"}), octs({"e3 + e6", "2e2"})).exact;

  auto cx = [](const char* re, const char* im) { return ComplexOctonion(lit(re), lit(im)); };
  const std::vector<ComplexOctVector> sols{
      {cx("-e1 - e4", "e4 - e1"), cx("2", "2e5")},
      {cx("1 + e5", "1 - e5"), cx("2e1", "2e4")},
      {cx("e2 - e7", "e2 + e7"), cx("-2e3", "-2e6")},
      {cx("e6 - e3", "e3 + e6"), cx("2e7", "2e2")},
  };
  int exact = 0;
  for (const auto& phi : sols) exact += verify_complexified(m, {0, -1}, phi).exact;
  const EquivalenceReport eq = solver_equivalence(m, 1e-9);
  const double s = seconds_since(t0);
  ok = spectrum && pair && exact == 4 && eq.passed && s < 1.0;
  return std::string("spectrum ") + (spectrum ? "ok" : "WRONG") + ", printed pair " + (pair ? "exact" : "FAILS") +
         ", complexified " + std::to_string(exact) + "/4, equivalence " + (eq.passed ? "holds" : "FAILS") + ", " +
         sci(s) + " s";
}

// 6. Right eigenvalues of [[1, e1], [-e1, 1]] with psi_a = e2.
std::string criterion6(bool& ok) {
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e1", "-e1", "1"});
  const std::vector<std::pair<const char*, const char*>> expected{
      {"e3", "0"},      {"-e3", "2"},      {"e4", "1 - e7"}, {"-e4", "1 + e7"}, {"e5", "1 + e6"},
      {"-e5", "1 - e6"}, {"e6", "1 - e5"}, {"-e6", "1 + e5"}, {"e7", "1 + e4"}, {"-e7", "1 - e4"}};
  const auto found = enumerate_basis_right_eigs(m, e(2));
  int matched = 0;
  for (const auto& [b, lam] : expected) {
    const RightEigenClaim claim{{e(2), lit(b)}, lit(lam)};
    const bool listed = std::any_of(found.begin(), found.end(), [&](const RightEigenClaim& c) {
      return c.psi == claim.psi && c.lambda == claim.lambda;
    });
    matched += listed && verify_right_eigen(m, claim).exact;
  }
  ok = matched == 10 && found.size() == 10;
  return std::to_string(matched) + "/10 listed and exact, " + std::to_string(found.size()) + " returned";
}

// 7. Hermiticity values and classifications.
std::string criterion7(bool& ok) {
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"});
  const OctVector psi = octs({"e5", "e7"});
  const Octonion left = inner(psi, apply(m, psi)), right = inner(apply(m, psi), psi);
  const bool values = left == lit("2 - 2e6") && right == lit("2 + 2e6");
  const bool projections = complex_project(left) == Octonion(2.0) && complex_project(right) == Octonion(2.0);
  const HermiticityReport e1 = classify(OperatorMatrix::from_literals(1, {"e1"}), ProductKind::ComplexProjected);
  const bool anti = e1.classification == Classification::AntiHermitian && e1.exhaustive;
  const HermiticityReport full = classify(m, ProductKind::Full, {{psi, psi}});
  const bool witness = full.classification == Classification::Neither && !full.witnesses.empty() &&
                       full.witnesses[0].left == lit("2 - 2e6") && full.witnesses[0].right == lit("2 + 2e6");
  ok = values && projections && anti && witness;
  return "<psi,M psi> = " + to_string(left) + ", <M psi,psi> = " + to_string(right) + ", [e1] projected " +
         to_string(e1.classification) + ", M full " + to_string(full.classification);
}

// 8. Dirac algebra and 100 random dispersion checks.
std::string criterion8(bool& ok) {
  const DiracRep rep = dirac_representation();
  const ComplexMatrix id = to_complex(RealMatrix::identity(8)), zero(8, 8);
  int bad = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      bad += !(rep.alpha[a] * rep.alpha[b] + rep.alpha[b] * rep.alpha[a] == (a == b ? Complex(2) * id : zero));
    }
    bad += !(rep.alpha[a] * rep.beta + rep.beta * rep.alpha[a] == zero);
  }
  bad += !(rep.beta * rep.beta == id);

  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_real_distribution<double> pd(-10, 10), md(0, 10);
  int passed = 0;
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::array<double, 3> p{pd(rng), pd(rng), pd(rng)};
    const double mass = md(rng);
    const ComplexMatrix h = dirac_hamiltonian(rep, p, mass);
    const double e2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + mass * mass;
    const double err = max_abs(h * h - Complex(e2) * id) / std::max(1.0, e2);
    worst = std::max(worst, err);
    passed += err <= 1e-12;
  }
  ok = bad == 0 && passed == 100;
  return std::to_string(13 - bad) + "/13 identities exact, dispersion " + std::to_string(passed) +
         "/100 (worst " + sci(worst) + ")";
}

// 9. Schur residuals and eigenpair residuals on 50 random matrices.
std::string criterion9(bool& ok) {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(kDefaultSeed);
  std::uniform_int_distribution<std::size_t> dim(1, 32);
  std::normal_distribution<double> nd;
  double worst_schur = 0.0, worst_pair = 0.0;
  std::size_t pairs = 0, missing = 0;
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = dim(rng);
    RealMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = nd(rng);
    const SchurForm s = real_schur(a);
    worst_schur = std::max(worst_schur, frobenius_norm(s.q * s.t * transpose(s.q) - a) / frobenius_norm(a));
    const auto eig = real_eigen(a);
    missing += n - eig.size();
    for (const auto& p : eig) {
      // Recomputed here rather than trusting the stored field.
      std::vector<Complex> av(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) av[i] += a(i, j) * p.vector[j];
      double r = 0.0, v = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        r += std::norm(av[i] - p.value * p.vector[i]);
        v += std::norm(p.vector[i]);
      }
      worst_pair = std::max(worst_pair, std::sqrt(r) / std::max(1.0, std::sqrt(v) * frobenius_norm(a)));
      ++pairs;
    }
  }
  const double s = seconds_since(t0);
  ok = worst_schur <= 1e-9 && worst_pair <= 1e-8 && s < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "worst Schur %.2e, worst pair %.2e over %zu pairs (%zu short), %.2f s",
                worst_schur, worst_pair, pairs, missing, s);
  return buf;
}

// 10. Quaternionic limit of [[1, e1], [-e1, 1]].
std::string criterion10(bool& ok) {
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e1", "-e1", "1"});
  const auto coupled = solve_coupled(m);
  std::vector<std::pair<double, double>> ab;
  for (const auto& c : coupled) ab.emplace_back(c.a, c.b);
  std::sort(ab.begin(), ab.end());
  const bool clusters = ab.size() == 2 && std::abs(ab[0].first) <= 1e-9 && std::abs(ab[0].second) <= 1e-9 &&
                        std::abs(ab[1].first - 2.0) <= 1e-9 && std::abs(ab[1].second) <= 1e-9;
  // Right eigenvalues 0 and 2 on the quaternionic line.
  const bool right = verify_right_eigen(m, {octs({"e2", "e3"}), Octonion(0.0)}).exact &&
                     verify_right_eigen(m, {octs({"e2", "-e3"}), Octonion(2.0)}).exact;
  const QuaternionicLimitReport q = quaternionic_limit_check(m);
  ok = clusters && right && q.passed;
  return std::string("coupled clusters ") + (clusters ? "{(0,0), (2,0)}" : "WRONG") + ", right eigenvalues " +
         (right ? "0 and 2" : "WRONG") + ", limit check " + (q.passed ? "passes" : "FAILS");
}

}  // namespace

int main() {
  const std::vector<std::function<std::string(bool&)>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                                criterion5, criterion6, criterion7, criterion8,
                                                                criterion9, criterion10};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    bool ok = false;
    std::string detail;
    try {
      detail = criteria[k](ok);
    } catch (const std::exception& ex) {
      ok = false;
      detail = std::string("exception: ") + ex.what();
    }
    failed += !ok;
    std::printf("[%s] criterion %zu: %s\n", ok ? "PASS" : "FAIL", k + 1, detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

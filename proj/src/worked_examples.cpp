#include "octeig/worked_examples.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "octeig/dirac.hpp"
#include "octeig/eigen_engine.hpp"
#include "octeig/hermiticity.hpp"
#include "octeig/io.hpp"
#include "octeig/operators.hpp"

namespace octeig {

namespace {

Octonion oct(std::string_view s) { return parse_octonion(s); }

OctVector octs(std::initializer_list<std::string_view> items) {
  OctVector v;
  for (auto s : items) v.push_back(oct(s));
  return v;
}

ComplexOctVector cvec(std::initializer_list<std::pair<std::string_view, std::string_view>> items) {
  ComplexOctVector v;
  for (auto [re, im] : items) v.emplace_back(oct(re), oct(im));
  return v;
}

// Action vector: result coefficient i is sign[i] * psi[index[i]].
RealMatrix action_matrix(const std::array<int, 8>& sign, const std::array<int, 8>& index) {
  RealMatrix a(8, 8);
  for (std::size_t i = 0; i < 8; ++i) a(i, static_cast<std::size_t>(index[i])) = sign[i];
  return a;
}

RealMatrix rows8(std::initializer_list<std::initializer_list<double>> rows) { return RealMatrix::from_rows(rows); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

class Suite {
 public:
  void group(std::string g) { group_ = std::move(g); }
  void check(std::string name, bool ok, std::string detail = {}) {
    out_.push_back({group_, std::move(name), ok, std::move(detail)});
  }
  template <typename F>
  void guarded(const std::string& name, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      check(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<ExampleCheck> take() { return std::move(out_); }

 private:
  std::string group_;
  std::vector<ExampleCheck> out_;
};

bool cluster_shape(const std::vector<EigenCluster>& cl, const std::vector<std::pair<Complex, std::size_t>>& want,
                   double tol) {
  if (cl.size() != want.size()) return false;
  for (const auto& [z, mult] : want) {
    const bool found = std::any_of(cl.begin(), cl.end(), [&, z = z, mult = mult](const EigenCluster& c) {
      return std::abs(c.value - z) <= tol && c.multiplicity == mult;
    });
    if (!found) return false;
  }
  return true;
}

std::string describe(const std::vector<EigenCluster>& cl) {
  std::ostringstream os;
  for (const auto& c : cl) os << "(" << c.value.real() << "," << c.value.imag() << ")x" << c.multiplicity << " ";
  return os.str();
}

void algebra(Suite& s) {
  s.group("algebra");
  s.check("e1 e2 = e3", oct("e1") * oct("e2") == oct("e3"));
  s.check("e4 e7 = e3", oct("e4") * oct("e7") == oct("e3"));
  s.check("e4 e3 = -e7", oct("e4") * oct("e3") == oct("-e7"));
  s.check("e2 e5 = e7", structure_constant(2, 5) == SignedUnit{1, 7});
  s.check("e7 e2 = e5", structure_constant(7, 2) == SignedUnit{1, 5});

  // The seven triples as written, decoded digit by digit.
  int mismatches = 0;
  for (const char* t : {"123", "145", "176", "246", "257", "347", "365"}) {
    for (int rot = 0; rot < 3; ++rot) {
      const int a = t[rot] - '0', b = t[(rot + 1) % 3] - '0', c = t[(rot + 2) % 3] - '0';
      mismatches += !(oct("e" + std::to_string(a)) * oct("e" + std::to_string(b)) == Octonion::unit(c));
      mismatches += !(oct("e" + std::to_string(b)) * oct("e" + std::to_string(a)) == Octonion::unit(c, -1.0));
    }
  }
  for (int m = 1; m <= 7; ++m) mismatches += !(Octonion::unit(m) * Octonion::unit(m) == Octonion(-1.0));
  s.check("all 49 unit products follow 123 145 176 246 257 347 365", mismatches == 0,
          std::to_string(mismatches) + " mismatches");

  s.check("inverse(e4) = -e4", inverse(oct("e4")) == oct("-e4"));
  const Octonion o = oct("1 + 2e3 - e5 + 3e6");
  s.check("o o^-1 = 1 with o^-1 = conj(o)/N(o)^2", max_abs_diff(o * inverse(o), 1.0) <= 1e-12);

  int failures = 0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      const Octonion x = Octonion::unit(a), y = Octonion::unit(b);
      const Octonion left = conj(x) * (x * y), mid = (conj(x) * x) * y, right = (y * conj(x)) * x;
      failures += !(left == mid && mid == right);
    }
  }
  s.check("conj(o1)(o1 o2) = (conj(o1) o1) o2 = (o2 conj(o1)) o1 on basis pairs", failures == 0);

  const ComplexOctonion minus_i = ComplexOctonion(Octonion{}, Octonion(-1.0));
  const ComplexOctonion e4(oct("e4"));
  int bad = 0;
  for (auto [re, im] : std::initializer_list<std::pair<const char*, const char*>>{
           {"e4", "-1"}, {"e5", "e1"}, {"e6", "e2"}, {"e7", "e3"}}) {
    const ComplexOctonion phi(oct(re), oct(im));
    bad += !(e4 * phi == phi * minus_i);
  }
  s.check("e4 Phi = Phi (-i) for e4 - i, e5 + i e1, e6 + i e2, e7 + i e3", bad == 0);
}

void operators(Suite& s) {
  s.group("operators");
  const RealMatrix r1 = word_to_matrix(OperatorWord::parse("R1"));
  const RealMatrix l2 = word_to_matrix(OperatorWord::parse("L2"));
  s.check("R1 psi = (-psi1, psi0, psi3, -psi2, psi5, -psi4, -psi7, psi6)",
          r1 == action_matrix({-1, 1, 1, -1, 1, -1, -1, 1}, {1, 0, 3, 2, 5, 4, 7, 6}));
  s.check("L2 psi = (-psi2, psi3, psi0, -psi1, -psi6, -psi7, psi4, psi5)",
          l2 == action_matrix({-1, 1, 1, -1, -1, -1, 1, 1}, {2, 3, 0, 1, 6, 7, 4, 5}));
  s.check("R1 L3 psi = (psi2, -psi3, psi0, -psi1, psi6, psi7, -psi4, -psi5)",
          word_to_matrix(OperatorWord::parse("R1 L3")) ==
              action_matrix({1, -1, 1, -1, 1, 1, -1, -1}, {2, 3, 0, 1, 6, 7, 4, 5}));
  s.check("L3 R1 psi = (psi2, -psi3, psi0, -psi1, -psi6, -psi7, psi4, psi5)",
          word_to_matrix(OperatorWord::parse("L3 R1")) ==
              action_matrix({1, -1, 1, -1, -1, -1, 1, 1}, {2, 3, 0, 1, 6, 7, 4, 5}));

  const RealMatrix l2_printed = rows8({{0, 0, -1, 0, 0, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0, 0, 0},
                                       {0, -1, 0, 0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 0, -1, 0},
                                       {0, 0, 0, 0, 0, 0, 0, -1},
                                       {0, 0, 0, 0, 1, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 1, 0, 0}});
  s.check("printed L2 matrix", l2 == l2_printed && generalized_to_matrix(GeneralizedOperator::left(oct("e2"))) == l2);

  const RealMatrix r1_printed = rows8({{0, -1, 0, 0, 0, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0, 0, 0},
                                       {0, 0, -1, 0, 0, 0, 0, 0},
                                       {0, 0, 0, 0, 0, 1, 0, 0},
                                       {0, 0, 0, 0, -1, 0, 0, 0},
                                       {1, 0, 0, 0, 0, 0, 0, -1},
                                       {1, 0, 0, 0, 0, 0, 1, 0}});
  std::vector<std::pair<std::size_t, std::size_t>> diffs;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      if (r1(i, j) != r1_printed(i, j)) diffs.emplace_back(i, j);
  s.check("printed R1 matrix differs from its action only at the leading entries of rows 7 and 8",
          diffs == std::vector<std::pair<std::size_t, std::size_t>>{{6, 0}, {7, 0}});

  int bad = 0;
  for (int k = 0; k < 8; ++k) {
    const Octonion psi = Octonion::unit(k);
    const Octonion direct = oct("e4") * (((oct("e6") * psi) * oct("e1")) * oct("e5"));
    bad += !(apply(OperatorWord::parse("L4 R5 R1 L6"), psi) == direct);
  }
  s.check("L4 R5 R1 L6 psi = e4{[(e6 psi) e1] e5}", bad == 0);

  for (const auto& c : operator_identity_check()) s.check(c.name, c.passed, c.detail);
  s.check("basis {1, L_m, R_n, R_n L_m} has rank 64", basis_rank() == 64);
  s.check("census of 106 operators has rank 64", operator_census().size() == 106 && basis_rank(operator_census()) == 64);
  const std::vector<RealMatrix> pair{
      word_to_matrix(OperatorWord::parse("L1 R2")) + word_to_matrix(OperatorWord::parse("L2 R1")),
      word_to_matrix(OperatorWord::parse("R2 L1")) + word_to_matrix(OperatorWord::parse("R1 L2"))};
  s.check("{L1 R2 + L2 R1, R2 L1 + R1 L2} has rank 1", basis_rank(pair) == 1);
}

void eigenspace_checks(Suite& s, const RealMatrix& a, const EigenOptions& opts) {
  const Complex i{0, 1};
  const EigenPair p = eigenvector(a, -i, opts);
  s.check("eigenvector for z = -i has residual <= 1e-10", p.residual <= 1e-10, fmt(p.residual));

  const auto basis = eigenspace(a, -i, 4, opts);
  const std::array<Complex, 8> target{0, 0, 0, i, 0, 0, 0, 1};
  std::array<Complex, 8> rest = target;
  for (const auto& b : basis) {
    Complex dot{};
    for (std::size_t k = 0; k < 8; ++k) dot += std::conj(b.vector[k]) * target[k];
    for (std::size_t k = 0; k < 8; ++k) rest[k] -= dot * b.vector[k];
  }
  const double left = norm2(std::span<const Complex>(rest));
  s.check("(0, 0, 0, i, 0, 0, 0, 1) lies in the computed z = -i eigenspace", basis.size() == 4 && left <= 1e-10,
          fmt(left));
}

void e4_problem(Suite& s, const EigenOptions& opts) {
  s.group("e4");
  const OperatorMatrix m = OperatorMatrix::from_literals(1, {"e4"});
  const RealMatrix a = operator_matrix_to_real(m);
  const RealMatrix printed = rows8({{0, 0, 0, 0, -1, 0, 0, 0},
                                    {0, 0, 0, 0, 0, 1, 0, 0},
                                    {0, 0, 0, 0, 0, 0, 1, 0},
                                    {0, 0, 0, 0, 0, 0, 0, 1},
                                    {1, 0, 0, 0, 0, 0, 0, 0},
                                    {0, -1, 0, 0, 0, 0, 0, 0},
                                    {0, 0, -1, 0, 0, 0, 0, 0},
                                    {0, 0, 0, -1, 0, 0, 0, 0}});
  s.check("8x8 translation of e4", a == printed);

  const auto cl = cluster_eigenvalues(eigenvalues(a, opts), 1e-9);
  s.check("spectrum {i x4, -i x4}", cluster_shape(cl, {{{0, 1}, 4}, {{0, -1}, 4}}, 1e-9), describe(cl));

  // Printed eigenvectors: index of the "1" entry and the signed i entry.
  const ComplexMatrix ac = to_complex(a);
  int bad = 0;
  const Complex i{0, 1};
  for (const auto& [z, vecs] : std::initializer_list<std::pair<Complex, std::array<std::array<Complex, 8>, 4>>>{
           {-i,
            {{{0, 0, 0, i, 0, 0, 0, 1}, {0, 0, i, 0, 0, 0, 1, 0}, {0, i, 0, 0, 0, 1, 0, 0}, {-i, 0, 0, 0, 1, 0, 0, 0}}}},
           {i,
            {{{0, 0, 0, -i, 0, 0, 0, 1}, {0, 0, -i, 0, 0, 0, 1, 0}, {0, -i, 0, 0, 0, 1, 0, 0}, {i, 0, 0, 0, 1, 0, 0, 0}}}}}) {
    for (const auto& v : vecs) {
      const auto av = ac * std::span<const Complex>(v);
      for (std::size_t k = 0; k < 8; ++k) bad += av[k] != z * v[k];
    }
  }
  s.check("printed eigenvectors satisfy A v = z v exactly", bad == 0);

  eigenspace_checks(s, a, opts);

  s.check("(a, b) = (0, -1), xi = e7, eta = e3 verifies exactly",
          verify_coupled(m, 0, -1, octs({"e7"}), octs({"e3"})).exact);
  s.check("canonical (a, b) = (0, 1), xi = e7, eta = -e3 verifies exactly",
          verify_coupled(m, 0, 1, octs({"e7"}), octs({"-e3"})).exact);
}

void two_by_two(Suite& s, const EigenOptions& opts) {
  s.group("2x2");
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e4", "0", "e5"});
  const RealMatrix a = operator_matrix_to_real(m);
  const auto cl = cluster_eigenvalues(eigenvalues(a, opts), 1e-9);
  s.check("spectrum {i x4, -i x4, 1 x8}", cluster_shape(cl, {{{0, 1}, 4}, {{0, -1}, 4}, {{1, 0}, 8}}, 1e-9),
          describe(cl));

  const auto coupled = solve_coupled(m, opts);
  bool geo = coupled.size() == 2;
  for (const auto& c : coupled) geo = geo && c.solutions.size() == c.multiplicity;
  s.check("geometric multiplicity equals algebraic multiplicity", geo);

  const OctVector xi = octs({"-e3 + e6", "2e7"}), eta = octs({"e3 + e6", "2e2"});
  s.check("printed pair at (a, b) = (0, -1) verifies exactly", verify_coupled(m, 0, -1, xi, eta).exact);
  OctVector neg_eta = eta;
  for (auto& o : neg_eta) o = -o;
  s.check("conjugate pair at (a, b) = (0, 1) verifies exactly", verify_coupled(m, 0, 1, xi, neg_eta).exact);

  int bad = 0;
  for (const auto& phi : {cvec({{"-e1 - e4", "e4 - e1"}, {"2", "2e5"}}), cvec({{"1 + e5", "1 - e5"}, {"2e1", "2e4"}}),
                          cvec({{"e2 - e7", "e2 + e7"}, {"-2e3", "-2e6"}}),
                          cvec({{"e6 - e3", "e3 + e6"}, {"2e7", "2e2"}})}) {
    bad += !verify_complexified(m, {0, -1}, phi).exact;
  }
  s.check("four complexified solutions at z = -i verify exactly", bad == 0);

  bad = 0;
  const ComplexOctonion e5(oct("e5"));
  const ComplexOctonion minus_i(Octonion{}, Octonion(-1.0));
  for (auto [re, im] : std::initializer_list<std::pair<const char*, const char*>>{
           {"1", "e5"}, {"e1", "e4"}, {"e3", "e6"}, {"e7", "e2"}}) {
    const ComplexOctonion x(oct(re), oct(im));
    bad += !(e5 * x == x * minus_i);
  }
  s.check("e5 x = x (-i) for 1 + i e5, e1 + i e4, e3 + i e6, e7 + i e2", bad == 0);

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> d(-5, 5);
  bad = 0;
  for (int t = 0; t < 32; ++t) {
    Octonion p, q;
    for (int k = 0; k < 8; ++k) {
      p[k] = d(rng);
      q[k] = d(rng);
    }
    bad += !verify_complexified(m, {1, 0}, {ComplexOctonion(p, q), ComplexOctonion()}).exact;
  }
  s.check("(phi + i psi, 0) solves z = 1 for 32 sampled integer phi, psi", bad == 0);

  const auto eq = solver_equivalence(m, 1e-9, opts);
  s.check("coupled and complexified solvers agree", eq.passed, eq.detail);
}

void orep(Suite& s) {
  s.group("right eigenvalues");
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e1", "-e1", "1"});
  const std::vector<std::array<const char*, 2>> expected{
      {"e3", "0"},       {"-e3", "2"},      {"e4", "1 - e7"}, {"-e4", "1 + e7"}, {"e5", "1 + e6"},
      {"-e5", "1 - e6"}, {"e6", "1 - e5"}, {"-e6", "1 + e5"}, {"e7", "1 + e4"}, {"-e7", "1 - e4"}};
  const auto found = enumerate_basis_right_eigs(m, oct("e2"));
  bool same = found.size() == expected.size();
  for (const auto& [b, lam] : expected) {
    same = same && std::any_of(found.begin(), found.end(), [&, b = b, lam = lam](const RightEigenClaim& c) {
             return c.psi[0] == oct("e2") && c.psi[1] == oct(b) && c.lambda == oct(lam);
           });
  }
  s.check("psi_a = e2 yields exactly the ten listed solutions", same, std::to_string(found.size()) + " found");

  int bad = 0;
  for (const auto& [pa, pb, lam] : std::initializer_list<std::array<const char*, 3>>{
           {"e2", "e3", "0"}, {"e4", "e5", "0"}, {"e7", "e6", "0"}, {"e2", "-e3", "2"}, {"e4", "-e5", "2"},
           {"e7", "-e6", "2"}}) {
    bad += !verify_right_eigen(m, {octs({pa, pb}), oct(lam)}).exact;
  }
  s.check("quaternionic-line solutions with eigenvalues 0 and 2", bad == 0);

  const OperatorMatrix hm = OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"});
  s.check("(e5, e7) has right eigenvalue 1 - e6", verify_right_eigen(hm, {octs({"e5", "e7"}), oct("1 - e6")}).exact);
}

void hermiticity(Suite& s) {
  s.group("hermiticity");
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e4", "-e4", "1"});
  const OctVector psi = octs({"e5", "e7"});
  const Octonion left = inner(psi, apply(m, psi)), right = inner(apply(m, psi), psi);
  s.check("<psi, M psi> = 2 - 2e6", left == oct("2 - 2e6"), to_string(left));
  s.check("<M psi, psi> = 2 + 2e6", right == oct("2 + 2e6"), to_string(right));
  s.check("both complex projections equal 2", complex_project(left) == 2.0 && complex_project(right) == 2.0);

  const OperatorMatrix e1 = OperatorMatrix::from_literals(1, {"e1"});
  const auto proj = classify(e1, ProductKind::ComplexProjected);
  s.check("[e1] is anti-hermitian under the projected product",
          proj.classification == Classification::AntiHermitian && proj.exhaustive);
  s.check("[e1] is neither under the full product", classify(e1, ProductKind::Full).classification == Classification::Neither);

  const auto full = classify(m, ProductKind::Full, {{psi, psi}});
  const bool witness = !full.witnesses.empty() && full.witnesses[0].left == oct("2 - 2e6") &&
                       full.witnesses[0].right == oct("2 + 2e6");
  s.check("hermitian matrix [[1, e4], [-e4, 1]] is not a hermitian operator",
          full.classification == Classification::Neither && witness);
  const auto thm = hermitian_spectrum_theorem_check(m);
  s.check("spectrum theorem not applicable to [[1, e4], [-e4, 1]]", !thm.applicable);
}

void dirac(Suite& s) {
  s.group("dirac");
  const DiracRep rep = dirac_representation();
  bool all = true;
  for (const auto& c : dirac_algebra_check(rep)) all = all && c.passed;
  s.check("alpha = i(e1, e2, e3), beta = i e4 satisfy the Dirac algebra", all);
  const auto d = dispersion_check(rep, {1, 2, 2}, 3);
  s.check("p = (1, 2, 2), m = 3 gives H^2 = 18 I", d.passed && d.max_error == 0.0, fmt(d.max_error));
  all = true;
  for (const auto& c : orthogonal_doublet_check()) all = all && c.passed;
  s.check("Psi and e4 Phi sectors are orthogonal", all);
}

void quaternionic(Suite& s, const EigenOptions& opts) {
  s.group("quaternionic limit");
  const OperatorMatrix m = OperatorMatrix::from_literals(2, {"1", "e1", "-e1", "1"});
  const auto rep = quaternionic_limit_check(m, 1e-9, opts);
  std::vector<std::pair<double, double>> cl = rep.clusters;
  bool ok = cl.size() == 2;
  if (ok) {
    std::sort(cl.begin(), cl.end());
    ok = std::abs(cl[0].first) <= 1e-9 && std::abs(cl[0].second) <= 1e-9 && std::abs(cl[1].first - 2) <= 1e-9 &&
         std::abs(cl[1].second) <= 1e-9;
  }
  s.check("coupled clusters {(0, 0), (2, 0)}", ok);
  s.check("H^n solutions give M psi = psi (a + e1 b) and back", rep.passed,
          std::to_string(rep.solutions_checked) + " solutions");
}

}  // namespace

std::vector<ExampleCheck> run_worked_examples(std::uint64_t seed) {
  Suite s;
  EigenOptions opts;
  opts.seed = seed;
  s.guarded("algebra", [&] { algebra(s); });
  s.guarded("operators", [&] { operators(s); });
  s.guarded("e4", [&] { e4_problem(s, opts); });
  s.guarded("2x2", [&] { two_by_two(s, opts); });
  s.guarded("right eigenvalues", [&] { orep(s); });
  s.guarded("hermiticity", [&] { hermiticity(s); });
  s.guarded("dirac", [&] { dirac(s); });
  s.guarded("quaternionic limit", [&] { quaternionic(s, opts); });
  return s.take();
}

}  // namespace octeig

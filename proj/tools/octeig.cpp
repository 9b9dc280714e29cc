// octeig: command-line front end for the octonionic operator library.
//
// Exit status: 0 success, 1 verification failure or solver non-convergence,
// 2 parse / IO / schema / dimension error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "octeig/dirac.hpp"
#include "octeig/eigen_engine.hpp"
#include "octeig/hermiticity.hpp"
#include "octeig/io.hpp"
#include "octeig/operators.hpp"
#include "octeig/worked_examples.hpp"

namespace {

using namespace octeig;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  bool full_precision = false;

  bool json() const { return format == "json"; }
  ReportOptions report() const { return {seed, full_precision}; }
  EigenOptions eigen() const {
    EigenOptions o;
    o.seed = seed;
    return o;
  }
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Comma-separated octonion literals.
OctVector parse_vector(const std::string& text) {
  OctVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_octonion(item));
  if (v.empty()) throw InputError("empty vector '" + text + "'");
  return v;
}

std::string residual_text(double r, const Globals& g) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), g.full_precision ? "%.17g" : "%.2e", r);
  return buf;
}

std::string vector_text(const OctVector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + pretty(v[k]);
  return s + ")";
}

Json vector_literals(const OctVector& v) {
  Json arr = Json::array();
  for (const auto& o : v) arr.push_back(to_string(o));
  return arr;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_mul(const Globals& g, const std::string& x, const std::string& y) {
  const bool complexified = x.find('i') != std::string::npos || y.find('i') != std::string::npos;
  if (complexified) {
    const ComplexOctonion p = parse_complex_octonion(x) * parse_complex_octonion(y);
    if (g.json()) {
      print_json({{"product", to_string(p)}, {"re", octonion_coeffs_json(p.re())}, {"im", octonion_coeffs_json(p.im())}});
    } else {
      std::cout << to_string(p) << "\n";
    }
    return kOk;
  }
  const Octonion p = parse_octonion(x) * parse_octonion(y);
  if (g.json()) {
    print_json({{"product", to_string(p)}, {"coefficients", octonion_coeffs_json(p)}});
  } else {
    std::cout << to_string(p) << "\n";
  }
  return kOk;
}

Json matrix_rows(const RealMatrix& a) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_translate(const Globals& g, const std::string& word, const std::string& file) {
  RealMatrix a;
  std::string label;
  if (!file.empty()) {
    const OperatorMatrix m = parse_operator_matrix(read_input(file));
    if (m.complexified()) {
      const ComplexMatrix c = operator_matrix_to_complex(m);
      if (g.json()) {
        print_json({{"operator", operator_matrix_json(m)}, {"re", matrix_rows(real_part(c))}, {"im", matrix_rows(imag_part(c))}});
      } else {
        std::cout << format_matrix(c, 6);
      }
      return kOk;
    }
    a = operator_matrix_to_real(m);
    label = emit_operator_matrix(m);
  } else {
    const OperatorWord w = OperatorWord::parse(word);
    a = word_to_matrix(w);
    label = w.to_string();
  }
  if (g.json()) {
    print_json({{"operator", label}, {"matrix", matrix_rows(a)}});
  } else {
    std::cout << format_matrix(a, 6);
  }
  return kOk;
}

int cmd_decompose(const Globals& g, const std::string& file) {
  const RealMatrix a = parse_real_matrix(read_input(file));
  if (a.rows() != kOctDim || a.cols() != kOctDim) {
    throw InputError("decompose needs an 8x8 matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  const GeneralizedOperator op = matrix_to_generalized(a);
  const auto exact = decompose_exact(a);
  const double err = max_abs(generalized_to_matrix(op) - a);
  if (g.json()) {
    Json j;
    Json os = Json::array();
    for (const auto& o : op.o) os.push_back(to_string(o));
    j["o"] = std::move(os);
    if (exact) {
      j["denominator"] = kDecompositionDenominator;
      j["numerators"] = *exact;
    }
    j["reconstruction_error"] = report_residual(err, g.report());
    print_json(j);
  } else {
    std::cout << "o0 = " << pretty(op.o[0], 10) << "\n";
    for (int m = 1; m < kOctDim; ++m) std::cout << "o" << m << " = " << pretty(op.o[m], 10) << "\n";
    if (exact) std::cout << "exact: all coefficients are multiples of 1/" << kDecompositionDenominator << "\n";
    std::cout << "reconstruction error " << residual_text(err, g) << "\n";
  }
  return kOk;
}

int cmd_eig(const Globals& g, const std::string& file, bool complexified) {
  const OperatorMatrix m = parse_operator_matrix(read_input(file));
  if (complexified || m.complexified()) {
    const auto clusters = solve_complexified(m, g.eigen());
    if (g.json()) {
      print_json(complexified_report_json(m, clusters, g.report()));
      return kOk;
    }
    for (const auto& c : clusters) {
      std::cout << "z = " << format_real(c.z.real()) << (c.z.imag() < 0 ? " - " : " + ") << "i "
                << format_real(std::abs(c.z.imag())) << "  solutions " << c.solutions.size() << "\n";
      for (const auto& s : c.solutions) {
        std::cout << "  phi = (";
        for (std::size_t k = 0; k < s.phi.size(); ++k) std::cout << (k ? ", " : "") << pretty(s.phi[k]);
        std::cout << ")  residual " << residual_text(s.residual, g) << "\n";
      }
    }
    return kOk;
  }
  const auto clusters = solve_coupled(m, g.eigen());
  if (g.json()) {
    print_json(coupled_report_json(m, clusters, g.report()));
    return kOk;
  }
  std::cout << std::left << std::setw(14) << "a" << std::setw(14) << "b" << std::setw(14) << "multiplicity"
            << "solutions\n";
  for (const auto& c : clusters) {
    std::cout << std::setw(14) << format_real(c.a) << std::setw(14) << format_real(c.b) << std::setw(14)
              << c.multiplicity << c.solutions.size() << "\n";
    for (const auto& s : c.solutions) {
      std::cout << "  xi = " << vector_text(s.xi) << "  eta = " << vector_text(s.eta) << "  residual "
                << residual_text(s.residual, g) << "\n";
    }
  }
  return kOk;
}

struct VerifyArgs {
  std::string file;
  double a = 0.0, b = 0.0;
  std::string xi, eta, psi, lambda;
};

int cmd_verify(const Globals& g, const VerifyArgs& v) {
  const OperatorMatrix m = parse_operator_matrix(read_input(v.file));
  const bool right = !v.psi.empty();
  if (right == !v.xi.empty()) throw InputError("give either --xi (coupled) or --psi with --lambda (right eigenvalue)");
  bool holds = false;
  Json j;
  std::string text;
  if (right) {
    if (v.lambda.empty()) throw InputError("--psi needs --lambda");
    const RightEigenCheck c = verify_right_eigen(m, {parse_vector(v.psi), parse_octonion(v.lambda)});
    holds = c.holds && !c.zero_vector;
    j = {{"problem", "right"}, {"holds", holds}, {"exact", c.exact}, {"zero_vector", c.zero_vector},
         {"residual", report_residual(c.residual, g.report())}};
    text = std::string(holds ? "holds" : "fails") + (c.exact ? " exactly" : "") +
           (c.zero_vector ? " (zero vector)" : "") + ", residual " + residual_text(c.residual, g);
  } else {
    const OctVector xi = parse_vector(v.xi);
    const OctVector eta = v.eta.empty() ? OctVector(xi.size()) : parse_vector(v.eta);
    const CoupledCheck c = verify_coupled(m, v.a, v.b, xi, eta);
    holds = c.residual <= 1e-9;
    j = {{"problem", "coupled"}, {"holds", holds}, {"exact", c.exact},
         {"residual", report_residual(c.residual, g.report())}};
    text = std::string(holds ? "holds" : "fails") + (c.exact ? " exactly" : "") + ", residual " +
           residual_text(c.residual, g);
  }
  if (g.json()) {
    print_json(j);
  } else {
    std::cout << text << "\n";
  }
  return holds ? kOk : kFailed;
}

int cmd_enumerate(const Globals& g, const std::string& file, const std::string& psi_a) {
  const OperatorMatrix m = parse_operator_matrix(read_input(file));
  std::optional<Octonion> fixed;
  if (!psi_a.empty()) fixed = parse_octonion(psi_a);
  const auto claims = enumerate_basis_right_eigs(m, fixed);
  if (g.json()) {
    Json arr = Json::array();
    for (const auto& c : claims) arr.push_back({{"psi", vector_literals(c.psi)}, {"lambda", to_string(c.lambda)}});
    print_json({{"matrix", operator_matrix_json(m)}, {"solutions", std::move(arr)}});
  } else {
    for (const auto& c : claims) std::cout << vector_text(c.psi) << "  lambda = " << to_string(c.lambda) << "\n";
    std::cout << claims.size() << " solutions\n";
  }
  return kOk;
}

Json report_json(const Json& op, const HermiticityReport& r) {
  Json j;
  j["operator"] = op;
  j["kind"] = to_string(r.kind);
  j["classification"] = to_string(r.classification);
  if (!r.witnesses.empty()) {
    Json ws = Json::array();
    for (const auto& w : r.witnesses) {
      ws.push_back({{"psi", vector_literals(w.psi)},
                    {"phi", vector_literals(w.phi)},
                    {"left", to_string(w.left)},
                    {"right", to_string(w.right)}});
    }
    j["witness"] = std::move(ws);
  }
  j["pairs_checked"] = r.pairs_checked;
  j["exhaustive"] = r.exhaustive;
  return j;
}

void report_text(const std::string& label, const HermiticityReport& r) {
  if (label.size() >= 28) std::cout << label << "\n";
  std::cout << std::left << std::setw(28) << (label.size() >= 28 ? "" : label) << std::setw(20) << to_string(r.kind) << to_string(r.classification)
            << "  (" << r.pairs_checked << " pairs" << (r.exhaustive ? ", exhaustive" : ", sampled") << ")\n";
  for (const auto& w : r.witnesses) {
    std::cout << "  psi = " << vector_text(w.psi) << "  phi = " << vector_text(w.phi) << "\n"
              << "  <psi, O phi> = " << to_string(w.left) << "   <O psi, phi> = " << to_string(w.right) << "\n";
  }
}

ProductKind parse_kind(const std::string& s) {
  if (s == "full") return ProductKind::Full;
  if (s == "projected" || s == "complex-projected") return ProductKind::ComplexProjected;
  throw InputError("unknown product kind '" + s + "'");
}

int cmd_hermiticity(const Globals& g, const std::string& file, const std::string& kind_text, bool units,
                    const std::string& probe, const std::string& probe_phi) {
  const ProductKind kind = parse_kind(kind_text);
  if (units) {
    const auto reports = unit_reports(kind);
    if (g.json()) {
      Json arr = Json::array();
      for (std::size_t m = 0; m < reports.size(); ++m) arr.push_back(report_json("e" + std::to_string(m + 1), reports[m]));
      print_json(arr);
    } else {
      for (std::size_t m = 0; m < reports.size(); ++m) report_text("[e" + std::to_string(m + 1) + "]", reports[m]);
    }
    return kOk;
  }
  if (file.empty()) throw InputError("hermiticity needs a matrix file or --units");
  const OperatorMatrix m = parse_operator_matrix(read_input(file));
  std::vector<ProbePair> probes;
  if (!probe.empty()) {
    const OctVector psi = parse_vector(probe);
    probes.push_back({psi, probe_phi.empty() ? psi : parse_vector(probe_phi)});
  }
  const HermiticityReport r = classify(m, kind, probes, g.seed);
  if (g.json()) {
    print_json(report_json(operator_matrix_json(m), r));
  } else {
    report_text(emit_operator_matrix(m), r);
  }
  return kOk;
}

int cmd_dirac(const Globals& g, int samples) {
  const DiracRep rep = dirac_representation();
  std::vector<CheckLine> lines = dirac_algebra_check(rep);
  lines.push_back(anticommutator_source_check());
  for (auto& l : orthogonal_doublet_check()) lines.push_back(std::move(l));

  std::mt19937_64 rng(g.seed);
  std::uniform_real_distribution<double> pd(-10.0, 10.0), md(0.0, 10.0);
  double worst = 0.0;
  bool all = true;
  for (int t = 0; t < samples; ++t) {
    const auto d = dispersion_check(rep, {pd(rng), pd(rng), pd(rng)}, md(rng));
    worst = std::max(worst, d.max_error);
    all = all && d.passed;
  }
  lines.push_back({"H(p)^2 = (|p|^2 + m^2) I for " + std::to_string(samples) + " random (p, m)", all,
                   "max relative error " + residual_text(worst, g)});

  bool ok = true;
  for (const auto& l : lines) ok = ok && l.passed;
  if (g.json()) {
    Json arr = Json::array();
    for (const auto& l : lines) arr.push_back({{"name", l.name}, {"passed", l.passed}, {"detail", l.detail}});
    print_json({{"checks", std::move(arr)}, {"passed", ok}, {"seed", g.seed}});
  } else {
    for (const auto& l : lines) {
      std::cout << (l.passed ? "PASS  " : "FAIL  ") << l.name << (l.detail.empty() ? "" : "  [" + l.detail + "]")
                << "\n";
    }
  }
  return ok ? kOk : kFailed;
}

int cmd_example_suite(const Globals& g) {
  const auto checks = run_worked_examples(g.seed);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.passed;
  if (g.json()) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      arr.push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    print_json({{"checks", std::move(arr)}, {"failed", failed}, {"seed", g.seed}});
  } else {
    std::string group;
    for (const auto& c : checks) {
      if (c.group != group) {
        group = c.group;
        std::cout << "[" << group << "]\n";
      }
      std::cout << (c.passed ? "  PASS  " : "  FAIL  ") << c.name
                << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
    std::cout << checks.size() - failed << "/" << checks.size() << " passed\n";
  }
  return failed == 0 ? kOk : kFailed;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OCTEIG_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "octeig: ignoring malformed OCTEIG_SEED '" << env << "'\n";
    }
  }
  return kDefaultSeed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Octonionic operator calculus and eigenvalue problems"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  g.seed = default_seed();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "RNG seed (default 24301 or $OCTEIG_SEED)");
  app.add_flag("--full-precision", g.full_precision, "Print residuals with all digits");

  std::string x, y;
  auto* mul = app.add_subcommand("mul", "Multiply two octonion or complexified literals");
  mul->add_option("x", x)->required();
  mul->add_option("y", y)->required();

  std::string word, file;
  auto* translate = app.add_subcommand("translate", "Operator word or matrix file to its real matrix");
  translate->add_option("word", word, "e.g. \"L4 R5 R1 L6\"");
  translate->add_option("--file", file, "Operator-matrix JSON ('-' for stdin)");

  auto* decompose = app.add_subcommand("decompose", "8x8 real matrix to generalized operator coefficients");
  decompose->add_option("file", file, "JSON rows ('-' for stdin)")->required();

  bool complexified = false;
  auto* eig = app.add_subcommand("eig", "Coupled (or complexified) eigenvalue problem");
  eig->add_option("file", file, "Operator-matrix JSON ('-' for stdin)")->required();
  eig->add_flag("--complexified", complexified, "Solve M Phi = Phi z over complexified octonions");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a claimed eigen-solution");
  verify->add_option("file", va.file)->required();
  verify->add_option("--a", va.a);
  verify->add_option("--b", va.b);
  verify->add_option("--xi", va.xi, "Comma-separated literals");
  verify->add_option("--eta", va.eta, "Comma-separated literals (default zero)");
  verify->add_option("--psi", va.psi, "Right eigenvector, comma-separated literals");
  verify->add_option("--lambda", va.lambda, "Right eigenvalue literal");

  std::string psi_a;
  auto* enumerate = app.add_subcommand("enumerate", "Basis right eigenvalues of a 2x2 integer matrix");
  enumerate->add_option("file", file)->required();
  enumerate->add_option("--psi-a", psi_a, "Fix the first component");

  std::string kind = "full", probe, probe_phi;
  bool units = false;
  auto* herm = app.add_subcommand("hermiticity", "Classify an operator under an inner product");
  herm->add_option("file", file);
  herm->add_option("--kind", kind, "full | projected")->check(CLI::IsMember({"full", "projected", "complex-projected"}));
  herm->add_option("--probe", probe, "Probe psi, comma-separated literals");
  herm->add_option("--probe-phi", probe_phi, "Probe phi (default psi)");
  herm->add_flag("--units", units, "Report [e1] .. [e7]");

  int samples = 100;
  auto* dirac = app.add_subcommand("dirac", "Dirac algebra and dispersion checks");
  dirac->add_option("--samples", samples, "Random (p, m) draws")->check(CLI::NonNegativeNumber);

  auto* suite = app.add_subcommand("paper-suite", "Worked-example regression ledger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*mul) return cmd_mul(g, x, y);
    if (*translate) {
      if (word.empty() == file.empty()) throw InputError("give either a word or --file");
      return cmd_translate(g, word, file);
    }
    if (*decompose) return cmd_decompose(g, file);
    if (*eig) return cmd_eig(g, file, complexified);
    if (*verify) return cmd_verify(g, va);
    if (*enumerate) return cmd_enumerate(g, file, psi_a);
    if (*herm) return cmd_hermiticity(g, file, kind, units, probe, probe_phi);
    if (*dirac) return cmd_dirac(g, samples);
    if (*suite) return cmd_example_suite(g);
  } catch (const ConvergenceError& e) {
    std::cerr << "octeig: no convergence: " << e.what() << "\n";
    return kFailed;
  } catch (const ParseError& e) {
    std::cerr << "octeig: parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const SchemaError& e) {
    std::cerr << "octeig: schema error at " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "octeig: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "octeig: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "octeig: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}

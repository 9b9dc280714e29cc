#include "octeig/hermiticity.hpp"

#include <random>
#include <stdexcept>

namespace octeig {

Octonion inner(const OctVector& psi, const OctVector& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("inner: length mismatch");
  Octonion s;
  for (std::size_t k = 0; k < psi.size(); ++k) s += conj(psi[k]) * phi[k];
  return s;
}

Octonion complex_project(const Octonion& o) {
  const Octonion e1 = Octonion::unit(1);
  return (o - e1 * (o * e1)) * 0.5;
}

std::string to_string(ProductKind k) { return k == ProductKind::Full ? "full" : "complex-projected"; }

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Hermitian:
      return "hermitian";
    case Classification::AntiHermitian:
      return "anti-hermitian";
    case Classification::Neither:
      break;
  }
  return "neither";
}

namespace {

Witness evaluate(const OperatorMatrix& op, ProductKind kind, const OctVector& psi, const OctVector& phi) {
  Witness w{psi, phi, inner(psi, apply(op, phi)), inner(apply(op, psi), phi), false, false};
  if (kind == ProductKind::ComplexProjected) {
    w.left = complex_project(w.left);
    w.right = complex_project(w.right);
  }
  w.breaks_hermitian = !(w.left == w.right);
  w.breaks_anti_hermitian = !(w.left == -w.right);
  return w;
}

OctVector basis_vector(std::size_t n, std::size_t slot, int unit) {
  OctVector v(n);
  v[slot] = Octonion::unit(unit);
  return v;
}

}  // namespace

HermiticityReport classify(const OperatorMatrix& op, ProductKind kind, const std::vector<ProbePair>& probes,
                           std::uint64_t seed) {
  if (op.complexified()) throw std::invalid_argument("classify: matrix has an i-part");
  const std::size_t n = op.n();
  HermiticityReport rep;
  rep.kind = kind;

  std::optional<Witness> h_fail, a_fail, both_fail;
  auto consider = [&](const OctVector& psi, const OctVector& phi) {
    ++rep.pairs_checked;
    Witness w = evaluate(op, kind, psi, phi);
    if (w.breaks_hermitian && w.breaks_anti_hermitian && !both_fail) both_fail = w;
    if (w.breaks_hermitian && !h_fail) h_fail = w;
    if (w.breaks_anti_hermitian && !a_fail) a_fail = std::move(w);
  };

  for (const auto& p : probes) {
    if (p.psi.size() != n || p.phi.size() != n) throw std::invalid_argument("classify: probe length mismatch");
    consider(p.psi, p.phi);
  }

  const std::size_t dim = kOctDim * n;
  rep.exhaustive = n <= 8;
  if (rep.exhaustive) {
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < dim; ++q)
        consider(basis_vector(n, p / kOctDim, static_cast<int>(p % kOctDim)),
                 basis_vector(n, q / kOctDim, static_cast<int>(q % kOctDim)));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
    for (int s = 0; s < 4096; ++s) {
      const std::size_t p = pick(rng), q = pick(rng);
      consider(basis_vector(n, p / kOctDim, static_cast<int>(p % kOctDim)),
               basis_vector(n, q / kOctDim, static_cast<int>(q % kOctDim)));
    }
  }

  if (!h_fail) {
    rep.classification = Classification::Hermitian;
  } else if (!a_fail) {
    rep.classification = Classification::AntiHermitian;
  } else {
    rep.classification = Classification::Neither;
    if (both_fail) {
      rep.witnesses.push_back(*both_fail);
    } else {
      rep.witnesses.push_back(*h_fail);
      rep.witnesses.push_back(*a_fail);
    }
  }
  return rep;
}

SpectrumTheoremReport hermitian_spectrum_theorem_check(const OperatorMatrix& op, double tol) {
  SpectrumTheoremReport rep;
  rep.classification = classify(op, ProductKind::Full).classification;
  rep.applicable = rep.classification == Classification::Hermitian;
  if (!rep.applicable) {
    rep.passed = true;
    return rep;
  }
  rep.passed = true;
  for (const auto& cl : solve_coupled(op)) {
    rep.clusters.emplace_back(cl.a, cl.b);
    if (std::abs(cl.b) > tol) rep.passed = false;
  }
  return rep;
}

std::vector<HermiticityReport> unit_reports(ProductKind kind) {
  std::vector<HermiticityReport> out;
  for (int m = 1; m < kOctDim; ++m) out.push_back(classify(OperatorMatrix::from_octonions(1, {Octonion::unit(m)}), kind));
  return out;
}

}  // namespace octeig

#pragma once

// Octonionic scalar products on finite vectors and (anti-)hermiticity
// classification of operator matrices.
//
// Full product:       <psi, phi> = sum_k conj(psi_k) phi_k
// Projected product:  [<psi, phi>]_C, the (1, e1) part (s - e1 (s e1)) / 2

#include <optional>
#include <string>
#include <vector>

#include "octeig/eigen_engine.hpp"
#include "octeig/operators.hpp"

namespace octeig {

/// Throws std::invalid_argument on length mismatch.
Octonion inner(const OctVector& psi, const OctVector& phi);

/// (o - e1 (o e1)) / 2; keeps only the 1 and e1 coefficients.
Octonion complex_project(const Octonion& o);

enum class ProductKind { Full, ComplexProjected };
enum class Classification { Hermitian, AntiHermitian, Neither };

std::string to_string(ProductKind k);
std::string to_string(Classification c);

/// One pair (psi, phi) with left = <psi, O phi> and right = <O psi, phi>,
/// both taken in the chosen product.
struct Witness {
  OctVector psi;
  OctVector phi;
  Octonion left;
  Octonion right;
  bool breaks_hermitian = false;       // left != right
  bool breaks_anti_hermitian = false;  // left != -right
};

struct HermiticityReport {
  ProductKind kind = ProductKind::Full;
  Classification classification = Classification::Neither;
  /// Empty unless classification is Neither. Either one pair breaking both
  /// symmetries or two pairs, one for each.
  std::vector<Witness> witnesses;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
};

struct ProbePair {
  OctVector psi;
  OctVector phi;
};

/// Tests <psi, O phi> = +-<O psi, phi> on the probes first, then on every
/// pair of single-entry basis vectors (exhaustive for n <= 8, otherwise a
/// seeded sample of 4096 pairs). The relation is real-bilinear, so the basis
/// check decides the question for all vectors.
HermiticityReport classify(const OperatorMatrix& op, ProductKind kind, const std::vector<ProbePair>& probes = {},
                           std::uint64_t seed = kDefaultSeed);

struct SpectrumTheoremReport {
  Classification classification = Classification::Neither;
  bool applicable = false;  // classified hermitian under the full product
  bool passed = false;      // vacuous when not applicable
  std::vector<std::pair<double, double>> clusters;
};

/// For operators hermitian under the full product, every coupled cluster
/// must have b = 0.
SpectrumTheoremReport hermitian_spectrum_theorem_check(const OperatorMatrix& op, double tol = 1e-9);

/// classify([e_m], kind) for m = 1..7.
std::vector<HermiticityReport> unit_reports(ProductKind kind);

}  // namespace octeig

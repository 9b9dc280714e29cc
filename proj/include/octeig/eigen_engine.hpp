#pragma once

// Coupled and complexified eigenvalue problems for octonionic operator
// matrices, plus right-eigenvalue verification and enumeration.
//
// Coupled form of M psi = psi z with z = a + ib:
//   M xi  = a xi  - b eta
//   M eta = a eta + b xi

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "octeig/linalg.hpp"
#include "octeig/operators.hpp"

namespace octeig {

struct CoupledSolution {
  double a = 0.0;
  double b = 0.0;
  OctVector xi;
  OctVector eta;
  double residual = 0.0;
};

struct CoupledCluster {
  double a = 0.0;
  double b = 0.0;                 // >= 0
  std::size_t multiplicity = 0;   // algebraic: computed eigenvalues in the cluster
  std::vector<CoupledSolution> solutions;  // one per independent eigenvector
};

/// Translates M to its 8n x 8n real matrix and returns one cluster per
/// eigenvalue with b >= 0. Real clusters carry eta = 0.
std::vector<CoupledCluster> solve_coupled(const OperatorMatrix& m, const EigenOptions& opts = {});

struct CoupledCheck {
  double residual = 0.0;  // max octonion norm over both equations and all rows
  bool exact = false;     // integer inputs and residual exactly 0
};

/// Throws std::invalid_argument on dimension mismatch or a complexified M.
CoupledCheck verify_coupled(const OperatorMatrix& m, double a, double b, const OctVector& xi,
                            const OctVector& eta);
inline CoupledCheck verify_coupled(const OperatorMatrix& m, const CoupledSolution& s) {
  return verify_coupled(m, s.a, s.b, s.xi, s.eta);
}

struct ComplexifiedSolution {
  Complex z;
  ComplexOctVector phi;
  double residual = 0.0;
};

struct ComplexifiedCluster {
  Complex z;
  std::vector<ComplexifiedSolution> solutions;
};

/// Solves (M1 + i M2) Phi = Phi z through the complex 8n x 8n translation.
/// Both z and its conjugate appear when M is real.
std::vector<ComplexifiedCluster> solve_complexified(const OperatorMatrix& m, const EigenOptions& opts = {});

/// max_i || (M Phi - Phi z)_i ||.
CoupledCheck verify_complexified(const OperatorMatrix& m, Complex z, const ComplexOctVector& phi);

/// Phi = phi1 + i phi2 read as the coupled pair (a, b, phi1, phi2).
CoupledSolution to_coupled(const ComplexifiedSolution& s);

struct EquivalenceReport {
  bool passed = false;
  std::size_t coupled_solutions = 0;
  std::size_t complexified_solutions = 0;  // those with Im z >= 0
  double max_value_gap = 0.0;
  double max_mapped_residual = 0.0;  // coupled residual of every mapped complexified solution
  std::string detail;
};

/// Compares solve_coupled against the Im z >= 0 half of solve_complexified
/// and checks that every complexified solution is a valid coupled solution.
EquivalenceReport solver_equivalence(const OperatorMatrix& m, double tol = 1e-9,
                                     const EigenOptions& opts = {});

struct RightEigenClaim {
  OctVector psi;
  Octonion lambda;
};

struct RightEigenCheck {
  bool holds = false;
  bool zero_vector = false;
  bool exact = false;
  double residual = 0.0;  // max_i || (M psi)_i - psi_i lambda ||
};

/// Evaluates sum_j M_ij(psi_j) against psi_i lambda.
RightEigenCheck verify_right_eigen(const OperatorMatrix& m, const RightEigenClaim& claim);

/// Brute-force search over psi = (+-e_j, +-e_k) for a 2x2 integer matrix.
/// lambda = psi_a^-1 (row 0 of M psi); claims that also satisfy row 1 are
/// kept. Results are deduplicated up to overall sign by taking psi_a with
/// a positive coefficient unless psi_a is fixed by the caller.
std::vector<RightEigenClaim> enumerate_basis_right_eigs(const OperatorMatrix& m,
                                                        std::optional<Octonion> psi_a = std::nullopt);

struct QuaternionicLimitReport {
  std::vector<std::pair<double, double>> clusters;  // (a, b), b >= 0, from the full solve
  std::vector<std::pair<double, double>> quaternionic_clusters;  // restricted to H^n
  std::size_t solutions_checked = 0;
  double max_coupled_residual = 0.0;    // xi, eta quaternionic
  double max_right_residual = 0.0;      // M psi = psi (a + e1 b), psi = xi + eta e1
  double max_converse_residual = 0.0;   // (psi e1, psi) solves the coupled system
  bool passed = false;
};

/// Requires every entry to be left multiplication by an element of
/// span(1, e1, e2, e3); throws std::invalid_argument("not quaternionic").
QuaternionicLimitReport quaternionic_limit_check(const OperatorMatrix& m, double tol = 1e-9,
                                                 const EigenOptions& opts = {});

}  // namespace octeig

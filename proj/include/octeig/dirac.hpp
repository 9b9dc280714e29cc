#pragma once

// Dirac algebra realized by complexified left multiplications:
// alpha_k = i L_k (k = 1, 2, 3), beta = i L_4, hbar = c = 1.

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "octeig/linalg.hpp"
#include "octeig/octonion.hpp"

namespace octeig {

struct DiracRep {
  std::array<ComplexMatrix, 3> alpha;
  ComplexMatrix beta;
};

DiracRep dirac_representation();

struct CheckLine {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// {alpha_m, alpha_n} = 2 delta_mn I, {alpha_m, beta} = 0, beta^2 = I, each
/// as an exact matrix equality.
std::vector<CheckLine> dirac_algebra_check(const DiracRep& rep);

struct DispersionReport {
  std::array<double, 3> p{};
  double m = 0.0;
  double max_error = 0.0;  // max |H^2 - (|p|^2 + m^2) I| / max(1, |p|^2 + m^2)
  bool passed = false;
};

/// H(p) = sum_k p_k alpha_k + m beta.
ComplexMatrix dirac_hamiltonian(const DiracRep& rep, const std::array<double, 3>& p, double m);
DispersionReport dispersion_check(const DiracRep& rep, const std::array<double, 3>& p, double m,
                                  double tol = 1e-12);

/// Hermitian-style product on complexified octonions projected to C(1, i):
/// the real coefficient of conj(x) y, where conj also sends i to -i.
std::complex<double> projected_product(const ComplexOctonion& x, const ComplexOctonion& y);

/// x = Psi + e4 Phi with Psi, Phi in the complexified span(1, e1, e2, e3).
std::pair<ComplexOctonion, ComplexOctonion> doublet_split(const ComplexOctonion& x);

/// The sectors span(1, e1, e2, e3) and e4 * that span are orthogonal under
/// projected_product for all basis pairs (with scalars 1 and i), every basis
/// element has unit length, and doublet_split reassembles its input.
std::vector<CheckLine> orthogonal_doublet_check();

/// {L_a, L_b} = -2 <a, b> I for all imaginary basis units a, b.
CheckLine anticommutator_source_check();

}  // namespace octeig

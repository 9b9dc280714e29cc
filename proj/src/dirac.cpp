#include "octeig/dirac.hpp"

#include <cmath>
#include <sstream>

#include "octeig/operators.hpp"

namespace octeig {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b + b * a; }

bool is_multiple_of_identity(const ComplexMatrix& a, Complex s) {
  return a == ComplexMatrix::identity(a.rows()) * s;
}

}  // namespace

DiracRep dirac_representation() {
  DiracRep rep;
  for (int k = 0; k < 3; ++k) rep.alpha[static_cast<std::size_t>(k)] = to_complex(left_matrix(Octonion::unit(k + 1))) * kI;
  rep.beta = to_complex(left_matrix(Octonion::unit(4))) * kI;
  return rep;
}

std::vector<CheckLine> dirac_algebra_check(const DiracRep& rep) {
  std::vector<CheckLine> out;
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t n = m; n < 3; ++n) {
      const ComplexMatrix ac = anticommutator(rep.alpha[m], rep.alpha[n]);
      const Complex expected = m == n ? 2.0 : 0.0;
      out.push_back({"{alpha" + std::to_string(m + 1) + ", alpha" + std::to_string(n + 1) + "} = " +
                         (m == n ? "2I" : "0"),
                     is_multiple_of_identity(ac, expected), "exact"});
    }
  }
  for (std::size_t m = 0; m < 3; ++m) {
    out.push_back({"{alpha" + std::to_string(m + 1) + ", beta} = 0",
                   is_multiple_of_identity(anticommutator(rep.alpha[m], rep.beta), 0.0), "exact"});
  }
  out.push_back({"beta^2 = I", is_multiple_of_identity(rep.beta * rep.beta, 1.0), "exact"});
  return out;
}

ComplexMatrix dirac_hamiltonian(const DiracRep& rep, const std::array<double, 3>& p, double m) {
  ComplexMatrix h = rep.beta * Complex(m);
  for (std::size_t k = 0; k < 3; ++k) h += rep.alpha[k] * Complex(p[k]);
  return h;
}

DispersionReport dispersion_check(const DiracRep& rep, const std::array<double, 3>& p, double m, double tol) {
  DispersionReport out;
  out.p = p;
  out.m = m;
  const ComplexMatrix h = dirac_hamiltonian(rep, p, m);
  const double energy2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + m * m;
  const ComplexMatrix diff = h * h - ComplexMatrix::identity(h.rows()) * Complex(energy2);
  out.max_error = max_abs(diff) / std::max(1.0, energy2);
  out.passed = out.max_error <= tol;
  return out;
}

std::complex<double> projected_product(const ComplexOctonion& x, const ComplexOctonion& y) {
  const ComplexOctonion s = conj(x) * y;
  return {s.re()[0], s.im()[0]};
}

std::pair<ComplexOctonion, ComplexOctonion> doublet_split(const ComplexOctonion& x) {
  ComplexOctonion psi, rest;
  for (int k = 0; k < kOctDim; ++k) {
    ComplexOctonion& dst = k < 4 ? psi : rest;
    dst.re()[k] = x.re()[k];
    dst.im()[k] = x.im()[k];
  }
  // e4 (-e4 r) = r by alternativity.
  const ComplexOctonion minus_e4(Octonion::unit(4, -1.0));
  return {psi, minus_e4 * rest};
}

std::vector<CheckLine> orthogonal_doublet_check() {
  std::vector<ComplexOctonion> lower, upper;
  for (int k = 0; k < kOctDim; ++k) {
    for (const Complex s : {Complex(1.0), kI}) {
      const ComplexOctonion b = ComplexOctonion(Octonion::unit(k)) * s;
      (k < 4 ? lower : upper).push_back(b);
    }
  }

  std::size_t cross_pairs = 0, cross_fail = 0;
  for (const auto& x : lower) {
    for (const auto& y : upper) {
      cross_pairs += 2;
      if (projected_product(x, y) != Complex(0.0)) ++cross_fail;
      if (projected_product(y, x) != Complex(0.0)) ++cross_fail;
    }
  }

  std::size_t unit_fail = 0;
  for (const auto* sector : {&lower, &upper})
    for (const auto& x : *sector)
      if (projected_product(x, x) != Complex(1.0)) ++unit_fail;

  std::size_t split_fail = 0;
  for (const auto* sector : {&lower, &upper}) {
    for (const auto& x : *sector) {
      const auto [psi, phi] = doublet_split(x);
      bool in_h = true;
      for (int k = 4; k < kOctDim; ++k)
        in_h = in_h && psi.re()[k] == 0.0 && psi.im()[k] == 0.0 && phi.re()[k] == 0.0 && phi.im()[k] == 0.0;
      const ComplexOctonion back = psi + ComplexOctonion(Octonion::unit(4)) * phi;
      if (!in_h || !(back == x)) ++split_fail;
    }
  }

  return {
      {"cross-sector products vanish", cross_fail == 0,
       std::to_string(cross_pairs - cross_fail) + "/" + std::to_string(cross_pairs) + " pairs"},
      {"basis elements have unit length", unit_fail == 0, std::to_string(unit_fail) + " failures"},
      {"x = Psi + e4 Phi reassembles", split_fail == 0, std::to_string(split_fail) + " failures"},
  };
}

CheckLine anticommutator_source_check() {
  std::size_t fail = 0;
  for (int a = 1; a < kOctDim; ++a) {
    for (int b = 1; b < kOctDim; ++b) {
      const RealMatrix la = left_matrix(Octonion::unit(a));
      const RealMatrix lb = left_matrix(Octonion::unit(b));
      const RealMatrix expected = RealMatrix::identity(kOctDim) * (a == b ? -2.0 : 0.0);
      if (!(la * lb + lb * la == expected)) ++fail;
    }
  }
  return {"{L_a, L_b} = -2 <a, b> I", fail == 0, std::to_string(49 - fail) + "/49 pairs"};
}

}  // namespace octeig

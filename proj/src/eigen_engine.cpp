#include "octeig/eigen_engine.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace octeig {

namespace {

using Embed = std::function<OctVector(std::span<const double>)>;

bool all_integral(const OctVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Octonion& o) { return o.is_integral(); });
}

// Coupled clusters of a real matrix whose vectors are mapped to octonion
// vectors by `embed`.
std::vector<CoupledCluster> coupled_clusters(const RealMatrix& a, const Embed& embed, const EigenOptions& opts) {
  const double tol = cluster_tolerance(frobenius_norm(a));
  const auto clusters = cluster_eigenvalues(eigenvalues(a, opts), tol);
  std::vector<CoupledCluster> out;
  const std::size_t d = a.rows();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    Complex z = clusters[c].value;
    if (z.imag() < -tol) continue;
    const bool real = std::abs(z.imag()) <= tol;
    if (real) z = {z.real(), 0.0};

    CoupledCluster cl;
    cl.a = z.real();
    cl.b = z.imag();
    cl.multiplicity = clusters[c].multiplicity;
    EigenOptions local = opts;
    local.seed = opts.seed + c;
    for (const EigenPair& p : eigenspace(a, z, clusters[c].multiplicity, local)) {
      std::vector<double> re(d), im(d);
      for (std::size_t i = 0; i < d; ++i) {
        re[i] = p.vector[i].real();
        im[i] = p.vector[i].imag();
      }
      CoupledSolution s;
      s.a = cl.a;
      s.b = cl.b;
      s.xi = embed(re);
      s.eta = real ? OctVector(s.xi.size()) : embed(im);
      cl.solutions.push_back(std::move(s));
    }
    out.push_back(std::move(cl));
  }
  return out;
}

double max_norm_diff(const OctVector& x, const OctVector& y) {
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, norm(x[i] - y[i]));
  return r;
}

OctVector scaled(const OctVector& v, double s) {
  OctVector out = v;
  for (auto& o : out) o *= s;
  return out;
}

OctVector plus(const OctVector& x, const OctVector& y) {
  OctVector out = x;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

OctVector right_mul(const OctVector& v, const Octonion& o) {
  OctVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * o;
  return out;
}

}  // namespace

std::vector<CoupledCluster> solve_coupled(const OperatorMatrix& m, const EigenOptions& opts) {
  const RealMatrix a = operator_matrix_to_real(m);
  auto clusters = coupled_clusters(a, [](std::span<const double> v) { return chunk(v); }, opts);
  for (auto& cl : clusters)
    for (auto& s : cl.solutions) s.residual = verify_coupled(m, s).residual;
  return clusters;
}

CoupledCheck verify_coupled(const OperatorMatrix& m, double a, double b, const OctVector& xi,
                            const OctVector& eta) {
  if (xi.size() != m.n() || eta.size() != m.n()) {
    throw std::invalid_argument("verify_coupled: vector length " + std::to_string(xi.size()) + "/" +
                                std::to_string(eta.size()) + " does not match n = " + std::to_string(m.n()));
  }
  const OctVector mxi = apply(m, xi);
  const OctVector meta = apply(m, eta);
  const double r1 = max_norm_diff(mxi, plus(scaled(xi, a), scaled(eta, -b)));
  const double r2 = max_norm_diff(meta, plus(scaled(eta, a), scaled(xi, b)));
  CoupledCheck out;
  out.residual = std::max(r1, r2);
  out.exact = out.residual == 0.0 && m.is_integral() && all_integral(xi) && all_integral(eta) &&
              std::trunc(a) == a && std::trunc(b) == b;
  return out;
}

std::vector<ComplexifiedCluster> solve_complexified(const OperatorMatrix& m, const EigenOptions& opts) {
  const ComplexMatrix c = operator_matrix_to_complex(m);
  const auto pairs = complex_eigen(c, opts);
  std::vector<ComplexifiedCluster> out;
  for (const EigenPair& p : pairs) {
    if (out.empty() || out.back().z != p.value) out.push_back({p.value, {}});
    ComplexifiedSolution s;
    s.z = p.value;
    std::vector<double> re(p.vector.size()), im(p.vector.size());
    for (std::size_t i = 0; i < p.vector.size(); ++i) {
      re[i] = p.vector[i].real();
      im[i] = p.vector[i].imag();
    }
    const OctVector r = chunk(re), i = chunk(im);
    for (std::size_t k = 0; k < r.size(); ++k) s.phi.emplace_back(r[k], i[k]);
    s.residual = verify_complexified(m, s.z, s.phi).residual;
    out.back().solutions.push_back(std::move(s));
  }
  return out;
}

CoupledCheck verify_complexified(const OperatorMatrix& m, Complex z, const ComplexOctVector& phi) {
  if (phi.size() != m.n()) throw std::invalid_argument("verify_complexified: dimension mismatch");
  const ComplexOctVector lhs = apply(m, phi);
  CoupledCheck out;
  bool integral = m.is_integral() && std::trunc(z.real()) == z.real() && std::trunc(z.imag()) == z.imag();
  for (std::size_t i = 0; i < phi.size(); ++i) {
    out.residual = std::max(out.residual, norm(lhs[i] - phi[i] * z));
    integral = integral && phi[i].is_integral();
  }
  out.exact = integral && out.residual == 0.0;
  return out;
}

CoupledSolution to_coupled(const ComplexifiedSolution& s) {
  CoupledSolution c;
  c.a = s.z.real();
  c.b = s.z.imag();
  for (const auto& x : s.phi) {
    c.xi.push_back(x.re());
    c.eta.push_back(x.im());
  }
  return c;
}

EquivalenceReport solver_equivalence(const OperatorMatrix& m, double tol, const EigenOptions& opts) {
  EquivalenceReport rep;
  const auto coupled = solve_coupled(m, opts);
  const auto complexified = solve_complexified(m, opts);

  std::vector<Complex> from_coupled, from_complex;
  for (const auto& cl : coupled)
    for (std::size_t k = 0; k < cl.solutions.size(); ++k) from_coupled.emplace_back(cl.a, cl.b);
  for (const auto& cl : complexified) {
    for (const auto& s : cl.solutions) {
      const CoupledSolution mapped = to_coupled(s);
      rep.max_mapped_residual =
          std::max(rep.max_mapped_residual, verify_coupled(m, mapped.a, mapped.b, mapped.xi, mapped.eta).residual);
      if (s.z.imag() >= -tol) from_complex.emplace_back(s.z.real(), std::max(0.0, s.z.imag()));
    }
  }
  rep.coupled_solutions = from_coupled.size();
  rep.complexified_solutions = from_complex.size();

  auto less = [](Complex x, Complex y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); };
  std::sort(from_coupled.begin(), from_coupled.end(), less);
  std::sort(from_complex.begin(), from_complex.end(), less);
  bool same = from_coupled.size() == from_complex.size();
  if (same) {
    for (std::size_t k = 0; k < from_coupled.size(); ++k)
      rep.max_value_gap = std::max(rep.max_value_gap, std::abs(from_coupled[k] - from_complex[k]));
  }
  rep.passed = same && rep.max_value_gap <= tol && rep.max_mapped_residual <= 1e-8;
  std::ostringstream os;
  os << rep.coupled_solutions << " coupled vs " << rep.complexified_solutions
     << " complexified (Im z >= 0); value gap " << rep.max_value_gap << "; mapped residual "
     << rep.max_mapped_residual;
  rep.detail = os.str();
  return rep;
}

RightEigenCheck verify_right_eigen(const OperatorMatrix& m, const RightEigenClaim& claim) {
  if (claim.psi.size() != m.n()) throw std::invalid_argument("verify_right_eigen: dimension mismatch");
  RightEigenCheck out;
  out.zero_vector = std::all_of(claim.psi.begin(), claim.psi.end(), [](const Octonion& o) { return o.is_zero(); });
  const OctVector lhs = apply(m, claim.psi);
  const OctVector rhs = right_mul(claim.psi, claim.lambda);
  out.residual = max_norm_diff(lhs, rhs);
  const bool integral = m.is_integral() && all_integral(claim.psi) && claim.lambda.is_integral();
  out.exact = integral && out.residual == 0.0;
  double scale = 1.0;
  for (const auto& o : claim.psi) scale = std::max(scale, norm(o) * std::max(1.0, norm(claim.lambda)));
  out.holds = integral ? out.residual == 0.0 : out.residual <= 1e-12 * scale;
  return out;
}

std::vector<RightEigenClaim> enumerate_basis_right_eigs(const OperatorMatrix& m, std::optional<Octonion> psi_a) {
  if (m.n() != 2) throw std::invalid_argument("enumerate_basis_right_eigs: matrix must be 2x2");
  if (m.complexified()) throw std::invalid_argument("enumerate_basis_right_eigs: matrix has an i-part");
  if (!m.is_integral()) throw std::invalid_argument("enumerate_basis_right_eigs: entries must be integral");

  std::vector<Octonion> firsts;
  if (psi_a) {
    if (psi_a->is_zero()) throw std::invalid_argument("enumerate_basis_right_eigs: psi_a must be nonzero");
    firsts.push_back(*psi_a);
  } else {
    for (int j = 0; j < kOctDim; ++j) firsts.push_back(Octonion::unit(j));
  }

  std::vector<RightEigenClaim> out;
  for (const Octonion& a : firsts) {
    const Octonion a_inv = inverse(a);
    for (int k = 0; k < kOctDim; ++k) {
      for (double sign : {1.0, -1.0}) {
        const Octonion b = Octonion::unit(k, sign);
        const Octonion row0 = apply(m.re(0, 0), a) + apply(m.re(0, 1), b);
        RightEigenClaim claim{{a, b}, a_inv * row0};
        if (verify_right_eigen(m, claim).holds) out.push_back(std::move(claim));
      }
    }
  }
  return out;
}

QuaternionicLimitReport quaternionic_limit_check(const OperatorMatrix& m, double tol, const EigenOptions& opts) {
  if (!m.is_quaternionic()) throw std::invalid_argument("not quaternionic");
  QuaternionicLimitReport rep;
  for (const auto& cl : solve_coupled(m, opts)) rep.clusters.emplace_back(cl.a, cl.b);

  // Left multiplication by quaternions preserves H = span(1, e1, e2, e3), so
  // the translation restricted to those coefficients is the H^n problem.
  const RealMatrix full = operator_matrix_to_real(m);
  const std::size_t n = m.n();
  RealMatrix h(4 * n, 4 * n);
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t bj = 0; bj < n; ++bj)
        for (std::size_t c = 0; c < 4; ++c) h(4 * bi + r, 4 * bj + c) = full(8 * bi + r, 8 * bj + c);

  const Embed embed = [n](std::span<const double> v) {
    OctVector out(n);
    for (std::size_t j = 0; j < n; ++j)
      for (int k = 0; k < 4; ++k) out[j][k] = v[4 * j + static_cast<std::size_t>(k)];
    return out;
  };

  const Octonion e1 = Octonion::unit(1);
  for (const auto& cl : coupled_clusters(h, embed, opts)) {
    rep.quaternionic_clusters.emplace_back(cl.a, cl.b);
    for (const auto& s : cl.solutions) {
      ++rep.solutions_checked;
      rep.max_coupled_residual = std::max(rep.max_coupled_residual, verify_coupled(m, s).residual);

      // psi = xi + eta e1 solves M psi = psi (a + e1 b); when that vanishes,
      // xi - eta e1 solves it with a - e1 b.
      OctVector psi = plus(s.xi, right_mul(s.eta, e1));
      Octonion lambda = Octonion(s.a) + e1 * s.b;
      double psi_norm = 0.0;
      for (const auto& o : psi) psi_norm = std::max(psi_norm, norm(o));
      if (psi_norm <= 1e-6) {
        psi = plus(s.xi, right_mul(s.eta, -e1));
        lambda = Octonion(s.a) - e1 * s.b;
      }
      const auto right = verify_right_eigen(m, {psi, lambda});
      rep.max_right_residual = std::max(rep.max_right_residual, right.residual);

      // Converse: from M psi = psi (a + e1 b), (psi e1, psi) is a coupled pair.
      const Octonion lam = lambda;
      const double b_used = lam[1];
      const CoupledCheck conv = verify_coupled(m, s.a, b_used, right_mul(psi, e1), psi);
      rep.max_converse_residual = std::max(rep.max_converse_residual, conv.residual);
    }
  }
  rep.passed = rep.max_coupled_residual <= tol && rep.max_right_residual <= tol &&
               rep.max_converse_residual <= tol && rep.solutions_checked > 0;
  return rep;
}

}  // namespace octeig

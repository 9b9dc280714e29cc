#include "octeig/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace octeig {

// ---------------------------------------------------------------------------
// Words

OperatorWord OperatorWord::parse(std::string_view text) {
  std::vector<Factor> factors;
  std::size_t p = 0;
  while (p < text.size()) {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n' || text[p] == ',')) ++p;
    if (p >= text.size()) break;
    const std::size_t start = p;
    while (p < text.size() && text[p] != ' ' && text[p] != '\t' && text[p] != '\n' && text[p] != ',') ++p;
    const std::string_view tok = text.substr(start, p - start);
    if (tok == "1" && text.find_first_not_of(" \t\n1") == std::string_view::npos) continue;
    if (tok.size() != 2 || (tok[0] != 'L' && tok[0] != 'R') || tok[1] < '1' || tok[1] > '7') {
      throw ParseError("expected L<k> or R<k> with k in 1..7, got '" + std::string(tok) + "'", start + 1);
    }
    const int k = tok[1] - '0';
    factors.push_back(tok[0] == 'L' ? Factor::L(k) : Factor::R(k));
  }
  return OperatorWord(std::move(factors));
}

std::string OperatorWord::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const Factor& f : factors_) {
    if (!out.empty()) out += ' ';
    const char side = f.side == Side::Left ? 'L' : 'R';
    int unit = -1;
    for (int k = 1; k < kOctDim; ++k) {
      if (f.value == Octonion::unit(k)) unit = k;
    }
    if (unit > 0) {
      out += side + std::to_string(unit);
    } else {
      out += std::string(1, side) + "{" + octeig::to_string(f.value) + "}";
    }
  }
  return out;
}

Octonion apply(const Factor& f, const Octonion& psi) {
  return f.side == Side::Left ? f.value * psi : psi * f.value;
}

Octonion apply(const OperatorWord& w, const Octonion& psi) {
  Octonion r = psi;
  const auto& fs = w.factors();
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) r = apply(*it, r);
  return r;
}

// ---------------------------------------------------------------------------
// Generalized operators

bool GeneralizedOperator::is_left_only() const {
  for (int m = 1; m < kOctDim; ++m)
    if (!o[m].is_zero()) return false;
  return true;
}

bool GeneralizedOperator::is_zero() const {
  for (const auto& x : o)
    if (!x.is_zero()) return false;
  return true;
}

bool GeneralizedOperator::is_integral() const {
  for (const auto& x : o)
    if (!x.is_integral()) return false;
  return true;
}

Octonion apply(const GeneralizedOperator& g, const Octonion& psi) {
  Octonion r = g.o[0] * psi;
  for (int m = 1; m < kOctDim; ++m) {
    if (g.o[m].is_zero()) continue;
    r += (g.o[m] * psi) * Octonion::unit(m);
  }
  return r;
}

std::array<double, kOctDim> to_vec(const Octonion& o) { return o.coeffs(); }

Octonion from_vec(std::span<const double> v) {
  if (v.size() != kOctDim) throw std::invalid_argument("from_vec: need 8 coefficients");
  Octonion o;
  for (int k = 0; k < kOctDim; ++k) o[k] = v[static_cast<std::size_t>(k)];
  return o;
}

namespace {

template <typename F>
RealMatrix matrix_of(F&& action) {
  RealMatrix a(kOctDim, kOctDim);
  for (int j = 0; j < kOctDim; ++j) {
    const Octonion col = action(Octonion::unit(j));
    for (int i = 0; i < kOctDim; ++i) a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = col[i];
  }
  return a;
}

std::vector<double> flatten_matrix(const RealMatrix& a) { return {a.data().begin(), a.data().end()}; }

}  // namespace

RealMatrix left_matrix(const Octonion& o) {
  return matrix_of([&](const Octonion& psi) { return o * psi; });
}

RealMatrix right_matrix(const Octonion& o) {
  return matrix_of([&](const Octonion& psi) { return psi * o; });
}

RealMatrix word_to_matrix(const OperatorWord& w) {
  return matrix_of([&](const Octonion& psi) { return apply(w, psi); });
}

RealMatrix generalized_to_matrix(const GeneralizedOperator& g) {
  return matrix_of([&](const Octonion& psi) { return apply(g, psi); });
}

std::vector<BasisElement> operator_basis() {
  std::vector<BasisElement> out;
  out.reserve(64);
  for (int m = 0; m < kOctDim; ++m) {
    for (int k = 0; k < kOctDim; ++k) {
      BasisElement b;
      b.m = m;
      b.k = k;
      std::vector<Factor> fs;
      if (m > 0) fs.push_back(Factor::R(m));
      if (k > 0) fs.push_back(Factor::L(k));
      const OperatorWord w(std::move(fs));
      b.name = w.to_string();
      b.matrix = word_to_matrix(w);
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<RealMatrix> operator_basis_lr() {
  std::vector<RealMatrix> out;
  for (int m = 0; m < kOctDim; ++m) {
    for (int k = 0; k < kOctDim; ++k) {
      std::vector<Factor> fs;
      if (k > 0) fs.push_back(Factor::L(k));
      if (m > 0) fs.push_back(Factor::R(m));
      out.push_back(word_to_matrix(OperatorWord(std::move(fs))));
    }
  }
  return out;
}

std::vector<RealMatrix> operator_census() {
  std::vector<RealMatrix> out;
  out.push_back(RealMatrix::identity(kOctDim));
  for (int m = 1; m < kOctDim; ++m) out.push_back(left_matrix(Octonion::unit(m)));
  for (int m = 1; m < kOctDim; ++m) out.push_back(right_matrix(Octonion::unit(m)));
  for (int m = 1; m < kOctDim; ++m) out.push_back(word_to_matrix(OperatorWord({Factor::L(m), Factor::R(m)})));
  for (int m = 1; m < kOctDim; ++m)
    for (int n = 1; n < kOctDim; ++n)
      if (m != n) out.push_back(word_to_matrix(OperatorWord({Factor::L(m), Factor::R(n)})));
  for (int m = 1; m < kOctDim; ++m)
    for (int n = 1; n < kOctDim; ++n)
      if (m != n) out.push_back(word_to_matrix(OperatorWord({Factor::R(n), Factor::L(m)})));
  return out;
}

std::size_t basis_rank(std::span<const RealMatrix> mats) {
  RealMatrix stacked(mats.size(), kOctDim * kOctDim);
  for (std::size_t r = 0; r < mats.size(); ++r) {
    if (mats[r].rows() != kOctDim || mats[r].cols() != kOctDim) {
      throw std::invalid_argument("basis_rank: every matrix must be 8x8");
    }
    const auto flat = flatten_matrix(mats[r]);
    for (std::size_t c = 0; c < flat.size(); ++c) stacked(r, c) = flat[c];
  }
  return rank(stacked);
}

std::size_t basis_rank() {
  std::vector<RealMatrix> mats;
  for (auto& b : operator_basis()) mats.push_back(std::move(b.matrix));
  return basis_rank(mats);
}

GeneralizedOperator matrix_to_generalized(const RealMatrix& a) {
  if (a.rows() != kOctDim || a.cols() != kOctDim) {
    throw std::invalid_argument("matrix_to_generalized: expected an 8x8 matrix");
  }
  static const RealMatrix system = [] {
    const auto basis = operator_basis();
    RealMatrix f(64, 64);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto flat = flatten_matrix(basis[c].matrix);
      for (std::size_t r = 0; r < flat.size(); ++r) f(r, c) = flat[r];
    }
    return f;
  }();

  RealMatrix rhs(64, 1);
  for (std::size_t r = 0; r < 64; ++r) rhs(r, 0) = a.data()[r];
  const RealMatrix coeffs = lu_solve(system, rhs);

  GeneralizedOperator g;
  for (int m = 0; m < kOctDim; ++m)
    for (int k = 0; k < kOctDim; ++k) g.o[m][k] = coeffs(static_cast<std::size_t>(8 * m + k), 0);

  // The inverse of the basis system is (integer matrix) / 12, so coefficients
  // of integer inputs are exact twelfths; snapping removes rounding noise.
  for (auto& o : g.o) {
    for (int k = 0; k < kOctDim; ++k) {
      const double s = std::round(o[k] * kDecompositionDenominator);
      if (std::abs(s - o[k] * kDecompositionDenominator) <= 1e-11) o[k] = s / kDecompositionDenominator;
    }
  }
  return g;
}

std::optional<DecompositionNumerators> decompose_exact(const RealMatrix& a) {
  for (double v : a.data())
    if (!std::isfinite(v) || std::trunc(v) != v || std::abs(v) > 1e12) return std::nullopt;
  const GeneralizedOperator g = matrix_to_generalized(a);
  DecompositionNumerators num{};
  for (int m = 0; m < kOctDim; ++m) {
    for (int k = 0; k < kOctDim; ++k) {
      const double scaled = g.o[m][k] * kDecompositionDenominator;
      const double r = std::round(scaled);
      if (std::abs(r - scaled) > 1e-6) return std::nullopt;
      num[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] = static_cast<long long>(r);
    }
  }
  // Certify in integer arithmetic: sum num * basis == 12 A.
  static const auto basis = operator_basis();
  std::array<long long, 64> acc{};
  for (const auto& b : basis) {
    const long long c = num[static_cast<std::size_t>(b.m)][static_cast<std::size_t>(b.k)];
    if (c == 0) continue;
    for (std::size_t e = 0; e < 64; ++e) acc[e] += c * static_cast<long long>(b.matrix.data()[e]);
  }
  for (std::size_t e = 0; e < 64; ++e)
    if (acc[e] != kDecompositionDenominator * static_cast<long long>(a.data()[e])) return std::nullopt;
  return num;
}

std::vector<IdentityCheck> operator_identity_check() {
  std::vector<IdentityCheck> out;
  const auto word = [](std::initializer_list<Factor> fs) { return word_to_matrix(OperatorWord(fs)); };

  const RealMatrix l1l2 = word({Factor::L(1), Factor::L(2)});
  const RealMatrix l3 = word({Factor::L(3)});
  out.push_back({"L1 L2 != L3", !(l1l2 == l3), "differs in " + std::to_string([&] {
                   int d = 0;
                   for (std::size_t k = 0; k < 64; ++k) d += l1l2.data()[k] != l3.data()[k];
                   return d;
                 }()) + " entries"});

  const RealMatrix rhs = l3 + word({Factor::R(2), Factor::L(1)}) - word({Factor::L(1), Factor::R(2)});
  out.push_back({"L1 L2 = L3 + R2 L1 - L1 R2", l1l2 == rhs, "exact matrix equality"});

  int failures = 0;
  std::string first_failure;
  for (int m = 1; m < kOctDim; ++m) {
    for (int n = 1; n < kOctDim; ++n) {
      const RealMatrix lhs = word({Factor::L(m), Factor::R(n)}) + word({Factor::L(n), Factor::R(m)});
      const RealMatrix r = word({Factor::R(n), Factor::L(m)}) + word({Factor::R(m), Factor::L(n)});
      if (!(lhs == r)) {
        if (failures++ == 0) first_failure = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      }
    }
  }
  out.push_back({"L_m R_n + L_n R_m = R_n L_m + R_m L_n", failures == 0,
                 failures == 0 ? "all 49 (m, n)" : "first failure " + first_failure});
  return out;
}

// ---------------------------------------------------------------------------
// Operator matrices

OperatorMatrix::OperatorMatrix(std::size_t n)
    : n_(n), re_(n * n), form_(n * n, EntryForm::Literal), form_im_(n * n, EntryForm::Literal) {
  if (n == 0) throw std::invalid_argument("OperatorMatrix: n must be >= 1");
}

OperatorMatrix OperatorMatrix::from_octonions(std::size_t n, const std::vector<Octonion>& entries) {
  if (entries.size() != n * n) throw std::invalid_argument("OperatorMatrix: expected n*n entries");
  OperatorMatrix m(n);
  for (std::size_t k = 0; k < entries.size(); ++k) m.re_[k] = GeneralizedOperator::left(entries[k]);
  return m;
}

OperatorMatrix OperatorMatrix::from_literals(std::size_t n, const std::vector<std::string>& literals) {
  std::vector<Octonion> entries;
  entries.reserve(literals.size());
  for (const auto& s : literals) entries.push_back(parse_octonion(s));
  return from_octonions(n, entries);
}

void OperatorMatrix::set_complexified(bool on) {
  complexified_ = on;
  if (on && im_.size() != re_.size()) im_.assign(re_.size(), GeneralizedOperator{});
  if (!on) im_.clear();
}

GeneralizedOperator& OperatorMatrix::im(std::size_t i, std::size_t j) {
  if (!complexified_) throw std::logic_error("OperatorMatrix::im on a matrix without i-part");
  return im_[i * n_ + j];
}

const GeneralizedOperator& OperatorMatrix::im(std::size_t i, std::size_t j) const {
  if (!complexified_) throw std::logic_error("OperatorMatrix::im on a matrix without i-part");
  return im_[i * n_ + j];
}

bool OperatorMatrix::is_left_only() const {
  for (const auto& g : re_)
    if (!g.is_left_only()) return false;
  for (const auto& g : im_)
    if (!g.is_left_only()) return false;
  return true;
}

bool OperatorMatrix::is_integral() const {
  for (const auto& g : re_)
    if (!g.is_integral()) return false;
  for (const auto& g : im_)
    if (!g.is_integral()) return false;
  return true;
}

bool OperatorMatrix::is_quaternionic() const {
  if (complexified_ || !is_left_only()) return false;
  for (const auto& g : re_)
    for (int k = 4; k < kOctDim; ++k)
      if (g.o[0][k] != 0.0) return false;
  return true;
}

OctVector apply(const OperatorMatrix& m, const OctVector& psi) {
  if (m.complexified()) throw std::invalid_argument("apply: matrix has an i-part; use complex vectors");
  if (psi.size() != m.n()) throw std::invalid_argument("apply: dimension mismatch");
  OctVector out(m.n());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out[i] += apply(m.re(i, j), psi[j]);
  return out;
}

ComplexOctVector apply(const OperatorMatrix& m, const ComplexOctVector& phi) {
  if (phi.size() != m.n()) throw std::invalid_argument("apply: dimension mismatch");
  ComplexOctVector out(m.n());
  for (std::size_t i = 0; i < m.n(); ++i) {
    for (std::size_t j = 0; j < m.n(); ++j) {
      const auto& x = phi[j];
      const GeneralizedOperator& a = m.re(i, j);
      out[i].re() += apply(a, x.re());
      out[i].im() += apply(a, x.im());
      if (m.complexified()) {
        const GeneralizedOperator& b = m.im(i, j);
        out[i].re() -= apply(b, x.im());
        out[i].im() += apply(b, x.re());
      }
    }
  }
  return out;
}

namespace {

void place_block(RealMatrix& dst, const RealMatrix& block, std::size_t bi, std::size_t bj) {
  for (std::size_t r = 0; r < kOctDim; ++r)
    for (std::size_t c = 0; c < kOctDim; ++c) dst(bi * kOctDim + r, bj * kOctDim + c) = block(r, c);
}

RealMatrix translate_part(const OperatorMatrix& m, bool imaginary) {
  const std::size_t n = m.n();
  RealMatrix out(kOctDim * n, kOctDim * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const GeneralizedOperator& g = imaginary ? m.im(i, j) : m.re(i, j);
      if (!g.is_zero()) place_block(out, generalized_to_matrix(g), i, j);
    }
  }
  return out;
}

}  // namespace

RealMatrix operator_matrix_to_real(const OperatorMatrix& m) {
  if (m.complexified()) {
    throw std::invalid_argument("operator_matrix_to_real: matrix has an i-part");
  }
  return translate_part(m, false);
}

ComplexMatrix operator_matrix_to_complex(const OperatorMatrix& m) {
  const RealMatrix re = translate_part(m, false);
  if (!m.complexified()) return to_complex(re);
  const RealMatrix im = translate_part(m, true);
  return to_complex(re, &im);
}

OctVector chunk(std::span<const double> v) {
  if (v.size() % kOctDim != 0) throw std::invalid_argument("chunk: length must be a multiple of 8");
  OctVector out(v.size() / kOctDim);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = from_vec(v.subspan(j * kOctDim, kOctDim));
  return out;
}

std::vector<double> flatten(const OctVector& v) {
  std::vector<double> out;
  out.reserve(v.size() * kOctDim);
  for (const auto& o : v)
    for (int k = 0; k < kOctDim; ++k) out.push_back(o[k]);
  return out;
}

}  // namespace octeig

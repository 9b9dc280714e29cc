#pragma once

// Left/right octonionic operators and their translation to 8x8 real
// matrices. vec(psi) = (psi_0 .. psi_7)^T; matrices act from the left.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "octeig/linalg.hpp"
#include "octeig/octonion.hpp"

namespace octeig {

enum class Side { Left, Right };

struct Factor {
  Side side = Side::Left;
  Octonion value;

  static Factor L(int k) { return {Side::Left, Octonion::unit(k)}; }
  static Factor R(int k) { return {Side::Right, Octonion::unit(k)}; }
};

/// Ordered factors; the rightmost acts first: ABC psi = A(B(C psi)).
class OperatorWord {
 public:
  OperatorWord() = default;
  explicit OperatorWord(std::vector<Factor> factors) : factors_(std::move(factors)) {}

  /// Whitespace-separated `L<k>` / `R<k>` tokens, k in 1..7. An empty string
  /// (or "1") is the identity.
  static OperatorWord parse(std::string_view text);

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::string to_string() const;

 private:
  std::vector<Factor> factors_;
};

/// L_{o0} + sum_m R_m L_{om}, acting as o0 psi + sum_m (om psi) e_m.
struct GeneralizedOperator {
  std::array<Octonion, kOctDim> o{};

  static GeneralizedOperator left(const Octonion& value) {
    GeneralizedOperator g;
    g.o[0] = value;
    return g;
  }
  /// Only o0 is nonzero, so the operator is plain left multiplication.
  bool is_left_only() const;
  bool is_zero() const;
  bool is_integral() const;
  friend bool operator==(const GeneralizedOperator&, const GeneralizedOperator&) = default;
};

Octonion apply(const Factor& f, const Octonion& psi);
Octonion apply(const OperatorWord& w, const Octonion& psi);
Octonion apply(const GeneralizedOperator& g, const Octonion& psi);

/// Matrix of psi -> o psi and psi -> psi o.
RealMatrix left_matrix(const Octonion& o);
RealMatrix right_matrix(const Octonion& o);

std::array<double, kOctDim> to_vec(const Octonion& o);
Octonion from_vec(std::span<const double> v);

/// Column k is vec(apply(word, e_k)).
RealMatrix word_to_matrix(const OperatorWord& w);
RealMatrix generalized_to_matrix(const GeneralizedOperator& g);

/// Inverse of generalized_to_matrix. Coefficient k of o_m multiplies the
/// basis element R_m L_k (R_0 = L_0 = identity). Throws std::invalid_argument
/// for a non-8x8 input.
GeneralizedOperator matrix_to_generalized(const RealMatrix& a);

/// Coefficients of integer matrices are multiples of 1/12.
inline constexpr long long kDecompositionDenominator = 12;
using DecompositionNumerators = std::array<std::array<long long, kOctDim>, kOctDim>;

/// Integer numerators N with sum N[m][k] R_m L_k = 12 A, certified in integer
/// arithmetic. Empty when A is not an integer matrix.
std::optional<DecompositionNumerators> decompose_exact(const RealMatrix& a);

/// One element of the 64-element basis {1, L_k, R_m, R_m L_k}.
struct BasisElement {
  int m = 0;  // right factor index, 0 = none
  int k = 0;  // left factor index, 0 = none
  std::string name;
  RealMatrix matrix;
};

/// Ordered by m, then k: position 8m + k.
std::vector<BasisElement> operator_basis();
/// The alternative basis {1, L_m, R_n, L_m R_n}.
std::vector<RealMatrix> operator_basis_lr();
/// The 106 operators 1, L_m, R_m, L_m R_m, L_m R_n, R_n L_m (m != n).
std::vector<RealMatrix> operator_census();

/// Rank of the given 8x8 matrices viewed as flattened 64-vectors.
std::size_t basis_rank(std::span<const RealMatrix> mats);
/// Rank of the full 64-element basis.
std::size_t basis_rank();

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// L1 L2 != L3; L1 L2 = L3 + R2 L1 - L1 R2; L_m R_n + L_n R_m = R_n L_m + R_m L_n.
std::vector<IdentityCheck> operator_identity_check();

enum class EntryForm { Literal, Generalized };

/// Square matrix of generalized operators, optionally with an i-part:
/// M = M1 + i M2.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(std::size_t n);

  /// Row-major left-multiplication entries.
  static OperatorMatrix from_octonions(std::size_t n, const std::vector<Octonion>& entries);
  static OperatorMatrix from_literals(std::size_t n, const std::vector<std::string>& literals);

  std::size_t n() const { return n_; }
  bool complexified() const { return complexified_; }
  void set_complexified(bool on);

  GeneralizedOperator& re(std::size_t i, std::size_t j) { return re_[i * n_ + j]; }
  const GeneralizedOperator& re(std::size_t i, std::size_t j) const { return re_[i * n_ + j]; }
  /// Requires complexified().
  GeneralizedOperator& im(std::size_t i, std::size_t j);
  const GeneralizedOperator& im(std::size_t i, std::size_t j) const;

  EntryForm& form(std::size_t i, std::size_t j) { return form_[i * n_ + j]; }
  EntryForm form(std::size_t i, std::size_t j) const { return form_[i * n_ + j]; }
  EntryForm& form_im(std::size_t i, std::size_t j) { return form_im_[i * n_ + j]; }
  EntryForm form_im(std::size_t i, std::size_t j) const { return form_im_[i * n_ + j]; }

  bool is_left_only() const;
  bool is_integral() const;
  /// Every entry is left multiplication by an element of span(1, e1, e2, e3).
  bool is_quaternionic() const;

  friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

 private:
  std::size_t n_ = 0;
  bool complexified_ = false;
  std::vector<GeneralizedOperator> re_;
  std::vector<GeneralizedOperator> im_;
  std::vector<EntryForm> form_;
  std::vector<EntryForm> form_im_;
};

using OctVector = std::vector<Octonion>;
using ComplexOctVector = std::vector<ComplexOctonion>;

/// (M psi)_i = sum_j M_ij(psi_j). Requires a non-complexified matrix.
OctVector apply(const OperatorMatrix& m, const OctVector& psi);
/// (M1 + i M2)(phi1 + i phi2).
ComplexOctVector apply(const OperatorMatrix& m, const ComplexOctVector& phi);

/// Block (i, j) is the 8x8 translation of entry (i, j). Throws
/// std::invalid_argument for a complexified matrix.
RealMatrix operator_matrix_to_real(const OperatorMatrix& m);
/// Translation of M1 plus i times the translation of M2.
ComplexMatrix operator_matrix_to_complex(const OperatorMatrix& m);

/// Octonion j of an 8n-vector occupies coefficients 8j .. 8j+7.
OctVector chunk(std::span<const double> v);
std::vector<double> flatten(const OctVector& v);

}  // namespace octeig

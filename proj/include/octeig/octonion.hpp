#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace octeig {

inline constexpr int kOctDim = 8;

/// Signed basis element: sign * e_index, with e_0 = 1.
struct SignedUnit {
  int sign = 0;
  int index = 0;

  friend constexpr bool operator==(SignedUnit, SignedUnit) = default;
};

/// Multiplication table of the basis units.
///
/// e_m e_n = -delta_mn + eps_mnp e_p where eps is totally antisymmetric and
/// equals +1 on the oriented triples listed in kTriples (and their cyclic
/// permutations).
class StructureTable {
 public:
  static constexpr std::array<std::array<int, 3>, 7> kTriples{
      {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5}}};

  constexpr StructureTable() {
    for (int m = 0; m < kOctDim; ++m) {
      for (int n = 0; n < kOctDim; ++n) {
        if (m == 0) {
          table_[m][n] = {1, n};
        } else if (n == 0) {
          table_[m][n] = {1, m};
        } else if (m == n) {
          table_[m][n] = {-1, 0};
        }
      }
    }
    for (const auto& t : kTriples) {
      for (int rot = 0; rot < 3; ++rot) {
        const int a = t[rot], b = t[(rot + 1) % 3], c = t[(rot + 2) % 3];
        table_[a][b] = {1, c};
        table_[b][a] = {-1, c};
      }
    }
  }

  /// Product e_m e_n for m, n in 0..7 (index 0 is the real unit).
  constexpr SignedUnit operator()(int m, int n) const { return table_[m][n]; }

 private:
  std::array<std::array<SignedUnit, kOctDim>, kOctDim> table_{};
};

inline constexpr StructureTable kStructure{};

/// Structure constant lookup for imaginary units. Requires 1 <= m, n <= 7;
/// throws std::out_of_range otherwise. (m, m) yields {-1, 0}.
SignedUnit structure_constant(int m, int n);

/// Real octonion r0 + sum r_m e_m; index 0 holds the real part.
class Octonion {
 public:
  using Coeffs = std::array<double, kOctDim>;

  constexpr Octonion() = default;
  constexpr Octonion(double real) : c_{real} {}  // NOLINT(google-explicit-constructor)
  constexpr explicit Octonion(const Coeffs& coeffs) : c_(coeffs) {}

  /// Basis element e_k (k = 0 gives 1).
  static Octonion unit(int k, double scale = 1.0);

  constexpr double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  constexpr double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  constexpr const Coeffs& coeffs() const { return c_; }
  constexpr double real() const { return c_[0]; }
  Octonion imag() const;

  bool is_zero() const;
  bool is_finite() const;
  /// All coefficients are exact integers.
  bool is_integral() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);
  Octonion& operator/=(double s);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend Octonion operator/(Octonion a, double s) { return a /= s; }
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

 private:
  Coeffs c_{};
};

Octonion mul(const Octonion& a, const Octonion& b);
Octonion conj(const Octonion& o);
double norm_squared(const Octonion& o);
double norm(const Octonion& o);
/// conj(o) / N(o)^2. Throws std::domain_error for o == 0.
Octonion inverse(const Octonion& o);
/// (ab)c - a(bc)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);
/// Largest absolute coefficient difference.
double max_abs_diff(const Octonion& a, const Octonion& b);

/// Complexified octonion re + i im, i commuting with every e_m.
class ComplexOctonion {
 public:
  constexpr ComplexOctonion() = default;
  constexpr ComplexOctonion(const Octonion& re, const Octonion& im = {}) : re_(re), im_(im) {}  // NOLINT

  static ComplexOctonion i_unit() { return {Octonion{}, Octonion{1.0}}; }

  constexpr const Octonion& re() const { return re_; }
  constexpr const Octonion& im() const { return im_; }
  Octonion& re() { return re_; }
  Octonion& im() { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_integral() const { return re_.is_integral() && im_.is_integral(); }

  ComplexOctonion& operator+=(const ComplexOctonion& o);
  ComplexOctonion& operator-=(const ComplexOctonion& o);

  friend ComplexOctonion operator+(ComplexOctonion a, const ComplexOctonion& b) { return a += b; }
  friend ComplexOctonion operator-(ComplexOctonion a, const ComplexOctonion& b) { return a -= b; }
  friend ComplexOctonion operator-(const ComplexOctonion& a) { return {-a.re_, -a.im_}; }
  friend ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b);
  /// Scaling by a complex number (commutes with the octonion part).
  friend ComplexOctonion operator*(const ComplexOctonion& a, std::complex<double> z);
  friend ComplexOctonion operator*(std::complex<double> z, const ComplexOctonion& a) { return a * z; }
  friend bool operator==(const ComplexOctonion&, const ComplexOctonion&) = default;

 private:
  Octonion re_;
  Octonion im_;
};

ComplexOctonion cmul(const ComplexOctonion& x, const ComplexOctonion& y);
/// Octonionic conjugation on both parts together with i -> -i.
ComplexOctonion conj(const ComplexOctonion& x);
double norm(const ComplexOctonion& x);

/// Error raised by the literal parsers; column is 1-based into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::runtime_error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses `1 - 2e3 + e7` style literals. Whitespace is ignored.
Octonion parse_octonion(std::string_view text);
/// Parses `(<oct>) + i(<oct>)`, `(<oct>)` or a bare octonion literal.
ComplexOctonion parse_complex_octonion(std::string_view text);

/// Canonical literal, accepted back by parse_octonion.
std::string to_string(const Octonion& o);
std::string to_string(const ComplexOctonion& x);
/// Shortest fixed-notation decimal that round-trips.
std::string format_real(double v);

std::ostream& operator<<(std::ostream& os, const Octonion& o);
std::ostream& operator<<(std::ostream& os, const ComplexOctonion& x);

}  // namespace octeig

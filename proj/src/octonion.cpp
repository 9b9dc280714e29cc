#include "octeig/octonion.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <vector>

namespace octeig {

SignedUnit structure_constant(int m, int n) {
  if (m < 1 || m > 7 || n < 1 || n > 7) {
    throw std::out_of_range("structure_constant: indices must lie in 1..7, got (" +
                            std::to_string(m) + ", " + std::to_string(n) + ")");
  }
  return kStructure(m, n);
}

Octonion Octonion::unit(int k, double scale) {
  if (k < 0 || k >= kOctDim) {
    throw std::out_of_range("Octonion::unit: index must lie in 0..7");
  }
  Octonion o;
  o[k] = scale;
  return o;
}

Octonion Octonion::imag() const {
  Octonion o = *this;
  o[0] = 0.0;
  return o;
}

bool Octonion::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return v == 0.0; });
}

bool Octonion::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

bool Octonion::is_integral() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](double v) { return std::isfinite(v) && std::trunc(v) == v; });
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int k = 0; k < kOctDim; ++k) (*this)[k] += o[k];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int k = 0; k < kOctDim; ++k) (*this)[k] -= o[k];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

Octonion& Octonion::operator/=(double s) {
  for (auto& v : c_) v /= s;
  return *this;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int m = 0; m < kOctDim; ++m) {
    if (a[m] == 0.0) continue;
    for (int n = 0; n < kOctDim; ++n) {
      if (b[n] == 0.0) continue;
      const SignedUnit u = kStructure(m, n);
      r[u.index] += u.sign * a[m] * b[n];
    }
  }
  return r;
}

Octonion mul(const Octonion& a, const Octonion& b) { return a * b; }

Octonion conj(const Octonion& o) {
  Octonion r = -o;
  r[0] = o[0];
  return r;
}

double norm_squared(const Octonion& o) {
  double s = 0.0;
  for (double v : o.coeffs()) s += v * v;
  return s;
}

double norm(const Octonion& o) { return std::sqrt(norm_squared(o)); }

Octonion inverse(const Octonion& o) {
  const double n2 = norm_squared(o);
  if (n2 == 0.0) throw std::domain_error("zero octonion has no inverse");
  return conj(o) / n2;
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return (a * b) * c - a * (b * c);
}

double max_abs_diff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (int k = 0; k < kOctDim; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

ComplexOctonion& ComplexOctonion::operator+=(const ComplexOctonion& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexOctonion& ComplexOctonion::operator-=(const ComplexOctonion& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexOctonion operator*(const ComplexOctonion& a, const ComplexOctonion& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

ComplexOctonion operator*(const ComplexOctonion& a, std::complex<double> z) {
  return {a.re_ * z.real() - a.im_ * z.imag(), a.im_ * z.real() + a.re_ * z.imag()};
}

ComplexOctonion cmul(const ComplexOctonion& x, const ComplexOctonion& y) { return x * y; }

ComplexOctonion conj(const ComplexOctonion& x) { return {conj(x.re()), -conj(x.im())}; }

double norm(const ComplexOctonion& x) {
  return std::sqrt(norm_squared(x.re()) + norm_squared(x.im()));
}

// ---------------------------------------------------------------------------
// Literal grammar

namespace {

struct Cursor {
  std::string_view text;        // whitespace stripped
  std::vector<std::size_t> col;  // 1-based column of each kept character in the original
  std::size_t pos = 0;
  std::size_t end_col = 1;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  std::size_t column() const { return done() ? end_col : col[pos]; }
};

struct Stripped {
  std::string text;
  std::vector<std::size_t> col;
  std::size_t end_col;
};

Stripped strip(std::string_view in, std::size_t base_col) {
  Stripped s;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char ch = in[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
    s.text.push_back(ch);
    s.col.push_back(base_col + i);
  }
  s.end_col = base_col + in.size();
  return s;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// <term> := <real> | e<k> | <real>e<k>, <real> := digits[.digits] | .digits
Octonion parse_terms(Cursor& cur) {
  Octonion result;
  bool first = true;
  while (true) {
    double sign = 1.0;
    if (cur.peek() == '+' || cur.peek() == '-') {
      sign = cur.peek() == '-' ? -1.0 : 1.0;
      ++cur.pos;
    } else if (!first) {
      break;
    }
    first = false;

    const std::size_t term_col = cur.column();
    double coeff = 1.0;
    bool have_number = false;
    const std::size_t num_start = cur.pos;
    while (!cur.done() && (is_digit(cur.peek()) || cur.peek() == '.')) ++cur.pos;
    if (cur.pos > num_start) {
      const char* b = cur.text.data() + num_start;
      const char* e = cur.text.data() + cur.pos;
      auto [ptr, ec] = std::from_chars(b, e, coeff, std::chars_format::fixed);
      if (ec != std::errc{} || ptr != e || !std::isfinite(coeff)) {
        throw ParseError("malformed number '" + std::string(b, e) + "'", term_col);
      }
      have_number = true;
    }

    int unit = 0;
    if (cur.peek() == 'e') {
      const std::size_t unit_col = cur.column();
      ++cur.pos;
      if (cur.done() || !is_digit(cur.peek())) {
        throw ParseError("expected unit index after 'e'", cur.column());
      }
      const std::size_t idx_start = cur.pos;
      while (!cur.done() && is_digit(cur.peek())) ++cur.pos;
      const std::string_view idx = cur.text.substr(idx_start, cur.pos - idx_start);
      if (idx.size() != 1 || idx[0] < '1' || idx[0] > '7') {
        throw ParseError("unit index must be 1..7, got e" + std::string(idx), unit_col);
      }
      unit = idx[0] - '0';
    } else if (!have_number) {
      throw ParseError(cur.done() ? std::string("unexpected end of literal")
                                  : "unexpected character '" + std::string(1, cur.peek()) + "'",
                       cur.column());
    }
    result[unit] += sign * coeff;
  }
  return result;
}

Octonion parse_octonion_at(std::string_view text, std::size_t base_col) {
  const Stripped s = strip(text, base_col);
  if (s.text.empty()) throw ParseError("empty octonion literal", base_col);
  Cursor cur{s.text, s.col, 0, s.end_col};
  Octonion o = parse_terms(cur);
  if (!cur.done()) {
    throw ParseError("unexpected character '" + std::string(1, cur.peek()) + "'", cur.column());
  }
  return o;
}

// Index of the parenthesis matching text[open].
std::size_t matching_paren(std::string_view text, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth == 0) return i;
  }
  throw ParseError("unbalanced parenthesis", open + 1);
}

}  // namespace

Octonion parse_octonion(std::string_view text) { return parse_octonion_at(text, 1); }

ComplexOctonion parse_complex_octonion(std::string_view text) {
  std::size_t p = 0;
  auto skip_ws = [&] {
    while (p < text.size() && (text[p] == ' ' || text[p] == '\t' || text[p] == '\n')) ++p;
  };
  skip_ws();
  if (p >= text.size() || (text[p] != '(' && !(text[p] == 'i' && p + 1 < text.size() && text[p + 1] == '('))) {
    if (text.find('i') != std::string_view::npos) {
      throw ParseError("complex literal must have the form (<oct>) + i(<oct>)", p + 1);
    }
    return ComplexOctonion(parse_octonion(text));
  }

  Octonion re;
  Octonion im;
  bool seen_re = false;
  bool seen_im = false;
  bool first = true;
  while (true) {
    skip_ws();
    if (p >= text.size()) break;
    double sign = 1.0;
    if (text[p] == '+' || text[p] == '-') {
      sign = text[p] == '-' ? -1.0 : 1.0;
      ++p;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-' between parts", p + 1);
    }
    first = false;
    bool imaginary = false;
    if (p < text.size() && text[p] == 'i') {
      imaginary = true;
      ++p;
    }
    if (p >= text.size() || text[p] != '(') throw ParseError("expected '('", p + 1);
    const std::size_t close = matching_paren(text, p);
    const Octonion part = parse_octonion_at(text.substr(p + 1, close - p - 1), p + 2) * sign;
    bool& seen = imaginary ? seen_im : seen_re;
    if (seen) throw ParseError(imaginary ? "duplicate imaginary part" : "duplicate real part", p + 1);
    seen = true;
    (imaginary ? im : re) = part;
    p = close + 1;
  }
  return {re, im};
}

std::string format_real(double v) {
  if (v == 0.0) return "0";
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf, ptr);
}

std::string to_string(const Octonion& o) {
  std::string out;
  for (int k = 0; k < kOctDim; ++k) {
    const double v = o[k];
    if (v == 0.0) continue;
    const double mag = std::abs(v);
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += format_real(mag);
    } else {
      if (mag != 1.0) out += format_real(mag);
      out += "e" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ComplexOctonion& x) {
  if (x.im().is_zero()) return to_string(x.re());
  return "(" + to_string(x.re()) + ") + i(" + to_string(x.im()) + ")";
}

std::ostream& operator<<(std::ostream& os, const Octonion& o) { return os << to_string(o); }
std::ostream& operator<<(std::ostream& os, const ComplexOctonion& x) { return os << to_string(x); }

}  // namespace octeig

#pragma once

// JSON encoding of operator matrices and solver reports.
//
// Operator matrix: {"n": int, "entries": [...], "complexified": bool,
//                   "entries_im": [...]}
// Each entry is an octonion literal (left multiplication) or an array of
// eight literals o0..o7 (generalized operator).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "octeig/eigen_engine.hpp"
#include "octeig/operators.hpp"

namespace octeig {

using Json = nlohmann::ordered_json;

class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Throws SchemaError (with a JSON pointer path) on malformed input.
OperatorMatrix parse_operator_matrix(std::string_view text);
Json operator_matrix_json(const OperatorMatrix& m);
/// Compact canonical encoding; parse_operator_matrix accepts it back and
/// re-emits the same bytes.
std::string emit_operator_matrix(const OperatorMatrix& m);

/// Accepts [[...], ...] or {"rows": [[...], ...]}.
RealMatrix parse_real_matrix(std::string_view text);

struct ReportOptions {
  std::uint64_t seed = kDefaultSeed;
  bool full_precision = false;
};

/// Residuals keep three significant digits unless full precision is asked.
double report_residual(double r, const ReportOptions& opts);
/// Coefficient arrays with rounding noise below 1e-14 cleared.
Json octonion_coeffs_json(const Octonion& o);

/// {"matrix", "clusters": [{a, b, multiplicity, geometric_multiplicity,
///  solutions: [{xi, eta, residual}]}], "seed"}
Json coupled_report_json(const OperatorMatrix& m, const std::vector<CoupledCluster>& clusters,
                         const ReportOptions& opts);
Json complexified_report_json(const OperatorMatrix& m, const std::vector<ComplexifiedCluster>& clusters,
                              const ReportOptions& opts);

/// Human-readable octonion with coefficients rounded to `digits` significant
/// figures (noise below 1e-12 dropped).
std::string pretty(const Octonion& o, int digits = 6);
std::string pretty(const ComplexOctonion& x, int digits = 6);

}  // namespace octeig

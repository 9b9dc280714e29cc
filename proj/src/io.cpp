#include "octeig/io.hpp"

#include <cmath>
#include <cstdio>

namespace octeig {

namespace {

std::string at(const std::string& base, std::size_t k) { return base + "/" + std::to_string(k); }

Octonion literal_at(const Json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "expected an octonion literal string");
  try {
    return parse_octonion(v.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

std::pair<GeneralizedOperator, EntryForm> entry_at(const Json& v, const std::string& path) {
  if (v.is_string()) return {GeneralizedOperator::left(literal_at(v, path)), EntryForm::Literal};
  if (v.is_array()) {
    if (v.size() != kOctDim) {
      throw SchemaError(path, "generalized operator needs 8 literals o0..o7, got " + std::to_string(v.size()));
    }
    GeneralizedOperator g;
    for (std::size_t k = 0; k < kOctDim; ++k) g.o[k] = literal_at(v[k], at(path, k));
    return {g, EntryForm::Generalized};
  }
  throw SchemaError(path, "expected a literal string or an array of 8 literals");
}

Json entry_json(const GeneralizedOperator& g, EntryForm form) {
  if (form == EntryForm::Literal && g.is_left_only()) return to_string(g.o[0]);
  Json arr = Json::array();
  for (const auto& o : g.o) arr.push_back(to_string(o));
  return arr;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

double clean(double x) { return std::abs(x) < 1e-14 ? 0.0 : x; }

Json vector_json(const OctVector& v) {
  Json arr = Json::array();
  for (const auto& o : v) arr.push_back(octonion_coeffs_json(o));
  return arr;
}

}  // namespace

OperatorMatrix parse_operator_matrix(std::string_view text) {
  const Json j = parse_json(text);
  if (!j.is_object()) throw SchemaError("", "expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "entries" && key != "complexified" && key != "entries_im") {
      throw SchemaError("/" + key, "unknown key");
    }
  }
  if (!j.contains("n")) throw SchemaError("/n", "missing");
  const Json& jn = j["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1) throw SchemaError("/n", "expected a positive integer");
  const auto n = static_cast<std::size_t>(jn.get<long long>());

  bool complexified = false;
  if (j.contains("complexified")) {
    if (!j["complexified"].is_boolean()) throw SchemaError("/complexified", "expected a boolean");
    complexified = j["complexified"].get<bool>();
  }
  if (!complexified && j.contains("entries_im")) {
    throw SchemaError("/entries_im", "present but complexified is false");
  }

  OperatorMatrix m(n);
  m.set_complexified(complexified);
  auto fill = [&](const char* key, bool imaginary) {
    const std::string path = std::string("/") + key;
    if (!j.contains(key)) throw SchemaError(path, "missing");
    const Json& arr = j[key];
    if (!arr.is_array()) throw SchemaError(path, "expected an array");
    if (arr.size() != n * n) {
      throw SchemaError(path, "expected " + std::to_string(n * n) + " entries (n*n), got " + std::to_string(arr.size()));
    }
    for (std::size_t k = 0; k < arr.size(); ++k) {
      auto [g, form] = entry_at(arr[k], at(path, k));
      const std::size_t r = k / n, c = k % n;
      if (imaginary) {
        m.im(r, c) = g;
        m.form_im(r, c) = form;
      } else {
        m.re(r, c) = g;
        m.form(r, c) = form;
      }
    }
  };
  fill("entries", false);
  if (complexified) fill("entries_im", true);
  return m;
}

Json operator_matrix_json(const OperatorMatrix& m) {
  Json j;
  j["n"] = m.n();
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.n(); ++r)
    for (std::size_t c = 0; c < m.n(); ++c) entries.push_back(entry_json(m.re(r, c), m.form(r, c)));
  j["entries"] = std::move(entries);
  j["complexified"] = m.complexified();
  if (m.complexified()) {
    Json im = Json::array();
    for (std::size_t r = 0; r < m.n(); ++r)
      for (std::size_t c = 0; c < m.n(); ++c) im.push_back(entry_json(m.im(r, c), m.form_im(r, c)));
    j["entries_im"] = std::move(im);
  }
  return j;
}

std::string emit_operator_matrix(const OperatorMatrix& m) { return operator_matrix_json(m).dump(); }

RealMatrix parse_real_matrix(std::string_view text) {
  const Json j = parse_json(text);
  const Json* rows = &j;
  std::string path;
  if (j.is_object()) {
    if (!j.contains("rows")) throw SchemaError("/rows", "missing");
    rows = &j["rows"];
    path = "/rows";
  }
  if (!rows->is_array() || rows->empty()) throw SchemaError(path, "expected a non-empty array of rows");
  const std::size_t r = rows->size();
  const Json& first = (*rows)[0];
  if (!first.is_array() || first.empty()) throw SchemaError(at(path, 0), "expected a non-empty array of numbers");
  const std::size_t c = first.size();
  RealMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = (*rows)[i];
    if (!row.is_array() || row.size() != c) {
      throw SchemaError(at(path, i), "expected " + std::to_string(c) + " numbers");
    }
    for (std::size_t k = 0; k < c; ++k) {
      if (!row[k].is_number()) throw SchemaError(at(at(path, i), k), "expected a number");
      a(i, k) = row[k].get<double>();
    }
  }
  return a;
}

double report_residual(double r, const ReportOptions& opts) {
  if (opts.full_precision || r == 0.0 || !std::isfinite(r)) return r;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2e", r);
  return std::strtod(buf, nullptr);
}

Json octonion_coeffs_json(const Octonion& o) {
  Json arr = Json::array();
  for (int k = 0; k < kOctDim; ++k) arr.push_back(clean(o[k]));
  return arr;
}

Json coupled_report_json(const OperatorMatrix& m, const std::vector<CoupledCluster>& clusters,
                         const ReportOptions& opts) {
  Json j;
  j["matrix"] = operator_matrix_json(m);
  Json cls = Json::array();
  for (const auto& cl : clusters) {
    Json c;
    c["a"] = clean(cl.a);
    c["b"] = clean(cl.b);
    c["multiplicity"] = cl.multiplicity;
    c["geometric_multiplicity"] = cl.solutions.size();
    Json sols = Json::array();
    for (const auto& s : cl.solutions) {
      Json js;
      js["xi"] = vector_json(s.xi);
      js["eta"] = vector_json(s.eta);
      js["residual"] = report_residual(s.residual, opts);
      sols.push_back(std::move(js));
    }
    c["solutions"] = std::move(sols);
    cls.push_back(std::move(c));
  }
  j["clusters"] = std::move(cls);
  j["seed"] = opts.seed;
  return j;
}

Json complexified_report_json(const OperatorMatrix& m, const std::vector<ComplexifiedCluster>& clusters,
                              const ReportOptions& opts) {
  Json j;
  j["matrix"] = operator_matrix_json(m);
  Json cls = Json::array();
  for (const auto& cl : clusters) {
    Json c;
    c["a"] = clean(cl.z.real());
    c["b"] = clean(cl.z.imag());
    c["geometric_multiplicity"] = cl.solutions.size();
    Json sols = Json::array();
    for (const auto& s : cl.solutions) {
      const CoupledSolution parts = to_coupled(s);
      Json js;
      js["phi_re"] = vector_json(parts.xi);
      js["phi_im"] = vector_json(parts.eta);
      js["residual"] = report_residual(s.residual, opts);
      sols.push_back(std::move(js));
    }
    c["solutions"] = std::move(sols);
    cls.push_back(std::move(c));
  }
  j["clusters"] = std::move(cls);
  j["seed"] = opts.seed;
  return j;
}

std::string pretty(const Octonion& o, int digits) {
  Octonion r;
  for (int k = 0; k < kOctDim; ++k) {
    if (std::abs(o[k]) < 1e-12) continue;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, o[k]);
    r[k] = std::strtod(buf, nullptr);
  }
  return to_string(r);
}

std::string pretty(const ComplexOctonion& x, int digits) {
  const std::string im = pretty(x.im(), digits);
  if (im == "0") return pretty(x.re(), digits);
  return "(" + pretty(x.re(), digits) + ") + i(" + im + ")";
}

}  // namespace octeig

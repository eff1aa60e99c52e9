#pragma once

// Canonical JSON / CSV / markdown rendering of spectra, verdicts and
// exploration reports. JSON objects use sorted keys; exact values are never
// written as decimals. Big integers are written as decimal strings.

#include "polychord/catalog.hpp"
#include "polychord/spectrum.hpp"
#include "polychord/theorems.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace polychord {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

enum class Format { json, csv, markdown };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + s + "' (json, csv, markdown)");
}

// ---------------------------------------------------------------------------
// Exact values

inline Json exact_json(const QuadExt& x) {
  return {{"kind", "quad"}, {"a", to_string(x.rational_part())}, {"b", to_string(x.root5_part())}};
}

inline Json exact_json(const BigRational& x) { return exact_json(QuadExt(x)); }

/// Rational cyclotomic elements collapse to the quad form.
inline Json exact_json(const CycloElement& x) {
  if (x.is_rational()) return exact_json(x.coeffs()[0]);
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return {{"kind", "cyclo"}, {"E", x.order()}, {"coeffs", coeffs}};
}

inline std::string exact_text(const QuadExt& x) { return to_string(x); }
inline std::string exact_text(const CycloElement& x) {
  return x.is_rational() ? to_string(x.coeffs()[0]) : to_string(x);
}

// ---------------------------------------------------------------------------
// Spectra and aggregates

template <class Value>
Json spectrum_json(const BasicChordSpectrum<Value>& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries)
    entries.push_back({{"d_squared", exact_json(e.d_squared)},
                       {"d_squared_text", exact_text(e.d_squared)},
                       {"total", e.total.get_str()},
                       {"per_vertex", e.per_vertex},
                       {"cos_theta", exact_json(e.cos_theta)}});
  return entries;
}

template <class Value>
Json aggregates_json(const BasicChordSpectrum<Value>& s) {
  Json factors = Json::array();
  for (const auto& f : product_squared(s).factors)
    factors.push_back({{"base", exact_json(f.base)}, {"exponent", f.exponent.get_str()}});
  return {{"k", s.distinct()},
          {"sum_squared", exact_json(sum_squared(s))},
          {"sum_squared_distinct", exact_json(sum_squared_distinct(s))},
          {"product_squared", factors},
          {"product_squared_distinct", exact_json(product_squared_distinct(s))}};
}

inline Json face_counts_json(const PolytopeSpec& spec) {
  const FaceVector fv = face_counts(spec);
  Json counts = Json::array();
  for (const auto& c : fv.counts) counts.push_back(c.get_str());
  return {{"counts", counts},
          {"V", fv.vertices().get_str()},
          {"E", fv.edges().get_str()},
          {"R", fv.ridges().get_str()},
          {"F", fv.facets().get_str()}};
}

inline Json spectrum_document(const PolytopeSpec& spec, const AnySpectrum& s) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["tool_version"] = kToolVersion;
  doc["polytope"] = spec.name();
  doc["dimension"] = spec.dimension();
  doc["face_counts"] = face_counts_json(spec);
  std::visit(
      [&](const auto& x) {
        doc["vertex_count"] = x.vertex_count.get_str();
        doc["spectrum"] = spectrum_json(x);
        doc["aggregates"] = aggregates_json(x);
      },
      s);
  return doc;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string spectrum_csv(const AnySpectrum& s) {
  std::ostringstream out;
  out << "index,d_squared,total,per_vertex,cos_theta\n";
  std::visit(
      [&](const auto& x) {
        for (std::size_t i = 0; i < x.entries.size(); ++i) {
          const auto& e = x.entries[i];
          out << i + 1 << ',' << csv_field(exact_text(e.d_squared)) << ',' << e.total.get_str() << ','
              << e.per_vertex << ',' << csv_field(exact_text(e.cos_theta)) << '\n';
        }
      },
      s);
  return out.str();
}

inline std::string spectrum_markdown(const PolytopeSpec& spec, const AnySpectrum& s) {
  std::ostringstream out;
  const FaceVector fv = face_counts(spec);
  out << "## " << spec.name() << "\n\n";
  out << "V = " << fv.vertices() << ", E = " << fv.edges() << ", R = " << fv.ridges() << ", F = " << fv.facets()
      << "\n\n";
  out << "| i | d^2 | N | m | cos theta |\n|---|---|---|---|---|\n";
  std::visit(
      [&](const auto& x) {
        for (std::size_t i = 0; i < x.entries.size(); ++i) {
          const auto& e = x.entries[i];
          out << "| " << i + 1 << " | " << exact_text(e.d_squared) << " | " << e.total << " | " << e.per_vertex
              << " | " << exact_text(e.cos_theta) << " |\n";
        }
        out << "\nsum of squares: " << to_string(sum_squared(x)) << "  \n";
        out << "distinct sum: " << exact_text(sum_squared_distinct(x)) << "  \n";
        out << "product: ";
        bool first = true;
        for (const auto& f : product_squared(x).factors) {
          out << (first ? "" : " * ") << "(" << exact_text(f.base) << ")^" << f.exponent;
          first = false;
        }
        out << "  \ndistinct product: " << exact_text(product_squared_distinct(x)) << "\n";
      },
      s);
  return out.str();
}

// ---------------------------------------------------------------------------
// Verdicts

inline Json verdict_json(const Verdict& v) {
  Json clauses = Json::array();
  for (const auto& c : v.clauses)
    clauses.push_back({{"name", c.name}, {"claimed", c.claimed}, {"computed", c.computed}, {"pass", c.pass}});
  return {{"check", v.check}, {"polytope", v.polytope}, {"pass", v.pass()}, {"clauses", clauses}, {"detail", v.detail}};
}

inline Json verify_document(const std::string& suite, const std::vector<Verdict>& verdicts) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& v : verdicts) {
    list.push_back(verdict_json(v));
    if (v.pass()) ++passed;
  }
  return {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"suite", suite},
          {"verdicts", list},
          {"summary", {{"total", verdicts.size()}, {"passed", passed}, {"failed", verdicts.size() - passed}}}};
}

inline std::string verdicts_csv(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  out << "check,polytope,pass,clause,claimed,computed,clause_pass\n";
  for (const auto& v : verdicts)
    for (const auto& c : v.clauses)
      out << v.check << ',' << csv_field(v.polytope) << ',' << (v.pass() ? "true" : "false") << ','
          << csv_field(c.name) << ',' << csv_field(c.claimed) << ',' << csv_field(c.computed) << ','
          << (c.pass ? "true" : "false") << '\n';
  return out.str();
}

inline std::string verdicts_markdown(const std::vector<Verdict>& verdicts) {
  std::ostringstream out;
  std::size_t passed = 0;
  out << "| check | polytope | result | failing clauses |\n|---|---|---|---|\n";
  for (const auto& v : verdicts) {
    std::string failing;
    for (const auto& c : v.clauses)
      if (!c.pass) failing += (failing.empty() ? "" : "; ") + c.name + " (claimed " + c.claimed + ", got " +
                              c.computed + ")";
    out << "| " << v.check << " | " << v.polytope << " | " << (v.pass() ? "pass" : "FAIL") << " | " << failing
        << " |\n";
    if (v.pass()) ++passed;
  }
  out << "\n" << passed << " of " << verdicts.size() << " checks passed\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Exploration

inline Json explore_json(const ExploreReport& r) {
  Json factors = Json::array();
  for (const auto& f : r.product.factors)
    factors.push_back({{"base", exact_json(f.base)}, {"exponent", f.exponent.get_str()}});
  Json shapes = Json::array();
  for (const auto& s : r.shapes)
    shapes.push_back({{"shape", s.shape},
                      {"holds", s.holds ? Json(*s.holds) : Json(nullptr)},
                      {"detail", s.detail}});
  return {{"schema_version", kSchemaVersion},
          {"tool_version", kToolVersion},
          {"polytope", r.polytope},
          {"product_squared", factors},
          {"product_squared_evaluated", r.evaluated ? exact_json(*r.evaluated) : Json(nullptr)},
          {"product_squared_distinct", exact_json(r.distinct_product)},
          {"shapes", shapes}};
}

inline std::string explore_markdown(const ExploreReport& r) {
  std::ostringstream out;
  out << "## " << r.polytope << " (open case)\n\nproduct: ";
  bool first = true;
  for (const auto& f : r.product.factors) {
    out << (first ? "" : " * ") << "(" << to_string(f.base) << ")^" << f.exponent;
    first = false;
  }
  out << "\n\n";
  if (r.evaluated) out << "evaluated: " << to_string(*r.evaluated) << "\n\n";
  out << "distinct product: " << to_string(r.distinct_product) << "\n\n| shape | holds | detail |\n|---|---|---|\n";
  for (const auto& s : r.shapes)
    out << "| " << s.shape << " | " << (s.holds ? (*s.holds ? "yes" : "no") : "undecided") << " | " << s.detail
        << " |\n";
  return out.str();
}

inline std::string explore_csv(const ExploreReport& r) {
  std::ostringstream out;
  out << "polytope,shape,holds,detail\n";
  for (const auto& s : r.shapes)
    out << csv_field(r.polytope) << ',' << csv_field(s.shape) << ','
        << (s.holds ? (*s.holds ? "true" : "false") : "undecided") << ',' << csv_field(s.detail) << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Catalog listing

inline Json list_json(const std::vector<PolytopeSpec>& specs) {
  Json rows = Json::array();
  for (const auto& s : specs) {
    Json row = face_counts_json(s);
    row["polytope"] = s.name();
    row["dimension"] = s.dimension();
    row["dual"] = dual(s).name();
    rows.push_back(row);
  }
  return {{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"catalog", rows}};
}

inline std::string list_text(const std::vector<PolytopeSpec>& specs, Format fmt) {
  std::ostringstream out;
  if (fmt == Format::csv) {
    out << "polytope,dimension,V,E,R,F,dual\n";
  } else {
    out << "| polytope | n | V | E | R | F | dual |\n|---|---|---|---|---|---|---|\n";
  }
  for (const auto& s : specs) {
    const FaceVector fv = face_counts(s);
    if (fmt == Format::csv) {
      out << s.name() << ',' << s.dimension() << ',' << fv.vertices() << ',' << fv.edges() << ',' << fv.ridges()
          << ',' << fv.facets() << ',' << dual(s).name() << '\n';
    } else {
      out << "| " << s.name() << " | " << s.dimension() << " | " << fv.vertices() << " | " << fv.edges() << " | "
          << fv.ridges() << " | " << fv.facets() << " | " << dual(s).name() << " |\n";
    }
  }
  return out.str();
}

/// Spectrum, aggregates and verdicts for one polytope.
inline Json polytope_report(const PolytopeSpec& spec, SpectrumCache& cache) {
  Json doc = spectrum_document(spec, cache.get(spec));
  doc.erase("schema_version");
  doc.erase("tool_version");
  Json verdicts = Json::array();
  for (const auto& c : default_checks(spec)) verdicts.push_back(verdict_json(run_check(c, spec, cache)));
  doc["verdicts"] = verdicts;
  return doc;
}

}  // namespace polychord

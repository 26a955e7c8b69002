#ifndef OHNO_REPORT_HPP
#define OHNO_REPORT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ohno/check_report.hpp"
#include "ohno/relations.hpp"

namespace ohno {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const CheckReport& r, bool with_duration = true) {
  ordered_json j;
  j["check"] = r.check;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["tolerance"] = r.tolerance;
  j["max_residual"] = r.max_residual;
  j["pass"] = r.pass;
  if (with_duration) j["duration_ms"] = r.duration_ms;
  ordered_json res = ordered_json::array();
  for (const auto& x : r.residuals) res.push_back({{"coefficient_key", x.coefficient_key}, {"value", x.value}});
  j["residuals"] = res;
  return j;
}

/// One object for a single report, an array otherwise.
inline std::string reports_json(const std::vector<CheckReport>& rs, bool with_duration = true) {
  if (rs.size() == 1) return to_json(rs.front(), with_duration).dump(2) + "\n";
  ordered_json a = ordered_json::array();
  for (const auto& r : rs) a.push_back(to_json(r, with_duration));
  return a.dump(2) + "\n";
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// check,coefficient_key,value,tolerance,pass
inline std::string reports_csv(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  os << "check,coefficient_key,value,tolerance,pass\n";
  for (const auto& r : rs)
    for (const auto& x : r.residuals)
      os << detail::csv_field(r.check) << ',' << detail::csv_field(x.coefficient_key) << ',' << x.value << ','
         << r.tolerance << ',' << (r.pass ? "true" : "false") << '\n';
  return os.str();
}

inline std::string reports_text(const std::vector<CheckReport>& rs) {
  std::ostringstream os;
  bool all = true;
  for (const auto& r : rs) {
    all = all && r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << r.check << "  max_residual=" << r.max_residual
       << "  tolerance=" << r.tolerance << "  coefficients=" << r.residuals.size() << '\n';
  }
  os << (all ? "all suites passed" : "some suites failed") << '\n';
  return os.str();
}

inline ordered_json to_json(const RelationMatrix& m, const std::string& max_contraction) {
  ordered_json j;
  j["weight"] = m.weight;
  ordered_json basis = ordered_json::array();
  for (const auto& b : m.basis) basis.push_back(b.to_string());
  j["basis"] = basis;
  j["rank"] = m.rank;
  j["max_contraction"] = max_contraction;
  ordered_json rows = ordered_json::array();
  for (const auto& r : m.rows) {
    ordered_json c = ordered_json::array();
    for (const auto& v : r.coeffs) c.push_back(v.get_str());
    rows.push_back({{"source", r.source.to_string()}, {"m", r.m}, {"coefficients", c}});
  }
  j["rows"] = rows;
  return j;
}

/// Header: source, m, then one column per basis index.
inline std::string matrix_csv(const RelationMatrix& m) {
  std::ostringstream os;
  os << "source,m";
  for (const auto& b : m.basis) os << ',' << detail::csv_field("z(" + b.to_string() + ")");
  os << '\n';
  for (const auto& r : m.rows) {
    os << detail::csv_field(r.source.to_string()) << ',' << r.m;
    for (const auto& v : r.coeffs) os << ',' << v.get_str();
    os << '\n';
  }
  return os.str();
}

inline std::string matrix_text(const RelationMatrix& m, const std::string& max_contraction) {
  std::ostringstream os;
  os << "weight " << m.weight << ": " << m.rows.size() << " relations over " << m.basis.size()
     << " admissible indices, rank " << m.rank << ", max contraction " << max_contraction << '\n';
  return os.str();
}

}  // namespace ohno

#endif

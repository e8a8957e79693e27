#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehrhart/hstar.hpp"

namespace ehrhart::io {

using nlohmann::json;

// Polytope document: {"vertices": [["1/3"], ["2/3"]], "name": "..."}
// with every rational serialized as "p/q" (reduced, q > 0) or "p".
inline Polytope polytope_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc["vertices"].is_array())
    throw ParseError("polytope document must contain a \"vertices\" array");
  std::vector<RatVec> verts;
  for (const auto& row : doc["vertices"]) {
    if (!row.is_array()) throw ParseError("each vertex must be an array of rationals");
    RatVec v;
    for (const auto& c : row) {
      if (!c.is_string()) throw ParseError("vertex coordinates must be rational strings");
      v.push_back(parse_rational(c.get<std::string>()));
    }
    verts.push_back(std::move(v));
  }
  std::string name = doc.value("name", std::string{});
  return Polytope::from_vertices(verts, name);
}

inline json polytope_to_json(const Polytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(to_string(c));
    verts.push_back(std::move(row));
  }
  json doc{{"vertices", std::move(verts)}};
  if (!p.name().empty()) doc["name"] = p.name();
  return doc;
}

// Generator document for boxpoly: {"generators": [["1","3"], ["2","3"]]}
inline GeneratorSet generators_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("generators") || !doc["generators"].is_array())
    throw ParseError("generator document must contain a \"generators\" array");
  GeneratorSet w;
  for (const auto& row : doc["generators"]) {
    if (!row.is_array()) throw ParseError("each generator must be an array of integers");
    IntVec g;
    for (const auto& c : row) {
      if (!c.is_string()) throw ParseError("generator entries must be integer strings");
      g.push_back(parse_integer(c.get<std::string>()));
    }
    if (w.ambient_dim == 0) w.ambient_dim = g.size();
    if (g.size() != w.ambient_dim || g.empty())
      throw ParseError("generators must share a positive common dimension");
    w.generators.push_back(std::move(g));
  }
  if (w.generators.empty()) throw ParseError("generator list is empty");
  return w;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

inline json coeffs_to_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(c.get_str());
  return arr;
}

inline json report_to_json(const InequalityReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"family", v.family},
                          {"index", v.index},
                          {"lhs", v.lhs.get_str()},
                          {"rhs", v.rhs.get_str()}});
  return json{{"passed", r.passed}, {"violations", std::move(violations)}};
}

// The repo-wide result document. Field names fixed, coefficients in
// ascending degree order.
inline json result_document(const HStarResult& h, const AbDecomposition& dec,
                            const InequalityReport& report) {
  return json{{"q", h.q.get_si()},
              {"d", h.d},
              {"method", to_string(h.method)},
              {"hstar", coeffs_to_json(h.hstar)},
              {"s", h.s},
              {"a", coeffs_to_json(dec.a)},
              {"b", coeffs_to_json(dec.b)},
              {"ell", dec.ell.get_si()},
              {"inequalities", report_to_json(report)}};
}

}  // namespace ehrhart::io

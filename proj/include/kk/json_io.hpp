#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kk/beck.hpp"
#include "kk/error.hpp"
#include "kk/extension.hpp"
#include "kk/group.hpp"
#include "kk/lie.hpp"
#include "kk/rational.hpp"
#include "kk/wreath.hpp"

namespace kk {

using nlohmann::json;

namespace detail {

inline const json& require(const json& j, const char* key,
                           const std::string& where) {
  auto it = j.find(key);
  if (it == j.end())
    throw schema_error("missing field '" + std::string(key) + "' in " + where);
  return *it;
}

template <typename T>
T as(const json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw schema_error("wrong type at " + where);
  }
}

}  // namespace detail

// --------------------------------------------------------------------------
// Groups: {"name": str, "table": [[int]]} or {"name": str,
// "permutations": [[int]]}.  The table form round-trips bit-exactly.

inline json group_to_json(const FiniteGroup& g) {
  return json{{"name", g.name()}, {"table", g.table_rows()}};
}

inline group_ptr group_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("group document must be an object");
  std::string name =
      j.contains("name") ? detail::as<std::string>(j["name"], "name") : "";
  if (j.contains("table"))
    return FiniteGroup::from_table(
        name, detail::as<std::vector<std::vector<int>>>(j["table"], "table"));
  if (j.contains("permutations"))
    return FiniteGroup::from_permutations(
        name, detail::as<std::vector<std::vector<int>>>(j["permutations"],
                                                        "permutations"));
  throw schema_error("group needs either 'table' or 'permutations'");
}

// --------------------------------------------------------------------------
// Extensions: {"A": group, "G": group, "B": group, "k": [int], "f": [int],
// "s": [int] (optional)}.

struct ExtensionDoc {
  Extension ext;
  std::optional<GroupHom> s;  // homomorphic splitting, when present
};

inline ExtensionDoc extension_from_json(const json& j) {
  group_ptr a = group_from_json(detail::require(j, "A", "extension"));
  group_ptr g = group_from_json(detail::require(j, "G", "extension"));
  group_ptr b = group_from_json(detail::require(j, "B", "extension"));
  GroupHom k = hom_check(
      a, g, detail::as<std::vector<int>>(detail::require(j, "k", "extension"),
                                         "k"));
  GroupHom f = hom_check(
      g, b, detail::as<std::vector<int>>(detail::require(j, "f", "extension"),
                                         "f"));
  ExtensionDoc doc{make_extension(a, g, b, std::move(k), std::move(f)),
                   std::nullopt};
  if (j.contains("s")) {
    GroupHom s = hom_check(b, g, detail::as<std::vector<int>>(j["s"], "s"));
    for (int x = 0; x < b->order(); ++x)
      if (doc.ext.f(s(x)) != x) throw schema_error("'s' is not a section of f");
    doc.s = std::move(s);
  }
  return doc;
}

inline json extension_to_json(const Extension& e,
                              const std::optional<GroupHom>& s = std::nullopt) {
  json j{{"A", group_to_json(*e.A)},
         {"G", group_to_json(*e.G)},
         {"B", group_to_json(*e.B)},
         {"k", e.k.map},
         {"f", e.f.map}};
  if (s) j["s"] = s->map;
  return j;
}

// --------------------------------------------------------------------------
// Wreath elements: {"h": [int], "b": int}.

inline json wreath_element_to_json(const WreathElement& w) {
  return json{{"h", w.h}, {"b", w.b}};
}

inline WreathElement wreath_element_from_json(const json& j) {
  return WreathElement{
      detail::as<std::vector<int>>(detail::require(j, "h", "wreath element"),
                                   "h"),
      detail::as<int>(detail::require(j, "b", "wreath element"), "b")};
}

// --------------------------------------------------------------------------
// Beck modules: {"B": group, "M": group, "rho": [[int]]}.

inline BeckModule beck_module_from_json(const json& j) {
  group_ptr b = group_from_json(detail::require(j, "B", "module"));
  group_ptr m = group_from_json(detail::require(j, "M", "module"));
  auto rho = detail::as<std::vector<std::vector<int>>>(
      detail::require(j, "rho", "module"), "rho");
  return make_beck_module(std::move(b), std::move(m), std::move(rho));
}

inline json beck_module_to_json(const BeckModule& mod) {
  return json{{"B", group_to_json(*mod.B())},
              {"M", group_to_json(*mod.M())},
              {"rho", mod.action.rho}};
}

// --------------------------------------------------------------------------
// Lie algebras: {"dim": int, "brackets": [[i, j, ["p/q", ...]], ...]},
// matrices as arrays of arrays of rational strings.

inline Vec vec_from_json(const json& j, const std::string& where) {
  Vec out;
  for (const auto& x : detail::as<std::vector<json>>(j, where))
    out.push_back(parse_rational(detail::as<std::string>(x, where)));
  return out;
}

inline json vec_to_json(const Vec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(format_rational(x));
  return out;
}

inline Mat mat_from_json(const json& j, const std::string& where) {
  Mat out;
  for (const auto& row : detail::as<std::vector<json>>(j, where))
    out.push_back(vec_from_json(row, where));
  return out;
}

inline json mat_to_json(const Mat& m) {
  json out = json::array();
  for (const Vec& row : m) out.push_back(vec_to_json(row));
  return out;
}

inline lie_ptr lie_from_json(const json& j) {
  int dim = detail::as<int>(detail::require(j, "dim", "lie algebra"), "dim");
  std::string name =
      j.contains("name") ? detail::as<std::string>(j["name"], "name") : "L";
  std::vector<std::tuple<int, int, Vec>> brackets;
  for (const auto& entry :
       detail::as<std::vector<json>>(detail::require(j, "brackets", "lie"),
                                     "brackets")) {
    if (!entry.is_array() || entry.size() != 3)
      throw schema_error("bracket entries are [i, j, coefficients]");
    brackets.emplace_back(detail::as<int>(entry[0], "bracket index"),
                          detail::as<int>(entry[1], "bracket index"),
                          vec_from_json(entry[2], "bracket coefficients"));
  }
  return make_lie(std::move(name), dim, brackets);
}

inline json lie_to_json(const LieAlgebra& l) {
  json brackets = json::array();
  for (int i = 0; i < l.dim(); ++i)
    for (int j = i + 1; j < l.dim(); ++j)
      if (!is_zero(l.basis_bracket(i, j)))
        brackets.push_back(
            json::array({i, j, vec_to_json(l.basis_bracket(i, j))}));
  return json{{"name", l.name()}, {"dim", l.dim()}, {"brackets", brackets}};
}

inline LieExtension lie_extension_from_json(const json& j) {
  lie_ptr a = lie_from_json(detail::require(j, "A", "lie extension"));
  lie_ptr g = lie_from_json(detail::require(j, "G", "lie extension"));
  lie_ptr b = lie_from_json(detail::require(j, "B", "lie extension"));
  LieHom k = lie_hom_check(
      a, g, mat_from_json(detail::require(j, "k", "lie extension"), "k"));
  LieHom f = lie_hom_check(
      g, b, mat_from_json(detail::require(j, "f", "lie extension"), "f"));
  return make_lie_extension(a, g, b, std::move(k), std::move(f));
}

inline json lie_extension_to_json(const LieExtension& e) {
  return json{{"A", lie_to_json(*e.A)},
              {"G", lie_to_json(*e.G)},
              {"B", lie_to_json(*e.B)},
              {"k", mat_to_json(e.k.matrix)},
              {"f", mat_to_json(e.f.matrix)}};
}

inline LinearSection lie_section_from_json(const LieExtension& e,
                                           const json& j) {
  return make_section(
      e, mat_from_json(detail::require(j, "matrix", "section"), "matrix"));
}

// --------------------------------------------------------------------------

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw schema_error("not valid JSON: " + std::string(e.what()));
  }
}

}  // namespace kk

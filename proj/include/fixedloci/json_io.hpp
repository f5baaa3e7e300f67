// JSON encodings for every report and case type. Keys serialize in
// sorted order (nlohmann object semantics), so equal values dump to
// identical bytes. Unbounded integers (matrix entries, invariant
// factors, group orders that may exceed 2^63) travel as decimal
// strings; structurally bounded fields (vertex labels, permutation
// images, chain entries of small finite models) travel as JSON numbers.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fixedloci/abelian.hpp"
#include "fixedloci/errors.hpp"
#include "fixedloci/extension.hpp"
#include "fixedloci/finite_group.hpp"
#include "fixedloci/gerbe.hpp"
#include "fixedloci/graphs.hpp"
#include "fixedloci/int_matrix.hpp"
#include "fixedloci/smith.hpp"
#include "fixedloci/theorem.hpp"

namespace fixedloci {

using json = nlohmann::json;

// ---- integers and matrices -------------------------------------------------

inline json int_to_json(const Int& v) { return v.str(); }

inline Int int_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer())
    return Int(j.get<long long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::exception&) {
      fail_input(field + ": not an integer: '" + j.get<std::string>() + "'");
    }
  }
  fail_input(field + ": expected an integer or decimal string");
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j)
      row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json chain_to_json(const DivisorChain& c) {
  json out = json::array();
  for (const Int& m : c.moduli)
    out.push_back(int_to_json(m));
  return out;
}

inline json snf_report_to_json(const IntMatrix& a, const SmithDecomposition& s) {
  json out;
  out["rows"] = a.rows;
  out["cols"] = a.cols;
  out["input"] = matrix_to_json(a);
  out["factors"] = chain_to_json(s.factors);
  out["U"] = matrix_to_json(s.U);
  out["D"] = matrix_to_json(s.D);
  out["V"] = matrix_to_json(s.V);
  return out;
}

inline json torus_kernel_report_to_json(const IntMatrix& a, const FinAbGroup& k) {
  json out;
  out["matrix"] = matrix_to_json(a);
  out["kernel"] = format_mu(k);
  out["factors"] = chain_to_json(k.torsion);
  return out;
}

// ---- finite groups ---------------------------------------------------------

// Named constructor string when the name round-trips, explicit
// {order, table} otherwise.
inline json group_to_json(const FiniteGroup& g) {
  if (!g.name.empty()) {
    try {
      FiniteGroup named = group_from_name(g.name);
      if (named.n == g.n && named.table == g.table)
        return g.name;
    } catch (const input_error&) {
    }
  }
  json out;
  out["order"] = g.n;
  json table = json::array();
  for (std::uint16_t v : g.table)
    table.push_back(static_cast<int>(v));
  out["table"] = std::move(table);
  return out;
}

inline FiniteGroup group_from_json(const json& j, const std::string& field) {
  if (j.is_string())
    return group_from_name(j.get<std::string>());
  require_input(j.is_object() && j.contains("order") && j.contains("table"),
                field + ": expected a group name or {order, table}");
  FiniteGroup g;
  require_input(j["order"].is_number_integer(), field + ".order: expected an integer");
  g.n = j["order"].get<int>();
  require_input(g.n >= 1 && g.n <= kMaxGroupOrder, field + ".order: out of range");
  require_input(j["table"].is_array() &&
                    j["table"].size() == static_cast<std::size_t>(g.n) * g.n,
                field + ".table: expected order*order entries");
  g.table.clear();  // the default-constructed table holds the trivial group
  for (const json& v : j["table"]) {
    require_input(v.is_number_integer(), field + ".table: entries must be integers");
    int x = v.get<int>();
    require_input(x >= 0 && x < g.n, field + ".table: entry out of range");
    g.table.push_back(static_cast<std::uint16_t>(x));
  }
  // locate the identity, then check the table is a group table
  g.e = -1;
  for (int cand = 0; cand < g.n; ++cand) {
    bool ok = true;
    for (int x = 0; x < g.n && ok; ++x)
      ok = g.table[static_cast<std::size_t>(cand) * g.n + x] == x &&
           g.table[static_cast<std::size_t>(x) * g.n + cand] == x;
    if (ok) {
      g.e = cand;
      break;
    }
  }
  require_input(g.e >= 0, field + ".table: no identity element");
  try {
    g.validate();
  } catch (const std::exception& ex) {
    fail_input(field + ".table: " + ex.what());
  }
  return g;
}

// ---- extension and theorem cases -------------------------------------------

inline json extension_spec_to_json(const ExtensionSpec& spec) {
  json out;
  out["group"] = group_to_json(spec.G);
  json r = json::array();
  for (const Int& m : spec.r.moduli)
    r.push_back(static_cast<long long>(m));
  out["r"] = std::move(r);
  out["iota"] = spec.iota.images;
  out["M"] = spec.M;
  return out;
}

inline ExtensionSpec extension_spec_from_json(const json& j) {
  require_input(j.is_object(), "extension spec: expected an object");
  for (const char* key : {"group", "r", "iota", "M"})
    require_input(j.contains(key), std::string("extension spec: missing field '") + key + "'");
  ExtensionSpec spec;
  spec.G = group_from_json(j["group"], "group");
  require_input(j["r"].is_array(), "r: expected an array of integers");
  for (const json& v : j["r"])
    spec.r.moduli.push_back(int_from_json(v, "r"));
  require_input(j["iota"].is_array(), "iota: expected an array of image indices");
  for (const json& v : j["iota"]) {
    require_input(v.is_number_integer(), "iota: image indices must be integers");
    spec.iota.images.push_back(v.get<int>());
  }
  require_input(j["M"].is_number_integer(), "M: expected an integer");
  spec.M = j["M"].get<int>();
  return spec;
}

inline json extension_report_to_json(const ExtensionReport& r) {
  json out;
  out["r"] = chain_to_json(r.r);
  out["Gbar"] = group_to_json(r.Gbar);
  out["split_ok"] = r.split_ok;
  out["central_ok"] = r.central_ok;
  out["pushout_ok"] = r.pushout_ok;
  out["details"] = r.details;
  return out;
}

inline json theorem_case_to_json(const TheoremCase& tc) {
  json out = extension_spec_to_json(tc.spec);
  out["name"] = tc.name;
  out["U_size"] = tc.U_size;
  out["action"] = tc.action;
  out["expect"] = tc.expect;
  return out;
}

inline TheoremCase theorem_case_from_json(const json& j) {
  require_input(j.is_object(), "case: expected an object");
  TheoremCase tc;
  tc.spec = extension_spec_from_json(j);
  tc.name = j.value("name", std::string{});
  require_input(j.contains("U_size") && j["U_size"].is_number_integer(),
                "U_size: expected an integer");
  tc.U_size = j["U_size"].get<int>();
  require_input(j.contains("action") && j["action"].is_array(),
                "action: expected an array of permutation image rows");
  for (const json& row : j["action"]) {
    require_input(row.is_array(), "action: expected an array of permutation image rows");
    std::vector<int> r;
    for (const json& v : row) {
      require_input(v.is_number_integer(), "action: images must be integers");
      r.push_back(v.get<int>());
    }
    tc.action.push_back(std::move(r));
  }
  tc.expect = j.value("expect", std::string{"pass"});
  require_input(tc.expect == "pass" || tc.expect == "precondition-rejected",
                "expect: must be 'pass' or 'precondition-rejected'");
  return tc;
}

inline json corpus_to_json(const std::vector<TheoremCase>& cases) {
  json arr = json::array();
  for (const TheoremCase& tc : cases)
    arr.push_back(theorem_case_to_json(tc));
  json out;
  out["cases"] = std::move(arr);
  return out;
}

inline std::vector<TheoremCase> corpus_from_json(const json& j) {
  const json* arr = nullptr;
  if (j.is_array()) {
    arr = &j;
  } else {
    require_input(j.is_object() && j.contains("cases") && j["cases"].is_array(),
                  "corpus: expected an array or an object with a 'cases' array");
    arr = &j["cases"];
  }
  std::vector<TheoremCase> out;
  for (const json& c : *arr)
    out.push_back(theorem_case_from_json(c));
  return out;
}

inline json theorem_report_to_json(const TheoremReport& r) {
  json out;
  out["name"] = r.name;
  out["split_ok"] = r.split_ok;
  out["central_ok"] = r.central_ok;
  out["pushout_ok"] = r.pushout_ok;
  out["part1_ok"] = r.part1_ok;
  out["part2_ok"] = r.part2_ok;
  out["part3_ok"] = r.part3_ok;
  out["remark_ok"] = r.remark_ok;
  out["sweep_ok"] = r.sweep_ok;
  out["all_ok"] = r.all_ok();
  out["details"] = r.details;
  return out;
}

// ---- graphs ----------------------------------------------------------------

inline json graph_to_json(const DecoratedGraph& g) {
  json out;
  out["N"] = g.N;
  json verts = json::array();
  for (const GraphVertex& v : g.vertices)
    verts.push_back(json{{"label", v.label}, {"genus", v.genus}});
  out["vertices"] = std::move(verts);
  json edges = json::array();
  for (const GraphEdge& e : g.edges)
    edges.push_back(json{{"a", e.a}, {"b", e.b}, {"degree", e.degree}});
  out["edges"] = std::move(edges);
  out["legs"] = g.legs;
  return out;
}

inline DecoratedGraph graph_from_json(const json& j) {
  require_input(j.is_object(), "graph: expected an object");
  for (const char* key : {"N", "vertices", "edges", "legs"})
    require_input(j.contains(key), std::string("graph: missing field '") + key + "'");
  DecoratedGraph g;
  require_input(j["N"].is_number_integer(), "graph.N: expected an integer");
  g.N = j["N"].get<int>();
  require_input(j["vertices"].is_array(), "graph.vertices: expected an array");
  for (const json& v : j["vertices"]) {
    require_input(v.is_object() && v.contains("label") && v.contains("genus"),
                  "graph.vertices: expected {label, genus}");
    g.vertices.push_back({v["label"].get<int>(), v["genus"].get<int>()});
  }
  require_input(j["edges"].is_array(), "graph.edges: expected an array");
  for (const json& e : j["edges"]) {
    require_input(e.is_object() && e.contains("a") && e.contains("b") && e.contains("degree"),
                  "graph.edges: expected {a, b, degree}");
    g.edges.push_back({e["a"].get<int>(), e["b"].get<int>(), e["degree"].get<long long>()});
  }
  require_input(j["legs"].is_array(), "graph.legs: expected an array");
  for (const json& l : j["legs"])
    g.legs.push_back(l.get<int>());
  validate_graph(g);
  return g;
}

inline json fixed_locus_report_to_json(const FixedLocusReport& r) {
  json out;
  out["graph"] = graph_to_json(r.graph);
  if (r.r)
    out["r"] = *r.r;
  else
    out["r"] = nullptr;
  out["aut_order"] = r.aut_order;
  out["deck_order"] = int_to_json(r.deck_order);
  out["A_order"] = int_to_json(r.A_order);
  json factors = json::array();
  for (const auto& [gv, m] : r.moduli_factors)
    factors.push_back(json::array({gv, m}));
  out["moduli_factors"] = std::move(factors);
  out["unstable_vertices"] = r.unstable_vertices;
  return out;
}

// ---- gerbe classes ---------------------------------------------------------

inline json gerbe_class_to_json(const GerbeClass& c) {
  json out;
  json base;
  base["free_rank"] = c.base.pic.free_rank;
  json torsion = json::array();
  for (const Int& m : c.base.pic.torsion.moduli)
    torsion.push_back(static_cast<long long>(m));
  base["torsion"] = std::move(torsion);
  base["labels"] = c.base.labels;
  out["base"] = std::move(base);
  out["r"] = int_to_json(c.r);
  json value = json::array(), moduli = json::array();
  std::vector<Int> mods = class_moduli(c.base, c.r);
  for (std::size_t i = 0; i < c.value.size(); ++i) {
    value.push_back(static_cast<long long>(c.value[i]));
    moduli.push_back(static_cast<long long>(mods[i]));
  }
  out["value"] = std::move(value);
  out["moduli"] = std::move(moduli);
  out["trivial"] = is_trivial(c);
  out["display"] = format_gerbe_class(c);
  return out;
}

}  // namespace fixedloci

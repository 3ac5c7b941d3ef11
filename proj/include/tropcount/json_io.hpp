#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcount/curve_count.hpp"
#include "tropcount/identities.hpp"
#include "tropcount/metric_graph.hpp"
#include "tropcount/theta_skeleton.hpp"
#include "tropcount/tropical_tori.hpp"
#include "tropcount/verify.hpp"

namespace tropcount::io {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// scalars

/// Integers that fit in 64 bits become JSON numbers; larger ones strings.
inline json int_to_json(const Int &v) {
  if (v <= Int(INT64_MAX) && v >= Int(INT64_MIN)) return json(static_cast<std::int64_t>(v));
  return json(v.str());
}

inline Int int_from_json(const json &j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return parse_int(j.get<std::string>());
  raise(ErrorKind::Parse, "expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json &j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  raise(ErrorKind::Parse, "expected \"p/q\" or an integer, got " + j.dump());
}

/// "p/q", a bare integer, or {"rat": "p/q", "irr": "r/s"}.
inline FieldScalar scalar_from_json(const json &j, std::int64_t D) {
  if (j.is_object()) {
    Rational rat = j.contains("rat") ? rational_from_json(j.at("rat")) : Rational(0);
    Rational irr = j.contains("irr") ? rational_from_json(j.at("irr")) : Rational(0);
    if (D == 0 && irr != 0) raise(ErrorKind::Parse, "irrational part given with D = 0");
    return FieldScalar(rat, irr, D);
  }
  return FieldScalar(rational_from_json(j), D);
}

inline json scalar_to_json(const FieldScalar &x) {
  if (x.is_rational()) return json(to_string(x.rat()));
  return json{{"rat", to_string(x.rat())}, {"irr", to_string(x.irr())}};
}

// ---------------------------------------------------------------------------
// matrices

inline IntMatrix int_matrix_from_json(const json &j) {
  const json &rows = j.is_object() ? j.at("entries") : j;
  if (!rows.is_array() || rows.empty()) raise(ErrorKind::Parse, "matrix must be a nonempty array of rows");
  IntMatrix m(rows.size(), rows[0].size(), Int(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.cols()) raise(ErrorKind::Parse, "ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = int_from_json(rows[i][k]);
  }
  return m;
}

inline json int_matrix_to_json(const IntMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"D": int, "entries": [[scalar]]}; a bare array of rows uses `default_D`.
inline FieldMatrix field_matrix_from_json(const json &j, std::int64_t default_D = 0) {
  std::int64_t D = default_D;
  const json *rows = &j;
  if (j.is_object()) {
    if (j.contains("D")) D = j.at("D").get<std::int64_t>();
    rows = &j.at("entries");
  }
  if (!rows->is_array() || rows->empty()) raise(ErrorKind::Parse, "matrix must be a nonempty array of rows");
  const std::size_t r = rows->size(), c = (*rows)[0].size();
  FieldMatrix m(r, c, FieldScalar(0, D));
  for (std::size_t i = 0; i < r; ++i) {
    if (!(*rows)[i].is_array() || (*rows)[i].size() != c) raise(ErrorKind::Parse, "ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json((*rows)[i][k], D);
  }
  return m;
}

inline json field_matrix_to_json(const FieldMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return json{{"D", discriminant_of(m)}, {"entries", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// tori and polarizations

/// {"g": int, "D": int, "J": matrix}
inline TropicalTorus torus_from_json(const json &j) {
  std::int64_t D = j.value("D", std::int64_t{0});
  FieldMatrix J = field_matrix_from_json(j.at("J"), D);
  if (discriminant_of(J) != D) raise(ErrorKind::Parse, "J uses a different D than the torus");
  if (j.contains("g") && j.at("g").get<std::size_t>() != J.rows()) raise(ErrorKind::Parse, "g does not match J");
  return TropicalTorus(std::move(J));
}

inline json torus_to_json(const TropicalTorus &t) {
  return json{{"g", t.rank()}, {"D", t.disc()}, {"J", field_matrix_to_json(t.J())}};
}

/// {"C": [[int]]}
inline IntMatrix polarization_from_json(const json &j) {
  return int_matrix_from_json(j.is_object() ? j.at("C") : j);
}

// ---------------------------------------------------------------------------
// graphs

/// {"vertices": int, "D": int (optional), "edges": [{"u", "v", "len"}]}
inline MetricGraph graph_from_json(const json &j) {
  std::int64_t D = j.value("D", std::int64_t{0});
  MetricGraph g;
  g.vertices = j.at("vertices").get<std::size_t>();
  for (const auto &e : j.at("edges"))
    g.edges.push_back({e.at("u").get<std::size_t>(), e.at("v").get<std::size_t>(), scalar_from_json(e.at("len"), D)});
  return g;
}

inline json graph_to_json(const MetricGraph &g) {
  json edges = json::array();
  for (const auto &e : g.edges) edges.push_back(json{{"u", e.u}, {"v", e.v}, {"len", scalar_to_json(e.length)}});
  json out{{"vertices", g.vertices}};
  if (g.disc() != 0) out["D"] = g.disc();
  out["edges"] = std::move(edges);
  return out;
}

/// Graph JSON whose edges also carry {"w": int, "slope": [int]}.
inline BalancedMap balanced_map_from_json(const json &j) {
  BalancedMap m;
  m.graph = graph_from_json(j);
  m.target_rank = j.contains("rank") ? j.at("rank").get<std::size_t>() : 0;
  for (const auto &e : j.at("edges")) {
    EdgeMap d;
    d.weight = int_from_json(e.at("w"));
    for (const auto &x : e.at("slope")) d.slope.push_back(int_from_json(x));
    if (m.target_rank == 0) m.target_rank = d.slope.size();
    m.edge_data.push_back(std::move(d));
  }
  return m;
}

// ---------------------------------------------------------------------------
// reports

inline json type_to_json(const AbelianType &t) {
  json a = json::array();
  for (const auto &f : t.factors()) a.push_back(int_to_json(f));
  return a;
}

inline json subgroups_to_json(const std::vector<SubgroupRep> &subgroups) {
  json out = json::array();
  for (const auto &h : subgroups)
    out.push_back(json{{"basis", int_matrix_to_json(h.basis)},
                       {"invariants", type_to_json(h.invariants)},
                       {"order", int_to_json(h.order)},
                       {"hom_sym", int_to_json(hom_sym_count(h.invariants))}});
  return out;
}

inline json selling_to_json(const SellingDecomposition &s) {
  json p = json::array();
  for (const auto &x : s.params) p.push_back(scalar_to_json(x));
  return p;
}

inline json skeleton_to_json(const Skeleton &s) {
  json out = graph_to_json(s.graph);
  out["degenerate"] = s.degenerate;
  out["selling"] = selling_to_json(s.selling);
  out["basis"] = int_matrix_to_json(s.selling.U);
  return out;
}

inline json identity_report_to_json(const IdentityReport &r) {
  json cases = json::array();
  for (const auto &c : r.cases)
    cases.push_back(json{{"input", c.input}, {"lhs", int_to_json(c.lhs)}, {"rhs", int_to_json(c.rhs)}, {"pass", c.pass}});
  json out{{"identity", r.name}, {"range", r.range}, {"pass", r.pass}, {"cases", cases.size()}};
  if (auto f = r.first_failure())
    out["first_failure"] = json{{"input", f->input}, {"lhs", int_to_json(f->lhs)}, {"rhs", int_to_json(f->rhs)}};
  out["results"] = std::move(cases);
  return out;
}

inline json count_report_to_json(const CountReport &r) {
  json entries = json::array();
  for (const auto &e : r.entries) {
    json item{{"F1", int_matrix_to_json(e.triple.F1)},
              {"F2", int_matrix_to_json(e.triple.F2)},
              {"subgroup_invariants", type_to_json(e.triple.subgroup.invariants)},
              {"G", type_to_json(e.quotient)},
              {"multiplicity", int_to_json(e.multiplicity)},
              {"ppav_gram", field_matrix_to_json(e.ppav_gram)}};
    if (e.skeleton) {
      json sk = skeleton_to_json(e.skeleton->skeleton);
      sk["genus"] = e.skeleton->genus;
      sk["three_edge_connected"] = e.skeleton->three_edge_connected;
      item["skeleton"] = std::move(sk);
    }
    entries.push_back(std::move(item));
  }
  return json{{"type", type_to_json(r.type)},
              {"n", int_to_json(r.n)},
              {"dual_type", type_to_json(r.dual)},
              {"kernel_factor", int_to_json(r.kernel_factor)},
              {"factorizations", r.entries.size()},
              {"naive_count", int_to_json(r.naive_count())},
              {"entries", std::move(entries)},
              {"enumerated_total", int_to_json(r.enumerated_total)},
              {"closed_total", int_to_json(r.closed_total)},
              {"agreement", r.agreement},
              {"warnings", r.warnings}};
}

inline json suite_report_to_json(const SuiteReport &r) {
  json checks = json::array();
  for (const auto &c : r.checks) {
    json item{{"check", c.name}, {"cases", c.cases}, {"failures", c.failures}, {"pass", c.pass()}};
    if (c.failures) item["first_failure"] = c.first_failure;
    checks.push_back(std::move(item));
  }
  return json{{"suite", r.suite}, {"seed", r.seed}, {"pass", r.pass()}, {"checks", std::move(checks)}};
}

inline json verdict_to_json(const SubtorusVerdict &v) {
  json out{{"verdict", to_string(v.kind)}, {"exact", v.exact}};
  if (v.kind == SubtorusVerdictKind::SubtorusFound) {
    json w = json::array();
    for (const auto &x : v.witness) w.push_back(int_to_json(x));
    out["witness"] = std::move(w);
    out["subtorus_dim"] = v.subtorus_dim;
  }
  return out;
}

inline json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    raise(ErrorKind::Parse, path + ": " + e.what());
  }
}

} // namespace tropcount::io

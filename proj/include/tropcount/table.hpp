#pragma once

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "tropcount/finite_abelian.hpp"
#include "tropcount/json_io.hpp"

namespace tropcount {

struct TableRow {
  std::vector<Int> label; ///< the type tuple
  Int value;
};

/// The (d1, d2) column of the published value table, one per row d = 2..16.
inline const std::vector<std::array<int, 2>> &published_pairs() {
  static const std::vector<std::array<int, 2>> pairs = {
      {2, 4},  {2, 6},  {2, 8},   {2, 10}, {2, 12}, {3, 6},  {3, 9},  {3, 12},
      {4, 8},  {4, 12}, {4, 16},  {5, 10}, {5, 15}, {6, 12}, {6, 18},
  };
  return pairs;
}

inline std::vector<TableRow> diagonal_rows(std::size_t genus, int max_d, std::uint64_t budget = default_budget()) {
  std::vector<TableRow> rows;
  for (int d = 2; d <= max_d; ++d) {
    std::vector<Int> label(genus, Int(d));
    rows.push_back({label, nu(AbelianType(label), NuMethod::PrimePower, budget)});
  }
  return rows;
}

inline std::vector<TableRow> pair_rows(std::uint64_t budget = default_budget()) {
  std::vector<TableRow> rows;
  for (auto [a, b] : published_pairs()) {
    std::vector<Int> label{Int(a), Int(b)};
    rows.push_back({label, nu(AbelianType(label), NuMethod::PrimePower, budget)});
  }
  return rows;
}

inline std::string rows_csv(const std::vector<TableRow> &rows) {
  std::ostringstream os;
  const std::size_t width = rows.empty() ? 0 : rows.front().label.size();
  for (std::size_t i = 0; i < width; ++i) os << 'd' << (i + 1) << ',';
  os << "nu\n";
  for (const auto &r : rows) {
    for (const auto &x : r.label) os << x << ',';
    os << r.value << '\n';
  }
  return os.str();
}

inline std::string rows_json(const std::vector<TableRow> &rows) {
  io::json out = io::json::array();
  for (const auto &r : rows) {
    io::json label = io::json::array();
    for (const auto &x : r.label) label.push_back(io::int_to_json(x));
    out.push_back(io::json{{"type", label}, {"nu", io::int_to_json(r.value)}});
  }
  return out.dump(2) + "\n";
}

/// The published layout: d, nu(d,d), nu(d,d,d), then the (d1, d2) column.
struct FullTable {
  std::vector<TableRow> genus2, genus3, pairs;
};

inline FullTable full_table(int max_d = 16, std::uint64_t budget = default_budget()) {
  FullTable t{diagonal_rows(2, max_d, budget), diagonal_rows(3, max_d, budget), pair_rows(budget)};
  return t;
}

inline std::string full_table_csv(const FullTable &t) {
  std::ostringstream os;
  os << "d,nu(d;d),nu(d;d;d),d1,d2,nu(d1;d2)\n";
  const std::size_t n = std::max(t.genus2.size(), t.pairs.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i < t.genus2.size())
      os << t.genus2[i].label[0] << ',' << t.genus2[i].value << ',' << t.genus3[i].value << ',';
    else
      os << ",,,";
    if (i < t.pairs.size())
      os << t.pairs[i].label[0] << ',' << t.pairs[i].label[1] << ',' << t.pairs[i].value;
    else
      os << ",,";
    os << '\n';
  }
  return os.str();
}

inline std::string full_table_json(const FullTable &t) {
  auto conv = [](const std::vector<TableRow> &rows) {
    io::json a = io::json::array();
    for (const auto &r : rows) {
      io::json label = io::json::array();
      for (const auto &x : r.label) label.push_back(io::int_to_json(x));
      a.push_back(io::json{{"type", label}, {"nu", io::int_to_json(r.value)}});
    }
    return a;
  };
  io::json out{{"genus2", conv(t.genus2)}, {"genus3", conv(t.genus3)}, {"pairs", conv(t.pairs)}};
  return out.dump(2) + "\n";
}

} // namespace tropcount

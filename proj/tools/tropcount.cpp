#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tropcount.hpp"

using namespace tropcount;
using io::json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kVerifyFailed = 2, kIo = 3, kBudget = 4, kInconclusive = 5 };

struct Args {
  std::optional<std::uint64_t> budget;
  std::string type;
  bool dagger = false;
  std::string method = "prime";
  int genus = 0;
  int max_d = 16;
  std::string format;
  bool pairs = false;
  std::string suite = "all";
  std::uint64_t seed = kDefaultSeed;
  std::string polarization, lattice, gram, graph;
  bool skeletons = false;
  std::int64_t bound = 1000;
};

std::uint64_t budget_of(const Args &a) { return a.budget ? *a.budget : default_budget(); }

int cmd_nu(const Args &a) {
  AbelianType t = parse_type(a.type);
  NuMethod m = a.method == "direct" ? NuMethod::Direct : NuMethod::PrimePower;
  Int v = a.dagger ? nu_dagger(t, m, budget_of(a)) : nu(t, m, budget_of(a));
  std::cout << v << '\n';
  return kOk;
}

int cmd_subgroups(const Args &a) {
  AbelianType t = parse_type(a.type);
  auto subs = enumerate_subgroups(t.trimmed(), budget_of(a));
  if (a.format == "json") {
    std::cout << io::subgroups_to_json(subs).dump(2) << '\n';
  } else {
    std::cout << "invariants,order,hom_sym\n";
    for (const auto &h : subs) std::cout << '"' << h.invariants.str() << "\"," << h.order << ',' << hom_sym_count(h.invariants) << '\n';
  }
  return kOk;
}

int cmd_table(const Args &a) {
  const bool json_out = a.format == "json";
  if (a.genus == 0) {
    auto t = full_table(a.max_d, budget_of(a));
    std::cout << (json_out ? full_table_json(t) : full_table_csv(t));
    return kOk;
  }
  if (a.genus != 2 && a.genus != 3) raise(ErrorKind::UnsupportedRank, "--genus must be 2 or 3");
  std::vector<TableRow> rows = a.pairs ? pair_rows(budget_of(a)) : diagonal_rows(static_cast<std::size_t>(a.genus), a.max_d, budget_of(a));
  std::cout << (json_out ? rows_json(rows) : rows_csv(rows));
  return kOk;
}

int cmd_verify(const Args &a) {
  std::vector<std::string> names;
  if (a.suite == "all") names = suite_names();
  else names.push_back(a.suite);
  bool pass = true;
  json out = json::array();
  for (const auto &n : names) {
    auto r = run_suite(n, a.seed, budget_of(a));
    pass = pass && r.pass();
    out.push_back(io::suite_report_to_json(r));
  }
  std::cout << (names.size() == 1 ? out[0] : out).dump(2) << '\n';
  return pass ? kOk : kVerifyFailed;
}

int cmd_count(const Args &a) {
  if (!a.type.empty()) {
    std::cout << total_count_closed(parse_type(a.type), budget_of(a)) << '\n';
    return kOk;
  }
  if (a.polarization.empty()) raise(ErrorKind::InvalidArgument, "count needs --type or --polarization");
  IntMatrix C = io::polarization_from_json(io::read_json_file(a.polarization));
  TropicalTorus t = a.lattice.empty() ? default_torus_for(C) : io::torus_from_json(io::read_json_file(a.lattice));
  CountOptions opt;
  opt.skeletons = a.skeletons;
  opt.budget = budget_of(a);
  auto rep = total_count_enumerated(t, C, opt);
  std::cout << io::count_report_to_json(rep).dump(2) << '\n';
  return rep.agreement ? kOk : kVerifyFailed;
}

int cmd_skeleton(const Args &a) {
  FieldMatrix Q = io::field_matrix_from_json(io::read_json_file(a.gram));
  std::cout << io::skeleton_to_json(skeleton(Q)).dump(2) << '\n';
  return kOk;
}

int cmd_jacobian(const Args &a) {
  MetricGraph g = io::graph_from_json(io::read_json_file(a.graph));
  validate_graph(g, true);
  json out{{"genus", genus(g)}, {"gram", io::field_matrix_to_json(jacobian_gram(g))}};
  std::cout << out.dump(2) << '\n';
  return kOk;
}

int cmd_simple(const Args &a) {
  TropicalTorus t = io::torus_from_json(io::read_json_file(a.lattice));
  auto v = find_subtorus(t, a.bound);
  if (a.format == "json") std::cout << io::verdict_to_json(v).dump(2) << '\n';
  else {
    std::cout << to_string(v.kind);
    if (!v.witness.empty()) {
      std::cout << ' ';
      for (std::size_t i = 0; i < v.witness.size(); ++i) std::cout << (i ? "," : "") << v.witness[i];
    }
    std::cout << '\n';
  }
  return v.kind == SubtorusVerdictKind::Inconclusive ? kInconclusive : kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"tropical curve counts on polarized tropical abelian varieties"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--budget", a.budget, "HNF candidate budget (default 10^7, or TROPCOUNT_BUDGET)");

  auto *nu_cmd = app.add_subcommand("nu", "nu or nu-dagger of a type");
  nu_cmd->add_option("--type", a.type, "d1,d2,...")->required();
  nu_cmd->add_flag("--dagger", a.dagger, "use the dual type");
  nu_cmd->add_option("--method", a.method, "prime | direct")->check(CLI::IsMember({"prime", "direct"}));

  auto *sub_cmd = app.add_subcommand("subgroups", "list subgroups of a type");
  sub_cmd->add_option("--type", a.type, "d1,d2,...")->required();
  sub_cmd->add_option("--format", a.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto *table_cmd = app.add_subcommand("table", "value table of nu");
  table_cmd->add_option("--genus", a.genus, "2 or 3; omit for the combined layout");
  table_cmd->add_option("--max", a.max_d, "largest d")->check(CLI::Range(2, 1000));
  table_cmd->add_option("--format", a.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  table_cmd->add_flag("--pairs", a.pairs, "the (d1,d2) rows instead of (d,d)");

  auto *verify_cmd = app.add_subcommand("verify", "run self-check suites");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify_cmd->add_option("--suite", a.suite, "suite name or all")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", a.seed, "random seed");

  auto *count_cmd = app.add_subcommand("count", "curve count for a polarization");
  count_cmd->add_option("--type", a.type, "closed form from a type only");
  count_cmd->add_option("--polarization", a.polarization, "JSON file {\"C\": [[..]]}");
  count_cmd->add_option("--lattice", a.lattice, "JSON torus file; default J = C^-T");
  count_cmd->add_flag("--skeletons", a.skeletons, "compute theta skeletons");

  auto *skel_cmd = app.add_subcommand("skeleton", "Voronoi skeleton of a Gram matrix");
  skel_cmd->add_option("--gram", a.gram, "JSON matrix file")->required();

  auto *jac_cmd = app.add_subcommand("jacobian", "Jacobian Gram matrix of a metric graph");
  jac_cmd->add_option("--graph", a.graph, "JSON graph file")->required();

  auto *simple_cmd = app.add_subcommand("simple", "decide whether a torus is simple");
  simple_cmd->add_option("--lattice", a.lattice, "JSON torus file")->required();
  simple_cmd->add_option("--bound", a.bound, "search height for g = 3")->check(CLI::Range(1, 100000));
  simple_cmd->add_option("--format", a.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*nu_cmd) return cmd_nu(a);
    if (*sub_cmd) return cmd_subgroups(a);
    if (*table_cmd) return cmd_table(a);
    if (*verify_cmd) return cmd_verify(a);
    if (*count_cmd) return cmd_count(a);
    if (*skel_cmd) return cmd_skeleton(a);
    if (*jac_cmd) return cmd_jacobian(a);
    if (*simple_cmd) return cmd_simple(a);
  } catch (const BudgetExceeded &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::ios_base::failure &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const json::exception &e) {
    std::cerr << "error: malformed input: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string &args, const std::string &env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + TROPCOUNT_CLI + "' " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string &f) { return std::string(TROPCOUNT_DATA) + "/" + f; }

std::string golden(const std::string &f) {
  std::ifstream in(std::string(TROPCOUNT_GOLDEN) + "/" + f);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

} // namespace

TEST(Cli, Nu) {
  EXPECT_EQ(run("nu --type 2,4").out, "39\n");
  EXPECT_EQ(run("nu --type 1").out, "1\n");
  EXPECT_EQ(run("nu --dagger --type 1,3").out, "4\n");
  EXPECT_EQ(run("nu --type 6,6 --method direct").out, run("nu --type 6,6").out);
}

TEST(Cli, TablesMatchGolden) {
  EXPECT_EQ(run("table").out, golden("table.csv"));
  EXPECT_EQ(run("table --genus 2").out, golden("table_g2.csv"));
  EXPECT_EQ(run("table --genus 3").out, golden("table_g3.csv"));
  EXPECT_EQ(run("table --genus 2 --pairs").out, golden("pairs.csv"));
  auto j = nlohmann::json::parse(run("table --format json").out);
  EXPECT_FALSE(j.empty());
}

TEST(Cli, Count) {
  EXPECT_EQ(run("count --type 1,2").out, "12\n");
  auto r = run("count --polarization " + data("polarization_2_2.json"));
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["enumerated_total"], j["closed_total"]);
  auto s = run("count --skeletons --polarization " + data("polarization_1_2.json") + " --lattice " + data("torus_1_2.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NO_THROW(nlohmann::json::parse(s.out));
  EXPECT_EQ(run("count --polarization " + data("polarization_1_1_4.json")).code, 0);
}

TEST(Cli, SkeletonAndJacobian) {
  auto r = run("skeleton --gram " + data("gram_a2.json"));
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j.dump().empty());
  auto g = run("jacobian --graph " + data("theta_graph.json"));
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(nlohmann::json::parse(g.out)["genus"], 2);
  EXPECT_EQ(nlohmann::json::parse(run("jacobian --graph " + data("k4_graph.json")).out)["genus"], 3);
}

TEST(Cli, Simple) {
  EXPECT_EQ(run("simple --lattice " + data("sqrt2_torus.json")).out, "simple\n");
  auto split = run("simple --lattice " + data("sqrt2_split_torus.json"));
  EXPECT_EQ(split.code, 0);
  EXPECT_EQ(split.out.rfind("subtorus", 0), 0u);
  auto j = nlohmann::json::parse(run("simple --format json --lattice " + data("sqrt2_torus.json")).out);
  EXPECT_EQ(j["verdict"], "simple");
}

TEST(Cli, Verify) { EXPECT_EQ(run("verify --suite identities").code, 0); }

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("nu --type 0,2").code, 1);
  EXPECT_EQ(run("nu --type x").code, 1);
  EXPECT_EQ(run("nu").code, 1);
  EXPECT_EQ(run("bogus").code, 1);
  EXPECT_EQ(run("skeleton --gram /nonexistent/file.json").code, 3);
  EXPECT_EQ(run("--budget 2 subgroups --type 4,4").code, 4);
  EXPECT_EQ(run("subgroups --type 4,4", "TROPCOUNT_BUDGET=2").code, 4);
  EXPECT_EQ(run("subgroups --type 4,4", "TROPCOUNT_BUDGET=100000").code, 0);
  std::string g3 = temp_file("tropcount_g3_torus.json", R"({"g": 3, "D": 2, "J": [
    [3, {"rat": "0", "irr": "1"}, 1],
    [{"rat": "0", "irr": "1"}, 5, {"rat": "1", "irr": "1"}],
    [1, {"rat": "1", "irr": "1"}, {"rat": "7", "irr": "1"}]]})");
  EXPECT_EQ(run("simple --bound 3 --lattice " + g3).code, 5);
  std::string bad = temp_file("tropcount_bad.json", "{not json");
  EXPECT_EQ(run("skeleton --gram " + bad).code, 1);
}

TEST(Cli, OutputIsStable) {
  const std::vector<std::string> cases{"table --format json", "count --polarization " + data("polarization_2_2.json"),
                                       "verify --suite identities"};
  for (const auto &args : cases)
    EXPECT_EQ(run(args).out, run(args).out);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "divclust_cli_test";

struct Result {
  int status;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Result run(const std::string& args) {
  const auto out = kDir / "stdout.txt";
  const auto err = kDir / "stderr.txt";
  const std::string cmd = std::string(DIVCLUST_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
  fs::create_directories(kDir);
  const auto p = kDir / name;
  std::ofstream(p) << text;
  return p;
}

const std::string kLine4 = "0,1,10,11\n1,0,9,10\n10,9,0,1\n11,10,1,0\n";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("cluster") {
  const auto input = write("line4.csv", kLine4);
  const auto tree = kDir / "tree.json";
  const auto newick = kDir / "tree.nwk";
  auto r = run("cluster " + input.string() + " --algo two-seeds:average --out " + tree.string() +
               " --newick " + newick.string());
  CHECK(r.status == 0);
  const auto doc = nlohmann::json::parse(slurp(tree));
  CHECK(doc["nodes"][0]["level"] == 11.0);
  CHECK(slurp(newick) == "((o1:1,o2:1):10,(o3:1,o4:1):10);\n");

  const auto data = write("line4_data.csv", "pos\n0\n1\n10\n11\n");
  r = run("cluster " + data.string() + " --format data --header --algo pddp --out " + tree.string());
  CHECK(r.status == 0);

  r = run("cluster " + write("bad.csv", "0,1\n1,x\n").string() + " --algo pddp --out " + tree.string());
  CHECK(r.status == 2);
  CHECK_FALSE(r.err.empty());

  r = run("cluster " + input.string() + " --algo nonsense --out " + tree.string());
  CHECK(r.status == 2);
  CHECK(r.err.find("unknown algorithm") != std::string::npos);

  r = run("cluster " + input.string() + " --algo pddp --out " + tree.string() + " --bogus 1");
  CHECK(r.status == 2);
}

TEST_CASE("eval") {
  const auto input = write("line4.csv", kLine4);
  const auto tree = kDir / "agg.json";
  REQUIRE(run("cluster " + input.string() + " --algo average-agglomerative --out " + tree.string()).status == 0);

  auto r = run("eval --tree " + tree.string() + " --input " + input.string() + " --metrics gk");
  CHECK(r.status == 0);
  CHECK(r.out == "gk,1.000000\n");

  r = run("eval --tree " + tree.string() + " --input " + input.string() + " --metrics tau,gk,cpcc");
  CHECK(r.out == "tau,0.533333\ngk,1.000000\ncpcc,0.990867\n");

  const auto three = write("three.csv", "0,1,2\n1,0,2\n2,2,0\n");
  r = run("eval --tree " + tree.string() + " --input " + three.string());
  CHECK(r.status == 2);
  CHECK(r.err.find("SizeMismatch") != std::string::npos);

  const auto flat = write("flat.csv", "0,1,1\n1,0,1\n1,1,0\n");
  const auto flat_tree = kDir / "flat.json";
  REQUIRE(run("cluster " + flat.string() + " --algo two-seeds:single --out " + flat_tree.string()).status == 0);
  r = run("eval --tree " + flat_tree.string() + " --input " + flat.string());
  CHECK(r.status == 2);
  CHECK(r.err.find("Degenerate") != std::string::npos);
}

TEST_CASE("bench") {
  const auto a = kDir / "a.csv";
  const auto b = kDir / "b.csv";
  const auto cells = kDir / "cells.csv";
  const std::string flags = "bench --datasets 2 --objects 10 --seed 5 --threads 1";
  auto r = run(flags + " --out " + a.string() + " --cells " + cells.string());
  CHECK(r.status == 0);
  const std::string summary = slurp(a);
  CHECK(summary.rfind("algorithm,mean_gk,std_gk,valid_count\n", 0) == 0);
  CHECK(std::count(summary.begin(), summary.end(), '\n') == 12);
  CHECK(slurp(cells).rfind("dataset,algorithm,gk\n", 0) == 0);
  CHECK(r.out.find("two-seeds:silhouette") != std::string::npos);

  r = run("bench --datasets 2 --objects 10 --seed 5 --threads 2 --out " + b.string());
  CHECK(r.status == 0);
  CHECK(slurp(b) == summary);

  CHECK(run("bench --objects 2").status == 2);
  CHECK(run("bench --threads zero").status == 2);
}

TEST_CASE("plot") {
  const auto input = write("line4.csv", kLine4);
  const auto tree = kDir / "plot_tree.json";
  const auto svg = kDir / "tree.svg";
  REQUIRE(run("cluster " + input.string() + " --algo two-seeds:silhouette --out " + tree.string()).status == 0);
  CHECK(run("plot --tree " + tree.string() + " --out " + svg.string()).status == 0);
  const std::string text = slurp(svg);
  CHECK(text.find("<svg") == 0);

  const auto broken = write("broken.json", "{\"n\": 3, \"nodes\": []}");
  CHECK(run("plot --tree " + broken.string() + " --out " + svg.string()).status == 2);
  CHECK(run("plot --tree " + write("garbage.json", "{{").string() + " --out " + svg.string()).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("--help").status == 0);
}

TEST_SUITE_END();

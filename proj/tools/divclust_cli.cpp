// divclust-cli: cluster, evaluate, benchmark and plot through the C interface.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divclust/divclust.h"

namespace {

// Exit codes: 0 success, 1 internal failure, 2 bad input or configuration.
int report(dc_status status) {
  std::cerr << "divclust: " << dc_last_error() << " [" << dc_status_name(status) << "]\n";
  return status == DC_ERR_INTERNAL ? 1 : 2;
}

struct MatrixHandle {
  dc_matrix* ptr = nullptr;
  ~MatrixHandle() { dc_matrix_free(ptr); }
};

struct TreeHandle {
  dc_tree* ptr = nullptr;
  ~TreeHandle() { dc_tree_free(ptr); }
};

struct BenchHandle {
  dc_bench_result* ptr = nullptr;
  ~BenchHandle() { dc_bench_free(ptr); }
};

dc_input_format to_format(const std::string& name) {
  return name == "data" ? DC_FORMAT_DATA : DC_FORMAT_DIST;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct ClusterArgs {
  std::string input;
  std::string format = "dist";
  bool header = false;
  std::string algo;
  std::string out;
  std::string newick;
};

int cmd_cluster(const ClusterArgs& args) {
  MatrixHandle m;
  if (auto s = dc_matrix_load_csv(args.input.c_str(), to_format(args.format), args.header, &m.ptr))
    return report(s);
  TreeHandle t;
  if (auto s = dc_cluster(m.ptr, args.algo.c_str(), &t.ptr)) return report(s);
  if (auto s = dc_tree_save_json(t.ptr, args.out.c_str())) return report(s);
  if (!args.newick.empty()) {
    if (auto s = dc_tree_save_newick(t.ptr, args.newick.c_str())) return report(s);
  }
  return 0;
}

struct EvalArgs {
  std::string tree;
  std::string input;
  std::string format = "dist";
  bool header = false;
  std::string metrics = "gk";
};

int cmd_eval(const EvalArgs& args) {
  TreeHandle t;
  if (auto s = dc_tree_load_json(args.tree.c_str(), &t.ptr)) return report(s);
  MatrixHandle m;
  if (auto s = dc_matrix_load_csv(args.input.c_str(), to_format(args.format), args.header, &m.ptr))
    return report(s);

  std::string output;
  for (const auto& metric : split_list(args.metrics)) {
    double value = 0.0;
    if (auto s = dc_evaluate(m.ptr, t.ptr, metric.c_str(), &value)) return report(s);
    char line[96];
    std::snprintf(line, sizeof line, "%s,%.6f\n", metric.c_str(), value);
    output += line;
  }
  std::cout << output;
  return 0;
}

struct BenchArgs {
  std::size_t datasets = 0;
  std::size_t objects = 0;
  std::size_t vars = 0;
  std::uint64_t seed = 0;
  std::string threads = "auto";
  std::string out;
  std::string cells;
};

int cmd_bench(BenchArgs args) {
  dc_bench_config cfg;
  dc_bench_config_init(&cfg);
  if (args.datasets) cfg.datasets = args.datasets;
  if (args.objects) cfg.objects = args.objects;
  if (args.vars) cfg.variables = args.vars;
  cfg.seed = args.seed;
  if (args.threads != "auto") {
    try {
      std::size_t used = 0;
      const unsigned long t = std::stoul(args.threads, &used);
      if (used != args.threads.size() || t == 0) throw std::invalid_argument(args.threads);
      cfg.threads = static_cast<unsigned>(t);
    } catch (const std::exception&) {
      std::cerr << "divclust: --threads must be a positive integer or 'auto'\n";
      return 2;
    }
  }

  BenchHandle r;
  if (auto s = dc_bench_run(&cfg, &r.ptr)) return report(s);
  if (!args.out.empty()) {
    if (auto s = dc_bench_save_summary(r.ptr, args.out.c_str())) return report(s);
  }
  if (!args.cells.empty()) {
    if (auto s = dc_bench_save_cells(r.ptr, args.cells.c_str())) return report(s);
  }

  std::printf("%-26s %8s %8s %6s\n", "algorithm", "mean_gk", "std_gk", "valid");
  for (std::size_t k = 0; k < dc_bench_row_count(r.ptr); ++k) {
    const char* name = nullptr;
    double mean = 0.0;
    double sd = 0.0;
    std::size_t valid = 0;
    dc_bench_row(r.ptr, k, &name, &mean, &sd, &valid);
    std::printf("%-26s %8.4f %8.4f %6zu\n", name, mean, sd, valid);
  }
  return 0;
}

int cmd_plot(const std::string& tree, const std::string& out) {
  TreeHandle t;
  if (auto s = dc_tree_load_json(tree.c_str(), &t.ptr)) return report(s);
  if (auto s = dc_tree_save_svg(t.ptr, out.c_str())) return report(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisive and agglomerative hierarchical clustering toolkit", "divclust-cli"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"dist", "data"};

  ClusterArgs cluster_args;
  auto* cluster = app.add_subcommand("cluster", "Build a dendrogram from a matrix or data table");
  cluster->add_option("input", cluster_args.input, "Input CSV")->required();
  cluster->add_option("--format", cluster_args.format, "dist or data")
      ->check(CLI::IsMember(formats));
  cluster->add_flag("--header", cluster_args.header, "Data table starts with a header row");
  cluster->add_option("--algo", cluster_args.algo,
                      "two-seeds:<criterion>, macnaughton-smith, pddp or average-agglomerative")
      ->required();
  cluster->add_option("--out", cluster_args.out, "Tree JSON output")->required();
  cluster->add_option("--newick", cluster_args.newick, "Optional Newick output");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Compare a dendrogram with the input dissimilarities");
  eval->add_option("--tree", eval_args.tree, "Tree JSON")->required();
  eval->add_option("--input", eval_args.input, "Input CSV")->required();
  eval->add_option("--format", eval_args.format, "dist or data")->check(CLI::IsMember(formats));
  eval->add_flag("--header", eval_args.header, "Data table starts with a header row");
  eval->add_option("--metrics", eval_args.metrics, "Comma-separated subset of gk,tau,cpcc");

  BenchArgs bench_args;
  dc_bench_config defaults;
  dc_bench_config_init(&defaults);
  bench_args.datasets = defaults.datasets;
  bench_args.objects = defaults.objects;
  bench_args.vars = defaults.variables;
  bench_args.seed = defaults.seed;
  auto* bench = app.add_subcommand("bench", "Run the random-data comparison of all algorithms");
  bench->add_option("--datasets", bench_args.datasets, "Number of random datasets")->capture_default_str();
  bench->add_option("--objects", bench_args.objects, "Objects per dataset")->capture_default_str();
  bench->add_option("--vars", bench_args.vars, "Variables per dataset")->capture_default_str();
  bench->add_option("--seed", bench_args.seed, "Master seed")->capture_default_str();
  bench->add_option("--threads", bench_args.threads, "Worker threads or 'auto'")->capture_default_str();
  bench->add_option("--out", bench_args.out, "Summary CSV output");
  bench->add_option("--cells", bench_args.cells, "Per-cell CSV output");

  std::string plot_tree;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Render a dendrogram as SVG");
  plot->add_option("--tree", plot_tree, "Tree JSON")->required();
  plot->add_option("--out", plot_out, "SVG output")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "divclust: " << e.what() << "\n";
    return 2;
  }

  if (*cluster) return cmd_cluster(cluster_args);
  if (*eval) return cmd_eval(eval_args);
  if (*bench) return cmd_bench(bench_args);
  if (*plot) return cmd_plot(plot_tree, plot_out);
  return 2;
}

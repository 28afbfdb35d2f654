#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>

#include "divclust/benchmark.hpp"

using namespace divclust;

TEST_SUITE_BEGIN("benchmark");

TEST_CASE("generate_dataset") {
  const auto a = generate_dataset(9, 0, 40, 10);
  const auto b = generate_dataset(9, 0, 40, 10);
  const auto c = generate_dataset(9, 1, 40, 10);
  CHECK(a.rows == 40);
  CHECK(a.cols == 10);
  CHECK(a.values == b.values);
  CHECK(a.values != c.values);
  for (double v : a.values) {
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
  }
  CHECK(mix_seed(1, 0) != mix_seed(1, 1));
  CHECK(mix_seed(1, 0) != mix_seed(2, 0));
}

TEST_CASE("small experiment") {
  ExperimentConfig cfg;
  cfg.dataset_count = 2;
  cfg.objects = 12;
  cfg.variables = 4;
  cfg.algorithms = {parse_algorithm("two-seeds:silhouette"), parse_algorithm("pddp"),
                    parse_algorithm("average-agglomerative")};
  const auto r = run_experiment(cfg);
  CHECK(r.cells.size() == 6);
  for (const auto& cell : r.cells) {
    REQUIRE(cell.has_value());
    CHECK(*cell >= -1.0);
    CHECK(*cell <= 1.0);
  }
  const auto again = run_experiment(cfg);
  CHECK(again.cells == r.cells);
  CHECK(summary_csv(summarize(again)) == summary_csv(summarize(r)));

  cfg.thread_count = 3;
  CHECK(summary_csv(summarize(run_experiment(cfg))) == summary_csv(summarize(r)));
}

TEST_CASE("summarize") {
  ResultTable r;
  r.algorithms = {"b", "a", "c"};
  r.dataset_count = 2;
  r.cells = {0.4, 0.5, 0.1, 0.6, 0.5, 0.2};
  r.cell_errors.resize(6);
  const auto rows = summarize(r);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].algorithm == "a");  // equal means: name order
  CHECK(rows[1].algorithm == "b");
  CHECK(rows[1].mean == doctest::Approx(0.5));
  CHECK(rows[1].std_dev == doctest::Approx(0.1));
  CHECK(rows[2].algorithm == "c");
  CHECK(summary_csv(rows) ==
        "algorithm,mean_gk,std_gk,valid_count\n"
        "a,0.5000,0.0000,2\n"
        "b,0.5000,0.1000,2\n"
        "c,0.1500,0.0500,2\n");

  r.cells[2] = std::nullopt;
  r.cells[5] = std::nullopt;
  CHECK(summary_from_cells(r)[2].valid_count == 0);
  try {
    summarize(r);
    FAIL("expected AllCellsMissing");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AllCellsMissing);
  }
  CHECK(cells_csv(r).find("1,c,\n") != std::string::npos);
}

TEST_CASE("config validation") {
  ExperimentConfig cfg;
  cfg.objects = 2;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.algorithms.push_back(cfg.algorithms.front());
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.algorithms.clear();
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = {};
  cfg.dataset_count = 0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}

TEST_CASE("one n = 40 divisive hierarchy is fast") {
  const auto m = euclidean_from_data(generate_dataset(kDefaultSeed, 0, 40, 10));
  const auto start = std::chrono::steady_clock::now();
  divisive_hierarchy(m, SplitterId::two_seeds(CriterionId::Silhouette));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 1.0);
}

TEST_SUITE_END();

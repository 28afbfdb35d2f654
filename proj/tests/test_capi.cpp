#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "divclust/divclust.h"

namespace {

const double kLine4[16] = {0, 1, 10, 11, 1, 0, 9, 10, 10, 9, 0, 1, 11, 10, 1, 0};

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("divclust_capi_") + name)).string();
}

}  // namespace

TEST_SUITE_BEGIN("c api");

TEST_CASE("matrix handles") {
  dc_matrix* m = nullptr;
  REQUIRE(dc_matrix_from_square(kLine4, 4, &m) == DC_OK);
  CHECK(dc_matrix_size(m) == 4);
  double v = 0;
  CHECK(dc_matrix_get(m, 3, 0, &v) == DC_OK);
  CHECK(v == 11.0);
  CHECK(dc_matrix_get(m, 4, 0, &v) == DC_ERR_INDEX_OUT_OF_RANGE);
  dc_matrix_free(m);

  const double bad[4] = {0, 1, 2, 0};
  dc_matrix* other = nullptr;
  CHECK(dc_matrix_from_square(bad, 2, &other) == DC_ERR_ASYMMETRIC);
  CHECK(other == nullptr);
  CHECK(std::string(dc_last_error()).find("asymmetric") != std::string::npos);
  CHECK(std::string(dc_status_name(DC_ERR_ASYMMETRIC)) == "AsymmetricBeyondTolerance");
  CHECK(dc_matrix_from_square(nullptr, 2, &other) == DC_ERR_INVALID_ARGUMENT);

  const double data[4] = {0, 0, 3, 4};
  REQUIRE(dc_matrix_from_data(data, 2, 2, &other) == DC_OK);
  CHECK(dc_matrix_get(other, 0, 1, &v) == DC_OK);
  CHECK(v == 5.0);
  dc_matrix_free(other);
  dc_matrix_free(nullptr);
}

TEST_CASE("scores, trees and metrics") {
  dc_matrix* m = nullptr;
  REQUIRE(dc_matrix_from_square(kLine4, 4, &m) == DC_OK);

  const size_t left[2] = {0, 1};
  const size_t right[2] = {2, 3};
  double score = 0;
  CHECK(dc_score_bipartition(m, "ward1", left, 2, right, 2, &score) == DC_OK);
  CHECK(score == 200.0);
  CHECK(dc_score_bipartition(m, "ward", left, 2, right, 2, &score) == DC_ERR_UNKNOWN_NAME);
  CHECK(dc_score_bipartition(m, "average", left, 2, right, 0, &score) == DC_ERR_EMPTY_SIDE);

  dc_tree* t = nullptr;
  REQUIRE(dc_cluster(m, "average-agglomerative", &t) == DC_OK);
  CHECK(dc_tree_object_count(t) == 4);
  double level = 0;
  int leaf = 1;
  size_t children[2] = {0, 0};
  CHECK(dc_tree_node(t, dc_tree_root(t), &level, &leaf, children) == DC_OK);
  CHECK(level == 10.0);
  CHECK(leaf == 0);

  double value = 0;
  CHECK(dc_evaluate(m, t, "gk", &value) == DC_OK);
  CHECK(value == 1.0);
  CHECK(dc_evaluate(m, t, "tau", &value) == DC_OK);
  CHECK(std::abs(value - 8.0 / 15.0) < 1e-12);
  CHECK(dc_evaluate(m, t, "cpcc", &value) == DC_OK);
  CHECK(std::abs(value - 108.0 / std::sqrt(110.0 * 108.0)) < 1e-6);
  CHECK(dc_evaluate(m, t, "spearman", &value) == DC_ERR_UNKNOWN_NAME);

  dc_matrix* u = nullptr;
  REQUIRE(dc_tree_cophenetic(t, &u) == DC_OK);
  uint64_t sp = 0, sm = 0, np = 0;
  CHECK(dc_concordance(m, u, &sp, &sm, &np) == DC_OK);
  CHECK(sp == 8);
  CHECK(sm == 0);
  CHECK(np == 6);
  dc_matrix_free(u);

  // JSON round trip through a file.
  const std::string path = temp_path("tree.json");
  CHECK(dc_tree_save_json(t, path.c_str()) == DC_OK);
  dc_tree* loaded = nullptr;
  CHECK(dc_tree_load_json(path.c_str(), &loaded) == DC_OK);
  CHECK(dc_evaluate(m, loaded, "gk", &value) == DC_OK);
  CHECK(value == 1.0);
  dc_tree_free(loaded);
  std::remove(path.c_str());

  CHECK(dc_cluster(m, "nonsense", &loaded) == DC_ERR_UNKNOWN_NAME);
  CHECK(std::string(dc_last_error()).find("unknown algorithm") != std::string::npos);

  dc_matrix* small = nullptr;
  const double two[4] = {0, 1, 1, 0};
  REQUIRE(dc_matrix_from_square(two, 2, &small) == DC_OK);
  CHECK(dc_evaluate(small, t, "gk", &value) == DC_ERR_SIZE_MISMATCH);
  dc_matrix_free(small);

  dc_tree_free(t);
  dc_matrix_free(m);
}

TEST_CASE("degenerate gk is reported") {
  // Equal dissimilarities: every quadruple is tied.
  const double flat[9] = {0, 1, 1, 1, 0, 1, 1, 1, 0};
  dc_matrix* m = nullptr;
  REQUIRE(dc_matrix_from_square(flat, 3, &m) == DC_OK);
  dc_tree* t = nullptr;
  REQUIRE(dc_cluster(m, "two-seeds:average", &t) == DC_OK);
  double value = 0;
  CHECK(dc_evaluate(m, t, "gk", &value) == DC_ERR_DEGENERATE);
  dc_tree_free(t);
  dc_matrix_free(m);
}

TEST_CASE("benchmark") {
  dc_bench_config cfg;
  dc_bench_config_init(&cfg);
  CHECK(cfg.datasets == 100);
  CHECK(cfg.objects == 40);
  CHECK(cfg.variables == 10);
  cfg.datasets = 2;
  cfg.objects = 8;
  const char* algos[] = {"two-seeds:dunn-variant", "macnaughton-smith"};
  cfg.algorithms = algos;
  cfg.algorithm_count = 2;

  dc_bench_result* r = nullptr;
  REQUIRE(dc_bench_run(&cfg, &r) == DC_OK);
  CHECK(dc_bench_row_count(r) == 2);
  const char* name = nullptr;
  double mean = 0, sd = 0;
  size_t valid = 0;
  CHECK(dc_bench_row(r, 0, &name, &mean, &sd, &valid) == DC_OK);
  CHECK(valid == 2);
  CHECK(mean <= 1.0);
  CHECK(dc_bench_row(r, 2, &name, &mean, &sd, &valid) == DC_ERR_INDEX_OUT_OF_RANGE);
  dc_bench_free(r);

  cfg.objects = 2;
  CHECK(dc_bench_run(&cfg, &r) == DC_ERR_CONFIG_INVALID);
}

TEST_SUITE_END();

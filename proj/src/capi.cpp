#include "divclust/divclust.h"

#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "divclust/benchmark.hpp"
#include "divclust/criteria.hpp"
#include "divclust/evaluation.hpp"
#include "divclust/hierarchy.hpp"
#include "divclust/io.hpp"

struct dc_matrix {
  divclust::DissimilarityMatrix value;
};

struct dc_tree {
  divclust::Dendrogram value;
};

struct dc_bench_result {
  divclust::ResultTable table;
  std::vector<divclust::SummaryRow> sorted;
};

namespace {

using divclust::Error;
using divclust::ErrorCode;

thread_local std::string last_error;

dc_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return DC_ERR_NOT_SQUARE;
    case ErrorCode::AsymmetricBeyondTolerance: return DC_ERR_ASYMMETRIC;
    case ErrorCode::NegativeEntry: return DC_ERR_NEGATIVE_ENTRY;
    case ErrorCode::NonFiniteEntry: return DC_ERR_NON_FINITE_ENTRY;
    case ErrorCode::NonZeroDiagonal: return DC_ERR_NON_ZERO_DIAGONAL;
    case ErrorCode::TooSmall: return DC_ERR_TOO_SMALL;
    case ErrorCode::InvalidObjectSet: return DC_ERR_INVALID_OBJECT_SET;
    case ErrorCode::OverlappingSets: return DC_ERR_OVERLAPPING_SETS;
    case ErrorCode::IndexOutOfRange: return DC_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::EmptySide: return DC_ERR_EMPTY_SIDE;
    case ErrorCode::OverlappingSides: return DC_ERR_OVERLAPPING_SIDES;
    case ErrorCode::ObjectNotInBipartition: return DC_ERR_OBJECT_NOT_IN_BIPARTITION;
    case ErrorCode::ClusterTooSmall: return DC_ERR_CLUSTER_TOO_SMALL;
    case ErrorCode::NoPositiveEigenvalue: return DC_ERR_NO_POSITIVE_EIGENVALUE;
    case ErrorCode::SizeMismatch: return DC_ERR_SIZE_MISMATCH;
    case ErrorCode::Degenerate: return DC_ERR_DEGENERATE;
    case ErrorCode::ZeroVariance: return DC_ERR_ZERO_VARIANCE;
    case ErrorCode::ConfigInvalid: return DC_ERR_CONFIG_INVALID;
    case ErrorCode::AllCellsMissing: return DC_ERR_ALL_CELLS_MISSING;
    case ErrorCode::UnknownName: return DC_ERR_UNKNOWN_NAME;
    case ErrorCode::ParseError: return DC_ERR_PARSE;
    case ErrorCode::IoError: return DC_ERR_IO;
    case ErrorCode::MalformedTree: return DC_ERR_MALFORMED_TREE;
  }
  return DC_ERR_INTERNAL;
}

dc_status fail(dc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
dc_status guarded(F&& body) noexcept {
  try {
    last_error.clear();
    body();
    return DC_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DC_ERR_INTERNAL, "unknown failure");
  }
}

}  // namespace

// Null-pointer checks surface as DC_ERR_INVALID_ARGUMENT.
#define DC_REQUIRE(cond)                                                        \
  do {                                                                          \
    if (!(cond)) return fail(DC_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

extern "C" {

const char* dc_last_error(void) { return last_error.c_str(); }

const char* dc_status_name(dc_status status) {
  switch (status) {
    case DC_OK: return "ok";
    case DC_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case DC_ERR_INTERNAL: return "Internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(ErrorCode::MalformedTree); ++c) {
    const auto code = static_cast<ErrorCode>(c);
    if (to_status(code) == status) return divclust::error_code_name(code).data();
  }
  return "Unknown";
}

dc_status dc_matrix_from_square(const double* values, size_t n, dc_matrix** out) {
  DC_REQUIRE(values != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] {
    divclust::Table raw{n, n, std::vector<double>(values, values + n * n)};
    *out = new dc_matrix{divclust::validate_matrix(raw)};
  });
}

dc_status dc_matrix_from_data(const double* values, size_t rows, size_t cols, dc_matrix** out) {
  DC_REQUIRE(values != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] {
    divclust::Table data{rows, cols, std::vector<double>(values, values + rows * cols)};
    *out = new dc_matrix{divclust::euclidean_from_data(data)};
  });
}

dc_status dc_matrix_load_csv(const char* path, dc_input_format format, int has_header,
                             dc_matrix** out) {
  DC_REQUIRE(path != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] {
    const std::string text = divclust::read_file(path);
    if (format == DC_FORMAT_DIST) {
      if (has_header) throw Error(ErrorCode::ConfigInvalid, "distance matrices carry no header");
      *out = new dc_matrix{divclust::parse_distance_csv(text)};
    } else if (format == DC_FORMAT_DATA) {
      *out = new dc_matrix{divclust::parse_data_csv(text, has_header != 0)};
    } else {
      throw Error(ErrorCode::UnknownName, "unknown input format");
    }
  });
}

size_t dc_matrix_size(const dc_matrix* m) { return m == nullptr ? 0 : m->value.size(); }

dc_status dc_matrix_get(const dc_matrix* m, size_t i, size_t j, double* value) {
  DC_REQUIRE(m != nullptr);
  DC_REQUIRE(value != nullptr);
  if (i >= m->value.size() || j >= m->value.size())
    return fail(DC_ERR_INDEX_OUT_OF_RANGE, "matrix index out of range");
  *value = m->value(i, j);
  return DC_OK;
}

void dc_matrix_free(dc_matrix* m) { delete m; }

dc_status dc_score_bipartition(const dc_matrix* m, const char* criterion, const size_t* left,
                               size_t left_count, const size_t* right, size_t right_count,
                               double* score) {
  DC_REQUIRE(m != nullptr);
  DC_REQUIRE(criterion != nullptr);
  DC_REQUIRE(left != nullptr || left_count == 0);
  DC_REQUIRE(right != nullptr || right_count == 0);
  DC_REQUIRE(score != nullptr);
  return guarded([&] {
    const auto c = divclust::parse_criterion(criterion);
    const auto b = divclust::Bipartition::from_indices(
        std::vector<std::size_t>(left, left + left_count),
        std::vector<std::size_t>(right, right + right_count));
    *score = divclust::score_bipartition(c, m->value, b);
  });
}

dc_status dc_cluster(const dc_matrix* m, const char* algorithm, dc_tree** out) {
  DC_REQUIRE(m != nullptr);
  DC_REQUIRE(algorithm != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] {
    const auto a = divclust::parse_algorithm(algorithm);
    *out = new dc_tree{divclust::build_dendrogram(m->value, a)};
  });
}

dc_status dc_tree_load_json(const char* path, dc_tree** out) {
  DC_REQUIRE(path != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] { *out = new dc_tree{divclust::tree_from_json(divclust::read_file(path))}; });
}

dc_status dc_tree_save_json(const dc_tree* t, const char* path) {
  DC_REQUIRE(t != nullptr);
  DC_REQUIRE(path != nullptr);
  return guarded([&] { divclust::write_file(path, divclust::tree_to_json(t->value)); });
}

dc_status dc_tree_save_newick(const dc_tree* t, const char* path) {
  DC_REQUIRE(t != nullptr);
  DC_REQUIRE(path != nullptr);
  return guarded([&] { divclust::write_file(path, divclust::tree_to_newick(t->value)); });
}

dc_status dc_tree_save_svg(const dc_tree* t, const char* path) {
  DC_REQUIRE(t != nullptr);
  DC_REQUIRE(path != nullptr);
  return guarded([&] { divclust::write_file(path, divclust::tree_to_svg(t->value)); });
}

size_t dc_tree_object_count(const dc_tree* t) { return t == nullptr ? 0 : t->value.size(); }

size_t dc_tree_root(const dc_tree* t) { return t == nullptr ? 0 : t->value.root().id; }

dc_status dc_tree_node(const dc_tree* t, size_t id, double* level, int* is_leaf, size_t children[2]) {
  DC_REQUIRE(t != nullptr);
  if (id >= t->value.nodes().size()) return fail(DC_ERR_INDEX_OUT_OF_RANGE, "node id out of range");
  const auto& node = t->value.node(id);
  if (level != nullptr) *level = node.level;
  if (is_leaf != nullptr) *is_leaf = node.is_leaf() ? 1 : 0;
  if (children != nullptr && node.children) {
    children[0] = (*node.children)[0];
    children[1] = (*node.children)[1];
  }
  return DC_OK;
}

dc_status dc_tree_cophenetic(const dc_tree* t, dc_matrix** out) {
  DC_REQUIRE(t != nullptr);
  DC_REQUIRE(out != nullptr);
  return guarded([&] { *out = new dc_matrix{divclust::cophenetic(t->value)}; });
}

void dc_tree_free(dc_tree* t) { delete t; }

dc_status dc_evaluate(const dc_matrix* d, const dc_tree* t, const char* metric, double* value) {
  DC_REQUIRE(d != nullptr);
  DC_REQUIRE(t != nullptr);
  DC_REQUIRE(metric != nullptr);
  DC_REQUIRE(value != nullptr);
  return guarded([&] {
    if (d->value.size() != t->value.size())
      throw Error(ErrorCode::SizeMismatch, "tree has " + std::to_string(t->value.size()) +
                                               " objects, input has " + std::to_string(d->value.size()));
    const std::string_view name = metric;
    const auto u = divclust::cophenetic(t->value);
    if (name == "gk") {
      *value = divclust::goodman_kruskal(divclust::concordance(d->value, u));
    } else if (name == "tau") {
      *value = divclust::kendall_tau(divclust::concordance(d->value, u));
    } else if (name == "cpcc") {
      *value = divclust::cpcc(d->value, u);
    } else {
      throw Error(ErrorCode::UnknownName, "unknown metric '" + std::string(name) + "'");
    }
  });
}

dc_status dc_concordance(const dc_matrix* d, const dc_matrix* u, uint64_t* s_plus,
                         uint64_t* s_minus, uint64_t* n_pairs) {
  DC_REQUIRE(d != nullptr);
  DC_REQUIRE(u != nullptr);
  return guarded([&] {
    const auto c = divclust::concordance(d->value, u->value);
    if (s_plus != nullptr) *s_plus = c.s_plus;
    if (s_minus != nullptr) *s_minus = c.s_minus;
    if (n_pairs != nullptr) *n_pairs = c.n_pairs;
  });
}

void dc_bench_config_init(dc_bench_config* cfg) {
  if (cfg == nullptr) return;
  const divclust::ExperimentConfig defaults;
  cfg->datasets = defaults.dataset_count;
  cfg->objects = defaults.objects;
  cfg->variables = defaults.variables;
  cfg->seed = defaults.master_seed;
  cfg->threads = defaults.thread_count;
  cfg->algorithms = nullptr;
  cfg->algorithm_count = 0;
}

dc_status dc_bench_run(const dc_bench_config* cfg, dc_bench_result** out) {
  DC_REQUIRE(cfg != nullptr);
  DC_REQUIRE(out != nullptr);
  DC_REQUIRE(cfg->algorithms != nullptr || cfg->algorithm_count == 0);
  return guarded([&] {
    divclust::ExperimentConfig config;
    config.dataset_count = cfg->datasets;
    config.objects = cfg->objects;
    config.variables = cfg->variables;
    config.master_seed = cfg->seed;
    config.thread_count = cfg->threads;
    if (cfg->algorithms != nullptr) {
      config.algorithms.clear();
      for (size_t k = 0; k < cfg->algorithm_count; ++k)
        config.algorithms.push_back(divclust::parse_algorithm(cfg->algorithms[k]));
    }
    auto table = divclust::run_experiment(config);
    auto sorted = divclust::summarize(table);
    *out = new dc_bench_result{std::move(table), std::move(sorted)};
  });
}

size_t dc_bench_row_count(const dc_bench_result* r) { return r == nullptr ? 0 : r->sorted.size(); }

dc_status dc_bench_row(const dc_bench_result* r, size_t rank, const char** algorithm, double* mean,
                       double* std_dev, size_t* valid_count) {
  DC_REQUIRE(r != nullptr);
  if (rank >= r->sorted.size()) return fail(DC_ERR_INDEX_OUT_OF_RANGE, "summary row out of range");
  const auto& row = r->sorted[rank];
  if (algorithm != nullptr) *algorithm = row.algorithm.c_str();
  if (mean != nullptr) *mean = row.mean;
  if (std_dev != nullptr) *std_dev = row.std_dev;
  if (valid_count != nullptr) *valid_count = row.valid_count;
  return DC_OK;
}

dc_status dc_bench_save_summary(const dc_bench_result* r, const char* path) {
  DC_REQUIRE(r != nullptr);
  DC_REQUIRE(path != nullptr);
  return guarded([&] { divclust::write_file(path, divclust::summary_csv(r->sorted)); });
}

dc_status dc_bench_save_cells(const dc_bench_result* r, const char* path) {
  DC_REQUIRE(r != nullptr);
  DC_REQUIRE(path != nullptr);
  return guarded([&] { divclust::write_file(path, divclust::cells_csv(r->table)); });
}

void dc_bench_free(dc_bench_result* r) { delete r; }

}  // extern "C"

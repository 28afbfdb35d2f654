#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divclust/core.hpp"
#include "divclust/hierarchy.hpp"

namespace divclust {

inline constexpr std::uint64_t kDefaultSeed = 42;

struct ExperimentConfig {
  std::size_t dataset_count = 100;
  std::size_t objects = 40;
  std::size_t variables = 10;
  std::uint64_t master_seed = kDefaultSeed;
  std::vector<Algorithm> algorithms = default_roster();
  unsigned thread_count = 0;  // 0 = one per hardware thread

  /// Throws ConfigInvalid.
  void validate() const;
};

struct SummaryRow {
  std::string algorithm;
  double mean = 0.0;
  double std_dev = 0.0;  // population (divisor = valid_count)
  std::size_t valid_count = 0;
};

/// Goodman-Kruskal value per (dataset, algorithm); missing where undefined.
struct ResultTable {
  std::vector<std::string> algorithms;
  std::size_t dataset_count = 0;
  std::vector<std::optional<double>> cells;  // row-major, dataset x algorithm
  std::vector<std::string> cell_errors;      // empty string for valid cells
  std::vector<SummaryRow> summary;           // roster order

  const std::optional<double>& cell(std::size_t dataset, std::size_t algorithm) const {
    return cells[dataset * algorithms.size() + algorithm];
  }
};

/// splitmix64 step applied to master ^ (index * 0x9E3779B97F4A7C15).
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index);

/// objects x variables table of independent uniforms in [0, 1), filled row
/// by row from an mt19937_64 stream seeded with mix_seed(master_seed, index).
Table generate_dataset(std::uint64_t master_seed, std::size_t index, std::size_t objects,
                       std::size_t variables);

ResultTable run_experiment(const ExperimentConfig& cfg);

/// Per-algorithm statistics in roster order, recomputed from the cells.
std::vector<SummaryRow> summary_from_cells(const ResultTable& r);

/// Rows sorted by mean descending, ties by algorithm name. Throws
/// AllCellsMissing if an algorithm has no valid cell.
std::vector<SummaryRow> summarize(const ResultTable& r);

/// "algorithm,mean_gk,std_gk,valid_count" with 4 decimals.
std::string summary_csv(const std::vector<SummaryRow>& rows);
/// "dataset,algorithm,gk"; missing cells leave gk empty.
std::string cells_csv(const ResultTable& r);

}  // namespace divclust

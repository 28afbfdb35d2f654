#include "divclust/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "divclust/evaluation.hpp"

namespace divclust {

namespace {

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (dataset_count < 1) throw Error(ErrorCode::ConfigInvalid, "dataset count must be at least 1");
  if (objects < 3) throw Error(ErrorCode::ConfigInvalid, "need at least 3 objects per dataset");
  if (variables < 1) throw Error(ErrorCode::ConfigInvalid, "need at least 1 variable");
  if (algorithms.empty()) throw Error(ErrorCode::ConfigInvalid, "algorithm list is empty");
  for (std::size_t a = 0; a < algorithms.size(); ++a) {
    for (std::size_t b = a + 1; b < algorithms.size(); ++b) {
      if (algorithms[a] == algorithms[b])
        throw Error(ErrorCode::ConfigInvalid, "duplicate algorithm " + algorithm_token(algorithms[a]));
    }
  }
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = (master ^ (index * 0x9E3779B97F4A7C15ULL)) + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Table generate_dataset(std::uint64_t master_seed, std::size_t index, std::size_t objects,
                       std::size_t variables) {
  std::mt19937_64 engine(mix_seed(master_seed, index));
  Table t{objects, variables, std::vector<double>(objects * variables)};
  // Top 53 bits scaled to [0, 1); fixed so tables match across standard libraries.
  for (double& v : t.values) v = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return t;
}

ResultTable run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t algos = cfg.algorithms.size();

  ResultTable result;
  result.dataset_count = cfg.dataset_count;
  for (const auto& a : cfg.algorithms) result.algorithms.push_back(algorithm_token(a));
  result.cells.resize(cfg.dataset_count * algos);
  result.cell_errors.resize(cfg.dataset_count * algos);

  std::vector<DissimilarityMatrix> matrices;
  matrices.reserve(cfg.dataset_count);
  for (std::size_t d = 0; d < cfg.dataset_count; ++d)
    matrices.push_back(euclidean_from_data(
        generate_dataset(cfg.master_seed, d, cfg.objects, cfg.variables)));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t cell = next++; cell < result.cells.size(); cell = next++) {
      const auto& m = matrices[cell / algos];
      try {
        const Dendrogram tree = build_dendrogram(m, cfg.algorithms[cell % algos]);
        result.cells[cell] = goodman_kruskal(concordance(m, cophenetic(tree)));
      } catch (const Error& e) {
        result.cell_errors[cell] = e.what();
      }
    }
  };

  unsigned threads = cfg.thread_count;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, result.cells.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  result.summary = summary_from_cells(result);
  return result;
}

std::vector<SummaryRow> summary_from_cells(const ResultTable& r) {
  std::vector<SummaryRow> rows;
  const std::size_t algos = r.algorithms.size();
  for (std::size_t a = 0; a < algos; ++a) {
    SummaryRow row{r.algorithms[a], 0.0, 0.0, 0};
    double sum = 0.0;
    for (std::size_t d = 0; d < r.dataset_count; ++d) {
      if (const auto& v = r.cell(d, a)) {
        sum += *v;
        ++row.valid_count;
      }
    }
    if (row.valid_count == 0) {
      row.mean = row.std_dev = std::nan("");
    } else {
      row.mean = sum / static_cast<double>(row.valid_count);
      double ss = 0.0;
      for (std::size_t d = 0; d < r.dataset_count; ++d) {
        if (const auto& v = r.cell(d, a)) ss += (*v - row.mean) * (*v - row.mean);
      }
      row.std_dev = std::sqrt(ss / static_cast<double>(row.valid_count));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SummaryRow> summarize(const ResultTable& r) {
  std::vector<SummaryRow> rows = summary_from_cells(r);
  for (const auto& row : rows) {
    if (row.valid_count == 0)
      throw Error(ErrorCode::AllCellsMissing, "no valid cell for algorithm " + row.algorithm);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    if (a.mean != b.mean) return a.mean > b.mean;
    return a.algorithm < b.algorithm;
  });
  return rows;
}

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out = "algorithm,mean_gk,std_gk,valid_count\n";
  for (const auto& row : rows) {
    out += row.algorithm + "," + fixed(row.mean, 4) + "," + fixed(row.std_dev, 4) + "," +
           std::to_string(row.valid_count) + "\n";
  }
  return out;
}

std::string cells_csv(const ResultTable& r) {
  std::string out = "dataset,algorithm,gk\n";
  for (std::size_t d = 0; d < r.dataset_count; ++d) {
    for (std::size_t a = 0; a < r.algorithms.size(); ++a) {
      const auto& v = r.cell(d, a);
      out += std::to_string(d) + "," + r.algorithms[a] + "," + (v ? fixed(*v, 6) : std::string()) + "\n";
    }
  }
  return out;
}

}  // namespace divclust

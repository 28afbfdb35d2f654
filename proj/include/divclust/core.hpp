#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "divclust/error.hpp"

namespace divclust {

/// Row-major table of reals, used for raw square matrices and n x p data.
struct Table {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Symmetric, nonnegative dissimilarities with a zero diagonal.
///
/// Only the strict upper triangle is stored, packed row by row, so
/// d(i, j) for i < j lives at i*n - i*(i+1)/2 + (j - i - 1).
class DissimilarityMatrix {
 public:
  /// Takes ownership of a packed upper triangle of length n(n-1)/2.
  /// Throws TooSmall, SizeMismatch, NegativeEntry or NonFiniteEntry.
  DissimilarityMatrix(std::size_t n, std::vector<double> packed);

  std::size_t size() const noexcept { return n_; }
  std::size_t pair_count() const noexcept { return packed_.size(); }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    if (i == j) return 0.0;
    if (i > j) std::swap(i, j);
    return packed_[i * n_ - i * (i + 1) / 2 + (j - i - 1)];
  }

  /// Pair values in (0,1), (0,2), ..., (n-2,n-1) order.
  std::span<const double> packed() const noexcept { return packed_; }

 private:
  std::size_t n_;
  std::vector<double> packed_;
};

/// Non-empty, strictly ascending set of object indices.
class ObjectSet {
 public:
  explicit ObjectSet(std::vector<std::size_t> members);

  /// {0, 1, ..., n-1}
  static ObjectSet all(std::size_t n);

  std::size_t size() const noexcept { return members_.size(); }
  std::size_t front() const noexcept { return members_.front(); }
  bool contains(std::size_t index) const noexcept;

  std::span<const std::size_t> members() const noexcept { return members_; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const ObjectSet&, const ObjectSet&) = default;

 private:
  std::vector<std::size_t> members_;
};

/// Two disjoint, non-empty object sets. The left side always holds the
/// smallest index of the union.
class Bipartition {
 public:
  Bipartition(ObjectSet a, ObjectSet b);

  /// Accepts unsorted index lists; throws EmptySide when one is empty.
  static Bipartition from_indices(std::vector<std::size_t> a, std::vector<std::size_t> b);

  const ObjectSet& left() const noexcept { return left_; }
  const ObjectSet& right() const noexcept { return right_; }
  std::size_t size() const noexcept { return left_.size() + right_.size(); }

  friend bool operator==(const Bipartition&, const Bipartition&) = default;

 private:
  ObjectSet left_;
  ObjectSet right_;
};

struct ClusterStats {
  double diameter = 0.0;
  double mean_within = 0.0;
  std::optional<double> min_between;
  std::optional<double> max_between;
  std::optional<double> mean_between;
};

/// Checks a raw square table and folds it into canonical form.
///
/// Off-diagonal pairs must agree within 1e-9 * max(1, |raw(i,j)|); the stored
/// value is their mean. Diagonal entries must be within 1e-12 of zero.
DissimilarityMatrix validate_matrix(const Table& raw);

/// Euclidean distances between the rows of an n x p data table.
DissimilarityMatrix euclidean_from_data(const Table& data);

ClusterStats cluster_stats(const DissimilarityMatrix& m, const ObjectSet& a,
                           const ObjectSet* b = nullptr);

// Unchecked building blocks shared by the criteria and splitters. Callers
// guarantee in-range, ascending, disjoint index spans. Sums run in ascending
// index order.
namespace stats {

double diameter(const DissimilarityMatrix& m, std::span<const std::size_t> a);
double sum_within(const DissimilarityMatrix& m, std::span<const std::size_t> a);
double mean_within(const DissimilarityMatrix& m, std::span<const std::size_t> a);
double sum_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b);
double mean_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                    std::span<const std::size_t> b);
double min_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b);
double max_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b);

/// Mean of d(x, y) over y in `set`, skipping y == x. Zero when nothing remains.
double mean_to_set(const DissimilarityMatrix& m, std::size_t x,
                   std::span<const std::size_t> set);

}  // namespace stats

}  // namespace divclust

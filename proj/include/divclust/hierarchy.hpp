#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divclust/core.hpp"
#include "divclust/splitters.hpp"

namespace divclust {

struct DendrogramNode {
  std::size_t id = 0;
  ObjectSet members;
  double level = 0.0;
  std::optional<std::array<std::size_t, 2>> children;

  bool is_leaf() const noexcept { return !children.has_value(); }
};

/// Complete binary tree over n objects with monotone node levels.
class Dendrogram {
 public:
  /// Nodes may come in any order; ids must be exactly 0..2n-2. Throws
  /// MalformedTree if the nodes do not form a complete binary hierarchy with
  /// child levels not exceeding parent levels.
  Dendrogram(std::size_t n, std::vector<DendrogramNode> nodes);

  std::size_t size() const noexcept { return n_; }
  /// Indexed by node id.
  const std::vector<DendrogramNode>& nodes() const noexcept { return nodes_; }
  const DendrogramNode& node(std::size_t id) const { return nodes_.at(id); }
  const DendrogramNode& root() const { return nodes_[root_]; }

  /// Objects in left-to-right drawing order (depth first, first child first).
  std::vector<std::size_t> leaf_order() const;

 private:
  std::size_t n_;
  std::size_t root_ = 0;
  std::vector<DendrogramNode> nodes_;
};

/// A full clustering procedure: a divisive splitter or the agglomerative baseline.
struct Algorithm {
  enum class Kind { Divisive, AverageAgglomerative };

  Kind kind = Kind::Divisive;
  SplitterId splitter;

  static Algorithm divisive(SplitterId s) { return {Kind::Divisive, s}; }
  static Algorithm average_agglomerative() { return {Kind::AverageAgglomerative, {}}; }

  friend bool operator==(const Algorithm& a, const Algorithm& b) {
    return a.kind == b.kind && (a.kind != Kind::Divisive || a.splitter == b.splitter);
  }
};

/// Splitter tokens plus "average-agglomerative".
std::string algorithm_token(const Algorithm& a);
Algorithm parse_algorithm(std::string_view token);

/// The eight two-seeds criteria, Macnaughton-Smith, PDDP and agglomerative
/// average link.
std::vector<Algorithm> default_roster();

/// Top-down: clusters are split in FIFO order until only singletons remain.
/// Each node's level is its diameter. PDDP falls back to two-seeds with
/// average link on clusters without a positive principal coordinate.
Dendrogram divisive_hierarchy(const DissimilarityMatrix& m, const SplitterId& s);

/// Group-average agglomeration. Ties go to the pair of clusters with the
/// lexicographically smallest (smallest member, smallest member) pair.
Dendrogram agglomerative_average_link(const DissimilarityMatrix& m);

Dendrogram build_dendrogram(const DissimilarityMatrix& m, const Algorithm& a);

/// Ultrametric u(i, j) = level of the smallest cluster holding both i and j.
DissimilarityMatrix cophenetic(const Dendrogram& t);

}  // namespace divclust

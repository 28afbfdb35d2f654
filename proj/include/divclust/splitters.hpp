#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "divclust/core.hpp"
#include "divclust/criteria.hpp"

namespace divclust {

/// How a cluster is cut in two. Only TwoSeeds uses `criterion`.
struct SplitterId {
  enum class Kind { TwoSeeds, MacnaughtonSmith, PDDP };

  Kind kind = Kind::TwoSeeds;
  CriterionId criterion = CriterionId::AverageLink;

  static SplitterId two_seeds(CriterionId c) { return {Kind::TwoSeeds, c}; }
  static SplitterId macnaughton_smith() { return {Kind::MacnaughtonSmith, CriterionId::AverageLink}; }
  static SplitterId pddp() { return {Kind::PDDP, CriterionId::AverageLink}; }

  friend bool operator==(const SplitterId& a, const SplitterId& b) {
    return a.kind == b.kind && (a.kind != Kind::TwoSeeds || a.criterion == b.criterion);
  }
};

/// "two-seeds:<criterion>", "macnaughton-smith" or "pddp".
std::string splitter_token(const SplitterId& s);
SplitterId parse_splitter(std::string_view token);

/// First principal coordinate of a cluster, one value per member in member order.
struct PcoaAxis {
  std::vector<double> coords;
  double eigenvalue = 0.0;
};

/// Tries every seed pair (i < j, lexicographic over members). Other objects
/// join the nearer seed, ties going to i. Returns the first split reaching the
/// strictly highest score.
Bipartition two_seeds_split(const DissimilarityMatrix& m, const ObjectSet& c, CriterionId crit);

/// Splinter-group splitting: the object farthest on average from the rest
/// seeds the splinter, then objects closer on average to the splinter than
/// to the remainder move over one at a time.
Bipartition macnaughton_smith_split(const DissimilarityMatrix& m, const ObjectSet& c);

/// Classical scaling of the cluster's dissimilarities; dominant eigenvector
/// of the double-centred squared table by power iteration. The coordinate of
/// the smallest member is made non-positive. Throws NoPositiveEigenvalue.
PcoaAxis pcoa_first_axis(const DissimilarityMatrix& m, const ObjectSet& c);

/// Sign split on the first principal coordinate followed by mean-distance
/// reassignment passes.
Bipartition pddp_split(const DissimilarityMatrix& m, const ObjectSet& c);

/// Dispatches on `s`. Does not apply the PDDP fallback.
Bipartition split(const DissimilarityMatrix& m, const ObjectSet& c, const SplitterId& s);

}  // namespace divclust

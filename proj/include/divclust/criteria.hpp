#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "divclust/core.hpp"

namespace divclust {

/// Bipartition criteria. Every score follows one convention: the divisive
/// driver keeps the split with the highest score.
enum class CriterionId {
  SingleLink,
  CompleteLinkDiv,
  AverageLink,
  WardW1,
  WardW2,
  DunnOriginal,
  DunnVariant,
  Silhouette,
};

inline constexpr std::array<CriterionId, 8> kAllCriteria = {
    CriterionId::SingleLink,   CriterionId::CompleteLinkDiv, CriterionId::AverageLink,
    CriterionId::WardW1,       CriterionId::WardW2,          CriterionId::DunnOriginal,
    CriterionId::DunnVariant,  CriterionId::Silhouette,
};

/// "single", "complete", "average", "ward1", "ward2", "dunn", "dunn-variant", "silhouette".
std::string_view criterion_token(CriterionId c) noexcept;
/// Throws UnknownName.
CriterionId parse_criterion(std::string_view token);

double score_bipartition(CriterionId c, const DissimilarityMatrix& m, const Bipartition& b);

/// s(x) = (b - a) / max(a, b), with a the mean distance to the rest of x's
/// side and b the mean distance to the other side. Zero when both vanish.
double silhouette_of_object(const DissimilarityMatrix& m, const Bipartition& b, std::size_t x);

/// Unchecked scoring over two disjoint, ascending, non-empty index spans.
double score_split(CriterionId c, const DissimilarityMatrix& m, std::span<const std::size_t> left,
                   std::span<const std::size_t> right);

}  // namespace divclust

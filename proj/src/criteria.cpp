#include "divclust/criteria.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace divclust {

namespace {

constexpr std::array<std::string_view, 8> kTokens = {
    "single", "complete", "average", "ward1", "ward2", "dunn", "dunn-variant", "silhouette",
};

// Sum over ordered pairs (x, y), x != y, of f(d(x, y)); each unordered pair counts twice.
template <class F>
double ordered_within(const DissimilarityMatrix& m, std::span<const std::size_t> a, F f) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) sum += f(m(a[p], a[q]));
  return 2.0 * sum;
}

template <class F>
double cross_sum(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                 std::span<const std::size_t> b, F f) {
  double sum = 0.0;
  for (std::size_t x : a)
    for (std::size_t y : b) sum += f(m(x, y));
  return sum;
}

template <class F>
double ward(const DissimilarityMatrix& m, std::span<const std::size_t> p,
            std::span<const std::size_t> q, F f) {
  const double np = static_cast<double>(p.size());
  const double nq = static_cast<double>(q.size());
  const double bracket = (2.0 / (np * nq)) * cross_sum(m, p, q, f) -
                         ordered_within(m, p, f) / (np * np) -
                         ordered_within(m, q, f) / (nq * nq);
  return (np * nq / (np + nq)) * bracket;
}

// Ratio with the zero-denominator convention shared by both Dunn forms.
double dunn_ratio(double numerator, double denominator) {
  if (denominator > 0.0) return numerator / denominator;
  return numerator > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

double silhouette_value(double a, double b) {
  const double scale = std::max(a, b);
  return scale > 0.0 ? (b - a) / scale : 0.0;
}

double silhouette_score(const DissimilarityMatrix& m, std::span<const std::size_t> left,
                        std::span<const std::size_t> right) {
  // Walk the union in ascending index order.
  double sum = 0.0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < left.size() || j < right.size()) {
    const bool take_left = j == right.size() || (i < left.size() && left[i] < right[j]);
    const std::size_t x = take_left ? left[i++] : right[j++];
    const auto own = take_left ? left : right;
    const auto other = take_left ? right : left;
    sum += silhouette_value(stats::mean_to_set(m, x, own), stats::mean_to_set(m, x, other));
  }
  return sum / static_cast<double>(left.size() + right.size());
}

}  // namespace

std::string_view criterion_token(CriterionId c) noexcept {
  return kTokens[static_cast<std::size_t>(c)];
}

CriterionId parse_criterion(std::string_view token) {
  for (CriterionId c : kAllCriteria) {
    if (criterion_token(c) == token) return c;
  }
  throw Error(ErrorCode::UnknownName, "unknown criterion '" + std::string(token) + "'");
}

double score_split(CriterionId c, const DissimilarityMatrix& m, std::span<const std::size_t> left,
                   std::span<const std::size_t> right) {
  switch (c) {
    case CriterionId::SingleLink:
      return stats::min_between(m, left, right);
    case CriterionId::CompleteLinkDiv:
      return -std::max(stats::diameter(m, left), stats::diameter(m, right));
    case CriterionId::AverageLink:
      return stats::mean_between(m, left, right);
    case CriterionId::WardW1:
      return ward(m, left, right, [](double d) { return d * d; });
    case CriterionId::WardW2:
      return ward(m, left, right, [](double d) { return d; });
    case CriterionId::DunnOriginal:
      return dunn_ratio(stats::mean_between(m, left, right),
                        std::max(stats::diameter(m, left), stats::diameter(m, right)));
    case CriterionId::DunnVariant:
      return dunn_ratio(stats::mean_between(m, left, right),
                        std::max(stats::mean_within(m, left), stats::mean_within(m, right)));
    case CriterionId::Silhouette:
      return silhouette_score(m, left, right);
  }
  return 0.0;
}

double score_bipartition(CriterionId c, const DissimilarityMatrix& m, const Bipartition& b) {
  const std::size_t hi = std::max(b.left().members().back(), b.right().members().back());
  if (hi >= m.size())
    throw Error(ErrorCode::IndexOutOfRange, "object index " + std::to_string(hi) + " out of range");
  return score_split(c, m, b.left().members(), b.right().members());
}

double silhouette_of_object(const DissimilarityMatrix& m, const Bipartition& b, std::size_t x) {
  const bool in_left = b.left().contains(x);
  if (!in_left && !b.right().contains(x))
    throw Error(ErrorCode::ObjectNotInBipartition,
                "object " + std::to_string(x) + " is not in the bipartition");
  const auto own = in_left ? b.left().members() : b.right().members();
  const auto other = in_left ? b.right().members() : b.left().members();
  if (std::max(own.back(), other.back()) >= m.size())
    throw Error(ErrorCode::IndexOutOfRange, "bipartition exceeds matrix size");
  return silhouette_value(stats::mean_to_set(m, x, own), stats::mean_to_set(m, x, other));
}

}  // namespace divclust

#include "divclust/splitters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divclust {

namespace {

constexpr std::string_view kTwoSeedsPrefix = "two-seeds:";

void require_splittable(const DissimilarityMatrix& m, const ObjectSet& c) {
  if (c.size() < 2)
    throw Error(ErrorCode::ClusterTooSmall, "cannot split a cluster of " + std::to_string(c.size()));
  if (c.members().back() >= m.size())
    throw Error(ErrorCode::IndexOutOfRange, "cluster member out of range");
}

// Members of `c` split by a per-member side flag (true = second side).
Bipartition from_flags(std::span<const std::size_t> members, const std::vector<char>& second) {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
  for (std::size_t k = 0; k < members.size(); ++k) (second[k] ? b : a).push_back(members[k]);
  return Bipartition::from_indices(std::move(a), std::move(b));
}

// Mean distance from members[k] to the members whose flag equals `side`,
// skipping members[k] itself.
double mean_to_side(const DissimilarityMatrix& m, std::span<const std::size_t> members,
                    const std::vector<char>& flags, std::size_t k, char side) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t q = 0; q < members.size(); ++q) {
    if (q == k || flags[q] != side) continue;
    sum += m(members[k], members[q]);
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace

std::string splitter_token(const SplitterId& s) {
  switch (s.kind) {
    case SplitterId::Kind::TwoSeeds:
      return std::string(kTwoSeedsPrefix) + std::string(criterion_token(s.criterion));
    case SplitterId::Kind::MacnaughtonSmith:
      return "macnaughton-smith";
    case SplitterId::Kind::PDDP:
      return "pddp";
  }
  return {};
}

SplitterId parse_splitter(std::string_view token) {
  if (token == "macnaughton-smith") return SplitterId::macnaughton_smith();
  if (token == "pddp") return SplitterId::pddp();
  if (token.starts_with(kTwoSeedsPrefix))
    return SplitterId::two_seeds(parse_criterion(token.substr(kTwoSeedsPrefix.size())));
  throw Error(ErrorCode::UnknownName, "unknown splitter '" + std::string(token) + "'");
}

Bipartition two_seeds_split(const DissimilarityMatrix& m, const ObjectSet& c, CriterionId crit) {
  require_splittable(m, c);
  const auto members = c.members();
  const std::size_t k = members.size();

  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
  std::vector<std::size_t> best_left;
  std::vector<std::size_t> best_right;
  left.reserve(k);
  right.reserve(k);
  bool have_best = false;
  double best_score = 0.0;

  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = p + 1; q < k; ++q) {
      const std::size_t si = members[p];
      const std::size_t sj = members[q];
      left.clear();
      right.clear();
      for (std::size_t x : members) {
        if (x == si) {
          left.push_back(x);
        } else if (x == sj) {
          right.push_back(x);
        } else if (m(x, sj) < m(x, si)) {
          right.push_back(x);
        } else {
          left.push_back(x);
        }
      }
      const double score = score_split(crit, m, left, right);
      if (!have_best || score > best_score) {
        have_best = true;
        best_score = score;
        best_left = left;
        best_right = right;
      }
    }
  }
  return Bipartition(ObjectSet(std::move(best_left)), ObjectSet(std::move(best_right)));
}

Bipartition macnaughton_smith_split(const DissimilarityMatrix& m, const ObjectSet& c) {
  require_splittable(m, c);
  const auto members = c.members();
  const std::size_t k = members.size();

  std::size_t seed = 0;
  double seed_mean = -1.0;
  for (std::size_t p = 0; p < k; ++p) {
    const double mean = stats::mean_to_set(m, members[p], members);
    if (mean > seed_mean) {
      seed_mean = mean;
      seed = p;
    }
  }

  std::vector<char> splinter(k, 0);
  splinter[seed] = 1;
  std::size_t remainder = k - 1;
  while (remainder > 1) {
    std::size_t best = k;
    double best_gain = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      if (splinter[p]) continue;
      const double gain = mean_to_side(m, members, splinter, p, 0) -
                          mean_to_side(m, members, splinter, p, 1);
      if (best == k || gain > best_gain) {
        best = p;
        best_gain = gain;
      }
    }
    if (!(best_gain > 0.0)) break;
    splinter[best] = 1;
    --remainder;
  }
  return from_flags(members, splinter);
}

PcoaAxis pcoa_first_axis(const DissimilarityMatrix& m, const ObjectSet& c) {
  require_splittable(m, c);
  const auto members = c.members();
  const std::size_t k = members.size();
  const double kd = static_cast<double>(k);

  // Double-centred -1/2 D^2.
  std::vector<double> b(k * k);
  std::vector<double> row_mean(k, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double d = m(members[i], members[j]);
      b[i * k + j] = d * d;
      row_mean[i] += d * d;
    }
    grand += row_mean[i];
    row_mean[i] /= kd;
  }
  grand /= kd * kd;
  double trace_scale = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      b[i * k + j] = -0.5 * (b[i * k + j] - row_mean[i] - row_mean[j] + grand);
    trace_scale += std::abs(b[i * k + i]);
  }

  const auto center_normalize = [k, kd](std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= kd;
    double norm = 0.0;
    for (double& x : v) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& x : v) x /= norm;
    return norm;
  };
  const auto rayleigh = [&](const std::vector<double>& v) {
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < k; ++j) row += b[i * k + j] * v[j];
      sum += v[i] * row;
    }
    return sum;
  };

  // Power iteration on B + shift * I. A shift is only applied when the
  // unshifted run lands on a negative eigenvalue (non-Euclidean input).
  const auto iterate = [&](double shift) {
    std::vector<double> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = (i % 2 == 0) ? 1.0 : -1.0;
    center_normalize(v);
    std::vector<double> next(k);
    for (int iter = 0; iter < 10000; ++iter) {
      for (std::size_t i = 0; i < k; ++i) {
        double row = shift * v[i];
        for (std::size_t j = 0; j < k; ++j) row += b[i * k + j] * v[j];
        next[i] = row;
      }
      if (center_normalize(next) == 0.0) return next;
      double delta = 0.0;
      for (std::size_t i = 0; i < k; ++i) delta = std::max(delta, std::abs(next[i] - v[i]));
      v.swap(next);
      if (delta < 1e-10) break;
    }
    return v;
  };

  std::vector<double> v = iterate(0.0);
  double lambda = rayleigh(v);
  if (lambda < 0.0) {
    v = iterate(-lambda);
    lambda = rayleigh(v);
  }
  if (!(lambda > 1e-12 * trace_scale))
    throw Error(ErrorCode::NoPositiveEigenvalue, "no positive principal coordinate");

  const double scale = std::sqrt(lambda) * (v[0] > 0.0 ? -1.0 : 1.0);
  PcoaAxis axis;
  axis.eigenvalue = lambda;
  axis.coords.resize(k);
  for (std::size_t i = 0; i < k; ++i) axis.coords[i] = v[i] * scale;
  return axis;
}

Bipartition pddp_split(const DissimilarityMatrix& m, const ObjectSet& c) {
  const PcoaAxis axis = pcoa_first_axis(m, c);
  const auto members = c.members();
  const std::size_t k = members.size();

  std::vector<char> second(k);
  std::size_t second_count = 0;
  for (std::size_t p = 0; p < k; ++p) {
    second[p] = axis.coords[p] >= 0.0 ? 1 : 0;
    second_count += second[p];
  }

  if (second_count == 0 || second_count == k) {
    // Move the most extreme object into the empty side.
    std::size_t extreme = 0;
    for (std::size_t p = 1; p < k; ++p)
      if (std::abs(axis.coords[p]) > std::abs(axis.coords[extreme])) extreme = p;
    second[extreme] = second_count == 0 ? 1 : 0;
    second_count = second_count == 0 ? 1 : k - 1;
  }

  for (std::size_t pass = 0; pass < k; ++pass) {
    bool moved = false;
    for (std::size_t p = 0; p < k; ++p) {
      const char own = second[p];
      const std::size_t own_size = own ? second_count : k - second_count;
      if (own_size < 2) continue;
      const double to_own = mean_to_side(m, members, second, p, own);
      const double to_other = mean_to_side(m, members, second, p, own ? 0 : 1);
      if (to_other < to_own) {
        second[p] = own ? 0 : 1;
        second_count = own ? second_count - 1 : second_count + 1;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return from_flags(members, second);
}

Bipartition split(const DissimilarityMatrix& m, const ObjectSet& c, const SplitterId& s) {
  switch (s.kind) {
    case SplitterId::Kind::TwoSeeds:
      return two_seeds_split(m, c, s.criterion);
    case SplitterId::Kind::MacnaughtonSmith:
      return macnaughton_smith_split(m, c);
    case SplitterId::Kind::PDDP:
      return pddp_split(m, c);
  }
  throw Error(ErrorCode::UnknownName, "unknown splitter kind");
}

}  // namespace divclust

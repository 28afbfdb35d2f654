#include "divclust/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divclust {

namespace {

void require_same_size(const DissimilarityMatrix& d, const DissimilarityMatrix& u) {
  if (d.size() != u.size())
    throw Error(ErrorCode::SizeMismatch, "matrices hold " + std::to_string(d.size()) + " and " +
                                             std::to_string(u.size()) + " objects");
}

}  // namespace

ConcordanceCounts concordance(const DissimilarityMatrix& d, const DissimilarityMatrix& u) {
  require_same_size(d, u);
  if (d.size() < 3) throw Error(ErrorCode::TooSmall, "concordance needs at least 3 objects");

  const auto dv = d.packed();
  const auto uv = u.packed();
  const std::size_t pairs = dv.size();
  ConcordanceCounts out;
  out.n_pairs = pairs;
  for (std::size_t a = 0; a < pairs; ++a) {
    for (std::size_t b = a + 1; b < pairs; ++b) {
      const double dd = dv[a] - dv[b];
      const double du = uv[a] - uv[b];
      if (dd == 0.0 || du == 0.0) continue;
      if ((dd > 0.0) == (du > 0.0)) {
        ++out.s_plus;
      } else {
        ++out.s_minus;
      }
    }
  }
  return out;
}

double goodman_kruskal(const ConcordanceCounts& c) {
  const std::uint64_t total = c.s_plus + c.s_minus;
  if (total == 0)
    throw Error(ErrorCode::Degenerate, "Goodman-Kruskal undefined: every quadruple is tied");
  return (static_cast<double>(c.s_plus) - static_cast<double>(c.s_minus)) / static_cast<double>(total);
}

double kendall_tau(const ConcordanceCounts& c) {
  if (c.n_pairs < 2) throw Error(ErrorCode::TooSmall, "Kendall tau needs at least 2 pairs");
  const double quadruples = static_cast<double>(c.n_pairs) * static_cast<double>(c.n_pairs - 1) / 2.0;
  return (static_cast<double>(c.s_plus) - static_cast<double>(c.s_minus)) / quadruples;
}

double cpcc(const DissimilarityMatrix& d, const DissimilarityMatrix& u) {
  require_same_size(d, u);
  const auto dv = d.packed();
  const auto uv = u.packed();
  const auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
  };
  if (constant(dv) || constant(uv))
    throw Error(ErrorCode::ZeroVariance, "CPCC undefined: constant distance table");
  const double count = static_cast<double>(dv.size());

  double mean_d = 0.0;
  double mean_u = 0.0;
  for (std::size_t k = 0; k < dv.size(); ++k) {
    mean_d += dv[k];
    mean_u += uv[k];
  }
  mean_d /= count;
  mean_u /= count;

  double cov = 0.0;
  double var_d = 0.0;
  double var_u = 0.0;
  for (std::size_t k = 0; k < dv.size(); ++k) {
    const double x = dv[k] - mean_d;
    const double y = uv[k] - mean_u;
    cov += x * y;
    var_d += x * x;
    var_u += y * y;
  }
  if (var_d == 0.0 || var_u == 0.0)
    throw Error(ErrorCode::ZeroVariance, "CPCC undefined: constant distance table");
  return cov / std::sqrt(var_d * var_u);
}

}  // namespace divclust

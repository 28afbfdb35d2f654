#pragma once

#include <cstdint>

#include "divclust/core.hpp"

namespace divclust {

/// Concordant and discordant quadruples between two pair-value tables.
struct ConcordanceCounts {
  std::uint64_t s_plus = 0;
  std::uint64_t s_minus = 0;
  std::uint64_t n_pairs = 0;
};

/// Compares every unordered pair of object pairs. A quadruple counts only
/// when both differences are non-zero; exact equality is a tie.
ConcordanceCounts concordance(const DissimilarityMatrix& d, const DissimilarityMatrix& u);

/// (S+ - S-) / (S+ + S-). Throws Degenerate when no quadruple is untied.
double goodman_kruskal(const ConcordanceCounts& c);

/// (S+ - S-) / (N (N - 1) / 2), ties kept in the denominator.
double kendall_tau(const ConcordanceCounts& c);

/// Pearson correlation of the two pair-value sequences. Throws ZeroVariance.
double cpcc(const DissimilarityMatrix& d, const DissimilarityMatrix& u);

}  // namespace divclust

#include "divclust/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace divclust {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::AsymmetricBeyondTolerance: return "AsymmetricBeyondTolerance";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::InvalidObjectSet: return "InvalidObjectSet";
    case ErrorCode::OverlappingSets: return "OverlappingSets";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySide: return "EmptySide";
    case ErrorCode::OverlappingSides: return "OverlappingSides";
    case ErrorCode::ObjectNotInBipartition: return "ObjectNotInBipartition";
    case ErrorCode::ClusterTooSmall: return "ClusterTooSmall";
    case ErrorCode::NoPositiveEigenvalue: return "NoPositiveEigenvalue";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ZeroVariance: return "ZeroVariance";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::AllCellsMissing: return "AllCellsMissing";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::MalformedTree: return "MalformedTree";
  }
  return "Unknown";
}

namespace {

std::string at(std::size_t i, std::size_t j) {
  return " at (" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

bool disjoint(std::span<const std::size_t> a, std::span<const std::size_t> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace

DissimilarityMatrix::DissimilarityMatrix(std::size_t n, std::vector<double> packed)
    : n_(n), packed_(std::move(packed)) {
  if (n_ < 2) throw Error(ErrorCode::TooSmall, "need at least 2 objects, got " + std::to_string(n_));
  if (packed_.size() != n_ * (n_ - 1) / 2)
    throw Error(ErrorCode::SizeMismatch, "packed triangle has " + std::to_string(packed_.size()) +
                                             " values, expected " + std::to_string(n_ * (n_ - 1) / 2));
  for (double v : packed_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteEntry, "non-finite dissimilarity");
    if (v < 0.0) throw Error(ErrorCode::NegativeEntry, "negative dissimilarity");
  }
}

ObjectSet::ObjectSet(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw Error(ErrorCode::InvalidObjectSet, "object set is empty");
  for (std::size_t k = 1; k < members_.size(); ++k) {
    if (members_[k - 1] >= members_[k])
      throw Error(ErrorCode::InvalidObjectSet, "object set is not strictly ascending");
  }
}

ObjectSet ObjectSet::all(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return ObjectSet(std::move(v));
}

bool ObjectSet::contains(std::size_t index) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), index);
}

Bipartition::Bipartition(ObjectSet a, ObjectSet b) : left_(std::move(a)), right_(std::move(b)) {
  if (!disjoint(left_.members(), right_.members()))
    throw Error(ErrorCode::OverlappingSides, "bipartition sides overlap");
  if (right_.front() < left_.front()) std::swap(left_, right_);
}

Bipartition Bipartition::from_indices(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySide, "bipartition side is empty");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return Bipartition(ObjectSet(std::move(a)), ObjectSet(std::move(b)));
}

DissimilarityMatrix validate_matrix(const Table& raw) {
  if (raw.rows != raw.cols || raw.values.size() != raw.rows * raw.cols)
    throw Error(ErrorCode::NotSquare, "matrix is " + std::to_string(raw.rows) + "x" +
                                          std::to_string(raw.cols) + ", expected square");
  const std::size_t n = raw.rows;
  if (n < 2) throw Error(ErrorCode::TooSmall, "need at least 2 objects, got " + std::to_string(n));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = raw(i, j);
      if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteEntry, "non-finite entry" + at(i, j));
      if (v < 0.0 && i != j) throw Error(ErrorCode::NegativeEntry, "negative entry" + at(i, j));
    }
    if (std::abs(raw(i, i)) > 1e-12)
      throw Error(ErrorCode::NonZeroDiagonal, "non-zero diagonal" + at(i, i));
  }

  std::vector<double> packed;
  packed.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double upper = raw(i, j);
      const double lower = raw(j, i);
      if (std::abs(upper - lower) > 1e-9 * std::max(1.0, std::abs(upper)))
        throw Error(ErrorCode::AsymmetricBeyondTolerance, "asymmetric entries" + at(i, j));
      packed.push_back(upper == lower ? upper : 0.5 * (upper + lower));
    }
  }
  return DissimilarityMatrix(n, std::move(packed));
}

DissimilarityMatrix euclidean_from_data(const Table& data) {
  if (data.values.size() != data.rows * data.cols)
    throw Error(ErrorCode::SizeMismatch, "data table shape does not match its values");
  if (data.rows < 2) throw Error(ErrorCode::TooSmall, "need at least 2 objects");
  if (data.cols < 1) throw Error(ErrorCode::TooSmall, "need at least 1 variable");
  for (double v : data.values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteEntry, "non-finite data entry");
  }

  const std::size_t n = data.rows;
  std::vector<double> packed;
  packed.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double ss = 0.0;
      for (std::size_t k = 0; k < data.cols; ++k) {
        const double diff = data(i, k) - data(j, k);
        ss += diff * diff;
      }
      packed.push_back(std::sqrt(ss));
    }
  }
  return DissimilarityMatrix(n, std::move(packed));
}

ClusterStats cluster_stats(const DissimilarityMatrix& m, const ObjectSet& a, const ObjectSet* b) {
  const auto check_range = [&](const ObjectSet& s) {
    if (s.members().back() >= m.size())
      throw Error(ErrorCode::IndexOutOfRange, "object index " + std::to_string(s.members().back()) +
                                                  " out of range for n = " + std::to_string(m.size()));
  };
  check_range(a);
  ClusterStats out;
  out.diameter = stats::diameter(m, a.members());
  out.mean_within = stats::mean_within(m, a.members());
  if (b != nullptr) {
    check_range(*b);
    if (!disjoint(a.members(), b->members()))
      throw Error(ErrorCode::OverlappingSets, "object sets overlap");
    out.min_between = stats::min_between(m, a.members(), b->members());
    out.max_between = stats::max_between(m, a.members(), b->members());
    out.mean_between = stats::mean_between(m, a.members(), b->members());
  }
  return out;
}

namespace stats {

double diameter(const DissimilarityMatrix& m, std::span<const std::size_t> a) {
  double best = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) best = std::max(best, m(a[p], a[q]));
  return best;
}

double sum_within(const DissimilarityMatrix& m, std::span<const std::size_t> a) {
  double sum = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q) sum += m(a[p], a[q]);
  return sum;
}

double mean_within(const DissimilarityMatrix& m, std::span<const std::size_t> a) {
  const std::size_t k = a.size();
  if (k < 2) return 0.0;
  return sum_within(m, a) / static_cast<double>(k * (k - 1) / 2);
}

double sum_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b) {
  double sum = 0.0;
  for (std::size_t x : a)
    for (std::size_t y : b) sum += m(x, y);
  return sum;
}

double mean_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                    std::span<const std::size_t> b) {
  return sum_between(m, a, b) / static_cast<double>(a.size() * b.size());
}

double min_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b) {
  double best = m(a.front(), b.front());
  for (std::size_t x : a)
    for (std::size_t y : b) best = std::min(best, m(x, y));
  return best;
}

double max_between(const DissimilarityMatrix& m, std::span<const std::size_t> a,
                   std::span<const std::size_t> b) {
  double best = 0.0;
  for (std::size_t x : a)
    for (std::size_t y : b) best = std::max(best, m(x, y));
  return best;
}

double mean_to_set(const DissimilarityMatrix& m, std::size_t x, std::span<const std::size_t> set) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t y : set) {
    if (y == x) continue;
    sum += m(x, y);
    ++count;
  }
  return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

}  // namespace stats

}  // namespace divclust

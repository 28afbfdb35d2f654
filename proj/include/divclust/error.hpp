#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divclust {

enum class ErrorCode {
  NotSquare,
  AsymmetricBeyondTolerance,
  NegativeEntry,
  NonFiniteEntry,
  NonZeroDiagonal,
  TooSmall,
  InvalidObjectSet,
  OverlappingSets,
  IndexOutOfRange,
  EmptySide,
  OverlappingSides,
  ObjectNotInBipartition,
  ClusterTooSmall,
  NoPositiveEigenvalue,
  SizeMismatch,
  Degenerate,
  ZeroVariance,
  ConfigInvalid,
  AllCellsMissing,
  UnknownName,
  ParseError,
  IoError,
  MalformedTree,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace divclust

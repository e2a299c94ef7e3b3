#pragma once

#include <stdexcept>
#include <string>

namespace rsyt {

enum class ErrorKind {
  NotABijection,
  NotIncreasing,
  CapExceeded,
  NotGeneric,
  DimensionMismatch,
  InvalidTableau,
  NotRealizable,
  EmptySlice,
  FaceMissesHyperplane,
  BadInput,
  UnknownSubcommand,
};

/// Stable snake_case identifier used in machine-readable error objects.
const char* error_kind_name(ErrorKind kind);

/// The single exception type thrown by the library.  `kind()` is the
/// machine-readable category, `what()` the human detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rsyt

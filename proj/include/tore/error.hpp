#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tore {

enum class ErrorCode {
  kOutOfBoundsEvent,
  kNonMonotonicTimestamp,
  kNegativeTimestamp,
  kInvalidPolarity,
  kInvalidGeometry,
  kInvalidConfig,
  kUnsupportedSignal,
  kAllocationTooLarge,
  kQueryBeforeLastEvent,
  kEvenPatchSize,
  kEventNotInserted,
  kUnsortedQueryTimes,
  kInvalidWindow,
  kInvalidBinCount,
  kParseError,
  kIoError,
  kBadMagic,
  kTruncatedFile,
  kCountMismatch,
  kVersionMismatch,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

  // Position of the offending event when raised while consuming a stream.
  std::optional<std::size_t> event_index() const noexcept { return event_index_; }
  // Source line for parse errors (1-based).
  std::optional<std::size_t> line() const noexcept { return line_; }

  Error with_event_index(std::size_t index) const;
  Error with_line(std::size_t line) const;

 private:
  Error(ErrorCode code, const std::string& full_what, int);

  ErrorCode code_;
  std::optional<std::size_t> event_index_;
  std::optional<std::size_t> line_;
};

}  // namespace tore

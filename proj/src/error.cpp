#include "tore/error.hpp"

namespace tore {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfBoundsEvent: return "OutOfBoundsEvent";
    case ErrorCode::kNonMonotonicTimestamp: return "NonMonotonicTimestamp";
    case ErrorCode::kNegativeTimestamp: return "NegativeTimestamp";
    case ErrorCode::kInvalidPolarity: return "InvalidPolarity";
    case ErrorCode::kInvalidGeometry: return "InvalidGeometry";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kUnsupportedSignal: return "UnsupportedSignal";
    case ErrorCode::kAllocationTooLarge: return "AllocationTooLarge";
    case ErrorCode::kQueryBeforeLastEvent: return "QueryBeforeLastEvent";
    case ErrorCode::kEvenPatchSize: return "EvenPatchSize";
    case ErrorCode::kEventNotInserted: return "EventNotInserted";
    case ErrorCode::kUnsortedQueryTimes: return "UnsortedQueryTimes";
    case ErrorCode::kInvalidWindow: return "InvalidWindow";
    case ErrorCode::kInvalidBinCount: return "InvalidBinCount";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kTruncatedFile: return "TruncatedFile";
    case ErrorCode::kCountMismatch: return "CountMismatch";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

Error Error::with_event_index(std::size_t index) const {
  Error e(code_, std::string(std::runtime_error::what()) + " (event " + std::to_string(index) + ")",
          0);
  e.event_index_ = index;
  e.line_ = line_;
  return e;
}

Error Error::with_line(std::size_t line) const {
  Error e(code_, std::string(std::runtime_error::what()) + " (line " + std::to_string(line) + ")",
          0);
  e.event_index_ = event_index_;
  e.line_ = line;
  return e;
}

Error::Error(ErrorCode code, const std::string& full_what, int)
    : std::runtime_error(full_what), code_(code) {}

}  // namespace tore

#include "tore/event.hpp"

#include <string>

#include "tore/error.hpp"

namespace tore {

void check_geometry(const SensorGeometry& geometry) {
  if (geometry.width < 1 || geometry.height < 1 || geometry.width > SensorGeometry::kMaxSide ||
      geometry.height > SensorGeometry::kMaxSide) {
    throw Error(ErrorCode::kInvalidGeometry, "sensor geometry " + std::to_string(geometry.width) +
                                                 "x" + std::to_string(geometry.height) +
                                                 " outside [1, 65535]");
  }
}

Polarity normalize_polarity(int raw, PolarityConvention convention) {
  switch (convention) {
    case PolarityConvention::kBinary:
      if (raw == 0) return Polarity::kNegative;
      if (raw == 1) return Polarity::kPositive;
      break;
    case PolarityConvention::kSigned:
      if (raw == -1) return Polarity::kNegative;
      if (raw == 1) return Polarity::kPositive;
      break;
  }
  throw Error(ErrorCode::kInvalidPolarity,
              "raw polarity " + std::to_string(raw) + " not valid for " +
                  (convention == PolarityConvention::kBinary ? "binary" : "signed") +
                  " convention");
}

EventStream validate_stream(std::vector<Event> events, const SensorGeometry& geometry,
                            TimestampPolicy policy) {
  check_geometry(geometry);
  Timestamp previous = 0;
  for (std::size_t i = 0; i < events.size(); ++i) {
    Event& e = events[i];
    if (!geometry.contains(e)) {
      throw Error(ErrorCode::kOutOfBoundsEvent,
                  "event at (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                      ") outside " + std::to_string(geometry.width) + "x" +
                      std::to_string(geometry.height))
          .with_event_index(i);
    }
    if (e.t < 0) {
      throw Error(ErrorCode::kNegativeTimestamp, "timestamp " + std::to_string(e.t))
          .with_event_index(i);
    }
    if (i > 0 && e.t < previous) {
      if (policy == TimestampPolicy::kReject) {
        throw Error(ErrorCode::kNonMonotonicTimestamp,
                    "timestamp " + std::to_string(e.t) + " after " + std::to_string(previous))
            .with_event_index(i);
      }
      e.t = previous;
    }
    previous = e.t;
  }
  EventStream stream;
  stream.geometry_ = geometry;
  stream.events_ = std::move(events);
  return stream;
}

}  // namespace tore

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace tore {

/// Microseconds since the stream epoch.
using Timestamp = std::int64_t;

enum class Polarity : std::int8_t { kPositive = 1, kNegative = -1 };

/// Tensor channel for a polarity: +1 -> 0, -1 -> 1.
constexpr int channel(Polarity p) noexcept { return p == Polarity::kPositive ? 0 : 1; }
constexpr int sign(Polarity p) noexcept { return static_cast<int>(p); }
constexpr Polarity polarity_from_channel(int c) noexcept {
  return c == 0 ? Polarity::kPositive : Polarity::kNegative;
}

struct Event {
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  Timestamp t = 0;
  Polarity p = Polarity::kPositive;

  friend bool operator==(const Event&, const Event&) = default;
};

struct SensorGeometry {
  int width = 0;
  int height = 0;

  static constexpr int kMaxSide = std::numeric_limits<std::uint16_t>::max();

  std::size_t pixels() const noexcept {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  bool contains(int x, int y) const noexcept { return x >= 0 && y >= 0 && x < width && y < height; }
  bool contains(const Event& e) const noexcept { return contains(e.x, e.y); }

  friend bool operator==(const SensorGeometry&, const SensorGeometry&) = default;
};

/// Throws InvalidGeometry unless both sides are in [1, 65535].
void check_geometry(const SensorGeometry& geometry);

enum class TimestampPolicy : std::uint8_t {
  kReject = 0,  // out-of-order timestamps are an error
  kClamp = 1,   // raised to the predecessor's timestamp
};

enum class PolarityConvention : std::uint8_t {
  kSigned = 0,  // raw -1 / +1
  kBinary = 1,  // raw 0 / 1
};

Polarity normalize_polarity(int raw, PolarityConvention convention);

class EventStream {
 public:
  EventStream() = default;

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  std::span<const Event> events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }
  const Event& operator[](std::size_t i) const { return events_[i]; }
  auto begin() const noexcept { return events_.begin(); }
  auto end() const noexcept { return events_.end(); }

  friend bool operator==(const EventStream&, const EventStream&) = default;

 private:
  friend EventStream validate_stream(std::vector<Event> events, const SensorGeometry& geometry,
                                     TimestampPolicy policy);

  SensorGeometry geometry_;
  std::vector<Event> events_;
};

/// Only way to build an EventStream. Bounds violations are always fatal;
/// out-of-order timestamps are fatal under kReject and raised to the running
/// maximum under kClamp.
EventStream validate_stream(std::vector<Event> events, const SensorGeometry& geometry,
                            TimestampPolicy policy = TimestampPolicy::kReject);

}  // namespace tore

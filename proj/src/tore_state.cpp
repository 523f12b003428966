#include "tore/tore_state.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "tore/error.hpp"

namespace tore {

void check_config(const ToreConfig& config) {
  if (config.depth < 1) {
    throw Error(ErrorCode::kInvalidConfig, "depth K must be >= 1, got " +
                                               std::to_string(config.depth));
  }
  if (config.tau_prime_us < 1 || config.tau_prime_us >= config.tau_us) {
    throw Error(ErrorCode::kInvalidConfig,
                "need 1 <= tau' < tau, got tau'=" + std::to_string(config.tau_prime_us) +
                    " tau=" + std::to_string(config.tau_us));
  }
}

SensorState::SensorState(const SensorGeometry& geometry, const ToreConfig& config,
                         std::size_t cell_budget)
    : geometry_(geometry), config_(config) {
  check_geometry(geometry);
  check_config(config);
  plane_ = geometry.pixels();
  const std::size_t per_channel = plane_ * static_cast<std::size_t>(config.depth);
  if (per_channel / plane_ != static_cast<std::size_t>(config.depth) ||
      per_channel > cell_budget / 2) {
    throw Error(ErrorCode::kAllocationTooLarge,
                "2*K*H*W exceeds cell budget of " + std::to_string(cell_budget));
  }
  slots_.assign(2 * per_channel, kEmptySlot);
}

void SensorState::insert(const Event& e) {
  if (!geometry_.contains(e)) {
    throw Error(ErrorCode::kOutOfBoundsEvent, "event at (" + std::to_string(e.x) + "," +
                                                  std::to_string(e.y) + ") outside " +
                                                  std::to_string(geometry_.width) + "x" +
                                                  std::to_string(geometry_.height));
  }
  Timestamp t = e.t;
  if (t < 0) throw Error(ErrorCode::kNegativeTimestamp, "timestamp " + std::to_string(t));
  if (last_event_time_ && t < *last_event_time_) {
    if (config_.policy == TimestampPolicy::kReject) {
      throw Error(ErrorCode::kNonMonotonicTimestamp,
                  "timestamp " + std::to_string(t) + " after " + std::to_string(*last_event_time_));
    }
    t = *last_event_time_;
  }

  Timestamp* cell = slots_.data() + slot_index(channel(e.p), 0, e.y, e.x);
  for (int k = config_.depth - 1; k > 0; --k) {
    cell[k * plane_] = cell[(k - 1) * plane_];
  }
  cell[0] = t;
  last_event_time_ = t;
}

IngestStats SensorState::ingest(const EventStream& stream) {
  if (stream.geometry() != geometry_) {
    throw Error(ErrorCode::kInvalidGeometry, "stream geometry does not match sensor state");
  }
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < stream.size(); ++i) {
    try {
      insert(stream[i]);
    } catch (const Error& err) {
      throw err.with_event_index(i);
    }
  }
  IngestStats stats;
  stats.events = stream.size();
  stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  stats.events_per_second = stats.seconds > 0.0 ? static_cast<double>(stats.events) / stats.seconds
                                                : 0.0;
  return stats;
}

std::vector<Timestamp> SensorState::snapshot_cell(int x, int y, Polarity p) const {
  if (!geometry_.contains(x, y)) {
    throw Error(ErrorCode::kOutOfBoundsEvent,
                "cell (" + std::to_string(x) + "," + std::to_string(y) + ") out of bounds");
  }
  std::vector<Timestamp> out(config_.depth);
  const std::size_t base = slot_index(channel(p), 0, y, x);
  for (int k = 0; k < config_.depth; ++k) out[k] = slots_[base + k * plane_];
  return out;
}

SensorState SensorState::from_parts(const SensorGeometry& geometry, const ToreConfig& config,
                                    std::vector<Timestamp> slots,
                                    std::optional<Timestamp> last_event_time) {
  SensorState state(geometry, config);
  if (slots.size() != state.slots_.size()) {
    throw Error(ErrorCode::kInvalidConfig, "slot count " + std::to_string(slots.size()) +
                                               " != 2*K*H*W = " +
                                               std::to_string(state.slots_.size()));
  }
  Timestamp newest = kEmptySlot;
  for (std::size_t cell = 0; cell < 2 * state.plane_; ++cell) {
    const std::size_t c = cell / state.plane_;
    const std::size_t pixel = cell % state.plane_;
    const std::size_t base = c * config.depth * state.plane_ + pixel;
    for (int k = 0; k < config.depth; ++k) {
      const Timestamp v = slots[base + k * state.plane_];
      if (v != kEmptySlot && v < 0) {
        throw Error(ErrorCode::kInvalidConfig, "negative timestamp in slot data");
      }
      if (k > 0 && v > slots[base + (k - 1) * state.plane_]) {
        throw Error(ErrorCode::kInvalidConfig, "slot data violates newest-first ordering");
      }
    }
    newest = std::max(newest, slots[base]);
  }
  if (newest != kEmptySlot && (!last_event_time || *last_event_time < newest)) {
    throw Error(ErrorCode::kInvalidConfig, "last event time precedes stored timestamps");
  }
  state.slots_ = std::move(slots);
  state.last_event_time_ = last_event_time;
  return state;
}

}  // namespace tore

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tore/event.hpp"

namespace tore {

struct ToreConfig {
  int depth = 4;                        // K, timestamps kept per pixel per polarity
  Timestamp tau_us = 5'000'000;         // maximum memory retention
  Timestamp tau_prime_us = 150;         // minimum time sensitivity
  TimestampPolicy policy = TimestampPolicy::kReject;

  friend bool operator==(const ToreConfig&, const ToreConfig&) = default;
};

/// Throws InvalidConfig unless depth >= 1 and 1 <= tau_prime_us < tau_us.
void check_config(const ToreConfig& config);

/// Slot value for "never fired". Compares below every real timestamp so it
/// behaves as negative infinity in ordering.
inline constexpr Timestamp kEmptySlot = std::numeric_limits<Timestamp>::min();

inline constexpr std::size_t kDefaultCellBudget = std::size_t{1} << 28;

struct IngestStats {
  std::size_t events = 0;
  double seconds = 0.0;
  double events_per_second = 0.0;
};

/// Per-pixel, per-polarity FIFO of the K most recent timestamps.
///
/// Storage is one flat array indexed [channel][k][y][x] (k = 0 is the newest
/// slot), the same order as the rendered [2, K, H, W] volume, so rendering is
/// a single linear pass. Inserting shifts the K strided slots of one cell.
///
/// Single writer: insert/ingest need exclusive access; const members may run
/// concurrently between writes.
class SensorState {
 public:
  SensorState(const SensorGeometry& geometry, const ToreConfig& config,
              std::size_t cell_budget = kDefaultCellBudget);

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  const ToreConfig& config() const noexcept { return config_; }
  int depth() const noexcept { return config_.depth; }
  std::optional<Timestamp> last_event_time() const noexcept { return last_event_time_; }

  void insert(const Event& e);
  IngestStats ingest(const EventStream& stream);

  /// K slots of one cell, newest first; kEmptySlot where never filled.
  std::vector<Timestamp> snapshot_cell(int x, int y, Polarity p) const;

  std::span<const Timestamp> slots() const noexcept { return slots_; }
  std::size_t slot_count() const noexcept { return slots_.size(); }

  std::size_t slot_index(int c, int k, int y, int x) const noexcept {
    return ((static_cast<std::size_t>(c) * config_.depth + k) * geometry_.height + y) *
               geometry_.width +
           x;
  }

  /// Rebuilds a state from raw parts (checkpoint restore). Slots must satisfy
  /// the newest-first invariant; throws InvalidConfig otherwise.
  static SensorState from_parts(const SensorGeometry& geometry, const ToreConfig& config,
                                std::vector<Timestamp> slots,
                                std::optional<Timestamp> last_event_time);

  friend bool operator==(const SensorState&, const SensorState&) = default;

 private:
  SensorGeometry geometry_;
  ToreConfig config_;
  std::size_t plane_ = 0;  // H * W
  std::vector<Timestamp> slots_;
  std::optional<Timestamp> last_event_time_;
};

}  // namespace tore

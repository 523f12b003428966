#pragma once

// Brute-force reference implementations used for verification. Nothing here
// shares code with the incremental state or the renderers: every routine
// works from the raw event list.

#include <cstdint>
#include <vector>

#include "tore/event.hpp"
#include "tore/tensor.hpp"
#include "tore/tore_state.hpp"

namespace tore::oracle {

struct RandomStreamSpec {
  SensorGeometry geometry{64, 64};
  std::size_t events = 100'000;
  Timestamp t0 = 0;
  Timestamp max_gap_us = 50;  // gaps drawn uniformly from [0, max_gap_us]
  std::uint64_t seed = 0;
};

/// Time-ordered random events (ties allowed) with uniform pixel and polarity.
std::vector<Event> random_events(const RandomStreamSpec& spec);

/// For each cell: all events with t <= query in arrival order, keep the last
/// K, and evaluate max(min(log(t - s + 1), log tau), log tau') literally, with
/// missing entries as -infinity. Returns [2, K, H, W].
Tensor tore_volume(const std::vector<Event>& events, const SensorGeometry& geometry,
                   const ToreConfig& config, Timestamp query);

/// The K most recent timestamps of one cell, newest first, padded with kEmptySlot.
std::vector<Timestamp> recent_timestamps(const std::vector<Event>& events, int x, int y,
                                         Polarity p, int depth);

Tensor event_frame(const std::vector<Event>& events, const SensorGeometry& geometry,
                   Timestamp window_start, Timestamp window_end);
Tensor event_count(const std::vector<Event>& events, const SensorGeometry& geometry,
                   Timestamp window_start, Timestamp window_end);
Tensor voxel_grid(const std::vector<Event>& events, const SensorGeometry& geometry,
                  Timestamp window_start, Timestamp window_end, int bins);

}  // namespace tore::oracle

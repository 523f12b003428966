#include "tore/tore_render.hpp"

#include <string>

#include "tore/error.hpp"

namespace tore {
namespace {

void check_causal(const SensorState& state, Timestamp t) {
  const auto last = state.last_event_time();
  if (last && t < *last) {
    throw Error(ErrorCode::kQueryBeforeLastEvent,
                "query time " + std::to_string(t) + " before last event " + std::to_string(*last));
  }
}

ToreVolume empty_volume(const SensorState& state, Timestamp t) {
  ToreVolume volume;
  volume.query_time = t;
  volume.config = state.config();
  volume.geometry = state.geometry();
  volume.tensor = Tensor({2u, static_cast<std::uint32_t>(state.depth()),
                          static_cast<std::uint32_t>(state.geometry().height),
                          static_cast<std::uint32_t>(state.geometry().width)});
  return volume;
}

}  // namespace

ToreVolume render_volume(const SensorState& state, Timestamp t) {
  check_causal(state, t);
  ToreVolume volume = empty_volume(state, t);
  const LogTimeClamp clamp(state.config());
  const auto slots = state.slots();
  double* out = volume.tensor.data.data();
  for (std::size_t i = 0; i < slots.size(); ++i) out[i] = clamp(t, slots[i]);
  return volume;
}

ToreVolume render_unclamped(const SensorState& state, Timestamp t,
                            std::optional<double> empty_value) {
  check_causal(state, t);
  ToreVolume volume = empty_volume(state, t);
  const double fill =
      empty_value.value_or(std::log(static_cast<double>(state.config().tau_us)));
  const auto slots = state.slots();
  double* out = volume.tensor.data.data();
  for (std::size_t i = 0; i < slots.size(); ++i) {
    out[i] = slots[i] == kEmptySlot ? fill : std::log(static_cast<double>(t - slots[i] + 1));
  }
  return volume;
}

TorePatch render_patch(const SensorState& state, const Event& e, int side, PatchEventMode mode) {
  if (side < 1 || side % 2 == 0) {
    throw Error(ErrorCode::kEvenPatchSize,
                "patch side must be a positive odd number, got " + std::to_string(side));
  }
  const SensorGeometry& geometry = state.geometry();
  if (!geometry.contains(e)) {
    throw Error(ErrorCode::kOutOfBoundsEvent,
                "event at (" + std::to_string(e.x) + "," + std::to_string(e.y) + ") outside sensor");
  }
  check_causal(state, e.t);
  if (mode == PatchEventMode::kIncluded && state.snapshot_cell(e.x, e.y, e.p).front() != e.t) {
    throw Error(ErrorCode::kEventNotInserted,
                "event of interest at t=" + std::to_string(e.t) + " is not the newest in its cell");
  }

  const int depth = state.depth();
  TorePatch patch;
  patch.center_x = e.x;
  patch.center_y = e.y;
  patch.side = side;
  patch.query_time = e.t;
  patch.config = state.config();
  patch.tensor = Tensor({2u, static_cast<std::uint32_t>(depth), static_cast<std::uint32_t>(side),
                         static_cast<std::uint32_t>(side)});

  const LogTimeClamp clamp(state.config());
  const auto slots = state.slots();
  const int half = side / 2;
  std::size_t out = 0;
  for (int c = 0; c < 2; ++c) {
    for (int k = 0; k < depth; ++k) {
      for (int row = 0; row < side; ++row) {
        const int y = e.y - half + row;
        for (int col = 0; col < side; ++col, ++out) {
          const int x = e.x - half + col;
          patch.tensor.data[out] = geometry.contains(x, y)
                                       ? clamp(e.t, slots[state.slot_index(c, k, y, x)])
                                       : clamp.log_tau();
        }
      }
    }
  }
  return patch;
}

std::vector<ToreVolume> render_series(const EventStream& stream, const ToreConfig& config,
                                      const std::vector<Timestamp>& times) {
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (times[i] < times[i - 1]) {
      throw Error(ErrorCode::kUnsortedQueryTimes,
                  "query time " + std::to_string(times[i]) + " after " +
                      std::to_string(times[i - 1]));
    }
  }
  SensorState state(stream.geometry(), config);
  std::vector<ToreVolume> volumes;
  volumes.reserve(times.size());
  std::size_t next = 0;
  for (const Timestamp t : times) {
    for (; next < stream.size() && stream[next].t <= t; ++next) {
      try {
        state.insert(stream[next]);
      } catch (const Error& err) {
        throw err.with_event_index(next);
      }
    }
    volumes.push_back(render_volume(state, t));
  }
  return volumes;
}

}  // namespace tore

#pragma once

// Windowed reference representations. Windows are half-open,
// (t_end - duration, t_end], so back-to-back windows partition a stream.

#include "tore/event.hpp"
#include "tore/tensor.hpp"

namespace tore {

struct WindowSpec {
  Timestamp t_end = 0;
  Timestamp duration = 1;

  Timestamp start() const noexcept { return t_end - duration; }
  bool contains(Timestamp t) const noexcept { return t > start() && t <= t_end; }
};

/// Throws InvalidWindow unless duration > 0 and t_end >= duration.
void check_window(const WindowSpec& window);

/// [H, W] signed polarity sum.
Tensor event_frame(const EventStream& stream, const WindowSpec& window);

/// [2, H, W] per-polarity counts, channel 0 positive.
Tensor event_count(const EventStream& stream, const WindowSpec& window);

struct SaeImage {
  Tensor timestamps;  // [2, H, W], sentinel where never fired
  Tensor valid;       // [2, H, W], 1 where a timestamp is present
};

/// Most recent timestamp <= t_end per pixel and polarity.
SaeImage surface_of_active_events(const EventStream& stream, Timestamp t_end,
                                  double sentinel = 0.0);

/// Normalized temporal coordinate t* = (t - start) / duration * (bins - 1).
double voxel_time_coordinate(Timestamp t, const WindowSpec& window, int bins);

/// [B, H, W] voxel grid. Each in-window event adds p * max(0, 1 - |b - t*|)
/// to its two neighbouring bins. Throws InvalidBinCount for bins < 2.
Tensor voxel_grid(const EventStream& stream, const WindowSpec& window, int bins);

}  // namespace tore

#include "tore/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tore/error.hpp"

namespace tore {
namespace {

std::uint32_t u32(int v) { return static_cast<std::uint32_t>(v); }

}  // namespace

void check_window(const WindowSpec& window) {
  if (window.duration <= 0 || window.t_end < window.duration) {
    throw Error(ErrorCode::kInvalidWindow,
                "window needs duration > 0 and t_end >= duration, got t_end=" +
                    std::to_string(window.t_end) + " duration=" + std::to_string(window.duration));
  }
}

Tensor event_frame(const EventStream& stream, const WindowSpec& window) {
  check_window(window);
  const auto& g = stream.geometry();
  Tensor image({u32(g.height), u32(g.width)});
  for (const Event& e : stream) {
    if (window.contains(e.t)) image.data[static_cast<std::size_t>(e.y) * g.width + e.x] += sign(e.p);
  }
  return image;
}

Tensor event_count(const EventStream& stream, const WindowSpec& window) {
  check_window(window);
  const auto& g = stream.geometry();
  Tensor counts({2u, u32(g.height), u32(g.width)});
  for (const Event& e : stream) {
    if (!window.contains(e.t)) continue;
    counts.data[(static_cast<std::size_t>(channel(e.p)) * g.height + e.y) * g.width + e.x] += 1.0;
  }
  return counts;
}

SaeImage surface_of_active_events(const EventStream& stream, Timestamp t_end, double sentinel) {
  const auto& g = stream.geometry();
  SaeImage sae{Tensor({2u, u32(g.height), u32(g.width)}, sentinel),
               Tensor({2u, u32(g.height), u32(g.width)}, 0.0)};
  for (const Event& e : stream) {
    if (e.t > t_end) break;  // streams are time-ordered
    const std::size_t i = (static_cast<std::size_t>(channel(e.p)) * g.height + e.y) * g.width + e.x;
    sae.timestamps.data[i] = static_cast<double>(e.t);
    sae.valid.data[i] = 1.0;
  }
  return sae;
}

double voxel_time_coordinate(Timestamp t, const WindowSpec& window, int bins) {
  return static_cast<double>(t - window.start()) / static_cast<double>(window.duration) *
         static_cast<double>(bins - 1);
}

Tensor voxel_grid(const EventStream& stream, const WindowSpec& window, int bins) {
  if (bins < 2) {
    throw Error(ErrorCode::kInvalidBinCount, "voxel grid needs at least 2 bins, got " +
                                                 std::to_string(bins));
  }
  check_window(window);
  const auto& g = stream.geometry();
  const std::size_t plane = g.pixels();
  Tensor grid({u32(bins), u32(g.height), u32(g.width)});
  for (const Event& e : stream) {
    if (!window.contains(e.t)) continue;
    const double ts = voxel_time_coordinate(e.t, window, bins);
    const int lower = std::min(static_cast<int>(std::floor(ts)), bins - 1);
    const std::size_t pixel = static_cast<std::size_t>(e.y) * g.width + e.x;
    for (int b = lower; b <= std::min(lower + 1, bins - 1); ++b) {
      const double weight = std::max(0.0, 1.0 - std::abs(static_cast<double>(b) - ts));
      if (weight > 0.0) grid.data[b * plane + pixel] += sign(e.p) * weight;
    }
  }
  return grid;
}

}  // namespace tore

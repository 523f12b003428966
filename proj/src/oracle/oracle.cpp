#include "tore/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace tore::oracle {

std::vector<Event> random_events(const RandomStreamSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::vector<Event> events(spec.events);
  Timestamp t = spec.t0;
  const auto gap_range = static_cast<std::uint64_t>(spec.max_gap_us) + 1;
  for (Event& e : events) {
    t += static_cast<Timestamp>(rng() % gap_range);
    e.t = t;
    e.x = static_cast<std::uint16_t>(rng() % static_cast<std::uint64_t>(spec.geometry.width));
    e.y = static_cast<std::uint16_t>(rng() % static_cast<std::uint64_t>(spec.geometry.height));
    e.p = (rng() & 1u) != 0 ? Polarity::kPositive : Polarity::kNegative;
  }
  return events;
}

std::vector<Timestamp> recent_timestamps(const std::vector<Event>& events, int x, int y,
                                         Polarity p, int depth) {
  std::vector<Timestamp> history;
  for (const Event& e : events) {
    if (e.x == x && e.y == y && e.p == p) history.push_back(e.t);
  }
  std::stable_sort(history.begin(), history.end());
  std::vector<Timestamp> recent(depth, kEmptySlot);
  for (int k = 0; k < depth && k < static_cast<int>(history.size()); ++k) {
    recent[k] = history[history.size() - 1 - k];
  }
  return recent;
}

Tensor tore_volume(const std::vector<Event>& events, const SensorGeometry& geometry,
                   const ToreConfig& config, Timestamp query) {
  const int w = geometry.width;
  const int h = geometry.height;
  const int depth = config.depth;

  // Full per-cell history, then sorted.
  std::vector<std::vector<Timestamp>> history(2 * geometry.pixels());
  for (const Event& e : events) {
    if (e.t > query) continue;
    history[(channel(e.p) * static_cast<std::size_t>(h) + e.y) * w + e.x].push_back(e.t);
  }

  const double log_tau = std::log(static_cast<double>(config.tau_us));
  const double log_tau_prime = std::log(static_cast<double>(config.tau_prime_us));
  const double infinity = std::numeric_limits<double>::infinity();

  Tensor volume({2u, static_cast<std::uint32_t>(depth), static_cast<std::uint32_t>(h),
                 static_cast<std::uint32_t>(w)});
  for (int c = 0; c < 2; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        auto& cell = history[(static_cast<std::size_t>(c) * h + y) * w + x];
        std::stable_sort(cell.begin(), cell.end());
        for (int k = 0; k < depth; ++k) {
          double log_diff = infinity;  // slot at -infinity
          if (k < static_cast<int>(cell.size())) {
            const Timestamp slot = cell[cell.size() - 1 - k];
            log_diff = std::log(static_cast<double>(query - slot + 1));
          }
          volume.data[((static_cast<std::size_t>(c) * depth + k) * h + y) * w + x] =
              std::max(std::min(log_diff, log_tau), log_tau_prime);
        }
      }
    }
  }
  return volume;
}

Tensor event_frame(const std::vector<Event>& events, const SensorGeometry& geometry,
                   Timestamp window_start, Timestamp window_end) {
  Tensor image({static_cast<std::uint32_t>(geometry.height),
                static_cast<std::uint32_t>(geometry.width)});
  for (int y = 0; y < geometry.height; ++y) {
    for (int x = 0; x < geometry.width; ++x) {
      double sum = 0.0;
      for (const Event& e : events) {
        if (e.x == x && e.y == y && e.t > window_start && e.t <= window_end) sum += sign(e.p);
      }
      image.data[static_cast<std::size_t>(y) * geometry.width + x] = sum;
    }
  }
  return image;
}

Tensor event_count(const std::vector<Event>& events, const SensorGeometry& geometry,
                   Timestamp window_start, Timestamp window_end) {
  Tensor counts({2u, static_cast<std::uint32_t>(geometry.height),
                 static_cast<std::uint32_t>(geometry.width)});
  for (int c = 0; c < 2; ++c) {
    for (int y = 0; y < geometry.height; ++y) {
      for (int x = 0; x < geometry.width; ++x) {
        double n = 0.0;
        for (const Event& e : events) {
          if (e.x == x && e.y == y && channel(e.p) == c && e.t > window_start &&
              e.t <= window_end) {
            n += 1.0;
          }
        }
        counts.data[(static_cast<std::size_t>(c) * geometry.height + y) * geometry.width + x] = n;
      }
    }
  }
  return counts;
}

Tensor voxel_grid(const std::vector<Event>& events, const SensorGeometry& geometry,
                  Timestamp window_start, Timestamp window_end, int bins) {
  Tensor grid({static_cast<std::uint32_t>(bins), static_cast<std::uint32_t>(geometry.height),
               static_cast<std::uint32_t>(geometry.width)});
  const double duration = static_cast<double>(window_end - window_start);
  for (const Event& e : events) {
    if (e.t <= window_start || e.t > window_end) continue;
    const double ts = static_cast<double>(e.t - window_start) / duration * (bins - 1);
    // Every bin, kernel evaluated directly.
    for (int b = 0; b < bins; ++b) {
      const double weight = std::max(0.0, 1.0 - std::abs(b - ts));
      grid.data[(static_cast<std::size_t>(b) * geometry.height + e.y) * geometry.width + e.x] +=
          sign(e.p) * weight;
    }
  }
  return grid;
}

}  // namespace tore::oracle

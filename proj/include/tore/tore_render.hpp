#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "tore/event.hpp"
#include "tore/tensor.hpp"
#include "tore/tore_state.hpp"

namespace tore {

/// [2, K, H, W] clamped log-time-difference volume at one query time.
/// Channel 0 is positive polarity, k = 0 the most recent event.
struct ToreVolume {
  Timestamp query_time = 0;
  ToreConfig config;
  SensorGeometry geometry;
  Tensor tensor;

  double at(int c, int k, int y, int x) const {
    return tensor.data[((static_cast<std::size_t>(c) * config.depth + k) * geometry.height + y) *
                           geometry.width +
                       x];
  }

  friend bool operator==(const ToreVolume&, const ToreVolume&) = default;
};

/// [2, K, m, m] volume around one event.
struct TorePatch {
  int center_x = 0;
  int center_y = 0;
  int side = 0;
  Timestamp query_time = 0;
  ToreConfig config;
  Tensor tensor;

  double at(int c, int k, int row, int col) const {
    return tensor.data[((static_cast<std::size_t>(c) * config.depth + k) * side + row) * side +
                       col];
  }
};

/// Precomputed clamp endpoints for one config.
class LogTimeClamp {
 public:
  explicit LogTimeClamp(const ToreConfig& config)
      : tau_(config.tau_us),
        tau_prime_(config.tau_prime_us),
        log_tau_(std::log(static_cast<double>(config.tau_us))),
        log_tau_prime_(std::log(static_cast<double>(config.tau_prime_us))) {}

  double log_tau() const noexcept { return log_tau_; }
  double log_tau_prime() const noexcept { return log_tau_prime_; }

  /// max(min(ln(t - slot + 1), ln tau), ln tau'); empty slots give ln tau.
  /// Requires slot <= t for non-empty slots.
  double operator()(Timestamp t, Timestamp slot) const noexcept {
    if (slot == kEmptySlot) return log_tau_;
    const Timestamp span = t - slot + 1;
    if (span >= tau_) return log_tau_;
    if (span <= tau_prime_) return log_tau_prime_;
    return std::log(static_cast<double>(span));
  }

 private:
  Timestamp tau_;
  Timestamp tau_prime_;
  double log_tau_;
  double log_tau_prime_;
};

/// Full-frame volume at query time t. Throws QueryBeforeLastEvent if t
/// precedes the newest ingested event.
ToreVolume render_volume(const SensorState& state, Timestamp t);

/// ln(t - slot + 1) without the tau/tau' clamps. Empty slots map to
/// `empty_value` (ln tau when not given).
ToreVolume render_unclamped(const SensorState& state, Timestamp t,
                            std::optional<double> empty_value = std::nullopt);

enum class PatchEventMode {
  kIncluded,  // event of interest already inserted; its own slot is checked
  kExcluded,  // ablation: state holds only the events before it
};

/// m x m patch centered on `e`, queried at e.t. Positions outside the sensor
/// read as a never-fired pixel (ln tau).
TorePatch render_patch(const SensorState& state, const Event& e, int side,
                       PatchEventMode mode = PatchEventMode::kIncluded);

/// Replays `stream` once and renders a volume at every query time, using only
/// events with timestamp <= that time. `times` must be non-decreasing.
std::vector<ToreVolume> render_series(const EventStream& stream, const ToreConfig& config,
                                      const std::vector<Timestamp>& times);

}  // namespace tore

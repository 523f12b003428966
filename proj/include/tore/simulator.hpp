#pragma once

// Ideal threshold-crossing event generation from analytic log-intensity
// signals. Each pixel keeps a reference level R; an event fires at the
// earliest tick where |J(t) - R| >= epsilon, with polarity sign(J - R), and R
// is then reset to J at that tick.

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "tore/event.hpp"

namespace tore::sim {

struct Constant {
  double value = 0.0;
};

/// J(t) = offset + slope * t, slope in log-intensity units per microsecond.
struct LinearRamp {
  double slope = 0.0;
  double offset = 0.0;
};

/// J(t) = offset + amplitude * sin(2 pi (t - phase_us) / period_us).
struct Sinusoid {
  double amplitude = 0.0;
  double period_us = 1.0;
  double phase_us = 0.0;
  double offset = 0.0;
};

struct Step {
  Timestamp t = 0;
  double height = 0.0;
};

/// J(t) = base + sum of heights of steps with step.t <= t.
struct StepTrain {
  double base = 0.0;
  std::vector<Step> steps;  // sorted by t
};

using PixelSignal = std::variant<Constant, LinearRamp, Sinusoid, StepTrain>;

enum class SignalKind { kConstant, kLinearRamp, kSinusoid, kStepTrain };

/// Accepts "constant", "ramp"/"linear_ramp", "sinusoid", "step"/"step_train".
/// Throws UnsupportedSignal otherwise.
SignalKind parse_signal_kind(std::string_view name);

/// Either one signal shared by every pixel, or one per pixel in row-major order.
struct IntensitySignal {
  std::vector<PixelSignal> pixels;

  static IntensitySignal uniform(PixelSignal signal) { return {{std::move(signal)}}; }
  const PixelSignal& at(std::size_t pixel) const {
    return pixels.size() == 1 ? pixels.front() : pixels[pixel];
  }
};

double evaluate(const PixelSignal& signal, double t);

struct NoiseConfig {
  std::size_t events = 0;  // uniformly placed extra events; 0 disables
  std::uint64_t seed = 0;
};

struct SimConfig {
  double epsilon = 0.1;
  Timestamp t_start = 0;
  Timestamp t_end = 0;
  SensorGeometry geometry{1, 1};
  Timestamp tick_us = 1;
  NoiseConfig noise;
};

/// Throws InvalidConfig for epsilon <= 0, t_start >= t_end, tick_us < 1, or
/// a per-pixel signal count that is neither 1 nor W*H.
void check_config(const SimConfig& config, const IntensitySignal& signal);

/// Events of one pixel in (t_start, t_end], strictly increasing in time.
std::vector<Event> simulate_pixel(const PixelSignal& signal, const SimConfig& config, int x,
                                  int y);

/// All pixels merged and sorted by (t, y, x, polarity channel).
EventStream simulate(const IntensitySignal& signal, const SimConfig& config);

}  // namespace tore::sim

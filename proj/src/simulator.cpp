#include "tore/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <tuple>

#include "tore/error.hpp"

namespace tore::sim {
namespace {

// Threshold comparisons absorb a few ulps of rounding in J(t) - R.
constexpr double kRelativeSlack = 1e-9;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Earliest continuous time strictly after `after` at which J leaves the band
// [R - eps, R + eps], or nullopt if it never does before `limit`.
std::optional<double> next_crossing(const PixelSignal& signal, double reference, double epsilon,
                                    double after, double limit) {
  return std::visit(
      overloaded{
          [](const Constant&) -> std::optional<double> { return std::nullopt; },
          [&](const LinearRamp& s) -> std::optional<double> {
            if (s.slope == 0.0) return std::nullopt;
            const double level = reference + (s.slope > 0.0 ? epsilon : -epsilon);
            const double t = (level - s.offset) / s.slope;
            return std::max(t, after);
          },
          [&](const Sinusoid& s) -> std::optional<double> {
            if (s.amplitude == 0.0) return std::nullopt;
            const double two_pi = 2.0 * std::numbers::pi;
            const double omega = two_pi / s.period_us;
            const double theta_after = (after - s.phase_us) * omega;
            std::optional<double> best;
            for (const double level : {reference + epsilon, reference - epsilon}) {
              const double u = (level - s.offset) / s.amplitude;
              if (u < -1.0 || u > 1.0) continue;
              const double root = std::asin(u);
              for (const double base : {root, std::numbers::pi - root}) {
                double theta = base + two_pi * std::ceil((theta_after - base) / two_pi);
                if (theta <= theta_after) theta += two_pi;
                const double t = s.phase_us + theta / omega;
                if (t > after && (!best || t < *best)) best = t;
              }
            }
            return best;
          },
          [&](const StepTrain& s) -> std::optional<double> {
            double value = s.base;
            for (const Step& step : s.steps) {
              value += step.height;
              if (static_cast<double>(step.t) <= after) continue;
              if (static_cast<double>(step.t) > limit) break;
              if (std::abs(value - reference) >= epsilon * (1.0 - kRelativeSlack)) {
                return static_cast<double>(step.t);
              }
            }
            return std::nullopt;
          },
      },
      signal);
}

Timestamp ceil_to_tick(double t, Timestamp tick) {
  return static_cast<Timestamp>(std::ceil(t / static_cast<double>(tick))) * tick;
}

}  // namespace

SignalKind parse_signal_kind(std::string_view name) {
  if (name == "constant") return SignalKind::kConstant;
  if (name == "ramp" || name == "linear_ramp") return SignalKind::kLinearRamp;
  if (name == "sinusoid" || name == "sine") return SignalKind::kSinusoid;
  if (name == "step" || name == "step_train") return SignalKind::kStepTrain;
  throw Error(ErrorCode::kUnsupportedSignal, "unknown signal kind '" + std::string(name) + "'");
}

double evaluate(const PixelSignal& signal, double t) {
  return std::visit(
      overloaded{
          [](const Constant& s) { return s.value; },
          [t](const LinearRamp& s) { return s.offset + s.slope * t; },
          [t](const Sinusoid& s) {
            return s.offset +
                   s.amplitude * std::sin(2.0 * std::numbers::pi * (t - s.phase_us) / s.period_us);
          },
          [t](const StepTrain& s) {
            double value = s.base;
            for (const Step& step : s.steps) {
              if (static_cast<double>(step.t) > t) break;
              value += step.height;
            }
            return value;
          },
      },
      signal);
}

void check_config(const SimConfig& config, const IntensitySignal& signal) {
  check_geometry(config.geometry);
  if (!(config.epsilon > 0.0) || !std::isfinite(config.epsilon)) {
    throw Error(ErrorCode::kInvalidConfig, "contrast threshold must be > 0");
  }
  if (config.t_start < 0 || config.t_start >= config.t_end) {
    throw Error(ErrorCode::kInvalidConfig, "need 0 <= t_start < t_end");
  }
  if (config.tick_us < 1) throw Error(ErrorCode::kInvalidConfig, "tick must be >= 1 us");
  if (signal.pixels.size() != 1 && signal.pixels.size() != config.geometry.pixels()) {
    throw Error(ErrorCode::kInvalidConfig,
                "signal list must hold 1 or W*H entries, got " +
                    std::to_string(signal.pixels.size()));
  }
}

std::vector<Event> simulate_pixel(const PixelSignal& signal, const SimConfig& config, int x,
                                  int y) {
  std::vector<Event> events;
  const double epsilon = config.epsilon;
  const double limit = static_cast<double>(config.t_end);
  const Timestamp q = config.tick_us;
  const auto fires = [&](Timestamp t, double reference) {
    return std::abs(evaluate(signal, static_cast<double>(t)) - reference) >=
           epsilon * (1.0 - kRelativeSlack);
  };

  Timestamp last = config.t_start;
  double reference = evaluate(signal, static_cast<double>(last));
  double after = static_cast<double>(last);
  while (true) {
    const auto crossing =
        next_crossing(signal, reference, epsilon, after, limit + static_cast<double>(q));
    // Rounding can put a crossing that belongs on the last tick just past it.
    if (!crossing || *crossing > limit + static_cast<double>(q)) break;
    Timestamp tick = std::max(ceil_to_tick(*crossing, q), last + 1);
    if (tick % q != 0) tick = ceil_to_tick(static_cast<double>(tick), q);
    while (tick - q > last && static_cast<double>(tick - q) > after && fires(tick - q, reference)) {
      tick -= q;
    }
    if (tick > config.t_end) break;
    if (!fires(tick, reference)) {
      // Crossed and came back between ticks; keep searching from here.
      after = static_cast<double>(tick);
      continue;
    }
    const double value = evaluate(signal, static_cast<double>(tick));
    events.push_back(Event{static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y), tick,
                           value > reference ? Polarity::kPositive : Polarity::kNegative});
    reference = value;
    last = tick;
    after = static_cast<double>(tick);
  }
  return events;
}

EventStream simulate(const IntensitySignal& signal, const SimConfig& config) {
  check_config(config, signal);
  const SensorGeometry& g = config.geometry;
  std::vector<Event> events;
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) {
      auto pixel_events =
          simulate_pixel(signal.at(static_cast<std::size_t>(y) * g.width + x), config, x, y);
      events.insert(events.end(), pixel_events.begin(), pixel_events.end());
    }
  }

  if (config.noise.events > 0) {
    std::mt19937_64 rng(config.noise.seed);
    const auto span = static_cast<std::uint64_t>(config.t_end - config.t_start);
    for (std::size_t i = 0; i < config.noise.events; ++i) {
      const auto pixel = rng() % g.pixels();
      const Timestamp t = config.t_start + 1 + static_cast<Timestamp>(rng() % span);
      const Polarity p = (rng() & 1u) != 0 ? Polarity::kPositive : Polarity::kNegative;
      events.push_back(Event{static_cast<std::uint16_t>(pixel % g.width),
                             static_cast<std::uint16_t>(pixel / g.width), t, p});
    }
  }

  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return std::tuple(a.t, a.y, a.x, channel(a.p)) < std::tuple(b.t, b.y, b.x, channel(b.p));
  });
  return validate_stream(std::move(events), g, TimestampPolicy::kReject);
}

}  // namespace tore::sim

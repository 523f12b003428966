#include <cmath>
#include <tuple>

#include "test_support.hpp"
#include "tore/simulator.hpp"

using namespace tore;
using namespace tore::sim;

namespace {

// Tick-by-tick scan of the threshold-crossing rule: independent of the
// analytic crossing search in the simulator.
std::vector<Event> scan_pixel(const PixelSignal& signal, const SimConfig& config) {
  std::vector<Event> events;
  double reference = evaluate(signal, static_cast<double>(config.t_start));
  Timestamp first = (config.t_start / config.tick_us + 1) * config.tick_us;
  for (Timestamp t = first; t <= config.t_end; t += config.tick_us) {
    const double j = evaluate(signal, static_cast<double>(t));
    if (std::abs(j - reference) >= config.epsilon * (1.0 - 1e-9)) {
      events.push_back(Event{0, 0, t, j > reference ? Polarity::kPositive : Polarity::kNegative});
      reference = j;
    }
  }
  return events;
}

SimConfig one_pixel(double epsilon, Timestamp t_end) {
  SimConfig config;
  config.epsilon = epsilon;
  config.t_start = 0;
  config.t_end = t_end;
  config.geometry = {1, 1};
  return config;
}

}  // namespace

TEST_CASE("rising ramp fires every epsilon/slope microseconds") {
  const auto stream =
      simulate(IntensitySignal::uniform(LinearRamp{0.001}), one_pixel(0.1, 1'000'000));
  REQUIRE(stream.size() == 10'000);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    CHECK(stream[i].t == static_cast<Timestamp>(100 * (i + 1)));
    CHECK(stream[i].p == Polarity::kPositive);
  }
  CHECK(simulate(IntensitySignal::uniform(LinearRamp{0.001}), one_pixel(0.2, 1'000'000)).size() ==
        5'000);
}

TEST_CASE("falling ramp fires negative events") {
  const auto stream = simulate(IntensitySignal::uniform(LinearRamp{-0.001}), one_pixel(0.1, 1000));
  REQUIRE(stream.size() == 10);
  for (std::size_t i = 0; i < stream.size(); ++i) {
    CHECK(stream[i].t == static_cast<Timestamp>(100 * (i + 1)));
    CHECK(stream[i].p == Polarity::kNegative);
  }
}

TEST_CASE("constant signal produces no events") {
  CHECK(simulate(IntensitySignal::uniform(Constant{2.5}), one_pixel(0.1, 1'000'000)).empty());
  CHECK(simulate(IntensitySignal::uniform(LinearRamp{0.0, 3.0}), one_pixel(0.1, 10'000)).empty());
}

TEST_CASE("ramp count equals floor(|a| T / eps) when eps/|a| is a whole tick count") {
  for (const int ticks_per_event : {1, 3, 7, 50, 128}) {
    for (const double eps : {0.05, 0.25, 1.0}) {
      const double slope = eps / ticks_per_event;
      const Timestamp horizon = 10'007;
      const auto up = simulate(IntensitySignal::uniform(LinearRamp{slope}), one_pixel(eps, horizon));
      const auto down =
          simulate(IntensitySignal::uniform(LinearRamp{-slope}), one_pixel(eps, horizon));
      CHECK(up.size() == static_cast<std::size_t>(horizon / ticks_per_event));
      CHECK(down.size() == up.size());
    }
  }
}

TEST_CASE("doubling epsilon halves a ramp's event count within one") {
  for (const double slope : {0.0013, 0.0021, -0.00077, 0.01}) {
    const auto n1 =
        simulate(IntensitySignal::uniform(LinearRamp{slope}), one_pixel(0.1, 200'000)).size();
    const auto n2 =
        simulate(IntensitySignal::uniform(LinearRamp{slope}), one_pixel(0.2, 200'000)).size();
    CHECK(std::abs(static_cast<long>(n1) - 2 * static_cast<long>(n2)) <= 2);
    CHECK(std::abs(static_cast<double>(n1) / 2.0 - static_cast<double>(n2)) <= 1.0);
  }
}

TEST_CASE("analytic crossings match a tick-by-tick scan") {
  const std::vector<PixelSignal> signals{
      LinearRamp{0.0013},
      LinearRamp{-0.00071, 4.0},
      Sinusoid{1.0, 1000.0, 0.0, 0.0},
      Sinusoid{0.35, 777.0, 123.0, -2.0},
      Sinusoid{2.0, 20'000.0, 50.0, 1.0},
      StepTrain{0.0, {{100, 0.3}, {150, 0.05}, {151, 0.06}, {900, -0.5}, {1500, 0.11}}},
  };
  for (const auto& signal : signals) {
    for (const Timestamp tick : {Timestamp{1}, Timestamp{7}}) {
      SimConfig config = one_pixel(0.15, 20'000);
      config.tick_us = tick;
      const auto analytic = simulate_pixel(signal, config, 0, 0);
      const auto scanned = scan_pixel(signal, config);
      REQUIRE(analytic.size() == scanned.size());
      for (std::size_t i = 0; i < analytic.size(); ++i) {
        CHECK(analytic[i] == scanned[i]);
        CHECK(analytic[i].t % tick == 0);
      }
    }
  }
}

TEST_CASE("per-pixel times strictly increase and polarity follows slope") {
  SimConfig config = one_pixel(0.1, 50'000);
  config.geometry = {3, 2};
  IntensitySignal signal;
  for (int i = 0; i < 6; ++i) {
    signal.pixels.push_back(LinearRamp{(i % 2 == 0 ? 1.0 : -1.0) * 0.0007 * (i + 1)});
  }
  const auto stream = simulate(signal, config);
  CHECK(!stream.empty());
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 3; ++x) {
      const int pixel = y * 3 + x;
      Timestamp last = -1;
      for (const Event& e : stream) {
        if (e.x != x || e.y != y) continue;
        CHECK(e.t > last);
        last = e.t;
        CHECK(e.p == (pixel % 2 == 0 ? Polarity::kPositive : Polarity::kNegative));
      }
    }
  }
}

TEST_CASE("merged stream is ordered by (t, y, x, channel)") {
  SimConfig config = one_pixel(0.1, 5'000);
  config.geometry = {4, 4};
  const auto stream = simulate(IntensitySignal::uniform(Sinusoid{1.0, 800.0}), config);
  REQUIRE(stream.size() > 16);
  for (std::size_t i = 1; i < stream.size(); ++i) {
    const Event& a = stream[i - 1];
    const Event& b = stream[i];
    CHECK(std::tuple(a.t, a.y, a.x, channel(a.p)) <= std::tuple(b.t, b.y, b.x, channel(b.p)));
  }
}

TEST_CASE("noise events are seeded and in range") {
  SimConfig config = one_pixel(0.1, 10'000);
  config.geometry = {8, 5};
  config.noise = {500, 99};
  const auto a = simulate(IntensitySignal::uniform(Constant{}), config);
  const auto b = simulate(IntensitySignal::uniform(Constant{}), config);
  CHECK(a.size() == 500);
  CHECK(a == b);
  for (const Event& e : a) CHECK((e.t > 0 && e.t <= 10'000));
}

TEST_CASE("simulator input validation") {
  CHECK_TORE_ERROR(parse_signal_kind("sawtooth"), ErrorCode::kUnsupportedSignal);
  CHECK(parse_signal_kind("ramp") == SignalKind::kLinearRamp);
  CHECK_TORE_ERROR(simulate(IntensitySignal::uniform(Constant{}), one_pixel(0.0, 10)),
                   ErrorCode::kInvalidConfig);
  CHECK_TORE_ERROR(simulate(IntensitySignal::uniform(Constant{}), one_pixel(0.1, 0)),
                   ErrorCode::kInvalidConfig);
  SimConfig config = one_pixel(0.1, 10);
  config.geometry = {2, 2};
  CHECK_TORE_ERROR(simulate(IntensitySignal{{Constant{}, Constant{}}}, config),
                   ErrorCode::kInvalidConfig);
}

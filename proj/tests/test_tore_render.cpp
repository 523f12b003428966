#include <cmath>
#include <random>

#include "test_support.hpp"
#include "tore/oracle.hpp"
#include "tore/tore_render.hpp"

using namespace tore;
using tore::testing::ev;

namespace {

// Frozen with an independent evaluator (CPython math.log).
constexpr double kLogTau = 15.424948470398375;       // ln(5e6)
constexpr double kLogTauPrime = 5.0106352940962555;  // ln(150)
constexpr double kLog10001 = 9.210440366976517;
constexpr double kLog1718282 = 14.356835512410028;

ToreConfig depth(int k) {
  ToreConfig config;
  config.depth = k;
  return config;
}

}  // namespace

TEST_CASE("clamp endpoints") {
  const LogTimeClamp clamp(ToreConfig{});
  CHECK(clamp.log_tau() == kLogTau);
  CHECK(clamp.log_tau_prime() == kLogTauPrime);
}

TEST_CASE("render_volume scalar examples") {
  SensorState state({3, 1}, depth(1));
  state.insert(ev(1, 0, 1'000'000, +1));
  state.insert(ev(2, 0, 1'010'000, +1));
  const auto volume = render_volume(state, 1'010'000);
  CHECK(volume.tensor.dims == std::vector<std::uint32_t>{2, 1, 1, 3});
  CHECK(volume.at(0, 0, 0, 0) == kLogTau);        // never fired
  CHECK(volume.at(0, 0, 0, 2) == kLogTauPrime);   // fired at the query instant
  CHECK(volume.at(0, 0, 0, 1) == kLog10001);      // 10 000 us ago
  CHECK(volume.at(1, 0, 0, 1) == kLogTau);
}

TEST_CASE("render_volume rejects queries before the last event") {
  SensorState state({2, 2}, depth(2));
  state.insert(ev(0, 0, 500, +1));
  CHECK_TORE_ERROR(render_volume(state, 499), ErrorCode::kQueryBeforeLastEvent);
  CHECK_NOTHROW(render_volume(state, 500));
  CHECK_NOTHROW(render_volume(SensorState({2, 2}, depth(2)), 0));
}

TEST_CASE("render_unclamped") {
  SensorState state({3, 1}, depth(1));
  state.insert(ev(0, 0, 0, -1));
  state.insert(ev(1, 0, 1'718'281, -1));
  const Timestamp t = 1'718'281;
  const auto volume = render_unclamped(state, t);
  CHECK(volume.at(1, 0, 0, 1) == 0.0);
  CHECK(volume.at(1, 0, 0, 0) == kLog1718282);
  CHECK(volume.at(0, 0, 0, 2) == kLogTau);
  CHECK(render_unclamped(state, t, -1.0).at(0, 0, 0, 2) == -1.0);
  CHECK_TORE_ERROR(render_unclamped(state, t - 1), ErrorCode::kQueryBeforeLastEvent);
}

TEST_CASE("clamped and unclamped agree strictly inside the clamp range") {
  oracle::RandomStreamSpec spec;
  spec.geometry = {16, 16};
  spec.events = 20'000;
  spec.max_gap_us = 400;
  spec.seed = 17;
  SensorState state(spec.geometry, depth(4));
  state.ingest(validate_stream(oracle::random_events(spec), spec.geometry));
  const Timestamp t = *state.last_event_time() + 1234;
  const auto clamped = render_volume(state, t);
  const auto raw = render_unclamped(state, t);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < raw.tensor.size(); ++i) {
    const double v = raw.tensor.data[i];
    if (v > kLogTauPrime && v < kLogTau) {
      CHECK(clamped.tensor.data[i] == v);
      ++inside;
    }
  }
  CHECK(inside > 100);
}

TEST_CASE("render matches the brute-force oracle bit for bit") {
  for (const int k : {1, 3, 6}) {
    oracle::RandomStreamSpec spec;
    spec.geometry = {9, 7};
    spec.events = 8'000;
    spec.max_gap_us = 900;
    spec.seed = 100 + k;
    const auto events = oracle::random_events(spec);
    SensorState state(spec.geometry, depth(k));
    state.ingest(validate_stream(events, spec.geometry));
    for (const Timestamp extra : {0, 1, 149, 150, 77'777, 6'000'000}) {
      const Timestamp t = events.back().t + extra;
      CHECK(render_volume(state, t).tensor ==
            oracle::tore_volume(events, spec.geometry, state.config(), t));
    }
  }
}

TEST_CASE("bounds, k-monotonicity and t-monotonicity") {
  oracle::RandomStreamSpec spec;
  spec.geometry = {12, 10};
  spec.events = 30'000;
  spec.max_gap_us = 300;
  spec.seed = 23;
  SensorState state(spec.geometry, depth(5));
  state.ingest(validate_stream(oracle::random_events(spec), spec.geometry));
  const Timestamp t0 = *state.last_event_time();
  ToreVolume previous = render_volume(state, t0);
  for (const Timestamp dt : {1, 10, 1'000, 100'000, 10'000'000}) {
    const ToreVolume volume = render_volume(state, t0 + dt);
    for (std::size_t i = 0; i < volume.tensor.size(); ++i) {
      const double v = volume.tensor.data[i];
      CHECK((v >= kLogTauPrime && v <= kLogTau));
      CHECK(v >= previous.tensor.data[i]);
    }
    for (int c = 0; c < 2; ++c) {
      for (int k = 1; k < 5; ++k) {
        for (int y = 0; y < 10; ++y) {
          for (int x = 0; x < 12; ++x) CHECK(volume.at(c, k - 1, y, x) <= volume.at(c, k, y, x));
        }
      }
    }
    previous = volume;
  }
}

TEST_CASE("time-shift invariance") {
  oracle::RandomStreamSpec spec;
  spec.geometry = {10, 10};
  spec.events = 10'000;
  spec.seed = 31;
  auto events = oracle::random_events(spec);
  const Timestamp t = events.back().t + 500;
  SensorState base(spec.geometry, depth(3));
  base.ingest(validate_stream(events, spec.geometry));
  for (const Timestamp delta : {Timestamp{1}, Timestamp{987'654}, Timestamp{1'000'000'000}}) {
    auto shifted_events = events;
    for (Event& e : shifted_events) e.t += delta;
    SensorState shifted(spec.geometry, depth(3));
    shifted.ingest(validate_stream(shifted_events, spec.geometry));
    CHECK(render_volume(shifted, t + delta).tensor == render_volume(base, t).tensor);
  }
}

TEST_CASE("render_patch geometry and padding") {
  ToreConfig config = depth(7);
  SensorState state({20, 20}, config);
  const Event center = ev(10, 10, 1000, +1);
  state.insert(center);
  const auto patch = render_patch(state, center, 9);
  CHECK(patch.tensor.dims == std::vector<std::uint32_t>{2, 7, 9, 9});
  CHECK(patch.tensor.size() == 9 * 9 * 14);
  CHECK(patch.at(0, 0, 4, 4) == kLogTauPrime);
  CHECK(patch.at(1, 0, 4, 4) == kLogTau);

  SensorState corner_state({20, 20}, depth(2));
  const Event corner = ev(0, 0, 50, -1);
  corner_state.insert(corner);
  const auto small = render_patch(corner_state, corner, 3);
  int padded = 0;
  for (int row = 0; row < 3; ++row) {
    for (int col = 0; col < 3; ++col) {
      if (row == 0 || col == 0) {
        ++padded;
        for (int c = 0; c < 2; ++c) {
          for (int k = 0; k < 2; ++k) CHECK(small.at(c, k, row, col) == kLogTau);
        }
      }
    }
  }
  CHECK(padded == 5);
  CHECK(small.at(1, 0, 1, 1) == kLogTauPrime);
}

TEST_CASE("render_patch matches the full volume inside the sensor") {
  oracle::RandomStreamSpec spec;
  spec.geometry = {30, 20};
  spec.events = 20'000;
  spec.seed = 41;
  const auto events = oracle::random_events(spec);
  SensorState state(spec.geometry, depth(7));
  std::mt19937_64 rng(1);
  for (std::size_t i = 0; i < events.size(); ++i) {
    state.insert(events[i]);
    if (i % 997 != 0) continue;
    const Event& e = events[i];
    if (i + 1 < events.size() && events[i + 1].t == e.t) continue;
    const auto patch = render_patch(state, e, 9);
    const auto volume = render_volume(state, e.t);
    for (int c = 0; c < 2; ++c) {
      for (int k = 0; k < 7; ++k) {
        for (int row = 0; row < 9; ++row) {
          for (int col = 0; col < 9; ++col) {
            const int x = e.x - 4 + col;
            const int y = e.y - 4 + row;
            const double expected =
                spec.geometry.contains(x, y) ? volume.at(c, k, y, x) : std::log(5e6);
            CHECK(patch.at(c, k, row, col) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("render_patch errors and exclusion mode") {
  SensorState state({8, 8}, depth(2));
  const Event e = ev(3, 3, 100, +1);
  CHECK_TORE_ERROR(render_patch(state, e, 8), ErrorCode::kEvenPatchSize);
  CHECK_TORE_ERROR(render_patch(state, ev(8, 3, 100, +1), 3), ErrorCode::kOutOfBoundsEvent);
  CHECK_TORE_ERROR(render_patch(state, e, 3), ErrorCode::kEventNotInserted);
  const auto excluded = render_patch(state, e, 3, PatchEventMode::kExcluded);
  CHECK(excluded.at(0, 0, 1, 1) == kLogTau);
  state.insert(e);
  CHECK(render_patch(state, e, 3).at(0, 0, 1, 1) == kLogTauPrime);
  CHECK_TORE_ERROR(render_patch(state, ev(3, 3, 99, +1), 3), ErrorCode::kQueryBeforeLastEvent);
}

TEST_CASE("render_series equals prefix ingest + render") {
  oracle::RandomStreamSpec spec;
  spec.geometry = {10, 8};
  spec.events = 4'000;
  spec.max_gap_us = 200;
  spec.seed = 59;
  const auto events = oracle::random_events(spec);
  const auto stream = validate_stream(events, spec.geometry);
  const ToreConfig config = depth(4);

  CHECK(render_series(stream, config, {}).empty());

  std::vector<Timestamp> times;
  for (Timestamp t = 0; t <= events.back().t + 1000; t += 9'973) times.push_back(t);
  times.push_back(times.back());
  const auto series = render_series(stream, config, times);
  REQUIRE(series.size() == times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    SensorState prefix(spec.geometry, config);
    for (const Event& e : events) {
      if (e.t <= times[i]) prefix.insert(e);
    }
    CHECK(series[i] == render_volume(prefix, times[i]));
  }

  SensorState all(spec.geometry, config);
  all.ingest(stream);
  const Timestamp after = events.back().t + 5;
  CHECK(render_series(stream, config, {after}).front() == render_volume(all, after));

  CHECK_TORE_ERROR(render_series(stream, config, {500, 400}), ErrorCode::kUnsortedQueryTimes);
}

#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>

#include "tore/baselines.hpp"
#include "tore/oracle.hpp"
#include "tore/tore_render.hpp"

namespace tore::cli {
namespace {

using Clock = std::chrono::steady_clock;

double percentile(std::vector<double> samples, double q) {
  std::sort(samples.begin(), samples.end());
  const double pos = q * static_cast<double>(samples.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return samples[lo] + (samples[hi] - samples[lo]) * (pos - static_cast<double>(lo));
}

template <class F>
BenchRow time_ms(const std::string& name, const std::string& param, int reps, F&& body) {
  std::vector<double> samples;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    body();
    samples.push_back(std::chrono::duration<double, std::milli>(Clock::now() - start).count());
  }
  return {name, param, percentile(samples, 0.5), percentile(samples, 0.95)};
}

std::string size_tag(const SensorGeometry& g) {
  return std::to_string(g.width) + "x" + std::to_string(g.height);
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
  EventStream stream;
  if (options.stream) {
    stream = *options.stream;
  } else {
    oracle::RandomStreamSpec spec;
    spec.geometry = options.geometry;
    spec.events = options.synthetic_events;
    spec.max_gap_us = 2;
    spec.seed = options.seed;
    stream = validate_stream(oracle::random_events(spec), spec.geometry);
  }
  const SensorGeometry& g = stream.geometry();
  const int reps = std::max(1, options.reps);
  BenchReport report;

  ToreConfig config;
  config.depth = options.ingest_depth;
  std::vector<double> throughput;
  for (int r = 0; r < reps; ++r) {
    SensorState state(g, config);
    throughput.push_back(state.ingest(stream).events_per_second);
  }
  report.ingest_events_per_second = percentile(throughput, 0.5);
  report.rows.push_back({"ingest_events_per_sec",
                         "K=" + std::to_string(config.depth) + " " + size_tag(g) +
                             " n=" + std::to_string(stream.size()),
                         report.ingest_events_per_second, percentile(throughput, 0.95)});

  const Timestamp t_end = stream.empty() ? 1 : std::max<Timestamp>(stream.events().back().t, 1);
  for (const int depth : options.render_depths) {
    ToreConfig render_config;
    render_config.depth = depth;
    SensorState state(g, render_config);
    state.ingest(stream);
    report.rows.push_back(time_ms("render_ms", "K=" + std::to_string(depth) + " " + size_tag(g),
                                  reps, [&] { (void)render_volume(state, t_end); }));
  }

  const WindowSpec window{t_end, t_end};
  report.rows.push_back(time_ms("baseline_ms", "frame " + size_tag(g), reps,
                                [&] { (void)event_frame(stream, window); }));
  report.rows.push_back(time_ms("baseline_ms", "count " + size_tag(g), reps,
                                [&] { (void)event_count(stream, window); }));
  report.rows.push_back(time_ms("baseline_ms", "sae " + size_tag(g), reps,
                                [&] { (void)surface_of_active_events(stream, t_end); }));
  report.rows.push_back(time_ms("baseline_ms", "voxel B=5 " + size_tag(g), reps,
                                [&] { (void)voxel_grid(stream, window, 5); }));
  return report;
}

void write_bench_csv(const BenchReport& report, std::ostream& out) {
  out << "case,param,median,p95\n";
  for (const auto& row : report.rows) {
    out << row.name << ',' << row.param << ',' << row.median << ',' << row.p95 << '\n';
  }
}

}  // namespace tore::cli

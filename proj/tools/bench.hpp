#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tore/event.hpp"

namespace tore::cli {

struct BenchOptions {
  std::optional<EventStream> stream;  // synthetic stream when empty
  std::size_t synthetic_events = 1'000'000;
  SensorGeometry geometry{346, 260};
  std::uint64_t seed = 1;
  int reps = 5;
  int ingest_depth = 7;
  std::vector<int> render_depths{1, 4, 7, 16};
};

struct BenchRow {
  std::string name;
  std::string param;
  double median = 0.0;
  double p95 = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  double ingest_events_per_second = 0.0;  // median
};

BenchReport run_bench(const BenchOptions& options);
void write_bench_csv(const BenchReport& report, std::ostream& out);

}  // namespace tore::cli

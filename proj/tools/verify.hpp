#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "tore/event.hpp"

namespace tore::cli {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int streams = 10;
  std::size_t events = 20'000;
  SensorGeometry geometry{64, 64};
  std::vector<int> depths{1, 4, 7};
  // Debug hook: renders one microsecond late so the harness has something to catch.
  bool inject_off_by_one = false;
};

struct VerifyResult {
  bool passed = true;
  int checks_run = 0;
  int checks_failed = 0;
};

/// Randomized oracle, shift-invariance, bounds and ordering checks. Writes a
/// deterministic report (one line per check) and, on the first oracle
/// mismatch, a minimized counterexample.
VerifyResult run_verification(const VerifyOptions& options, std::ostream& report);

}  // namespace tore::cli

#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <bit>
#include <string>

#include "tore/oracle.hpp"
#include "tore/tore_render.hpp"

namespace tore::cli {
namespace {

struct Mismatch {
  int c = 0, k = 0, y = 0, x = 0;
  double expected = 0.0;
  double actual = 0.0;
};

class Harness {
 public:
  Harness(const VerifyOptions& options) : options_(options) {}

  ToreVolume render(const std::vector<Event>& events, const SensorGeometry& geometry,
                    const ToreConfig& config, Timestamp t) const {
    SensorState state(geometry, config);
    state.ingest(validate_stream(events, geometry));
    return render_volume(state, options_.inject_off_by_one ? t + 1 : t);
  }

  std::optional<Mismatch> compare(const std::vector<Event>& events, const SensorGeometry& geometry,
                                  const ToreConfig& config, Timestamp t) const {
    const auto actual = render(events, geometry, config, t);
    const auto expected = oracle::tore_volume(events, geometry, config, t);
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (std::bit_cast<std::uint64_t>(expected.data[i]) ==
          std::bit_cast<std::uint64_t>(actual.tensor.data[i])) {
        continue;
      }
      Mismatch m;
      std::size_t rest = i;
      m.x = static_cast<int>(rest % geometry.width);
      rest /= geometry.width;
      m.y = static_cast<int>(rest % geometry.height);
      rest /= geometry.height;
      m.k = static_cast<int>(rest % config.depth);
      m.c = static_cast<int>(rest / config.depth);
      m.expected = expected.data[i];
      m.actual = actual.tensor.data[i];
      return m;
    }
    return std::nullopt;
  }

  // Smallest event list (by greedy removal) that still mismatches at the
  // reported cell.
  std::vector<Event> minimize(const std::vector<Event>& events, const SensorGeometry& geometry,
                              const ToreConfig& config, Timestamp t, const Mismatch& m) const {
    std::vector<Event> subset;
    for (const Event& e : events) {
      if (e.x == m.x && e.y == m.y && channel(e.p) == m.c) subset.push_back(e);
    }
    if (!compare(subset, geometry, config, t)) return events;
    for (std::size_t i = 0; i < subset.size();) {
      auto candidate = subset;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      if (compare(candidate, geometry, config, t)) {
        subset = std::move(candidate);
      } else {
        ++i;
      }
    }
    return subset;
  }

 private:
  const VerifyOptions& options_;
};

void line(std::ostream& out, bool ok, const std::string& name, const std::string& detail) {
  out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << '\n';
}

}  // namespace

VerifyResult run_verification(const VerifyOptions& options, std::ostream& report) {
  VerifyResult result;
  const Harness harness(options);
  std::mt19937_64 rng(options.seed);
  const SensorGeometry geometry = options.geometry;
  report << std::setprecision(17);
  report << "verify seed=" << options.seed << " streams=" << options.streams
         << " events=" << options.events << " size=" << geometry.width << "x" << geometry.height
         << '\n';

  const auto record = [&](bool ok) {
    ++result.checks_run;
    if (!ok) {
      ++result.checks_failed;
      result.passed = false;
    }
  };

  bool counterexample_dumped = false;
  for (int s = 0; s < options.streams; ++s) {
    ToreConfig config;
    config.depth = options.depths[static_cast<std::size_t>(s) % options.depths.size()];
    oracle::RandomStreamSpec spec;
    spec.geometry = geometry;
    spec.events = options.events;
    spec.max_gap_us = 1 + static_cast<Timestamp>(rng() % 200);
    spec.seed = rng();
    const auto events = oracle::random_events(spec);
    const Timestamp last = events.empty() ? 0 : events.back().t;
    const Timestamp t = last + static_cast<Timestamp>(rng() % 1'000);
    const std::string tag = "stream " + std::to_string(s) + " K=" + std::to_string(config.depth);

    // Incremental state + renderer against the brute-force history oracle.
    const auto mismatch = harness.compare(events, geometry, config, t);
    record(!mismatch);
    if (mismatch) {
      std::ostringstream detail;
      detail << std::setprecision(17) << tag << " t=" << t << " cell (c=" << mismatch->c
             << ", k=" << mismatch->k << ", y=" << mismatch->y << ", x=" << mismatch->x
             << ") expected " << mismatch->expected << " got " << mismatch->actual;
      line(report, false, "incremental-vs-batch", detail.str());
      if (!counterexample_dumped) {
        counterexample_dumped = true;
        const auto minimal = harness.minimize(events, geometry, config, t, *mismatch);
        report << "counterexample: K=" << config.depth << " tau_us=" << config.tau_us
               << " tau_prime_us=" << config.tau_prime_us << " query_t=" << t << " events("
               << minimal.size() << ")=";
        for (const Event& e : minimal) {
          report << " (" << e.x << "," << e.y << "," << e.t << "," << sign(e.p) << ")";
        }
        report << '\n';
      }
    } else {
      line(report, true, "incremental-vs-batch", tag + " t=" + std::to_string(t));
    }

    const auto volume = harness.render(events, geometry, config, t);
    const LogTimeClamp clamp(config);
    bool bounds_ok = true;
    for (const double v : volume.tensor.data) {
      bounds_ok = bounds_ok && v >= clamp.log_tau_prime() && v <= clamp.log_tau();
    }
    record(bounds_ok);
    line(report, bounds_ok, "bounds", tag);

    bool k_ok = true;
    for (int c = 0; c < 2 && k_ok; ++c) {
      for (int k = 1; k < config.depth && k_ok; ++k) {
        for (int y = 0; y < geometry.height && k_ok; ++y) {
          for (int x = 0; x < geometry.width && k_ok; ++x) {
            k_ok = volume.at(c, k - 1, y, x) <= volume.at(c, k, y, x);
          }
        }
      }
    }
    record(k_ok);
    line(report, k_ok, "k-ordering", tag);

    const Timestamp delta = static_cast<Timestamp>(rng() % 1'000'000'001);
    auto shifted = events;
    for (Event& e : shifted) e.t += delta;
    const bool shift_ok = harness.render(shifted, geometry, config, t + delta).tensor == volume.tensor;
    record(shift_ok);
    line(report, shift_ok, "shift-invariance", tag + " delta=" + std::to_string(delta));
  }
  report << (result.passed ? "OK " : "FAILED ") << result.checks_run - result.checks_failed << "/"
         << result.checks_run << " checks passed\n";
  return result;
}

}  // namespace tore::cli

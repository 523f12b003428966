#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bench.hpp"
#include "json.hpp"
#include "tore/baselines.hpp"
#include "tore/error.hpp"
#include "tore/simulator.hpp"
#include "tore/tensor_io.hpp"
#include "tore/tore_render.hpp"
#include "verify.hpp"

namespace tore::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SensorGeometry parse_size(const std::string& text) {
  const auto sep = text.find('x');
  if (sep == std::string::npos) throw UsageError("size must look like WxH, got '" + text + "'");
  try {
    std::size_t used_w = 0, used_h = 0;
    const std::string w = text.substr(0, sep), h = text.substr(sep + 1);
    SensorGeometry g{std::stoi(w, &used_w), std::stoi(h, &used_h)};
    if (used_w != w.size() || used_h != h.size()) throw std::invalid_argument(text);
    check_geometry(g);
    return g;
  } catch (const std::logic_error&) {
    throw UsageError("size must look like WxH, got '" + text + "'");
  }
}

std::pair<Timestamp, Timestamp> parse_span(const std::string& text) {
  const auto sep = text.find(':');
  if (sep == std::string::npos) throw UsageError("span must look like T0:T1, got '" + text + "'");
  try {
    const Timestamp t0 = std::stoll(text.substr(0, sep));
    const Timestamp t1 = std::stoll(text.substr(sep + 1));
    if (t1 < t0) throw UsageError("span end before start: '" + text + "'");
    return {t0, t1};
  } catch (const std::logic_error&) {
    throw UsageError("span must look like T0:T1, got '" + text + "'");
  }
}

const std::map<std::string, TimestampPolicy> kPolicies{{"reject", TimestampPolicy::kReject},
                                                       {"clamp", TimestampPolicy::kClamp}};
const std::map<std::string, PolarityConvention> kConventions{
    {"binary", PolarityConvention::kBinary}, {"signed", PolarityConvention::kSigned}};
io::DType parse_dtype(const std::string& name) {
  return name == "f32" ? io::DType::kF32 : io::DType::kF64;
}

void add_dtype_option(CLI::App& app, std::string& dtype) {
  app.add_option("--dtype", dtype, "Tensor element type: f64 | f32")
      ->check(CLI::IsMember({"f64", "f32"}))
      ->capture_default_str();
}

// Options shared by the subcommands that read event files.
struct InputFlags {
  std::string events;
  std::string size;  // CSV only
  std::string convention_name = "binary";
  std::string policy_label = "reject";

  PolarityConvention convention() const { return kConventions.at(convention_name); }
  TimestampPolicy policy() const { return kPolicies.at(policy_label); }

  void add(CLI::App& app) {
    app.add_option("--events", events, "Event file (.evt binary or .csv t,x,y,p)")
        ->required()
        ->check(CLI::ExistingFile);
    app.add_option("--size", size, "Sensor size WxH (CSV input only)");
    app.add_option("--polarity", convention_name, "CSV polarity convention: binary | signed")
        ->check(CLI::IsMember({"binary", "signed"}))
        ->capture_default_str();
    app.add_option("--policy", policy_label, "Out-of-order timestamps: reject | clamp")
        ->check(CLI::IsMember({"reject", "clamp"}))
        ->capture_default_str();
  }

  EventStream load() const {
    if (fs::path(events).extension() == ".csv") {
      if (size.empty()) throw UsageError("--size is required for CSV input");
      return io::read_events_csv(events, parse_size(size), convention(), policy());
    }
    return io::read_events_binary(events, policy());
  }

  json to_json() const {
    json j{{"events", events}, {"policy", policy_label}};
    if (!size.empty()) {
      j["size"] = size;
      j["polarity"] = convention_name;
    }
    return j;
  }
};

struct ToreFlags {
  int depth;
  Timestamp tau_us = 5'000'000;
  Timestamp tau_prime_us = 150;

  explicit ToreFlags(int default_depth) : depth(default_depth) {}

  void add(CLI::App& app) {
    app.add_option("--k", depth, "FIFO depth K")->capture_default_str();
    app.add_option("--tau-us", tau_us, "Maximum memory retention (us)")->capture_default_str();
    app.add_option("--tau-prime-us", tau_prime_us, "Minimum time sensitivity (us)")
        ->capture_default_str();
  }

  ToreConfig config(TimestampPolicy policy) const {
    ToreConfig c{depth, tau_us, tau_prime_us, policy};
    check_config(c);
    return c;
  }

  json to_json() const { return {{"k", depth}, {"tau_us", tau_us}, {"tau_prime_us", tau_prime_us}}; }
};

fs::path manifest_path_for(const fs::path& output) {
  if (fs::is_directory(output) || !output.has_extension()) return output / "manifest.json";
  return fs::path(output.string() + ".manifest.json");
}

void refuse_overwrite(const std::vector<fs::path>& paths, bool force) {
  if (force) return;
  for (const auto& p : paths) {
    if (fs::exists(p)) throw UsageError("refusing to overwrite " + p.string() + " (use --force)");
  }
}

void write_manifest(const fs::path& path, const std::string& subcommand,
                    const std::vector<std::string>& args, json parameters,
                    const std::vector<fs::path>& outputs) {
  json manifest;
  manifest["tool"] = "tore";
  manifest["version"] = kToolVersion;
  manifest["subcommand"] = subcommand;
  std::vector<std::string> replay_args;
  for (const auto& a : args) {
    if (a != "--force") replay_args.push_back(a);
  }
  manifest["args"] = replay_args;
  manifest["parameters"] = std::move(parameters);
  json files = json::array();
  for (const auto& o : outputs) files.push_back(o.filename().string());
  manifest["outputs"] = files;
  io::write_file(path, manifest.dump(2) + "\n");
}

std::string time_tag(Timestamp t) { return std::to_string(t); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"TORE volume engine: per-pixel FIFO event state and time-ordered recent event volumes",
               "tore"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  bool force = false;

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Generate events from an analytic log-intensity signal");
  std::string signal_name = "ramp";
  double slope = 0.001, offset = 0.0, amplitude = 1.0, period_us = 10'000.0, phase_us = 0.0;
  double jitter = 0.0;
  std::vector<Timestamp> step_times;
  std::vector<double> step_heights;
  double epsilon = 0.1;
  Timestamp t_start = 0, duration = 1'000'000, tick_us = 1;
  std::string sim_size = "1x1", sim_out = "events.evt", sim_csv;
  std::size_t noise_events = 0;
  std::uint64_t seed = 1;
  simulate->add_option("--signal", signal_name, "constant | ramp | sinusoid | step")->capture_default_str();
  simulate->add_option("--slope", slope, "Ramp slope (log-intensity per us)")->capture_default_str();
  simulate->add_option("--offset", offset, "Signal offset at t=0");
  simulate->add_option("--amplitude", amplitude, "Sinusoid amplitude");
  simulate->add_option("--period-us", period_us, "Sinusoid period (us)");
  simulate->add_option("--phase-us", phase_us, "Sinusoid phase (us)");
  simulate->add_option("--step-times-us", step_times, "Step train times (us)");
  simulate->add_option("--step-heights", step_heights, "Step train heights");
  simulate->add_option("--jitter", jitter,
                       "Per-pixel relative spread of slope/amplitude/heights (seeded)");
  simulate->add_option("--eps", epsilon, "Contrast threshold")->capture_default_str();
  simulate->add_option("--t-start-us", t_start, "Simulation start (us)");
  simulate->add_option("--dur", duration, "Simulation duration (us)")->capture_default_str();
  simulate->add_option("--tick-us", tick_us, "Timestamp quantization (us)");
  simulate->add_option("--size", sim_size, "Sensor size WxH")->capture_default_str();
  simulate->add_option("--noise-events", noise_events, "Extra uniformly placed noise events");
  simulate->add_option("--seed", seed, "Seed for jitter and noise");
  simulate->add_option("--out", sim_out, "Binary event file to write")->capture_default_str();
  simulate->add_option("--csv", sim_csv, "Also write events as CSV");

  // render
  auto* render = app.add_subcommand("render", "Render full-frame TORE volumes at query times");
  InputFlags render_input;
  render_input.add(*render);
  ToreFlags render_tore(4);
  render_tore.add(*render);
  std::vector<Timestamp> at_times;
  double rate_hz = 0.0;
  std::string span, render_out = "volumes", render_dtype = "f64";
  bool unclamped = false;
  render->add_option("--at", at_times, "Query time (us); repeatable, must be non-decreasing");
  render->add_option("--rate", rate_hz, "Query rate (Hz), used with --span");
  render->add_option("--span", span, "Query span T0:T1 (us), used with --rate");
  render->add_option("--out-dir", render_out, "Output directory")->capture_default_str();
  add_dtype_option(*render, render_dtype);
  render->add_flag("--unclamped", unclamped, "Skip the tau/tau' clamps (ablation)");

  // patch
  auto* patch = app.add_subcommand("patch", "Render m x m TORE patches around selected events");
  InputFlags patch_input;
  patch_input.add(*patch);
  ToreFlags patch_tore(7);
  patch_tore.add(*patch);
  int side = 9;
  std::vector<std::size_t> indices;
  std::size_t every = 0;
  bool exclude_event = false;
  std::string patch_out = "patches";
  std::string patch_dtype = "f64";
  patch->add_option("--m", side, "Patch side (odd)")->capture_default_str();
  patch->add_option("--index", indices, "Event index to extract; repeatable");
  patch->add_option("--every", every, "Extract a patch every N events");
  patch->add_flag("--exclude-event", exclude_event,
                  "Render before inserting the event of interest (ablation)");
  patch->add_option("--out-dir", patch_out, "Output directory")->capture_default_str();
  add_dtype_option(*patch, patch_dtype);

  // baseline
  auto* baseline = app.add_subcommand("baseline", "Windowed baseline representations");
  std::string representation;
  InputFlags baseline_input;
  baseline_input.add(*baseline);
  Timestamp window_us = 0, end_us = 0;
  int bins = 5;
  double sentinel = 0.0;
  std::string baseline_out;
  std::string baseline_dtype = "f64";
  baseline->add_option("representation", representation, "frame | count | sae | voxel")->required();
  baseline->add_option("--window", window_us, "Window length (us)");
  baseline->add_option("--end", end_us, "Window end (us)")->required();
  baseline->add_option("--bins", bins, "Voxel grid bins")->capture_default_str();
  baseline->add_option("--sentinel", sentinel, "SAE value for never-fired pixels");
  baseline->add_option("--out", baseline_out, "Tensor file to write (default <name>.tor)");
  add_dtype_option(*baseline, baseline_dtype);

  // bench
  auto* bench = app.add_subcommand("bench", "Throughput and latency report (CSV)");
  std::string bench_events, bench_size = "346x260", bench_out;
  BenchOptions bench_options;
  bench->add_option("--events", bench_events, "Event file; synthetic stream when omitted")
      ->check(CLI::ExistingFile);
  bench->add_option("--n-events", bench_options.synthetic_events, "Synthetic stream length")
      ->capture_default_str();
  bench->add_option("--size", bench_size, "Synthetic sensor size WxH")->capture_default_str();
  bench->add_option("--seed", bench_options.seed, "Synthetic stream seed");
  bench->add_option("--reps", bench_options.reps, "Repetitions per case")->capture_default_str();
  bench->add_option("--k", bench_options.ingest_depth, "FIFO depth for the ingest case")
      ->capture_default_str();
  bench->add_option("--k-sweep", bench_options.render_depths, "Depths for render latency rows");
  bench->add_option("--out", bench_out, "CSV file (stdout when omitted)");

  // verify
  auto* verify = app.add_subcommand("verify", "Randomized oracle and invariant checks");
  VerifyOptions verify_options;
  std::string verify_size = "64x64";
  verify->add_option("--seed", verify_options.seed, "Seed")->capture_default_str();
  verify->add_option("--streams", verify_options.streams, "Random streams")->capture_default_str();
  verify->add_option("--n-events", verify_options.events, "Events per stream")->capture_default_str();
  verify->add_option("--size", verify_size, "Sensor size WxH")->capture_default_str();
  verify->add_flag("--inject-off-by-one", verify_options.inject_off_by_one,
                   "Render one microsecond late to exercise the failure path");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
  std::string manifest_file;
  replay->add_option("manifest", manifest_file, "Manifest JSON")->required()->check(CLI::ExistingFile);

  for (auto* sub : {simulate, render, patch, baseline, bench, verify, replay}) {
    sub->add_flag("--force", force, "Overwrite existing outputs and manifests");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      const SensorGeometry geometry = parse_size(sim_size);
      sim::SimConfig config;
      config.epsilon = epsilon;
      config.t_start = t_start;
      config.t_end = t_start + duration;
      config.geometry = geometry;
      config.tick_us = tick_us;
      config.noise = {noise_events, seed};

      const sim::SignalKind kind = sim::parse_signal_kind(signal_name);
      if (kind == sim::SignalKind::kStepTrain && step_times.size() != step_heights.size()) {
        throw UsageError("--step-times-us and --step-heights need the same length");
      }
      std::mt19937_64 rng(seed);
      const auto spread = [&] {
        if (jitter == 0.0) return 1.0;
        const double u = static_cast<double>(rng() >> 11) / 9007199254740992.0;  // [0, 1)
        return 1.0 + jitter * (2.0 * u - 1.0);
      };
      const std::size_t count = jitter == 0.0 ? 1 : geometry.pixels();
      sim::IntensitySignal signal;
      for (std::size_t i = 0; i < count; ++i) {
        switch (kind) {
          case sim::SignalKind::kConstant:
            signal.pixels.push_back(sim::Constant{offset});
            break;
          case sim::SignalKind::kLinearRamp:
            signal.pixels.push_back(sim::LinearRamp{slope * spread(), offset});
            break;
          case sim::SignalKind::kSinusoid:
            signal.pixels.push_back(sim::Sinusoid{amplitude * spread(), period_us, phase_us, offset});
            break;
          case sim::SignalKind::kStepTrain: {
            sim::StepTrain train{offset, {}};
            const double scale = spread();
            for (std::size_t s = 0; s < step_times.size(); ++s) {
              train.steps.push_back({step_times[s], step_heights[s] * scale});
            }
            std::sort(train.steps.begin(), train.steps.end(),
                      [](const auto& a, const auto& b) { return a.t < b.t; });
            signal.pixels.push_back(std::move(train));
            break;
          }
        }
      }

      sim::check_config(config, signal);
      std::vector<fs::path> outputs{sim_out};
      if (!sim_csv.empty()) outputs.push_back(sim_csv);
      const fs::path manifest = manifest_path_for(sim_out);
      auto guarded = outputs;
      guarded.push_back(manifest);
      refuse_overwrite(guarded, force);

      const EventStream stream = sim::simulate(signal, config);
      io::write_events_binary(stream, sim_out);
      if (!sim_csv.empty()) io::write_events_csv(stream, sim_csv);
      write_manifest(manifest, "simulate", args,
                     {{"signal", signal_name},
                      {"slope", slope},
                      {"offset", offset},
                      {"amplitude", amplitude},
                      {"period_us", period_us},
                      {"phase_us", phase_us},
                      {"step_times_us", step_times},
                      {"step_heights", step_heights},
                      {"jitter", jitter},
                      {"eps", epsilon},
                      {"t_start_us", t_start},
                      {"t_end_us", config.t_end},
                      {"tick_us", tick_us},
                      {"size", sim_size},
                      {"noise_events", noise_events},
                      {"seed", seed},
                      {"event_count", stream.size()}},
                     outputs);
      out << "wrote " << stream.size() << " events to " << sim_out << '\n';
      return kExitOk;
    }

    if (render->parsed()) {
      std::vector<Timestamp> times = at_times;
      if (!span.empty() || rate_hz != 0.0) {
        if (!at_times.empty()) throw UsageError("use either --at or --rate/--span, not both");
        if (span.empty() || !(rate_hz > 0.0)) throw UsageError("--rate needs --span and a rate > 0");
        const auto [t0, t1] = parse_span(span);
        const double period = 1e6 / rate_hz;
        for (long long i = 0;; ++i) {
          const Timestamp t = t0 + std::llround(static_cast<double>(i) * period);
          if (t > t1) break;
          times.push_back(t);
        }
      }
      if (times.empty()) throw UsageError("no query times: give --at or --rate with --span");
      for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] < times[i - 1]) {
          throw Error(ErrorCode::kUnsortedQueryTimes,
                      "query time " + std::to_string(times[i]) + " after " +
                          std::to_string(times[i - 1]));
        }
      }
      const ToreConfig config = render_tore.config(render_input.policy());
      const fs::path dir = render_out;
      std::vector<fs::path> outputs;
      for (const Timestamp t : times) outputs.push_back(dir / ("tore_" + time_tag(t) + ".tor"));
      outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
      auto guarded = outputs;
      guarded.push_back(dir / "manifest.json");
      refuse_overwrite(guarded, force);

      const EventStream stream = render_input.load();
      std::vector<ToreVolume> volumes;
      if (unclamped) {
        SensorState state(stream.geometry(), config);
        std::size_t next = 0;
        for (const Timestamp t : times) {
          for (; next < stream.size() && stream[next].t <= t; ++next) state.insert(stream[next]);
          volumes.push_back(render_unclamped(state, t));
        }
      } else {
        volumes = render_series(stream, config, times);
      }
      fs::create_directories(dir);
      for (const auto& v : volumes) {
        io::write_tensor(v.tensor, dir / ("tore_" + time_tag(v.query_time) + ".tor"),
                         parse_dtype(render_dtype));
      }
      json params = render_input.to_json();
      params.update(render_tore.to_json());
      params["times_us"] = times;
      params["dtype"] = render_dtype;
      params["unclamped"] = unclamped;
      write_manifest(dir / "manifest.json", "render", args, params, outputs);
      out << "wrote " << outputs.size() << " volumes [2," << config.depth << ","
          << stream.geometry().height << "," << stream.geometry().width << "] to " << dir.string()
          << '\n';
      return kExitOk;
    }

    if (patch->parsed()) {
      if (side < 1 || side % 2 == 0) {
        throw Error(ErrorCode::kEvenPatchSize,
                    "patch side must be a positive odd number, got " + std::to_string(side));
      }
      const ToreConfig config = patch_tore.config(patch_input.policy());
      const EventStream stream = patch_input.load();
      std::vector<std::size_t> selected = indices;
      if (every > 0) {
        for (std::size_t i = 0; i < stream.size(); i += every) selected.push_back(i);
      }
      if (selected.empty()) throw UsageError("select events with --index or --every");
      std::sort(selected.begin(), selected.end());
      selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
      if (selected.back() >= stream.size()) {
        throw UsageError("event index " + std::to_string(selected.back()) + " beyond stream of " +
                         std::to_string(stream.size()));
      }
      const fs::path dir = patch_out;
      std::vector<fs::path> outputs;
      for (const auto i : selected) outputs.push_back(dir / ("patch_" + std::to_string(i) + ".tor"));
      auto guarded = outputs;
      guarded.push_back(dir / "manifest.json");
      refuse_overwrite(guarded, force);

      fs::create_directories(dir);
      SensorState state(stream.geometry(), config);
      std::size_t next = 0;
      for (std::size_t n = 0; n < selected.size(); ++n) {
        const std::size_t index = selected[n];
        for (; next < index; ++next) state.insert(stream[next]);
        const Event& e = stream[index];
        TorePatch p;
        if (exclude_event) {
          p = render_patch(state, e, side, PatchEventMode::kExcluded);
        } else {
          state.insert(e);
          ++next;
          p = render_patch(state, e, side, PatchEventMode::kIncluded);
        }
        io::write_tensor(p.tensor, outputs[n], parse_dtype(patch_dtype));
      }
      json params = patch_input.to_json();
      params.update(patch_tore.to_json());
      params["m"] = side;
      params["indices"] = selected;
      params["exclude_event"] = exclude_event;
      params["dtype"] = patch_dtype;
      write_manifest(dir / "manifest.json", "patch", args, params, outputs);
      out << "wrote " << outputs.size() << " patches [2," << config.depth << "," << side << ","
          << side << "] to " << dir.string() << '\n';
      return kExitOk;
    }

    if (baseline->parsed()) {
      static const std::vector<std::string> kNames{"frame", "count", "sae", "voxel"};
      if (std::find(kNames.begin(), kNames.end(), representation) == kNames.end()) {
        throw UsageError("unknown representation '" + representation +
                         "'; valid names: frame, count, sae, voxel");
      }
      if (representation != "sae" && window_us <= 0) {
        throw UsageError("--window is required for " + representation);
      }
      const fs::path target = baseline_out.empty() ? fs::path(representation + ".tor") : fs::path(baseline_out);
      std::vector<fs::path> outputs{target};
      if (representation == "sae") {
        outputs.push_back(target.parent_path() / (target.stem().string() + "_mask.tor"));
      }
      auto guarded = outputs;
      guarded.push_back(manifest_path_for(target));
      refuse_overwrite(guarded, force);

      const EventStream stream = baseline_input.load();
      const WindowSpec window{end_us, window_us};
      if (representation == "frame") {
        io::write_tensor(event_frame(stream, window), target, parse_dtype(baseline_dtype));
      } else if (representation == "count") {
        io::write_tensor(event_count(stream, window), target, parse_dtype(baseline_dtype));
      } else if (representation == "voxel") {
        io::write_tensor(voxel_grid(stream, window, bins), target, parse_dtype(baseline_dtype));
      } else {
        const SaeImage sae = surface_of_active_events(stream, end_us, sentinel);
        io::write_tensor(sae.timestamps, target, parse_dtype(baseline_dtype));
        io::write_tensor(sae.valid, outputs[1], parse_dtype(baseline_dtype));
      }
      json params = baseline_input.to_json();
      params["representation"] = representation;
      params["window_us"] = window_us;
      params["end_us"] = end_us;
      if (representation == "voxel") params["bins"] = bins;
      if (representation == "sae") params["sentinel"] = sentinel;
      write_manifest(manifest_path_for(target), "baseline", args, params, outputs);
      out << "wrote " << representation << " to " << target.string() << '\n';
      return kExitOk;
    }

    if (bench->parsed()) {
      if (!bench_events.empty()) {
        InputFlags input;
        input.events = bench_events;
        input.size = bench_size;
        bench_options.stream = input.load();
      } else {
        bench_options.geometry = parse_size(bench_size);
      }
      const BenchReport report = run_bench(bench_options);
      if (bench_out.empty()) {
        write_bench_csv(report, out);
      } else {
        refuse_overwrite({bench_out}, force);
        std::ostringstream csv;
        write_bench_csv(report, csv);
        io::write_file(bench_out, csv.str());
        out << "wrote " << report.rows.size() << " rows to " << bench_out << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      verify_options.geometry = parse_size(verify_size);
      if (verify_options.streams < 1) throw UsageError("--streams must be >= 1");
      const VerifyResult result = run_verification(verify_options, out);
      return result.passed ? kExitOk : kExitVerifyFailed;
    }

    if (replay->parsed()) {
      const json manifest = json::parse(io::read_file(manifest_file));
      auto replay_args = manifest.at("args").get<std::vector<std::string>>();
      if (force) replay_args.push_back("--force");
      return run(replay_args, out, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: bad manifest: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tore::cli

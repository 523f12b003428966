#include "tore/tensor_io.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string_view>
#include <tuple>
#include <vector>

#include "tore/error.hpp"

namespace tore::io {
namespace {

constexpr std::string_view kEventMagic = "EVT1";
constexpr std::string_view kTensorMagic = "TOR1";
constexpr std::string_view kCheckpointMagic = "TCK1";
constexpr std::size_t kEventRecordSize = 8 + 2 + 2 + 1;

class ByteWriter {
 public:
  void bytes(std::string_view s) { out_.append(s); }
  void u8(std::uint8_t v) { out_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { uint(v, 2); }
  void u32(std::uint32_t v) { uint(v, 4); }
  void u64(std::uint64_t v) { uint(v, 8); }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  void f32(float v) { u32(std::bit_cast<std::uint32_t>(v)); }
  std::string take() { return std::move(out_); }
  void reserve(std::size_t n) { out_.reserve(n); }

 private:
  void uint(std::uint64_t v, int width) {
    for (int i = 0; i < width; ++i) out_.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
  }
  std::string out_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  void magic(std::string_view expected) {
    if (data_.size() < expected.size() || data_.substr(0, expected.size()) != expected) {
      throw Error(ErrorCode::kBadMagic, "expected magic '" + std::string(expected) + "'");
    }
    pos_ = expected.size();
  }
  std::uint8_t u8() { return static_cast<std::uint8_t>(uint(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(uint(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(uint(4)); }
  std::uint64_t u64() { return uint(8); }
  double f64() { return std::bit_cast<double>(u64()); }
  float f32() { return std::bit_cast<float>(u32()); }

  std::size_t remaining() const noexcept { return data_.size() - pos_; }

  // Declared payload size against what is left in the buffer.
  void expect_payload(std::size_t bytes) const {
    if (remaining() < bytes) {
      throw Error(ErrorCode::kTruncatedFile, "payload needs " + std::to_string(bytes) +
                                                 " bytes, " + std::to_string(remaining()) +
                                                 " present");
    }
    if (remaining() > bytes) {
      throw Error(ErrorCode::kCountMismatch, std::to_string(remaining() - bytes) +
                                                 " bytes beyond declared payload");
    }
  }

 private:
  std::uint64_t uint(int width) {
    if (remaining() < static_cast<std::size_t>(width)) {
      throw Error(ErrorCode::kTruncatedFile, "unexpected end of data at byte " +
                                                 std::to_string(pos_));
    }
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += width;
    return v;
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

void check_version(std::uint16_t found, std::uint16_t expected, std::string_view what) {
  if (found != expected) {
    throw Error(ErrorCode::kVersionMismatch, std::string(what) + " version " +
                                                 std::to_string(found) + ", expected " +
                                                 std::to_string(expected));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

bool parse_int(std::string_view s, long long& out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open " + path.string() + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

EventStream parse_events_csv(const std::string& text, const SensorGeometry& geometry,
                             PolarityConvention convention, TimestampPolicy policy) {
  std::vector<Event> events;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    long long values[4] = {};
    bool any_numeric = false;
    bool all_numeric = fields.size() == 4;
    for (std::size_t i = 0; i < fields.size(); ++i) {
      long long v = 0;
      const bool ok = parse_int(fields[i], v);
      any_numeric = any_numeric || ok;
      if (i < 4 && ok) values[i] = v;
      all_numeric = all_numeric && ok;
    }
    if (events.empty() && !any_numeric && line_no == 1) continue;  // header
    if (!all_numeric) {
      throw Error(ErrorCode::kParseError, "expected 't,x,y,p' integers, got '" +
                                              std::string(line) + "'")
          .with_line(line_no);
    }
    const auto [t, x, y, p] = std::tuple(values[0], values[1], values[2], values[3]);
    if (x < 0 || y < 0 || x >= geometry.width || y >= geometry.height) {
      throw Error(ErrorCode::kOutOfBoundsEvent,
                  "event at (" + std::to_string(x) + "," + std::to_string(y) + ")")
          .with_line(line_no);
    }
    try {
      events.push_back(Event{static_cast<std::uint16_t>(x), static_cast<std::uint16_t>(y), t,
                             normalize_polarity(static_cast<int>(p), convention)});
    } catch (const Error& err) {
      throw err.with_line(line_no);
    }
  }
  return validate_stream(std::move(events), geometry, policy);
}

EventStream read_events_csv(const std::filesystem::path& path, const SensorGeometry& geometry,
                            PolarityConvention convention, TimestampPolicy policy) {
  return parse_events_csv(read_file(path), geometry, convention, policy);
}

void write_events_csv(const EventStream& stream, const std::filesystem::path& path) {
  std::string out = "t,x,y,p\n";
  for (const Event& e : stream) {
    out += std::to_string(e.t) + ',' + std::to_string(e.x) + ',' + std::to_string(e.y) + ',' +
           (e.p == Polarity::kPositive ? '1' : '0') + '\n';
  }
  write_file(path, out);
}

std::string encode_events(const EventStream& stream) {
  ByteWriter w;
  w.reserve(19 + stream.size() * kEventRecordSize);
  w.bytes(kEventMagic);
  w.u16(kEventFileVersion);
  w.u16(static_cast<std::uint16_t>(stream.geometry().width));
  w.u16(static_cast<std::uint16_t>(stream.geometry().height));
  w.u8(static_cast<std::uint8_t>(PolarityConvention::kBinary));
  w.u64(stream.size());
  for (const Event& e : stream) {
    w.u64(static_cast<std::uint64_t>(e.t));
    w.u16(e.x);
    w.u16(e.y);
    w.u8(e.p == Polarity::kPositive ? 1 : 0);
  }
  return w.take();
}

EventStream decode_events(const std::string& bytes, TimestampPolicy policy) {
  ByteReader r(bytes);
  r.magic(kEventMagic);
  check_version(r.u16(), kEventFileVersion, "event file");
  SensorGeometry geometry;
  geometry.width = r.u16();
  geometry.height = r.u16();
  const std::uint8_t convention_byte = r.u8();
  if (convention_byte > 1) {
    throw Error(ErrorCode::kParseError,
                "unknown polarity convention " + std::to_string(convention_byte));
  }
  const auto convention = static_cast<PolarityConvention>(convention_byte);
  const std::uint64_t count = r.u64();
  if (count > r.remaining() / kEventRecordSize) {
    throw Error(ErrorCode::kTruncatedFile, "header declares " + std::to_string(count) +
                                               " events, file holds fewer");
  }
  r.expect_payload(count * kEventRecordSize);

  std::vector<Event> events(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Event& e = events[i];
    const std::uint64_t t = r.u64();
    if (t > static_cast<std::uint64_t>(std::numeric_limits<Timestamp>::max())) {
      throw Error(ErrorCode::kParseError, "timestamp overflow").with_event_index(i);
    }
    e.t = static_cast<Timestamp>(t);
    e.x = r.u16();
    e.y = r.u16();
    const std::uint8_t p = r.u8();
    const int raw = convention == PolarityConvention::kSigned ? static_cast<std::int8_t>(p) : p;
    try {
      e.p = normalize_polarity(raw, convention);
    } catch (const Error& err) {
      throw err.with_event_index(i);
    }
  }
  return validate_stream(std::move(events), geometry, policy);
}

void write_events_binary(const EventStream& stream, const std::filesystem::path& path) {
  write_file(path, encode_events(stream));
}

EventStream read_events_binary(const std::filesystem::path& path, TimestampPolicy policy) {
  return decode_events(read_file(path), policy);
}

std::string encode_tensor(const Tensor& tensor, DType dtype) {
  if (tensor.dims.size() > 255) throw Error(ErrorCode::kInvalidConfig, "tensor rank > 255");
  if (Tensor::element_count(tensor.dims) != tensor.data.size()) {
    throw Error(ErrorCode::kCountMismatch, "tensor data does not match its dims");
  }
  ByteWriter w;
  w.reserve(8 + 4 * tensor.dims.size() + tensor.data.size() * (dtype == DType::kF64 ? 8 : 4));
  w.bytes(kTensorMagic);
  w.u16(kTensorFileVersion);
  w.u8(static_cast<std::uint8_t>(dtype));
  w.u8(static_cast<std::uint8_t>(tensor.dims.size()));
  for (const std::uint32_t d : tensor.dims) w.u32(d);
  if (dtype == DType::kF64) {
    for (const double v : tensor.data) w.f64(v);
  } else {
    for (const double v : tensor.data) w.f32(static_cast<float>(v));
  }
  return w.take();
}

Tensor decode_tensor(const std::string& bytes) {
  ByteReader r(bytes);
  r.magic(kTensorMagic);
  check_version(r.u16(), kTensorFileVersion, "tensor file");
  const std::uint8_t dtype_byte = r.u8();
  if (dtype_byte > 1) {
    throw Error(ErrorCode::kParseError, "unknown dtype " + std::to_string(dtype_byte));
  }
  const auto dtype = static_cast<DType>(dtype_byte);
  const std::uint8_t rank = r.u8();
  Tensor tensor;
  tensor.dims.resize(rank);
  for (auto& d : tensor.dims) d = r.u32();
  const std::size_t count = Tensor::element_count(tensor.dims);
  const std::size_t width = dtype == DType::kF64 ? 8 : 4;
  if (count > r.remaining() / width) {
    throw Error(ErrorCode::kTruncatedFile, "payload shorter than declared dims");
  }
  r.expect_payload(count * width);
  tensor.data.resize(count);
  for (auto& v : tensor.data) v = dtype == DType::kF64 ? r.f64() : static_cast<double>(r.f32());
  return tensor;
}

void write_tensor(const Tensor& tensor, const std::filesystem::path& path, DType dtype) {
  write_file(path, encode_tensor(tensor, dtype));
}

Tensor read_tensor(const std::filesystem::path& path) { return decode_tensor(read_file(path)); }

std::string encode_checkpoint(const SensorState& state) {
  const ToreConfig& config = state.config();
  ByteWriter w;
  w.reserve(46 + state.slot_count() * 8);
  w.bytes(kCheckpointMagic);
  w.u16(kCheckpointVersion);
  w.u16(static_cast<std::uint16_t>(state.geometry().width));
  w.u16(static_cast<std::uint16_t>(state.geometry().height));
  w.u32(static_cast<std::uint32_t>(config.depth));
  w.u64(static_cast<std::uint64_t>(config.tau_us));
  w.u64(static_cast<std::uint64_t>(config.tau_prime_us));
  w.u8(static_cast<std::uint8_t>(config.policy));
  const auto last = state.last_event_time();
  w.u8(last ? 1 : 0);
  w.u64(last ? static_cast<std::uint64_t>(*last) : 0);
  for (const Timestamp slot : state.slots()) {
    w.u64(slot == kEmptySlot ? kEmptySlotOnDisk : static_cast<std::uint64_t>(slot));
  }
  return w.take();
}

SensorState decode_checkpoint(const std::string& bytes) {
  ByteReader r(bytes);
  r.magic(kCheckpointMagic);
  check_version(r.u16(), kCheckpointVersion, "checkpoint");
  SensorGeometry geometry;
  geometry.width = r.u16();
  geometry.height = r.u16();
  ToreConfig config;
  config.depth = static_cast<int>(r.u32());
  config.tau_us = static_cast<Timestamp>(r.u64());
  config.tau_prime_us = static_cast<Timestamp>(r.u64());
  const std::uint8_t policy = r.u8();
  if (policy > 1) throw Error(ErrorCode::kParseError, "unknown timestamp policy");
  config.policy = static_cast<TimestampPolicy>(policy);
  const bool has_last = r.u8() != 0;
  const std::uint64_t last = r.u64();
  check_geometry(geometry);
  check_config(config);

  const std::size_t count = 2 * static_cast<std::size_t>(config.depth) * geometry.pixels();
  r.expect_payload(count * 8);
  std::vector<Timestamp> slots(count);
  for (auto& slot : slots) {
    const std::uint64_t v = r.u64();
    slot = v == kEmptySlotOnDisk ? kEmptySlot : static_cast<Timestamp>(v);
  }
  return SensorState::from_parts(geometry, config, std::move(slots),
                                 has_last ? std::optional<Timestamp>(static_cast<Timestamp>(last))
                                          : std::nullopt);
}

void checkpoint_state(const SensorState& state, const std::filesystem::path& path) {
  write_file(path, encode_checkpoint(state));
}

SensorState restore_state(const std::filesystem::path& path) {
  return decode_checkpoint(read_file(path));
}

}  // namespace tore::io

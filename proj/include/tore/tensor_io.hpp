#pragma once

// On-disk formats. All integers little-endian, fixed width, no padding.
//
// Event file ("EVT1"):
//   magic[4] version:u16 width:u16 height:u16 convention:u8 count:u64
//   count x { t:u64 x:u16 y:u16 p:u8 }
//   With convention 1 (binary) p is 1 for +1 and 0 for -1; with convention 0
//   (signed) p is the two's-complement byte of +1 / -1. Writers emit binary.
//
// Tensor file ("TOR1"):
//   magic[4] version:u16 dtype:u8 (0=f64, 1=f32) rank:u8 dims:rank x u32
//   row-major payload
//
// State checkpoint ("TCK1"):
//   magic[4] version:u16 width:u16 height:u16 depth:u32 tau_us:u64
//   tau_prime_us:u64 policy:u8 has_last:u8 last_event_time:u64
//   2*K*H*W x slot:u64 in [channel][k][y][x] order, empty = 0xFFFF'FFFF'FFFF'FFFF

#include <cstdint>
#include <filesystem>
#include <string>

#include "tore/event.hpp"
#include "tore/tensor.hpp"
#include "tore/tore_state.hpp"

namespace tore::io {

inline constexpr std::uint16_t kEventFileVersion = 1;
inline constexpr std::uint16_t kTensorFileVersion = 1;
inline constexpr std::uint16_t kCheckpointVersion = 1;
inline constexpr std::uint64_t kEmptySlotOnDisk = ~std::uint64_t{0};

enum class DType : std::uint8_t { kF64 = 0, kF32 = 1 };

/// Lines of `t,x,y,p`; blank lines skipped, a non-numeric first line is
/// treated as a header. Polarity is mapped through `convention`.
EventStream read_events_csv(const std::filesystem::path& path, const SensorGeometry& geometry,
                            PolarityConvention convention = PolarityConvention::kBinary,
                            TimestampPolicy policy = TimestampPolicy::kReject);
/// Same as read_events_csv, from an in-memory buffer.
EventStream parse_events_csv(const std::string& text, const SensorGeometry& geometry,
                             PolarityConvention convention = PolarityConvention::kBinary,
                             TimestampPolicy policy = TimestampPolicy::kReject);

void write_events_csv(const EventStream& stream, const std::filesystem::path& path);

std::string encode_events(const EventStream& stream);
EventStream decode_events(const std::string& bytes,
                          TimestampPolicy policy = TimestampPolicy::kReject);
void write_events_binary(const EventStream& stream, const std::filesystem::path& path);
EventStream read_events_binary(const std::filesystem::path& path,
                               TimestampPolicy policy = TimestampPolicy::kReject);

std::string encode_tensor(const Tensor& tensor, DType dtype = DType::kF64);
Tensor decode_tensor(const std::string& bytes);
void write_tensor(const Tensor& tensor, const std::filesystem::path& path,
                  DType dtype = DType::kF64);
Tensor read_tensor(const std::filesystem::path& path);

std::string encode_checkpoint(const SensorState& state);
SensorState decode_checkpoint(const std::string& bytes);
void checkpoint_state(const SensorState& state, const std::filesystem::path& path);
SensorState restore_state(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& bytes);

}  // namespace tore::io

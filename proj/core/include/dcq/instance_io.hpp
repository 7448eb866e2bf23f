#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "dcq/instance.hpp"

namespace dcq {

enum class InstanceKind { Disks, Balls };

/// Reads the "type" field. Throws ParseError.
InstanceKind instance_kind(std::string_view json_text);

/// {"type":"disks","disks":[{"id":..,"x":"..","y":"..","r":".."},...]}
/// Coordinates are decimal (or p/q) strings; integer JSON numbers are also
/// accepted. Throws ParseError for malformed documents and ValidationError
/// for instance invariants.
DiskInstance parse_disk_instance(std::string_view json_text);

/// {"type":"balls","plane_kind":"parallel"|"perp",
///  "planes":[{"id":0,"z":".."} | {"id":0,"alpha":"..","gamma":"..","delta":".."}],
///  "balls":[{"id":..,"x":..,"y":..,"z":..,"r":..,"plane":0},...]}
BallInstance parse_ball_instance(std::string_view json_text);

/// Pretty JSON with canonical scalar strings, objects in id order.
std::string serialize_instance(const DiskInstance& instance);
std::string serialize_instance(const BallInstance& instance);

/// Line-oriented canonical text; equal instances give equal text.
std::string canonical_form(const DiskInstance& instance);
std::string canonical_form(const BallInstance& instance);

/// 64-bit FNV-1a of canonical_form.
std::uint64_t instance_digest(const DiskInstance& instance);
std::uint64_t instance_digest(const BallInstance& instance);

/// 16 lowercase hex digits.
std::string digest_hex(std::uint64_t digest);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace dcq

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "zkmatch/field.hpp"

namespace zkmatch {

/// SHA-256 of the given bytes.
std::array<std::uint8_t, 32> sha256(std::string_view data);

/// SHA-256 as lowercase hex.
std::string sha256_hex(std::string_view data);

/// Digest bytes interpreted as a 256-bit big-endian integer, reduced mod p.
FieldElement field_from_digest(const std::array<std::uint8_t, 32>& digest,
                               const FieldParams& params);

/// Big-endian 8-byte encoding, used when feeding counters into digests.
std::string be64_bytes(std::uint64_t v);

} // namespace zkmatch

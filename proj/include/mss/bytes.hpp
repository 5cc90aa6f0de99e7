#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mss {

using Bytes = std::vector<std::uint8_t>;

// Lowercase hex, two digits per byte.
std::string to_hex(std::span<const std::uint8_t> data);

// Strict inverse of to_hex: even length, lowercase digits only.
// Throws Error{parse_error} otherwise.
Bytes from_hex(std::string_view hex);

// acc ^= other, throws Error{length_mismatch} if sizes differ.
void xor_into(Bytes& acc, std::span<const std::uint8_t> other);

}  // namespace mss

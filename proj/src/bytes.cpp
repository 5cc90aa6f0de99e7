#include "mss/bytes.hpp"

#include "mss/errors.hpp"

namespace mss {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}
}  // namespace

std::string to_hex(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0x0f]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw Error(Errc::parse_error, "hex string has odd length " + std::to_string(hex.size()));
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_value(hex[i]);
    int lo = hex_value(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::parse_error,
                  "invalid hex digit at offset " + std::to_string(i) +
                      " (lowercase hex required)");
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

void xor_into(Bytes& acc, std::span<const std::uint8_t> other) {
  if (acc.size() != other.size()) {
    throw Error(Errc::length_mismatch,
                "xor operands differ in length: " + std::to_string(acc.size()) +
                    " vs " + std::to_string(other.size()) + " bytes");
  }
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] ^= other[i];
}

}  // namespace mss

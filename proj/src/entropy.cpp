#include "mss/entropy.hpp"

#include <openssl/rand.h>

#include <cstring>

#include "mss/errors.hpp"
#include "mss/hashing.hpp"

namespace mss {

void SystemEntropy::fill(std::span<std::uint8_t> out) {
  if (out.empty()) return;
  if (RAND_bytes(out.data(), static_cast<int>(out.size())) != 1) {
    throw Error(Errc::entropy_failure, "OS random source failed");
  }
}

void SeededEntropy::fill(std::span<std::uint8_t> out) {
  // Stream block b = SHA-256(seed || big-endian-64(b)), consumed sequentially.
  std::size_t written = 0;
  while (written < out.size()) {
    if (buffer_pos_ >= buffer_.size()) {
      Bytes block_input = seed_;
      for (int b = 7; b >= 0; --b) {
        block_input.push_back(static_cast<std::uint8_t>((block_index_ >> (8 * b)) & 0xff));
      }
      buffer_ = detail::primitive_digest("sha-256", block_input, 256);
      buffer_pos_ = 0;
      ++block_index_;
    }
    std::size_t take = std::min(out.size() - written, buffer_.size() - buffer_pos_);
    std::memcpy(out.data() + written, buffer_.data() + buffer_pos_, take);
    written += take;
    buffer_pos_ += take;
  }
}

}  // namespace mss

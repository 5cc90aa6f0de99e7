#pragma once

#include <cstdint>
#include <span>

#include "mss/bytes.hpp"

namespace mss {

class EntropySource {
 public:
  virtual ~EntropySource() = default;

  // Fills out with random bytes. Throws Error{entropy_failure} on failure.
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

// OS-backed CSPRNG. The default source for share issuance.
class SystemEntropy final : public EntropySource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

// Deterministic SHA-256 counter-mode stream over a seed. Test-mode only;
// the CLI gates it behind --insecure-test-mode.
class SeededEntropy final : public EntropySource {
 public:
  explicit SeededEntropy(Bytes seed) : seed_(std::move(seed)) {}

  void fill(std::span<std::uint8_t> out) override;

 private:
  Bytes seed_;
  std::uint64_t block_index_ = 0;
  Bytes buffer_;
  std::size_t buffer_pos_ = 0;
};

}  // namespace mss

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <span>
#include <string_view>

#include "mss/bytes.hpp"
#include "mss/core.hpp"

namespace mss {

// Output of H: exactly q bits.
struct Digest {
  Bytes bytes;

  std::uint32_t bits() const { return static_cast<std::uint32_t>(bytes.size() * 8); }

  bool operator==(const Digest&) const = default;
};

enum class Role { dealer = 0, participant = 1, combiner = 2 };

struct HashCounts {
  std::uint64_t dealer = 0;
  std::uint64_t participant = 0;
  std::uint64_t combiner = 0;

  std::uint64_t total() const { return dealer + participant + combiner; }
  std::uint64_t by_role(Role role) const;

  bool operator==(const HashCounts&) const = default;
};

// Per-role invocation counter; monotone except for explicit reset.
class HashCounter {
 public:
  void add(Role role) noexcept {
    counts_[static_cast<std::size_t>(role)].fetch_add(1, std::memory_order_relaxed);
  }
  HashCounts snapshot() const noexcept {
    HashCounts c;
    c.dealer = counts_[0].load(std::memory_order_relaxed);
    c.participant = counts_[1].load(std::memory_order_relaxed);
    c.combiner = counts_[2].load(std::memory_order_relaxed);
    return c;
  }
  void reset() noexcept {
    for (auto& c : counts_) c.store(0, std::memory_order_relaxed);
  }

 private:
  std::array<std::atomic<std::uint64_t>, 3> counts_{};
};

// Binds the hash primitive to one scheme instance, one role, and one
// counter. Every H invocation in the system goes through a Hasher, so
// the role counters account for all scheme-level hashing.
class Hasher {
 public:
  Hasher(const SchemeParams& params, Role role, HashCounter& counter)
      : params_(&params), counter_(&counter), role_(role) {}

  // q-bit digest of the input; increments this role's counter by one.
  Digest hash(std::span<const std::uint8_t> input) const;

  const SchemeParams& params() const { return *params_; }
  Role role() const { return role_; }

 private:
  const SchemeParams* params_;
  HashCounter* counter_;
  Role role_;
};

// One participant's q-bit value H(x_a || i_l || j_m), bound to a specific
// (secret, qualified-set) pair.
struct PseudoShare {
  std::uint32_t participant = 0;
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  Digest value;

  bool operator==(const PseudoShare&) const = default;
};

// The q bits of x, then i in l bits and j in m bits (big-endian, fixed
// width), packed MSB-first and right-padded with zero bits to the byte
// boundary. Injective for fixed (q, l, m). i and j must fit their widths;
// capacity checks against k_max / t_max live in pseudo_share.
Bytes encode_input(const SchemeParams& params, std::span<const std::uint8_t> x,
                   std::uint32_t i, std::uint32_t j);

// H(x || i_l || j_m) for 1 <= i <= k_max, 1 <= j <= t_max. One hash.
PseudoShare pseudo_share(const Hasher& hasher, std::uint32_t participant,
                         std::span<const std::uint8_t> x, std::uint32_t i,
                         std::uint32_t j);

// H applied to the raw q/8 digest bytes: H^2(...) = double_hash(pseudo_share(...)).
Digest double_hash(const Hasher& hasher, const Digest& value);

bool hash_id_supported(std::string_view hash_id);

// Maximum q the given instantiation can produce. Throws Error{unsupported_hash}.
std::uint32_t hash_max_bits(std::string_view hash_id);

namespace detail {
// Raw registry primitive, truncated to out_bits. Used by the counted Hasher
// path and by file-format fingerprints, which sit outside the per-role
// accounting of scheme hashes.
Bytes primitive_digest(std::string_view hash_id, std::span<const std::uint8_t> input,
                       std::uint32_t out_bits);
}  // namespace detail

}  // namespace mss

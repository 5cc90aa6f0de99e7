#include "mss/hashing.hpp"

#include <openssl/evp.h>

#include <string>

#include "mss/errors.hpp"

namespace mss {

namespace {

Bytes sha256_digest(std::span<const std::uint8_t> input) {
  Bytes out(32);
  unsigned int out_len = 0;
  if (EVP_Digest(input.data(), input.size(), out.data(), &out_len, EVP_sha256(),
                 nullptr) != 1 ||
      out_len != 32) {
    throw Error(Errc::unsupported_hash, "sha-256 digest computation failed");
  }
  return out;
}

struct HashImpl {
  std::string_view id;
  std::uint32_t max_bits;
  Bytes (*digest)(std::span<const std::uint8_t>);
};

// Registry of hash instantiations; extend by adding rows.
constexpr std::size_t kImplCount = 1;
const HashImpl kImpls[kImplCount] = {
    {"sha-256", 256, sha256_digest},
};

const HashImpl* find_impl(std::string_view hash_id) {
  for (const auto& impl : kImpls) {
    if (impl.id == hash_id) return &impl;
  }
  return nullptr;
}

}  // namespace

bool hash_id_supported(std::string_view hash_id) { return find_impl(hash_id) != nullptr; }

std::uint32_t hash_max_bits(std::string_view hash_id) {
  const HashImpl* impl = find_impl(hash_id);
  if (!impl) {
    throw Error(Errc::unsupported_hash, "unknown hash_id \"" + std::string(hash_id) + "\"");
  }
  return impl->max_bits;
}

namespace detail {

Bytes primitive_digest(std::string_view hash_id, std::span<const std::uint8_t> input,
                       std::uint32_t out_bits) {
  const HashImpl* impl = find_impl(hash_id);
  if (!impl) {
    throw Error(Errc::unsupported_hash, "unknown hash_id \"" + std::string(hash_id) + "\"");
  }
  if (out_bits == 0 || out_bits % 8 != 0 || out_bits > impl->max_bits) {
    throw Error(Errc::invalid_params,
                "requested " + std::to_string(out_bits) + "-bit output from " +
                    std::string(hash_id));
  }
  Bytes full = impl->digest(input);
  full.resize(out_bits / 8);  // leftmost bits; truncation never pads
  return full;
}

}  // namespace detail

Digest Hasher::hash(std::span<const std::uint8_t> input) const {
  Digest digest{detail::primitive_digest(params_->hash_id, input, params_->q)};
  counter_->add(role_);
  return digest;
}

std::uint64_t HashCounts::by_role(Role role) const {
  switch (role) {
    case Role::dealer: return dealer;
    case Role::participant: return participant;
    case Role::combiner: return combiner;
  }
  return 0;
}

Bytes encode_input(const SchemeParams& params, std::span<const std::uint8_t> x,
                   std::uint32_t i, std::uint32_t j) {
  if (x.size() != params.q_bytes()) {
    throw Error(Errc::length_mismatch,
                "share value has " + std::to_string(x.size() * 8) +
                    " bits, expected q = " + std::to_string(params.q));
  }
  if (i < 1 || static_cast<std::uint64_t>(i) >= (1ull << params.l)) {
    throw Error(Errc::index_out_of_range,
                "secret index " + std::to_string(i) + " does not fit l = " +
                    std::to_string(params.l) + " bits");
  }
  if (j < 1 || static_cast<std::uint64_t>(j) >= (1ull << params.m)) {
    throw Error(Errc::index_out_of_range,
                "set position " + std::to_string(j) + " does not fit m = " +
                    std::to_string(params.m) + " bits");
  }

  Bytes out(x.begin(), x.end());
  out.reserve(out.size() + (params.l + params.m + 7) / 8);

  std::uint32_t acc = 0;
  std::uint32_t acc_bits = 0;
  auto push_bits = [&](std::uint64_t value, std::uint32_t width) {
    for (std::uint32_t b = width; b-- > 0;) {
      acc = (acc << 1) | static_cast<std::uint32_t>((value >> b) & 1u);
      if (++acc_bits == 8) {
        out.push_back(static_cast<std::uint8_t>(acc));
        acc = 0;
        acc_bits = 0;
      }
    }
  };
  push_bits(i, params.l);
  push_bits(j, params.m);
  if (acc_bits > 0) {
    out.push_back(static_cast<std::uint8_t>(acc << (8 - acc_bits)));
  }
  return out;
}

PseudoShare pseudo_share(const Hasher& hasher, std::uint32_t participant,
                         std::span<const std::uint8_t> x, std::uint32_t i,
                         std::uint32_t j) {
  const SchemeParams& params = hasher.params();
  if (i < 1 || i > params.k_max) {
    throw Error(Errc::index_out_of_range,
                "secret index " + std::to_string(i) + " outside capacity 1.." +
                    std::to_string(params.k_max));
  }
  if (j < 1 || j > params.t_max) {
    throw Error(Errc::index_out_of_range,
                "set position " + std::to_string(j) + " outside capacity 1.." +
                    std::to_string(params.t_max));
  }
  return PseudoShare{participant, i, j, hasher.hash(encode_input(params, x, i, j))};
}

Digest double_hash(const Hasher& hasher, const Digest& value) {
  if (value.bits() != hasher.params().q) {
    throw Error(Errc::length_mismatch,
                "digest has " + std::to_string(value.bits()) + " bits, expected q = " +
                    std::to_string(hasher.params().q));
  }
  return hasher.hash(value.bytes);
}

}  // namespace mss

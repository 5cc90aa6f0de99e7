#include "mss/oracle.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mss/combiner.hpp"
#include "mss/errors.hpp"
#include "mss/participant.hpp"

namespace mss::oracle {

namespace {

const Share& lookup_share(const std::vector<Share>& shares, std::uint32_t participant) {
  for (const auto& share : shares) {
    if (share.participant == participant) return share;
  }
  throw Error(Errc::missing_share,
              "oracle: no share for participant " + std::to_string(participant));
}

std::uint32_t next_u32(EntropySource& entropy) {
  std::uint8_t raw[4];
  entropy.fill(raw);
  return (static_cast<std::uint32_t>(raw[0]) << 24) |
         (static_cast<std::uint32_t>(raw[1]) << 16) |
         (static_cast<std::uint32_t>(raw[2]) << 8) | static_cast<std::uint32_t>(raw[3]);
}

}  // namespace

Bytes naive_encode(std::uint32_t q, std::uint32_t l, std::uint32_t m, const Bytes& x,
                   std::uint32_t i, std::uint32_t j) {
  if (x.size() * 8 != q) {
    throw Error(Errc::length_mismatch, "oracle: share value is not q bits");
  }
  std::vector<int> bits;
  bits.reserve(q + l + m + 7);
  for (std::uint8_t byte : x) {
    for (int b = 7; b >= 0; --b) bits.push_back((byte >> b) & 1);
  }
  for (std::uint32_t b = l; b-- > 0;) bits.push_back((i >> b) & 1);
  for (std::uint32_t b = m; b-- > 0;) bits.push_back((j >> b) & 1);
  while (bits.size() % 8 != 0) bits.push_back(0);

  Bytes out;
  out.reserve(bits.size() / 8);
  for (std::size_t pos = 0; pos < bits.size(); pos += 8) {
    int value = 0;
    for (std::size_t b = 0; b < 8; ++b) value = (value << 1) | bits[pos + b];
    out.push_back(static_cast<std::uint8_t>(value));
  }
  return out;
}

Bulletin oracle_bulletin(const SchemeParams& params, const std::vector<Secret>& secrets,
                         const std::vector<AccessStructure>& structures,
                         const std::vector<Share>& shares, HashCounter& counter) {
  Hasher hasher(params, Role::dealer, counter);

  Bulletin bulletin;
  bulletin.params = params;
  bulletin.version = params.version;
  bulletin.structures = structures;
  std::sort(bulletin.structures.begin(), bulletin.structures.end(),
            [](const AccessStructure& a, const AccessStructure& b) {
              return a.secret_index < b.secret_index;
            });
  for (auto& structure : bulletin.structures) {
    for (auto& qs : structure.qualified_sets) {
      std::sort(qs.members.begin(), qs.members.end());
    }
  }

  for (const AccessStructure& structure : bulletin.structures) {
    const Secret* secret = nullptr;
    for (const auto& candidate : secrets) {
      if (candidate.index == structure.secret_index) secret = &candidate;
    }
    if (!secret) {
      throw Error(Errc::unknown_secret,
                  "oracle: no secret " + std::to_string(structure.secret_index));
    }
    for (const QualifiedSet& qs : structure.qualified_sets) {
      Bytes acc = secret->value;
      for (std::uint32_t member : qs.members) {
        const Share& share = lookup_share(shares, member);
        Digest pseudo = hasher.hash(
            naive_encode(params.q, params.l, params.m, share.x, structure.secret_index,
                         qs.position));
        for (std::size_t idx = 0; idx < acc.size(); ++idx) {
          acc[idx] = static_cast<std::uint8_t>(acc[idx] ^ pseudo.bytes[idx]);
        }
        bulletin.verification_table.push_back(VerificationEntry{
            member, structure.secret_index, qs.position, hasher.hash(pseudo.bytes)});
      }
      bulletin.public_shares.push_back(
          PublicShareValue{structure.secret_index, qs.position, std::move(acc)});
    }
    bulletin.commitments.push_back(
        SecretCommitment{secret->index, hasher.hash(secret->value)});
  }

  std::sort(bulletin.public_shares.begin(), bulletin.public_shares.end(),
            [](const PublicShareValue& a, const PublicShareValue& b) {
              return std::tie(a.secret_index, a.set_position) <
                     std::tie(b.secret_index, b.set_position);
            });
  std::sort(bulletin.commitments.begin(), bulletin.commitments.end(),
            [](const SecretCommitment& a, const SecretCommitment& b) {
              return a.secret_index < b.secret_index;
            });
  std::sort(bulletin.verification_table.begin(), bulletin.verification_table.end(),
            [](const VerificationEntry& a, const VerificationEntry& b) {
              return std::tie(a.secret_index, a.set_position, a.participant) <
                     std::tie(b.secret_index, b.set_position, b.participant);
            });
  return bulletin;
}

std::uint64_t expected_dealer_hashes(const std::vector<AccessStructure>& structures) {
  std::uint64_t total = 0;
  for (const auto& structure : structures) {
    std::uint64_t member_sum = 0;
    for (const auto& qs : structure.qualified_sets) member_sum += qs.members.size();
    total += 2 * member_sum + 1;
  }
  return total;
}

std::uint64_t expected_combiner_hashes(const AccessStructure& structure, std::uint32_t j) {
  return structure.qualified_sets.at(j - 1).members.size();
}

ForbiddenScanReport exhaustive_forbidden_scan(const Bulletin& bulletin,
                                              const std::vector<Share>& shares) {
  const SchemeParams& params = bulletin.params;
  if (params.n > 16) {
    throw Error(Errc::invalid_params, "exhaustive scan is meant for small n");
  }
  HashCounter scratch;
  Hasher hasher(params, Role::participant, scratch);
  ForbiddenScanReport report;

  for (const AccessStructure& structure : bulletin.structures) {
    for (const QualifiedSet& qs : structure.qualified_sets) {
      std::map<std::uint32_t, Bytes> truth;
      for (std::uint32_t member : qs.members) {
        const Share& share = lookup_share(shares, member);
        truth[member] = hasher
                            .hash(naive_encode(params.q, params.l, params.m, share.x,
                                               structure.secret_index, qs.position))
                            .bytes;
      }
      const SecretCommitment* commitment = bulletin.find_commitment(structure.secret_index);

      for (std::uint32_t mask = 0; mask < (1u << params.n); ++mask) {
        std::vector<Bytes> values;
        bool qualified = true;
        for (std::uint32_t member : qs.members) {
          if (mask & (1u << (member - 1))) {
            values.push_back(truth.at(member));
          } else {
            qualified = false;
          }
        }
        Bytes candidate = reconstruct_unchecked(bulletin, structure.secret_index,
                                                qs.position, values);
        HashCounter verify_counter;
        bool passes = verify_secret(params, candidate, *commitment, verify_counter);
        ++report.cases_checked;
        if (passes != qualified) {
          report.counterexamples.push_back(
              "row (" + std::to_string(structure.secret_index) + "," +
              std::to_string(qs.position) + ") subset mask " + std::to_string(mask) +
              (passes ? " passed without containing A_ij" : " failed despite containing A_ij"));
        }
      }
    }
  }
  return report;
}

TamperReport tamper_fuzz(const Bulletin& bulletin, const std::vector<Share>& shares,
                         std::uint64_t trials, EntropySource& entropy) {
  const SchemeParams& params = bulletin.params;
  HashCounter scratch;
  Hasher hasher(params, Role::participant, scratch);

  struct Cell {
    std::uint32_t participant, secret_index, set_position;
  };
  std::vector<Cell> cells;
  for (const auto& structure : bulletin.structures) {
    for (const auto& qs : structure.qualified_sets) {
      for (std::uint32_t member : qs.members) {
        cells.push_back(Cell{member, structure.secret_index, qs.position});
      }
    }
  }
  if (cells.empty()) throw Error(Errc::invalid_params, "bulletin has no rows to fuzz");

  TamperReport report;
  Bytes mask(params.q_bytes());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const Cell& cell = cells[next_u32(entropy) % cells.size()];
    const Share& share = lookup_share(shares, cell.participant);
    Bytes value = hasher
                      .hash(naive_encode(params.q, params.l, params.m, share.x,
                                         cell.secret_index, cell.set_position))
                      .bytes;
    do {
      entropy.fill(mask);
    } while (std::all_of(mask.begin(), mask.end(), [](std::uint8_t b) { return b == 0; }));
    for (std::size_t idx = 0; idx < value.size(); ++idx) value[idx] ^= mask[idx];

    HashCounter verify_counter;
    bool accepted = verify_pseudo_share(bulletin, cell.participant, cell.secret_index,
                                        cell.set_position, value, verify_counter);
    ++report.trials;
    if (!accepted) ++report.rejected;
  }
  return report;
}

Instance random_instance(std::uint64_t seed, const InstanceLimits& limits) {
  if (limits.max_n == 0 || limits.max_n > 16 || limits.max_k == 0 || limits.max_t == 0) {
    throw Error(Errc::invalid_params, "instance limits out of range");
  }
  Bytes seed_bytes(8);
  for (int b = 0; b < 8; ++b) {
    seed_bytes[b] = static_cast<std::uint8_t>((seed >> (8 * (7 - b))) & 0xff);
  }
  SeededEntropy entropy(std::move(seed_bytes));

  const std::uint32_t n = 1 + next_u32(entropy) % limits.max_n;
  const std::uint32_t k = 1 + next_u32(entropy) % limits.max_k;

  Instance instance;
  instance.params = make_scheme_params(limits.q, n, limits.max_k, limits.max_t, "sha-256",
                                       /*allow_small_q=*/limits.q < 64);
  instance.shares = issue_shares(instance.params, entropy);

  for (std::uint32_t i = 1; i <= k; ++i) {
    Bytes value(instance.params.q_bytes());
    entropy.fill(value);
    instance.secrets.push_back(Secret{i, std::move(value)});

    const std::uint32_t distinct_subsets = (1u << n) - 1;
    const std::uint32_t t_i =
        1 + next_u32(entropy) % std::min(limits.max_t, distinct_subsets);
    std::vector<std::uint32_t> used_masks;
    std::vector<std::vector<std::uint32_t>> member_lists;
    while (member_lists.size() < t_i) {
      std::uint32_t mask = 1 + next_u32(entropy) % distinct_subsets;
      if (std::find(used_masks.begin(), used_masks.end(), mask) != used_masks.end()) {
        continue;
      }
      used_masks.push_back(mask);
      std::vector<std::uint32_t> members;
      for (std::uint32_t a = 1; a <= n; ++a) {
        if (mask & (1u << (a - 1))) members.push_back(a);
      }
      member_lists.push_back(std::move(members));
    }
    instance.structures.push_back(make_access_structure(instance.params, i, member_lists));
  }
  return instance;
}

}  // namespace mss::oracle

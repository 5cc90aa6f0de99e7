#pragma once

#include <cstdint>
#include <vector>

#include "mss/core.hpp"
#include "mss/hashing.hpp"

namespace mss {

// Published S_ij = s_i XOR (XOR over members of H(x_a || i_l || j_m)).
struct PublicShareValue {
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  Bytes s;  // q bits

  bool operator==(const PublicShareValue&) const = default;
};

// Published H(s_i).
struct SecretCommitment {
  std::uint32_t secret_index = 0;
  Digest digest;

  bool operator==(const SecretCommitment&) const = default;
};

// Published H^2(x_a || i_l || j_m); one entry per (a, i, j) with P_a in A_ij.
struct VerificationEntry {
  std::uint32_t participant = 0;
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  Digest digest;

  bool operator==(const VerificationEntry&) const = default;
};

// The public board. Arrays are kept in canonical order: structures by
// secret index, public shares by (i, j), commitments by i, verification
// table by (i, j, a).
struct Bulletin {
  SchemeParams params;
  std::vector<AccessStructure> structures;
  std::vector<PublicShareValue> public_shares;
  std::vector<SecretCommitment> commitments;
  std::vector<VerificationEntry> verification_table;
  std::uint64_t version = 1;

  std::uint32_t secret_count() const { return static_cast<std::uint32_t>(structures.size()); }

  const AccessStructure* find_structure(std::uint32_t i) const;
  const QualifiedSet* find_qualified_set(std::uint32_t i, std::uint32_t j) const;
  const PublicShareValue* find_public_share(std::uint32_t i, std::uint32_t j) const;
  const SecretCommitment* find_commitment(std::uint32_t i) const;
  const VerificationEntry* find_verification(std::uint32_t participant, std::uint32_t i,
                                             std::uint32_t j) const;

  bool operator==(const Bulletin&) const = default;
};

// Sorts all arrays (and qualified-set member lists) into canonical order.
void canonicalize(Bulletin& bulletin);

// Full structural consistency check; reports every violation found.
ValidationReport check_bulletin(const Bulletin& bulletin);

// Throws Error{invariant_violation} carrying the full report.
void require_valid_bulletin(const Bulletin& bulletin);

}  // namespace mss

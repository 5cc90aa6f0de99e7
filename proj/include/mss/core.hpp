#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mss/bytes.hpp"

namespace mss {

// Global constants of one scheme instance. l and m are derived from the
// declared capacities k_max / t_max at setup and never change afterwards,
// so every published hash input stays stable across renewals.
struct SchemeParams {
  std::uint32_t q = 0;      // secret/share bit length, multiple of 8
  std::uint32_t n = 0;      // participant count
  std::uint32_t k_max = 0;  // maximum number of secrets in this instance
  std::uint32_t t_max = 0;  // maximum qualified sets per secret
  std::uint32_t l = 0;      // bit width of secret indices
  std::uint32_t m = 0;      // bit width of qualified-set indices
  std::string hash_id;      // hash instantiation, e.g. "sha-256"
  std::uint64_t version = 1;

  std::uint32_t q_bytes() const { return q / 8; }

  bool operator==(const SchemeParams&) const = default;
};

// ceil(log2(capacity)) + 1; the extra bit guarantees 2^(width-1) >= capacity.
std::uint32_t index_width(std::uint32_t capacity);

// Validates and derives l, m; version starts at 1. q below 64 is allowed
// only with allow_small_q (test instances).
SchemeParams make_scheme_params(std::uint32_t q, std::uint32_t n,
                                std::uint32_t k_max, std::uint32_t t_max,
                                std::string hash_id,
                                bool allow_small_q = false);

// Revalidates already-constructed params (e.g. loaded from disk), including
// the l/m derivation. Accepts small q: the q >= 64 gate applies at creation.
void check_scheme_params(const SchemeParams& params);

struct Participant {
  std::uint32_t index = 0;  // 1..n
  std::string label;

  bool operator==(const Participant&) const = default;
};

// n participants with indices 1..n; labels default to P1..Pn.
std::vector<Participant> make_participants(const SchemeParams& params,
                                           std::vector<std::string> labels = {});

struct Secret {
  std::uint32_t index = 0;  // 1..k
  Bytes value;              // exactly q bits

  bool operator==(const Secret&) const = default;
};

void check_secret(const SchemeParams& params, const Secret& secret);

struct QualifiedSet {
  std::uint32_t secret_index = 0;
  std::uint32_t position = 0;          // 1-based j within the structure
  std::vector<std::uint32_t> members;  // sorted, duplicate-free when valid

  bool contains(std::uint32_t participant) const;

  bool operator==(const QualifiedSet&) const = default;
};

// Ordered list of qualified sets for one secret; position j of each entry
// equals its 1-based list position.
struct AccessStructure {
  std::uint32_t secret_index = 0;
  std::vector<QualifiedSet> qualified_sets;

  std::uint32_t t() const { return static_cast<std::uint32_t>(qualified_sets.size()); }

  bool operator==(const AccessStructure&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string joined() const;
};

// Pure structural check; reports every violation found, not just the first.
ValidationReport validate_access_structure(const SchemeParams& params,
                                           const AccessStructure& structure);

// Throws Error{invariant_violation} carrying the full report.
void require_valid_structure(const SchemeParams& params,
                             const AccessStructure& structure);

// Builds a structure from raw member lists (j implied by order), validates,
// and sorts each member list. Throws on any violation.
AccessStructure make_access_structure(
    const SchemeParams& params, std::uint32_t secret_index,
    const std::vector<std::vector<std::uint32_t>>& member_lists);

}  // namespace mss

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "mss/bulletin.hpp"

namespace mss {

// One reconstruction attempt for row (i, j): the members of A_ij submit
// their pseudo-shares. The combiner never sees a Share.
struct ReconstructionSession {
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  std::map<std::uint32_t, Bytes> submissions;  // participant -> claimed value
};

enum class Verdict { accepted, rejected, missing };

const char* verdict_name(Verdict verdict) noexcept;

struct SessionOutcome {
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  std::map<std::uint32_t, Verdict> verdicts;
  std::set<std::uint32_t> missing;
  std::set<std::uint32_t> rejected;
  std::optional<Bytes> secret;  // populated only when every member verified

  bool ok() const { return secret.has_value(); }
};

// Accepts iff H(submitted) equals the published H^2 entry for (a, i, j).
// Exactly one hash; a wrong-length submission is rejected without hashing.
// Throws Error{no_such_entry} when the table has no such row (non-member
// or stale row).
bool verify_pseudo_share(const Bulletin& bulletin, std::uint32_t participant,
                         std::uint32_t i, std::uint32_t j,
                         std::span<const std::uint8_t> submitted, HashCounter& counter);

// All-or-nothing: the secret is computed only when every member of A_ij
// submitted and every submission verified. Otherwise the outcome names the
// missing and rejected participants. Combiner hash cost: one per submission
// from a table-listed member, i.e. |A_ij| for a full session.
SessionOutcome reconstruct(const Bulletin& bulletin, const ReconstructionSession& session,
                           HashCounter& counter);

// XOR fold of S_ij with the given values, no verification. Adversary-
// simulation hook for the security test suites.
Bytes reconstruct_unchecked(const Bulletin& bulletin, std::uint32_t i, std::uint32_t j,
                            const std::vector<Bytes>& values);

}  // namespace mss

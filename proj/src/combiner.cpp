#include "mss/combiner.hpp"

#include "mss/errors.hpp"

namespace mss {

const char* verdict_name(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::accepted: return "accepted";
    case Verdict::rejected: return "rejected";
    case Verdict::missing: return "missing";
  }
  return "unknown";
}

bool verify_pseudo_share(const Bulletin& bulletin, std::uint32_t participant,
                         std::uint32_t i, std::uint32_t j,
                         std::span<const std::uint8_t> submitted, HashCounter& counter) {
  const VerificationEntry* entry = bulletin.find_verification(participant, i, j);
  if (!entry) {
    throw Error(Errc::no_such_entry,
                "no verification entry for participant " + std::to_string(participant) +
                    " on row (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  if (submitted.size() != bulletin.params.q_bytes()) return false;
  Hasher hasher(bulletin.params, Role::combiner, counter);
  return hasher.hash(submitted) == entry->digest;
}

SessionOutcome reconstruct(const Bulletin& bulletin, const ReconstructionSession& session,
                           HashCounter& counter) {
  const QualifiedSet* qset =
      bulletin.find_qualified_set(session.secret_index, session.set_position);
  const PublicShareValue* public_share =
      bulletin.find_public_share(session.secret_index, session.set_position);
  if (!qset || !public_share) {
    throw Error(Errc::unknown_row,
                "no row (" + std::to_string(session.secret_index) + "," +
                    std::to_string(session.set_position) + ") in the bulletin");
  }

  SessionOutcome outcome;
  outcome.secret_index = session.secret_index;
  outcome.set_position = session.set_position;

  for (std::uint32_t member : qset->members) {
    auto it = session.submissions.find(member);
    if (it == session.submissions.end()) {
      outcome.verdicts[member] = Verdict::missing;
      outcome.missing.insert(member);
      continue;
    }
    bool accepted = verify_pseudo_share(bulletin, member, session.secret_index,
                                        session.set_position, it->second, counter);
    outcome.verdicts[member] = accepted ? Verdict::accepted : Verdict::rejected;
    if (!accepted) outcome.rejected.insert(member);
  }
  // A submission from outside A_ij has no table entry and taints the session.
  for (const auto& [participant, value] : session.submissions) {
    if (!qset->contains(participant)) {
      outcome.verdicts[participant] = Verdict::rejected;
      outcome.rejected.insert(participant);
    }
  }

  if (outcome.missing.empty() && outcome.rejected.empty()) {
    Bytes acc = public_share->s;
    for (std::uint32_t member : qset->members) {
      xor_into(acc, session.submissions.at(member));
    }
    outcome.secret = std::move(acc);
  }
  return outcome;
}

Bytes reconstruct_unchecked(const Bulletin& bulletin, std::uint32_t i, std::uint32_t j,
                            const std::vector<Bytes>& values) {
  const PublicShareValue* public_share = bulletin.find_public_share(i, j);
  if (!public_share) {
    throw Error(Errc::unknown_row,
                "no row (" + std::to_string(i) + "," + std::to_string(j) +
                    ") in the bulletin");
  }
  Bytes acc = public_share->s;
  for (const Bytes& value : values) xor_into(acc, value);
  return acc;
}

}  // namespace mss

#include "mss/participant.hpp"

#include "mss/errors.hpp"

namespace mss {

PseudoShare derive_pseudo_share(const SchemeParams& params, const Share& share,
                                std::uint32_t i, std::uint32_t j,
                                const Bulletin& bulletin, HashCounter& counter) {
  if (params != bulletin.params) {
    throw Error(Errc::invalid_params, "params do not match the bulletin's scheme instance");
  }
  const QualifiedSet* qset = bulletin.find_qualified_set(i, j);
  if (!qset) {
    throw Error(Errc::unknown_row,
                "no qualified set (" + std::to_string(i) + "," + std::to_string(j) +
                    ") in the bulletin");
  }
  // Refuse rows the participant does not belong to; the combiner would
  // reject the value anyway since no verification entry exists.
  if (!qset->contains(share.participant)) {
    throw Error(Errc::not_authorized,
                "participant " + std::to_string(share.participant) +
                    " is not a member of A_" + std::to_string(i) + "," + std::to_string(j));
  }
  Hasher hasher(params, Role::participant, counter);
  return pseudo_share(hasher, share.participant, share.x, i, j);
}

bool verify_secret(const SchemeParams& params, std::span<const std::uint8_t> candidate,
                   const SecretCommitment& commitment, HashCounter& counter) {
  if (candidate.size() != params.q_bytes()) return false;
  Hasher hasher(params, Role::participant, counter);
  return hasher.hash(candidate) == commitment.digest;
}

}  // namespace mss

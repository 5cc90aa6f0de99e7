#pragma once

#include <cstdint>
#include <span>

#include "mss/bulletin.hpp"
#include "mss/dealer.hpp"

namespace mss {

// Derives H(x_a || i_l || j_m) for a row the participant belongs to.
// Exactly one hash invocation. Throws Error{not_authorized} if the
// participant is not a member of A_ij, Error{unknown_row} if (i, j)
// does not exist in the bulletin.
PseudoShare derive_pseudo_share(const SchemeParams& params, const Share& share,
                                std::uint32_t i, std::uint32_t j,
                                const Bulletin& bulletin, HashCounter& counter);

// Accepts iff H(candidate) equals the published commitment. A candidate of
// the wrong length is rejected without hashing; otherwise exactly one hash.
bool verify_secret(const SchemeParams& params, std::span<const std::uint8_t> candidate,
                   const SecretCommitment& commitment, HashCounter& counter);

}  // namespace mss

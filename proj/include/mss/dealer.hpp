#pragma once

#include <cstdint>
#include <vector>

#include "mss/bulletin.hpp"
#include "mss/core.hpp"
#include "mss/entropy.hpp"
#include "mss/hashing.hpp"

namespace mss {

// A participant's private q-bit random string x_a.
struct Share {
  std::uint32_t participant = 0;
  Bytes x;  // exactly q bits

  bool operator==(const Share&) const = default;
};

// n shares of q random bits each, participants 1..n in order.
std::vector<Share> issue_shares(const SchemeParams& params, EntropySource& entropy);

// Alternate issuance path: a participant-chosen x, validated to q bits.
Share import_share(const SchemeParams& params, std::uint32_t participant, Bytes x);

// S_ij = s_i XOR (XOR over members a of H(x_a || i_l || j_m)).
// Uses exactly |members| dealer hash invocations.
PublicShareValue compute_public_share(const SchemeParams& params, const Secret& secret,
                                      const QualifiedSet& qset,
                                      const std::vector<Share>& shares,
                                      HashCounter& counter);

// Computes every S_ij, every H(s_i), and the full H^2 verification table.
// Dealer hash cost per secret: 2 * sum_j |A_ij| + 1.
Bulletin build_bulletin(const SchemeParams& params, const std::vector<Secret>& secrets,
                        const std::vector<AccessStructure>& structures,
                        const std::vector<Share>& shares, HashCounter& counter);

// Renewal: appends rows for a new secret (index k + 1) without touching any
// existing row or any share. Version is incremented.
Bulletin add_secret(const Bulletin& bulletin, const std::vector<Share>& shares,
                    const Secret& new_secret, const AccessStructure& structure,
                    HashCounter& counter);

// Renewal: recomputes all rows of one secret under a new access structure.
// Rows of other secrets are copied unchanged; version is incremented.
Bulletin replace_access_structure(const Bulletin& bulletin,
                                  const std::vector<Share>& shares, const Secret& secret,
                                  const AccessStructure& new_structure,
                                  HashCounter& counter);

// The dealer's private state: everything needed to publish and renew.
struct DealerState {
  SchemeParams params;
  std::vector<Participant> participants;
  std::vector<Share> shares;
  std::vector<Secret> secrets;

  bool operator==(const DealerState&) const = default;
};

}  // namespace mss

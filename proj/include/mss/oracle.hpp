#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mss/bulletin.hpp"
#include "mss/dealer.hpp"
#include "mss/entropy.hpp"

namespace mss::oracle {

// Independent, from-the-definition reference. Shares only the hash
// primitive with the dealer: its own bit packing, its own XOR folds, its
// own ordering, so a bug must occur twice identically to escape the
// equivalence tests.

// Naive bit-vector concatenation of x || i_l || j_m.
Bytes naive_encode(std::uint32_t q, std::uint32_t l, std::uint32_t m, const Bytes& x,
                   std::uint32_t i, std::uint32_t j);

// Recomputes the full bulletin from the definitions.
Bulletin oracle_bulletin(const SchemeParams& params, const std::vector<Secret>& secrets,
                         const std::vector<AccessStructure>& structures,
                         const std::vector<Share>& shares, HashCounter& counter);

// Hash-cost accounting from the definitions: 2 * sum_j |A_ij| + 1 per secret.
std::uint64_t expected_dealer_hashes(const std::vector<AccessStructure>& structures);
std::uint64_t expected_combiner_hashes(const AccessStructure& structure, std::uint32_t j);

struct ForbiddenScanReport {
  std::uint64_t cases_checked = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

// For every secret i, row j, and subset B of the participants: unchecked
// reconstruction from the true pseudo-shares of A_ij intersected with B
// must pass the H(s_i) check iff A_ij is contained in B. Exhaustive;
// intended for n <= 5.
ForbiddenScanReport exhaustive_forbidden_scan(const Bulletin& bulletin,
                                              const std::vector<Share>& shares);

struct TamperReport {
  std::uint64_t trials = 0;
  std::uint64_t rejected = 0;

  bool ok() const { return rejected == trials; }
};

// Random single/multi-bit corruptions of honest pseudo-shares; every one
// must be rejected by the combiner's H^2 check.
TamperReport tamper_fuzz(const Bulletin& bulletin, const std::vector<Share>& shares,
                         std::uint64_t trials, EntropySource& entropy);

// A full random scheme instance for randomized and equivalence testing.
struct Instance {
  SchemeParams params;
  std::vector<Share> shares;
  std::vector<Secret> secrets;
  std::vector<AccessStructure> structures;
};

struct InstanceLimits {
  std::uint32_t q = 64;
  std::uint32_t max_n = 6;
  std::uint32_t max_k = 4;
  std::uint32_t max_t = 4;
};

Instance random_instance(std::uint64_t seed, const InstanceLimits& limits = {});

}  // namespace mss::oracle

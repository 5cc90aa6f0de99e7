#include "mss/dealer.hpp"

#include <algorithm>

#include "mss/errors.hpp"

namespace mss {

namespace {

const Share& find_share(const std::vector<Share>& shares, std::uint32_t participant) {
  for (const auto& share : shares) {
    if (share.participant == participant) return share;
  }
  throw Error(Errc::missing_share,
              "no share for participant " + std::to_string(participant));
}

void check_share(const SchemeParams& params, const Share& share) {
  if (share.participant < 1 || share.participant > params.n) {
    throw Error(Errc::index_out_of_range,
                "participant " + std::to_string(share.participant) + " outside 1.." +
                    std::to_string(params.n));
  }
  if (share.x.size() != params.q_bytes()) {
    throw Error(Errc::length_mismatch,
                "share for participant " + std::to_string(share.participant) + " has " +
                    std::to_string(share.x.size() * 8) + " bits, expected q = " +
                    std::to_string(params.q));
  }
}

// One bulletin row: the pseudo-share of each member is computed once and
// feeds both the S value and its H^2 verification entry (2|A_ij| hashes).
struct Row {
  PublicShareValue public_share;
  std::vector<VerificationEntry> entries;
};

Row compute_row(const Hasher& hasher, const Secret& secret, const QualifiedSet& qset,
                const std::vector<Share>& shares) {
  Row row;
  Bytes acc = secret.value;
  for (std::uint32_t member : qset.members) {
    const Share& share = find_share(shares, member);
    check_share(hasher.params(), share);
    PseudoShare p = pseudo_share(hasher, member, share.x, qset.secret_index, qset.position);
    xor_into(acc, p.value.bytes);
    row.entries.push_back(VerificationEntry{member, qset.secret_index, qset.position,
                                            double_hash(hasher, p.value)});
  }
  row.public_share = PublicShareValue{qset.secret_index, qset.position, std::move(acc)};
  return row;
}

void append_secret_rows(Bulletin& bulletin, const Hasher& hasher, const Secret& secret,
                        const AccessStructure& structure,
                        const std::vector<Share>& shares) {
  for (const auto& qset : structure.qualified_sets) {
    Row row = compute_row(hasher, secret, qset, shares);
    bulletin.public_shares.push_back(std::move(row.public_share));
    for (auto& entry : row.entries) bulletin.verification_table.push_back(std::move(entry));
  }
}

}  // namespace

std::vector<Share> issue_shares(const SchemeParams& params, EntropySource& entropy) {
  check_scheme_params(params);
  std::vector<Share> shares;
  shares.reserve(params.n);
  for (std::uint32_t a = 1; a <= params.n; ++a) {
    Bytes x(params.q_bytes());
    entropy.fill(x);
    shares.push_back(Share{a, std::move(x)});
  }
  return shares;
}

Share import_share(const SchemeParams& params, std::uint32_t participant, Bytes x) {
  Share share{participant, std::move(x)};
  check_share(params, share);
  return share;
}

PublicShareValue compute_public_share(const SchemeParams& params, const Secret& secret,
                                      const QualifiedSet& qset,
                                      const std::vector<Share>& shares,
                                      HashCounter& counter) {
  if (secret.index != qset.secret_index) {
    throw Error(Errc::invalid_params,
                "secret index " + std::to_string(secret.index) +
                    " does not match qualified set for secret " +
                    std::to_string(qset.secret_index));
  }
  check_secret(params, secret);
  Hasher hasher(params, Role::dealer, counter);
  Bytes acc = secret.value;
  for (std::uint32_t member : qset.members) {
    const Share& share = find_share(shares, member);
    check_share(params, share);
    PseudoShare p = pseudo_share(hasher, member, share.x, qset.secret_index, qset.position);
    xor_into(acc, p.value.bytes);
  }
  return PublicShareValue{qset.secret_index, qset.position, std::move(acc)};
}

Bulletin build_bulletin(const SchemeParams& params, const std::vector<Secret>& secrets,
                        const std::vector<AccessStructure>& structures,
                        const std::vector<Share>& shares, HashCounter& counter) {
  check_scheme_params(params);
  if (secrets.empty()) throw Error(Errc::invalid_params, "no secrets to share");
  if (secrets.size() > params.k_max) {
    throw Error(Errc::capacity_exceeded,
                std::to_string(secrets.size()) + " secrets exceed k_max = " +
                    std::to_string(params.k_max));
  }
  if (structures.size() != secrets.size()) {
    throw Error(Errc::invalid_params, "expected one access structure per secret");
  }

  std::vector<const Secret*> by_index(secrets.size(), nullptr);
  for (const auto& secret : secrets) {
    check_secret(params, secret);
    if (secret.index < 1 || secret.index > secrets.size() || by_index[secret.index - 1]) {
      throw Error(Errc::invalid_params,
                  "secret indices must be unique and contiguous from 1; offending index " +
                      std::to_string(secret.index));
    }
    by_index[secret.index - 1] = &secret;
  }

  std::vector<const AccessStructure*> structure_by_index(secrets.size(), nullptr);
  for (const auto& structure : structures) {
    require_valid_structure(params, structure);
    if (structure.secret_index < 1 || structure.secret_index > secrets.size() ||
        structure_by_index[structure.secret_index - 1]) {
      throw Error(Errc::invalid_params,
                  "access structures must name each secret exactly once; offending index " +
                      std::to_string(structure.secret_index));
    }
    structure_by_index[structure.secret_index - 1] = &structure;
  }

  std::vector<Share> sorted_shares = shares;
  std::sort(sorted_shares.begin(), sorted_shares.end(),
            [](const Share& a, const Share& b) { return a.participant < b.participant; });
  if (sorted_shares.size() != params.n) {
    throw Error(Errc::missing_share,
                "expected " + std::to_string(params.n) + " shares, got " +
                    std::to_string(sorted_shares.size()));
  }
  for (std::uint32_t a = 1; a <= params.n; ++a) {
    if (sorted_shares[a - 1].participant != a) {
      throw Error(Errc::missing_share, "no share for participant " + std::to_string(a));
    }
    check_share(params, sorted_shares[a - 1]);
  }

  Bulletin bulletin;
  bulletin.params = params;
  bulletin.version = params.version;
  Hasher hasher(params, Role::dealer, counter);
  for (std::size_t idx = 0; idx < by_index.size(); ++idx) {
    const Secret& secret = *by_index[idx];
    const AccessStructure& structure = *structure_by_index[idx];
    bulletin.structures.push_back(structure);
    append_secret_rows(bulletin, hasher, secret, structure, sorted_shares);
    bulletin.commitments.push_back(SecretCommitment{secret.index, hasher.hash(secret.value)});
  }
  canonicalize(bulletin);
  require_valid_bulletin(bulletin);
  return bulletin;
}

Bulletin add_secret(const Bulletin& bulletin, const std::vector<Share>& shares,
                    const Secret& new_secret, const AccessStructure& structure,
                    HashCounter& counter) {
  require_valid_bulletin(bulletin);
  const std::uint32_t k = bulletin.secret_count();
  if (k + 1 > bulletin.params.k_max) {
    throw Error(Errc::capacity_exceeded,
                "instance already holds k_max = " + std::to_string(bulletin.params.k_max) +
                    " secrets");
  }
  if (new_secret.index != k + 1) {
    throw Error(Errc::invalid_params,
                "new secret must take index " + std::to_string(k + 1) + ", got " +
                    std::to_string(new_secret.index));
  }
  check_secret(bulletin.params, new_secret);
  if (structure.secret_index != new_secret.index) {
    throw Error(Errc::invalid_params, "access structure names a different secret index");
  }
  if (structure.t() > bulletin.params.t_max) {
    throw Error(Errc::capacity_exceeded,
                std::to_string(structure.t()) + " qualified sets exceed t_max = " +
                    std::to_string(bulletin.params.t_max));
  }
  require_valid_structure(bulletin.params, structure);

  // Existing rows are copied verbatim; only rows for the new secret are computed.
  Bulletin next = bulletin;
  next.version = bulletin.version + 1;
  next.params.version = next.version;
  next.structures.push_back(structure);
  Hasher hasher(bulletin.params, Role::dealer, counter);
  append_secret_rows(next, hasher, new_secret, structure, shares);
  next.commitments.push_back(
      SecretCommitment{new_secret.index, hasher.hash(new_secret.value)});
  canonicalize(next);
  require_valid_bulletin(next);
  return next;
}

Bulletin replace_access_structure(const Bulletin& bulletin,
                                  const std::vector<Share>& shares, const Secret& secret,
                                  const AccessStructure& new_structure,
                                  HashCounter& counter) {
  require_valid_bulletin(bulletin);
  if (!bulletin.find_structure(secret.index)) {
    throw Error(Errc::unknown_secret,
                "no secret with index " + std::to_string(secret.index) + " in the bulletin");
  }
  check_secret(bulletin.params, secret);
  if (new_structure.secret_index != secret.index) {
    throw Error(Errc::invalid_params, "access structure names a different secret index");
  }
  if (new_structure.t() > bulletin.params.t_max) {
    throw Error(Errc::capacity_exceeded,
                std::to_string(new_structure.t()) + " qualified sets exceed t_max = " +
                    std::to_string(bulletin.params.t_max));
  }
  require_valid_structure(bulletin.params, new_structure);

  Hasher hasher(bulletin.params, Role::dealer, counter);
  // The commitment H(s_i) is position-independent and stays as published;
  // reject a secret value that does not reproduce it.
  if (hasher.hash(secret.value) != bulletin.find_commitment(secret.index)->digest) {
    throw Error(Errc::invalid_params,
                "secret value does not match the published commitment for index " +
                    std::to_string(secret.index));
  }

  Bulletin next = bulletin;
  next.version = bulletin.version + 1;
  next.params.version = next.version;
  std::erase_if(next.structures,
                [&](const auto& s) { return s.secret_index == secret.index; });
  std::erase_if(next.public_shares,
                [&](const auto& row) { return row.secret_index == secret.index; });
  std::erase_if(next.verification_table,
                [&](const auto& e) { return e.secret_index == secret.index; });
  next.structures.push_back(new_structure);
  append_secret_rows(next, hasher, secret, new_structure, shares);
  canonicalize(next);
  require_valid_bulletin(next);
  return next;
}

}  // namespace mss

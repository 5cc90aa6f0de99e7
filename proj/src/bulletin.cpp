#include "mss/bulletin.hpp"

#include <algorithm>
#include <tuple>

#include "mss/errors.hpp"

namespace mss {

const AccessStructure* Bulletin::find_structure(std::uint32_t i) const {
  for (const auto& s : structures) {
    if (s.secret_index == i) return &s;
  }
  return nullptr;
}

const QualifiedSet* Bulletin::find_qualified_set(std::uint32_t i, std::uint32_t j) const {
  const AccessStructure* structure = find_structure(i);
  if (!structure || j < 1 || j > structure->t()) return nullptr;
  return &structure->qualified_sets[j - 1];
}

const PublicShareValue* Bulletin::find_public_share(std::uint32_t i, std::uint32_t j) const {
  for (const auto& row : public_shares) {
    if (row.secret_index == i && row.set_position == j) return &row;
  }
  return nullptr;
}

const SecretCommitment* Bulletin::find_commitment(std::uint32_t i) const {
  for (const auto& c : commitments) {
    if (c.secret_index == i) return &c;
  }
  return nullptr;
}

const VerificationEntry* Bulletin::find_verification(std::uint32_t participant,
                                                     std::uint32_t i,
                                                     std::uint32_t j) const {
  for (const auto& e : verification_table) {
    if (e.participant == participant && e.secret_index == i && e.set_position == j) {
      return &e;
    }
  }
  return nullptr;
}

void canonicalize(Bulletin& bulletin) {
  std::sort(bulletin.structures.begin(), bulletin.structures.end(),
            [](const auto& a, const auto& b) { return a.secret_index < b.secret_index; });
  for (auto& structure : bulletin.structures) {
    for (auto& qs : structure.qualified_sets) {
      std::sort(qs.members.begin(), qs.members.end());
    }
  }
  std::sort(bulletin.public_shares.begin(), bulletin.public_shares.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.secret_index, a.set_position) <
                     std::tie(b.secret_index, b.set_position);
            });
  std::sort(bulletin.commitments.begin(), bulletin.commitments.end(),
            [](const auto& a, const auto& b) { return a.secret_index < b.secret_index; });
  std::sort(bulletin.verification_table.begin(), bulletin.verification_table.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.secret_index, a.set_position, a.participant) <
                     std::tie(b.secret_index, b.set_position, b.participant);
            });
}

ValidationReport check_bulletin(const Bulletin& bulletin) {
  ValidationReport report;
  auto add = [&](std::string v) { report.violations.push_back(std::move(v)); };

  try {
    check_scheme_params(bulletin.params);
  } catch (const Error& e) {
    add(e.what());
    return report;  // everything below depends on sane params
  }

  const std::uint32_t q_bytes = bulletin.params.q_bytes();
  if (bulletin.version < 1) add("bulletin version must be >= 1");
  if (bulletin.version != bulletin.params.version) {
    add("bulletin version " + std::to_string(bulletin.version) +
        " does not match params version " + std::to_string(bulletin.params.version));
  }

  const std::uint32_t k = bulletin.secret_count();
  if (k == 0) add("bulletin holds no secrets");
  if (k > bulletin.params.k_max) {
    add("secret count " + std::to_string(k) + " exceeds k_max = " +
        std::to_string(bulletin.params.k_max));
  }
  for (std::uint32_t idx = 0; idx < k; ++idx) {
    const AccessStructure& structure = bulletin.structures[idx];
    if (structure.secret_index != idx + 1) {
      add("structure at position " + std::to_string(idx + 1) + " has secret index " +
          std::to_string(structure.secret_index) + "; indices must be contiguous from 1");
    }
    ValidationReport inner = validate_access_structure(bulletin.params, structure);
    for (auto& v : inner.violations) report.violations.push_back(std::move(v));
  }

  // Exactly one S row per (i, j) listed in the structures, none otherwise.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> expected_rows;
  for (const auto& structure : bulletin.structures) {
    for (const auto& qs : structure.qualified_sets) {
      expected_rows.emplace_back(structure.secret_index, qs.position);
    }
  }
  if (bulletin.public_shares.size() != expected_rows.size()) {
    add("expected " + std::to_string(expected_rows.size()) + " public share rows, found " +
        std::to_string(bulletin.public_shares.size()));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seen_rows;
  for (const auto& row : bulletin.public_shares) {
    const std::string tag =
        "S[" + std::to_string(row.secret_index) + "," + std::to_string(row.set_position) + "]";
    auto key = std::make_pair(row.secret_index, row.set_position);
    if (std::find(seen_rows.begin(), seen_rows.end(), key) != seen_rows.end()) {
      add("duplicate row " + tag);
    }
    seen_rows.push_back(key);
    if (std::find(expected_rows.begin(), expected_rows.end(), key) == expected_rows.end()) {
      add(tag + " has no matching qualified set");
    }
    if (row.s.size() != q_bytes) {
      add(tag + " length is " + std::to_string(row.s.size() * 8) + " bits, expected q = " +
          std::to_string(bulletin.params.q));
    }
  }

  // Exactly one commitment per secret.
  std::vector<std::uint32_t> seen_commitments;
  for (const auto& c : bulletin.commitments) {
    if (std::find(seen_commitments.begin(), seen_commitments.end(), c.secret_index) !=
        seen_commitments.end()) {
      add("duplicate commitment for secret " + std::to_string(c.secret_index));
    }
    seen_commitments.push_back(c.secret_index);
    if (c.secret_index < 1 || c.secret_index > k) {
      add("commitment for unknown secret " + std::to_string(c.secret_index));
    }
    if (c.digest.bytes.size() != q_bytes) {
      add("commitment for secret " + std::to_string(c.secret_index) + " length is " +
          std::to_string(c.digest.bits()) + " bits, expected q");
    }
  }
  if (bulletin.commitments.size() != k) {
    add("expected " + std::to_string(k) + " commitments, found " +
        std::to_string(bulletin.commitments.size()));
  }

  // Exactly one verification entry per (a, i, j) with a in A_ij, none otherwise.
  std::size_t expected_entries = 0;
  for (const auto& structure : bulletin.structures) {
    for (const auto& qs : structure.qualified_sets) expected_entries += qs.members.size();
  }
  if (bulletin.verification_table.size() != expected_entries) {
    add("expected " + std::to_string(expected_entries) + " verification entries, found " +
        std::to_string(bulletin.verification_table.size()));
  }
  std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen_entries;
  for (const auto& e : bulletin.verification_table) {
    const std::string tag = "verification entry (" + std::to_string(e.participant) + "," +
                            std::to_string(e.secret_index) + "," +
                            std::to_string(e.set_position) + ")";
    auto key = std::make_tuple(e.secret_index, e.set_position, e.participant);
    if (std::find(seen_entries.begin(), seen_entries.end(), key) != seen_entries.end()) {
      add("duplicate " + tag);
    }
    seen_entries.push_back(key);
    const QualifiedSet* qs = bulletin.find_qualified_set(e.secret_index, e.set_position);
    if (!qs) {
      add(tag + " references a nonexistent row");
    } else if (!qs->contains(e.participant)) {
      add(tag + " names a non-member of the qualified set");
    }
    if (e.digest.bytes.size() != q_bytes) {
      add(tag + " digest length is " + std::to_string(e.digest.bits()) +
          " bits, expected q");
    }
  }

  // Canonical ordering is part of the contract.
  Bulletin sorted = bulletin;
  canonicalize(sorted);
  if (sorted != bulletin) add("bulletin arrays are not in canonical order");

  return report;
}

void require_valid_bulletin(const Bulletin& bulletin) {
  ValidationReport report = check_bulletin(bulletin);
  if (!report.ok()) {
    throw Error(Errc::invariant_violation, report.joined());
  }
}

}  // namespace mss

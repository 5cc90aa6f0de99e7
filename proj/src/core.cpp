#include "mss/core.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "mss/errors.hpp"
#include "mss/hashing.hpp"

namespace mss {

std::uint32_t index_width(std::uint32_t capacity) {
  // ceil(log2(c)) == bit_width(c - 1) for c >= 1
  return std::bit_width(capacity - 1u) + 1u;
}

SchemeParams make_scheme_params(std::uint32_t q, std::uint32_t n,
                                std::uint32_t k_max, std::uint32_t t_max,
                                std::string hash_id, bool allow_small_q) {
  if (n < 1) throw Error(Errc::invalid_params, "n must be >= 1");
  if (k_max < 1) throw Error(Errc::invalid_params, "k_max must be >= 1");
  if (t_max < 1) throw Error(Errc::invalid_params, "t_max must be >= 1");
  if (q == 0 || q % 8 != 0) {
    throw Error(Errc::invalid_params, "q must be a multiple of 8, got " + std::to_string(q));
  }
  if (q < 64 && !allow_small_q) {
    throw Error(Errc::invalid_params,
                "q must be >= 64 bits (smaller values are test-mode only), got " +
                    std::to_string(q));
  }
  if (!hash_id_supported(hash_id)) {
    throw Error(Errc::unsupported_hash, "unknown hash_id \"" + hash_id + "\"");
  }
  if (q > hash_max_bits(hash_id)) {
    throw Error(Errc::invalid_params,
                "q = " + std::to_string(q) + " exceeds the " + hash_id +
                    " output capability of " + std::to_string(hash_max_bits(hash_id)) +
                    " bits");
  }

  SchemeParams params;
  params.q = q;
  params.n = n;
  params.k_max = k_max;
  params.t_max = t_max;
  params.l = index_width(k_max);
  params.m = index_width(t_max);
  params.hash_id = std::move(hash_id);
  params.version = 1;
  return params;
}

void check_scheme_params(const SchemeParams& params) {
  if (params.n < 1) throw Error(Errc::invalid_params, "n must be >= 1");
  if (params.k_max < 1) throw Error(Errc::invalid_params, "k_max must be >= 1");
  if (params.t_max < 1) throw Error(Errc::invalid_params, "t_max must be >= 1");
  if (params.q == 0 || params.q % 8 != 0) {
    throw Error(Errc::invalid_params, "q must be a multiple of 8, got " + std::to_string(params.q));
  }
  if (!hash_id_supported(params.hash_id)) {
    throw Error(Errc::unsupported_hash, "unknown hash_id \"" + params.hash_id + "\"");
  }
  if (params.q > hash_max_bits(params.hash_id)) {
    throw Error(Errc::invalid_params, "q exceeds hash output capability");
  }
  if (params.l != index_width(params.k_max)) {
    throw Error(Errc::invalid_params,
                "l = " + std::to_string(params.l) + " does not match k_max = " +
                    std::to_string(params.k_max));
  }
  if (params.m != index_width(params.t_max)) {
    throw Error(Errc::invalid_params,
                "m = " + std::to_string(params.m) + " does not match t_max = " +
                    std::to_string(params.t_max));
  }
  if (params.version < 1) throw Error(Errc::invalid_params, "version must be >= 1");
}

std::vector<Participant> make_participants(const SchemeParams& params,
                                           std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != params.n) {
    throw Error(Errc::invalid_params,
                "expected " + std::to_string(params.n) + " labels, got " +
                    std::to_string(labels.size()));
  }
  std::vector<Participant> out;
  out.reserve(params.n);
  for (std::uint32_t a = 1; a <= params.n; ++a) {
    std::string label = labels.empty() ? "P" + std::to_string(a) : std::move(labels[a - 1]);
    out.push_back(Participant{a, std::move(label)});
  }
  return out;
}

void check_secret(const SchemeParams& params, const Secret& secret) {
  if (secret.index < 1 || secret.index > params.k_max) {
    throw Error(Errc::index_out_of_range,
                "secret index " + std::to_string(secret.index) + " outside 1.." +
                    std::to_string(params.k_max));
  }
  if (secret.value.size() != params.q_bytes()) {
    throw Error(Errc::length_mismatch,
                "secret " + std::to_string(secret.index) + " has " +
                    std::to_string(secret.value.size() * 8) + " bits, expected q = " +
                    std::to_string(params.q));
  }
}

bool QualifiedSet::contains(std::uint32_t participant) const {
  return std::find(members.begin(), members.end(), participant) != members.end();
}

std::string ValidationReport::joined() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_access_structure(const SchemeParams& params,
                                           const AccessStructure& structure) {
  ValidationReport report;
  auto add = [&](std::string v) { report.violations.push_back(std::move(v)); };

  if (structure.secret_index < 1 || structure.secret_index > params.k_max) {
    add("secret index " + std::to_string(structure.secret_index) +
        " outside capacity 1.." + std::to_string(params.k_max));
  }
  if (structure.qualified_sets.empty()) {
    add("access structure for secret " + std::to_string(structure.secret_index) +
        " has no qualified sets");
  }
  if (structure.t() > params.t_max) {
    add("capacity exceeded: " + std::to_string(structure.t()) +
        " qualified sets, t_max = " + std::to_string(params.t_max));
  }

  std::vector<std::set<std::uint32_t>> seen_memberships;
  for (std::size_t idx = 0; idx < structure.qualified_sets.size(); ++idx) {
    const QualifiedSet& qs = structure.qualified_sets[idx];
    const std::string tag = "qualified set " + std::to_string(structure.secret_index) +
                            "." + std::to_string(idx + 1);

    if (qs.secret_index != structure.secret_index) {
      add(tag + " carries secret index " + std::to_string(qs.secret_index));
    }
    if (qs.position != idx + 1) {
      add(tag + " has position " + std::to_string(qs.position) +
          ", expected " + std::to_string(idx + 1));
    }
    if (qs.members.empty()) {
      add("empty qualified set at " + tag);
      continue;
    }

    std::set<std::uint32_t> membership;
    for (std::uint32_t member : qs.members) {
      if (member < 1 || member > params.n) {
        add(tag + " names participant " + std::to_string(member) + " outside 1.." +
            std::to_string(params.n));
      }
      if (!membership.insert(member).second) {
        add(tag + " lists participant " + std::to_string(member) + " twice");
      }
    }
    for (const auto& other : seen_memberships) {
      if (other == membership) {
        add(tag + " duplicates the membership of an earlier qualified set");
        break;
      }
    }
    seen_memberships.push_back(std::move(membership));
  }
  return report;
}

void require_valid_structure(const SchemeParams& params,
                             const AccessStructure& structure) {
  ValidationReport report = validate_access_structure(params, structure);
  if (!report.ok()) {
    throw Error(Errc::invariant_violation,
                "access structure for secret " + std::to_string(structure.secret_index) +
                    ": " + report.joined());
  }
}

AccessStructure make_access_structure(
    const SchemeParams& params, std::uint32_t secret_index,
    const std::vector<std::vector<std::uint32_t>>& member_lists) {
  AccessStructure structure;
  structure.secret_index = secret_index;
  structure.qualified_sets.reserve(member_lists.size());
  for (std::size_t j = 0; j < member_lists.size(); ++j) {
    QualifiedSet qs;
    qs.secret_index = secret_index;
    qs.position = static_cast<std::uint32_t>(j + 1);
    qs.members = member_lists[j];
    structure.qualified_sets.push_back(std::move(qs));
  }
  require_valid_structure(params, structure);
  for (auto& qs : structure.qualified_sets) {
    std::sort(qs.members.begin(), qs.members.end());
  }
  return structure;
}

}  // namespace mss

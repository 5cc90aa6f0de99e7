#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "mss/bulletin.hpp"
#include "mss/combiner.hpp"
#include "mss/dealer.hpp"

namespace mss {

// Identifies the scheme instance a file belongs to: hex SHA-256 of the
// canonical params block. The bulletin version is excluded so renewals do
// not orphan previously issued share files. Not an authenticity mechanism.
std::string params_fingerprint(const SchemeParams& params);

// Canonical JSON text: keys sorted, binary values as lowercase hex, arrays
// in (i, j, a) order. Identical bulletins produce byte-identical text.
std::string bulletin_to_json(const Bulletin& bulletin);

// Parses and fully revalidates; unknown fields are rejected.
Bulletin bulletin_from_json(const std::string& text);

// Refuses to persist a bulletin that fails its invariants. Atomic
// (write-temp-then-rename).
void save_bulletin(const Bulletin& bulletin, const std::filesystem::path& path);
Bulletin load_bulletin(const std::filesystem::path& path);

// Contents of a share-<a>.json file.
struct ShareFile {
  std::uint32_t participant = 0;
  std::uint32_t q = 0;
  Bytes x;
  std::string fingerprint;

  bool operator==(const ShareFile&) const = default;
};

void save_share(const SchemeParams& params, const Share& share,
                const std::filesystem::path& path);
ShareFile load_share(const std::filesystem::path& path);

// Throws Error{fingerprint_mismatch} when the share belongs to a different
// scheme instance.
Share bind_share(const ShareFile& file, const SchemeParams& params);

void save_dealer_state(const DealerState& state, const std::filesystem::path& path);
DealerState load_dealer_state(const std::filesystem::path& path);

// A participant's submission, bound to (a, i, j) and the scheme instance.
struct PseudoShareRecord {
  std::uint32_t participant = 0;
  std::uint32_t secret_index = 0;
  std::uint32_t set_position = 0;
  Bytes value;
  std::string fingerprint;

  bool operator==(const PseudoShareRecord&) const = default;
};

void save_pseudo_share_record(const PseudoShareRecord& record,
                              const std::filesystem::path& path);
PseudoShareRecord load_pseudo_share_record(const std::filesystem::path& path);

std::string session_report_to_json(const SessionOutcome& outcome);
void save_session_report(const SessionOutcome& outcome, const std::filesystem::path& path);
SessionOutcome load_session_report(const std::filesystem::path& path);

// Structures input file: JSON array of {secret_index, qualified_sets: [[...]]}
// entries, j implied by order. Every structure is validated against params.
std::vector<AccessStructure> load_access_structures(const std::filesystem::path& path,
                                                    const SchemeParams& params);

}  // namespace mss

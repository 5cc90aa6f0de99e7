// Regenerates the golden fixture files under tests/fixtures/golden.
// The instance is fully seeded, so reruns are byte-identical.
//
// Usage: make-fixtures <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "mss/combiner.hpp"
#include "mss/dealer.hpp"
#include "mss/participant.hpp"
#include "mss/store.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-fixtures <output-dir>\n";
    return 1;
  }
  const fs::path out_dir(argv[1]);
  fs::create_directories(out_dir);

  mss::SchemeParams params =
      mss::make_scheme_params(64, 3, 4, 4, "sha-256");
  std::vector<mss::Participant> participants =
      mss::make_participants(params, {"alice", "bob", "carol"});

  mss::SeededEntropy entropy(mss::from_hex("c0ffee"));
  std::vector<mss::Share> shares = mss::issue_shares(params, entropy);

  std::vector<mss::Secret> secrets{
      {1, mss::from_hex("0123456789abcdef")},
      {2, mss::from_hex("deadbeef00c0ffee")},
  };
  std::vector<mss::AccessStructure> structures{
      mss::make_access_structure(params, 1, {{1, 2}, {2, 3}}),
      mss::make_access_structure(params, 2, {{1, 2, 3}}),
  };

  // CLI input files
  {
    std::ofstream f(out_dir / "secrets.txt");
    for (const auto& secret : secrets) f << mss::to_hex(secret.value) << "\n";
  }
  {
    std::ofstream f(out_dir / "structures.json");
    f << "[\n"
         "  {\"secret_index\": 1, \"qualified_sets\": [[1, 2], [2, 3]]},\n"
         "  {\"secret_index\": 2, \"qualified_sets\": [[1, 2, 3]]}\n"
         "]\n";
  }

  mss::DealerState initial{params, participants, shares, {}};
  mss::save_dealer_state(initial, out_dir / "dealer-state-initial.json");
  for (const auto& share : shares) {
    mss::save_share(params, share,
                    out_dir / ("share-" + std::to_string(share.participant) + ".json"));
  }

  mss::HashCounter counter;
  mss::Bulletin bulletin =
      mss::build_bulletin(params, secrets, structures, shares, counter);
  mss::save_bulletin(bulletin, out_dir / "bulletin.json");

  mss::DealerState dealt{params, participants, shares, secrets};
  mss::save_dealer_state(dealt, out_dir / "dealer-state.json");

  const std::string fingerprint = mss::params_fingerprint(params);
  mss::ReconstructionSession session{1, 1, {}};
  for (std::uint32_t participant : {1u, 2u}) {
    mss::PseudoShare pseudo = mss::derive_pseudo_share(params, shares[participant - 1], 1,
                                                       1, bulletin, counter);
    mss::PseudoShareRecord record{pseudo.participant, pseudo.secret_index,
                                  pseudo.set_position, pseudo.value.bytes, fingerprint};
    mss::save_pseudo_share_record(
        record, out_dir / ("pseudoshare-" + std::to_string(participant) + "-1-1.json"));
    session.submissions[participant] = pseudo.value.bytes;
  }

  mss::SessionOutcome outcome = mss::reconstruct(bulletin, session, counter);
  mss::save_session_report(outcome, out_dir / "session-report.json");

  std::cout << "fixtures written to " << out_dir.string() << "\n";
  return outcome.ok() ? 0 : 1;
}

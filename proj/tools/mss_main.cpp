// mss - command line front end for the hash-based multi-secret sharing toolkit.
//
// Exit codes: 0 success, 1 validation error, 2 verification failure, 3 I/O error.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mss/combiner.hpp"
#include "mss/dealer.hpp"
#include "mss/errors.hpp"
#include "mss/participant.hpp"
#include "mss/store.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;
constexpr int kExitIo = 3;

int classify(const mss::Error& error) {
  switch (error.code()) {
    case mss::Errc::io_error:
      return kExitIo;
    case mss::Errc::fingerprint_mismatch:
      return kExitVerification;
    default:
      return kExitValidation;
  }
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_labels(const std::string& csv) {
  std::vector<std::string> labels;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) labels.push_back(item);
  return labels;
}

// One hex q-bit value per line; the secret index is the line number.
std::vector<mss::Secret> parse_secrets_file(const fs::path& path,
                                            const mss::SchemeParams& params) {
  std::ifstream in(path);
  if (!in) throw mss::Error(mss::Errc::io_error, "cannot open " + path.string());
  std::vector<mss::Secret> secrets;
  std::string line;
  std::uint32_t line_number = 0;
  bool saw_blank = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      saw_blank = true;
      continue;
    }
    if (saw_blank) {
      throw mss::Error(mss::Errc::parse_error,
                       path.string() + ": blank line before line " +
                           std::to_string(line_number));
    }
    mss::Bytes value;
    try {
      value = mss::from_hex(line);
    } catch (const mss::Error& e) {
      throw mss::Error(mss::Errc::parse_error,
                       path.string() + " line " + std::to_string(line_number) + ": " +
                           e.what());
    }
    if (value.size() != params.q_bytes()) {
      throw mss::Error(mss::Errc::length_mismatch,
                       path.string() + " line " + std::to_string(line_number) + ": secret has " +
                           std::to_string(value.size() * 8) + " bits, expected q = " +
                           std::to_string(params.q));
    }
    secrets.push_back(
        mss::Secret{static_cast<std::uint32_t>(secrets.size() + 1), std::move(value)});
  }
  if (secrets.empty()) {
    throw mss::Error(mss::Errc::parse_error, path.string() + ": no secrets found");
  }
  return secrets;
}

struct RowDiff {
  std::size_t added = 0;
  std::size_t removed = 0;
  std::size_t changed = 0;
  std::size_t unchanged = 0;
};

template <typename Key, typename Value>
RowDiff diff_maps(const std::map<Key, Value>& before, const std::map<Key, Value>& after) {
  RowDiff diff;
  for (const auto& [key, value] : after) {
    auto it = before.find(key);
    if (it == before.end()) {
      ++diff.added;
    } else if (it->second == value) {
      ++diff.unchanged;
    } else {
      ++diff.changed;
    }
  }
  for (const auto& [key, value] : before) {
    if (!after.count(key)) ++diff.removed;
  }
  return diff;
}

void print_renew_diff(const mss::Bulletin& before, const mss::Bulletin& after) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, mss::Bytes> s_before, s_after;
  for (const auto& row : before.public_shares) {
    s_before[{row.secret_index, row.set_position}] = row.s;
  }
  for (const auto& row : after.public_shares) {
    s_after[{row.secret_index, row.set_position}] = row.s;
  }
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, mss::Bytes> v_before,
      v_after;
  for (const auto& e : before.verification_table) {
    v_before[{e.secret_index, e.set_position, e.participant}] = e.digest.bytes;
  }
  for (const auto& e : after.verification_table) {
    v_after[{e.secret_index, e.set_position, e.participant}] = e.digest.bytes;
  }
  RowDiff s_diff = diff_maps(s_before, s_after);
  RowDiff v_diff = diff_maps(v_before, v_after);
  std::cout << "version: " << before.version << " -> " << after.version << "\n";
  std::cout << "S rows: added " << s_diff.added << ", removed " << s_diff.removed
            << ", changed " << s_diff.changed << ", unchanged " << s_diff.unchanged << "\n";
  std::cout << "verification entries: added " << v_diff.added << ", removed "
            << v_diff.removed << ", changed " << v_diff.changed << ", unchanged "
            << v_diff.unchanged << "\n";
  std::cout << "shares untouched\n";
}

// --- subcommand payloads -----------------------------------------------------

struct SetupArgs {
  std::uint32_t q = 0, n = 0, k_max = 0, t_max = 0;
  std::string hash_id = "sha-256";
  std::string labels_csv;
  std::string out_dir;
  std::string seed_hex;
  bool force = false;
  bool insecure_test_mode = false;
};

int run_setup(const SetupArgs& args) {
  if (args.q < 64 && !args.insecure_test_mode) {
    throw mss::Error(mss::Errc::invalid_params,
                     "q below 64 requires --insecure-test-mode");
  }
  if (!args.seed_hex.empty() && !args.insecure_test_mode) {
    throw mss::Error(mss::Errc::invalid_params, "--seed requires --insecure-test-mode");
  }

  fs::path out_dir(args.out_dir);
  std::error_code ec;
  if (fs::exists(out_dir) && !fs::is_empty(out_dir, ec) && !args.force) {
    throw mss::Error(mss::Errc::io_error,
                     "refusing to write into non-empty directory " + out_dir.string() +
                         " (use --force)");
  }
  fs::create_directories(out_dir, ec);
  if (ec) throw mss::Error(mss::Errc::io_error, "cannot create " + out_dir.string());

  mss::SchemeParams params = mss::make_scheme_params(
      args.q, args.n, args.k_max, args.t_max, args.hash_id, args.insecure_test_mode);

  std::vector<std::string> labels;
  if (!args.labels_csv.empty()) labels = split_labels(args.labels_csv);
  std::vector<mss::Participant> participants = mss::make_participants(params, labels);

  std::unique_ptr<mss::EntropySource> entropy;
  if (!args.seed_hex.empty()) {
    entropy = std::make_unique<mss::SeededEntropy>(mss::from_hex(lowercase(args.seed_hex)));
  } else {
    entropy = std::make_unique<mss::SystemEntropy>();
  }

  std::vector<mss::Share> shares = mss::issue_shares(params, *entropy);
  mss::DealerState state{params, std::move(participants), shares, {}};
  mss::save_dealer_state(state, out_dir / "dealer-state.json");
  for (const auto& share : shares) {
    mss::save_share(params, share,
                    out_dir / ("share-" + std::to_string(share.participant) + ".json"));
  }

  std::cout << "l = " << params.l << "\n";
  std::cout << "m = " << params.m << "\n";
  std::cout << "fingerprint = " << mss::params_fingerprint(params) << "\n";
  std::cout << "wrote dealer-state.json and " << params.n << " share files to "
            << out_dir.string() << "\n";
  return kExitOk;
}

struct DealArgs {
  std::string state_path, secrets_path, structures_path, out_path;
};

int run_deal(const DealArgs& args) {
  mss::DealerState state = mss::load_dealer_state(args.state_path);
  std::vector<mss::Secret> secrets = parse_secrets_file(args.secrets_path, state.params);
  std::vector<mss::AccessStructure> structures =
      mss::load_access_structures(args.structures_path, state.params);

  mss::HashCounter counter;
  mss::Bulletin bulletin =
      mss::build_bulletin(state.params, secrets, structures, state.shares, counter);
  mss::save_bulletin(bulletin, args.out_path);

  // The dealer keeps the secrets: renewals need them.
  state.secrets = std::move(secrets);
  mss::save_dealer_state(state, args.state_path);

  std::cout << "dealer hashes: " << counter.snapshot().dealer << "\n";
  std::cout << "bulletin version " << bulletin.version << " written to " << args.out_path
            << "\n";
  return kExitOk;
}

struct PseudoShareArgs {
  std::string share_path, bulletin_path, out_path;
  std::uint32_t secret_index = 0, set_position = 0;
};

int run_pseudoshare(const PseudoShareArgs& args) {
  mss::Bulletin bulletin = mss::load_bulletin(args.bulletin_path);
  mss::ShareFile file = mss::load_share(args.share_path);
  mss::Share share = mss::bind_share(file, bulletin.params);

  mss::HashCounter counter;
  mss::PseudoShare pseudo = mss::derive_pseudo_share(
      bulletin.params, share, args.secret_index, args.set_position, bulletin, counter);

  mss::PseudoShareRecord record{pseudo.participant, pseudo.secret_index,
                                pseudo.set_position, pseudo.value.bytes,
                                mss::params_fingerprint(bulletin.params)};
  fs::path out = args.out_path.empty()
                     ? fs::path("pseudoshare-" + std::to_string(record.participant) + "-" +
                                std::to_string(record.secret_index) + "-" +
                                std::to_string(record.set_position) + ".json")
                     : fs::path(args.out_path);
  mss::save_pseudo_share_record(record, out);
  std::cout << "wrote " << out.string() << "\n";
  return kExitOk;
}

struct ReconstructArgs {
  std::string bulletin_path, out_path;
  std::uint32_t secret_index = 0, set_position = 0;
  std::vector<std::string> record_paths;
};

int run_reconstruct(const ReconstructArgs& args) {
  mss::Bulletin bulletin = mss::load_bulletin(args.bulletin_path);
  const std::string fingerprint = mss::params_fingerprint(bulletin.params);

  mss::ReconstructionSession session;
  session.secret_index = args.secret_index;
  session.set_position = args.set_position;
  for (const auto& path : args.record_paths) {
    mss::PseudoShareRecord record = mss::load_pseudo_share_record(path);
    if (record.fingerprint != fingerprint) {
      throw mss::Error(mss::Errc::fingerprint_mismatch,
                       path + " belongs to a different scheme instance");
    }
    if (record.secret_index != args.secret_index ||
        record.set_position != args.set_position) {
      std::cerr << "warning: " << path << " is bound to row (" << record.secret_index
                << "," << record.set_position << "), not (" << args.secret_index << ","
                << args.set_position << "); it will fail verification\n";
    }
    if (session.submissions.count(record.participant)) {
      throw mss::Error(mss::Errc::invalid_params,
                       "duplicate submission for participant " +
                           std::to_string(record.participant));
    }
    session.submissions[record.participant] = record.value;
  }

  mss::HashCounter counter;
  mss::SessionOutcome outcome = mss::reconstruct(bulletin, session, counter);
  if (!args.out_path.empty()) mss::save_session_report(outcome, args.out_path);

  for (const auto& [participant, verdict] : outcome.verdicts) {
    std::cout << "P" << participant << ": " << mss::verdict_name(verdict) << "\n";
  }
  if (outcome.ok()) {
    std::cout << "secret = " << mss::to_hex(*outcome.secret) << "\n";
    return kExitOk;
  }
  std::cout << "reconstruction failed";
  if (!outcome.missing.empty()) {
    std::cout << "; missing:";
    for (auto participant : outcome.missing) std::cout << " " << participant;
  }
  if (!outcome.rejected.empty()) {
    std::cout << "; rejected:";
    for (auto participant : outcome.rejected) std::cout << " " << participant;
  }
  std::cout << "\n";
  return kExitVerification;
}

struct VerifySecretArgs {
  std::string bulletin_path, candidate_hex;
  std::uint32_t secret_index = 0;
};

int run_verify_secret(const VerifySecretArgs& args) {
  mss::Bulletin bulletin = mss::load_bulletin(args.bulletin_path);
  const mss::SecretCommitment* commitment = bulletin.find_commitment(args.secret_index);
  if (!commitment) {
    throw mss::Error(mss::Errc::unknown_secret,
                     "no secret with index " + std::to_string(args.secret_index));
  }
  mss::Bytes candidate = mss::from_hex(lowercase(args.candidate_hex));
  if (candidate.size() != bulletin.params.q_bytes()) {
    std::cout << "reject: candidate has " << candidate.size() * 8
              << " bits, expected q = " << bulletin.params.q << "\n";
    return kExitVerification;
  }
  mss::HashCounter counter;
  bool accepted =
      mss::verify_secret(bulletin.params, candidate, *commitment, counter);
  std::cout << (accepted ? "accept" : "reject") << "\n";
  return accepted ? kExitOk : kExitVerification;
}

struct RenewArgs {
  std::string state_path, bulletin_path, out_path, structures_path;
  std::string add_secret_hex;
  std::uint32_t replace_secret_index = 0;
};

int run_renew(const RenewArgs& args) {
  const bool adding = !args.add_secret_hex.empty();
  const bool replacing = args.replace_secret_index != 0;
  if (adding == replacing) {
    throw mss::Error(mss::Errc::invalid_params,
                     "renew needs exactly one of --add-secret or --replace-structure");
  }

  mss::DealerState state = mss::load_dealer_state(args.state_path);
  mss::Bulletin bulletin = mss::load_bulletin(args.bulletin_path);
  if (mss::params_fingerprint(state.params) != mss::params_fingerprint(bulletin.params)) {
    throw mss::Error(mss::Errc::fingerprint_mismatch,
                     "dealer state and bulletin belong to different scheme instances");
  }
  if (adding && bulletin.secret_count() + 1 > bulletin.params.k_max) {
    throw mss::Error(mss::Errc::capacity_exceeded,
                     "instance already holds k_max = " +
                         std::to_string(bulletin.params.k_max) + " secrets");
  }

  std::vector<mss::AccessStructure> structures =
      mss::load_access_structures(args.structures_path, bulletin.params);
  if (structures.size() != 1) {
    throw mss::Error(mss::Errc::invalid_params,
                     "structures file must contain exactly one entry for renew");
  }
  const mss::AccessStructure& structure = structures.front();

  mss::HashCounter counter;
  mss::Bulletin next;
  if (adding) {
    const std::uint32_t new_index = bulletin.secret_count() + 1;
    if (structure.secret_index != new_index) {
      throw mss::Error(mss::Errc::invalid_params,
                       "structure names secret " + std::to_string(structure.secret_index) +
                           ", expected new index " + std::to_string(new_index));
    }
    mss::Secret secret{new_index, mss::from_hex(lowercase(args.add_secret_hex))};
    next = mss::add_secret(bulletin, state.shares, secret, structure, counter);
    state.secrets.push_back(std::move(secret));
    mss::save_dealer_state(state, args.state_path);
  } else {
    if (structure.secret_index != args.replace_secret_index) {
      throw mss::Error(mss::Errc::invalid_params,
                       "structure names secret " + std::to_string(structure.secret_index) +
                           ", expected " + std::to_string(args.replace_secret_index));
    }
    const mss::Secret* secret = nullptr;
    for (const auto& candidate : state.secrets) {
      if (candidate.index == args.replace_secret_index) secret = &candidate;
    }
    if (!secret) {
      throw mss::Error(mss::Errc::unknown_secret,
                       "dealer state holds no secret with index " +
                           std::to_string(args.replace_secret_index) +
                           " (run deal first)");
    }
    next = mss::replace_access_structure(bulletin, state.shares, *secret, structure,
                                         counter);
  }

  mss::save_bulletin(next, args.out_path);
  print_renew_diff(bulletin, next);
  std::cout << "bulletin version " << next.version << " written to " << args.out_path
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Renewable, multi-use, multi-secret sharing over a public bulletin"};
  app.require_subcommand(1);

  SetupArgs setup_args;
  CLI::App* setup = app.add_subcommand(
      "setup", "Create a scheme instance: dealer state and one share file per participant");
  setup->add_option("--q", setup_args.q, "Secret/share bit length (multiple of 8)")
      ->required();
  setup->add_option("--n", setup_args.n, "Number of participants")->required();
  setup->add_option("--k-max", setup_args.k_max, "Maximum number of secrets")->required();
  setup->add_option("--t-max", setup_args.t_max, "Maximum qualified sets per secret")
      ->required();
  setup->add_option("--hash", setup_args.hash_id, "Hash instantiation (default sha-256)");
  setup->add_option("--labels", setup_args.labels_csv, "Comma-separated participant labels");
  setup->add_option("--out", setup_args.out_dir, "Output directory")->required();
  setup->add_flag("--force", setup_args.force, "Write into a non-empty directory");
  setup->add_flag("--insecure-test-mode", setup_args.insecure_test_mode,
                  "Enable test-only options (--seed, q below 64)");
  setup->add_option("--seed", setup_args.seed_hex,
                    "Hex seed for deterministic shares (test mode only)");

  DealArgs deal_args;
  CLI::App* deal = app.add_subcommand(
      "deal", "Publish the bulletin for a set of secrets and access structures");
  deal->add_option("--state", deal_args.state_path, "Dealer state file")->required();
  deal->add_option("--secrets", deal_args.secrets_path,
                   "Secrets file: one hex q-bit value per line")
      ->required();
  deal->add_option("--structures", deal_args.structures_path, "Access structures JSON file")
      ->required();
  deal->add_option("--out", deal_args.out_path, "Bulletin output path")->required();

  PseudoShareArgs pseudo_args;
  CLI::App* pseudoshare = app.add_subcommand(
      "pseudoshare", "Derive a pseudo-share for one (secret, qualified-set) row");
  pseudoshare->add_option("--share", pseudo_args.share_path, "Participant share file")
      ->required();
  pseudoshare->add_option("--bulletin", pseudo_args.bulletin_path, "Public bulletin file")
      ->required();
  pseudoshare->add_option("--secret-index,-i", pseudo_args.secret_index, "Secret index i")
      ->required();
  pseudoshare->add_option("--set-position,-j", pseudo_args.set_position, "Set position j")
      ->required();
  pseudoshare->add_option("--out", pseudo_args.out_path,
                          "Record path (default pseudoshare-<a>-<i>-<j>.json)");

  ReconstructArgs reconstruct_args;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Verify submitted pseudo-shares and reconstruct the secret");
  reconstruct->add_option("--bulletin", reconstruct_args.bulletin_path, "Public bulletin file")
      ->required();
  reconstruct
      ->add_option("--secret-index,-i", reconstruct_args.secret_index, "Secret index i")
      ->required();
  reconstruct
      ->add_option("--set-position,-j", reconstruct_args.set_position, "Set position j")
      ->required();
  reconstruct->add_option("--out", reconstruct_args.out_path, "Session report output path");
  reconstruct->add_option("records", reconstruct_args.record_paths,
                          "Pseudo-share record files");

  VerifySecretArgs verify_args;
  CLI::App* verify_secret = app.add_subcommand(
      "verify-secret", "Check a candidate secret against its public commitment");
  verify_secret->add_option("--bulletin", verify_args.bulletin_path, "Public bulletin file")
      ->required();
  verify_secret->add_option("--secret-index,-i", verify_args.secret_index, "Secret index i")
      ->required();
  verify_secret->add_option("--candidate", verify_args.candidate_hex, "Candidate secret, hex")
      ->required();

  RenewArgs renew_args;
  CLI::App* renew = app.add_subcommand(
      "renew", "Add a secret or replace an access structure by republishing public values");
  renew->add_option("--state", renew_args.state_path, "Dealer state file")->required();
  renew->add_option("--bulletin", renew_args.bulletin_path, "Current bulletin file")
      ->required();
  renew->add_option("--out", renew_args.out_path, "New bulletin output path")->required();
  renew->add_option("--structure", renew_args.structures_path,
                    "Structures JSON file with exactly one entry")
      ->required();
  renew->add_option("--add-secret", renew_args.add_secret_hex,
                    "Hex value of the secret to add (takes index k+1)");
  renew->add_option("--replace-structure", renew_args.replace_secret_index,
                    "Secret index whose access structure is replaced");

  CLI11_PARSE(app, argc, argv);

  try {
    if (setup->parsed()) return run_setup(setup_args);
    if (deal->parsed()) return run_deal(deal_args);
    if (pseudoshare->parsed()) return run_pseudoshare(pseudo_args);
    if (reconstruct->parsed()) return run_reconstruct(reconstruct_args);
    if (verify_secret->parsed()) return run_verify_secret(verify_args);
    if (renew->parsed()) return run_renew(renew_args);
  } catch (const mss::Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return classify(error);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}

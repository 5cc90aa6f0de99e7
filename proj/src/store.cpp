#include "mss/store.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mss/errors.hpp"

namespace mss {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "mss/1";

// --- strict parse helpers -------------------------------------------------

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  throw Error(Errc::parse_error, where + ": " + what);
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected a JSON object");
  std::set<std::string> expected(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!expected.count(key)) parse_fail(where, "unknown field \"" + key + "\"");
  }
  for (const auto& key : expected) {
    if (!obj.contains(key)) parse_fail(where, "missing field \"" + key + "\"");
  }
}

std::uint64_t get_u64(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    parse_fail(where, std::string("field \"") + key + "\" must be an unsigned integer");
  }
  return v.get<std::uint64_t>();
}

std::uint32_t get_u32(const json& obj, const char* key, const std::string& where) {
  std::uint64_t v = get_u64(obj, key, where);
  if (v > 0xffffffffull) {
    parse_fail(where, std::string("field \"") + key + "\" out of range");
  }
  return static_cast<std::uint32_t>(v);
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  const auto& v = obj.at(key);
  if (!v.is_string()) parse_fail(where, std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Bytes get_hex(const json& obj, const char* key, const std::string& where) {
  std::string hex = get_string(obj, key, where);
  try {
    return from_hex(hex);
  } catch (const Error& e) {
    parse_fail(where, std::string("field \"") + key + "\": " + e.what());
  }
}

void check_tags(const json& obj, const char* type, const std::string& where) {
  std::string format = get_string(obj, "format", where);
  if (format != kFormatTag) {
    throw Error(Errc::version_unsupported,
                where + ": unsupported format \"" + format + "\" (expected " + kFormatTag + ")");
  }
  std::string got = get_string(obj, "type", where);
  if (got != type) {
    parse_fail(where, "expected type \"" + std::string(type) + "\", found \"" + got + "\"");
  }
}

json parse_document(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    parse_fail(where, e.what());
  }
}

// --- params block ----------------------------------------------------------

json params_to_json(const SchemeParams& params) {
  json j;
  j["hash_id"] = params.hash_id;
  j["k_max"] = params.k_max;
  j["l"] = params.l;
  j["m"] = params.m;
  j["n"] = params.n;
  j["q"] = params.q;
  j["t_max"] = params.t_max;
  j["version"] = params.version;
  return j;
}

SchemeParams params_from_json(const json& j, const std::string& where) {
  require_keys(j, {"hash_id", "k_max", "l", "m", "n", "q", "t_max", "version"}, where);
  SchemeParams params;
  params.hash_id = get_string(j, "hash_id", where);
  params.k_max = get_u32(j, "k_max", where);
  params.l = get_u32(j, "l", where);
  params.m = get_u32(j, "m", where);
  params.n = get_u32(j, "n", where);
  params.q = get_u32(j, "q", where);
  params.t_max = get_u32(j, "t_max", where);
  params.version = get_u64(j, "version", where);
  return params;
}

// --- structures ------------------------------------------------------------

json structures_to_json(const std::vector<AccessStructure>& structures) {
  json arr = json::array();
  for (const auto& structure : structures) {
    json sets = json::array();
    for (const auto& qs : structure.qualified_sets) sets.push_back(qs.members);
    json entry;
    entry["qualified_sets"] = std::move(sets);
    entry["secret_index"] = structure.secret_index;
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::vector<AccessStructure> structures_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array()) parse_fail(where, "\"structures\" must be an array");
  std::vector<AccessStructure> out;
  for (const auto& entry : arr) {
    require_keys(entry, {"qualified_sets", "secret_index"}, where);
    AccessStructure structure;
    structure.secret_index = get_u32(entry, "secret_index", where);
    const auto& sets = entry.at("qualified_sets");
    if (!sets.is_array()) parse_fail(where, "\"qualified_sets\" must be an array");
    std::uint32_t position = 0;
    for (const auto& members : sets) {
      if (!members.is_array()) parse_fail(where, "qualified set must be an array");
      QualifiedSet qs;
      qs.secret_index = structure.secret_index;
      qs.position = ++position;
      for (const auto& member : members) {
        if (!member.is_number_unsigned()) {
          parse_fail(where, "participant indices must be unsigned integers");
        }
        qs.members.push_back(member.get<std::uint32_t>());
      }
      structure.qualified_sets.push_back(std::move(qs));
    }
    out.push_back(std::move(structure));
  }
  return out;
}

// --- file I/O ---------------------------------------------------------------

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(Errc::io_error, "read failed on " + path.string());
  return std::move(buffer).str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content,
                       bool owner_only) {
  std::filesystem::path temp = path;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::io_error, "cannot open " + temp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(Errc::io_error, "write failed on " + temp.string());
  }
  std::error_code ec;
  if (owner_only) {
    std::filesystem::permissions(temp,
                                 std::filesystem::perms::owner_read |
                                     std::filesystem::perms::owner_write,
                                 std::filesystem::perm_options::replace, ec);
    if (ec) throw Error(Errc::io_error, "cannot set permissions on " + temp.string());
  }
  std::filesystem::rename(temp, path, ec);
  if (ec) throw Error(Errc::io_error, "cannot rename " + temp.string() + " to " + path.string());
}

std::string dump_document(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

// --- fingerprint -------------------------------------------------------------

std::string params_fingerprint(const SchemeParams& params) {
  json j = params_to_json(params);
  j.erase("version");
  const std::string canonical = j.dump();
  const auto* data = reinterpret_cast<const std::uint8_t*>(canonical.data());
  return to_hex(detail::primitive_digest("sha-256", {data, canonical.size()}, 256));
}

// --- bulletin ----------------------------------------------------------------

std::string bulletin_to_json(const Bulletin& bulletin) {
  require_valid_bulletin(bulletin);
  json j;
  json commitments = json::array();
  for (const auto& c : bulletin.commitments) {
    json entry;
    entry["digest"] = to_hex(c.digest.bytes);
    entry["secret_index"] = c.secret_index;
    commitments.push_back(std::move(entry));
  }
  json public_shares = json::array();
  for (const auto& row : bulletin.public_shares) {
    json entry;
    entry["s"] = to_hex(row.s);
    entry["secret_index"] = row.secret_index;
    entry["set_position"] = row.set_position;
    public_shares.push_back(std::move(entry));
  }
  json table = json::array();
  for (const auto& e : bulletin.verification_table) {
    json entry;
    entry["digest"] = to_hex(e.digest.bytes);
    entry["participant"] = e.participant;
    entry["secret_index"] = e.secret_index;
    entry["set_position"] = e.set_position;
    table.push_back(std::move(entry));
  }
  j["commitments"] = std::move(commitments);
  j["format"] = kFormatTag;
  j["params"] = params_to_json(bulletin.params);
  j["public_shares"] = std::move(public_shares);
  j["structures"] = structures_to_json(bulletin.structures);
  j["type"] = "bulletin";
  j["verification_table"] = std::move(table);
  j["version"] = bulletin.version;
  return dump_document(j);
}

Bulletin bulletin_from_json(const std::string& text) {
  const std::string where = "bulletin";
  json j = parse_document(text, where);
  require_keys(j,
               {"commitments", "format", "params", "public_shares", "structures", "type",
                "verification_table", "version"},
               where);
  check_tags(j, "bulletin", where);

  Bulletin bulletin;
  bulletin.params = params_from_json(j.at("params"), where + ".params");
  bulletin.version = get_u64(j, "version", where);
  bulletin.structures = structures_from_json(j.at("structures"), where + ".structures");

  const auto& commitments = j.at("commitments");
  if (!commitments.is_array()) parse_fail(where, "\"commitments\" must be an array");
  for (const auto& entry : commitments) {
    require_keys(entry, {"digest", "secret_index"}, where + ".commitments");
    bulletin.commitments.push_back(
        SecretCommitment{get_u32(entry, "secret_index", where),
                         Digest{get_hex(entry, "digest", where)}});
  }
  const auto& public_shares = j.at("public_shares");
  if (!public_shares.is_array()) parse_fail(where, "\"public_shares\" must be an array");
  for (const auto& entry : public_shares) {
    require_keys(entry, {"s", "secret_index", "set_position"}, where + ".public_shares");
    bulletin.public_shares.push_back(PublicShareValue{get_u32(entry, "secret_index", where),
                                                      get_u32(entry, "set_position", where),
                                                      get_hex(entry, "s", where)});
  }
  const auto& table = j.at("verification_table");
  if (!table.is_array()) parse_fail(where, "\"verification_table\" must be an array");
  for (const auto& entry : table) {
    require_keys(entry, {"digest", "participant", "secret_index", "set_position"},
                 where + ".verification_table");
    bulletin.verification_table.push_back(
        VerificationEntry{get_u32(entry, "participant", where),
                          get_u32(entry, "secret_index", where),
                          get_u32(entry, "set_position", where),
                          Digest{get_hex(entry, "digest", where)}});
  }

  require_valid_bulletin(bulletin);
  return bulletin;
}

void save_bulletin(const Bulletin& bulletin, const std::filesystem::path& path) {
  write_file_atomic(path, bulletin_to_json(bulletin), /*owner_only=*/false);
}

Bulletin load_bulletin(const std::filesystem::path& path) {
  return bulletin_from_json(read_file(path));
}

// --- share files ---------------------------------------------------------------

void save_share(const SchemeParams& params, const Share& share,
                const std::filesystem::path& path) {
  if (share.x.size() != params.q_bytes()) {
    throw Error(Errc::length_mismatch, "share length does not match q");
  }
  json j;
  j["fingerprint"] = params_fingerprint(params);
  j["format"] = kFormatTag;
  j["participant"] = share.participant;
  j["q"] = params.q;
  j["type"] = "share";
  j["x"] = to_hex(share.x);
  write_file_atomic(path, dump_document(j), /*owner_only=*/true);
}

ShareFile load_share(const std::filesystem::path& path) {
  const std::string where = "share file " + path.filename().string();
  json j = parse_document(read_file(path), where);
  require_keys(j, {"fingerprint", "format", "participant", "q", "type", "x"}, where);
  check_tags(j, "share", where);
  ShareFile file;
  file.participant = get_u32(j, "participant", where);
  file.q = get_u32(j, "q", where);
  file.x = get_hex(j, "x", where);
  file.fingerprint = get_string(j, "fingerprint", where);
  if (file.participant < 1) parse_fail(where, "participant index must be >= 1");
  if (file.q == 0 || file.q % 8 != 0) parse_fail(where, "q must be a positive multiple of 8");
  if (file.x.size() * 8 != file.q) {
    throw Error(Errc::length_mismatch,
                where + ": x has " + std::to_string(file.x.size() * 8) +
                    " bits, file declares q = " + std::to_string(file.q));
  }
  return file;
}

Share bind_share(const ShareFile& file, const SchemeParams& params) {
  if (file.fingerprint != params_fingerprint(params)) {
    throw Error(Errc::fingerprint_mismatch,
                "share belongs to a different scheme instance");
  }
  if (file.q != params.q || file.participant > params.n) {
    throw Error(Errc::fingerprint_mismatch,
                "share file is inconsistent with the scheme parameters");
  }
  return Share{file.participant, file.x};
}

// --- dealer state ----------------------------------------------------------------

void save_dealer_state(const DealerState& state, const std::filesystem::path& path) {
  check_scheme_params(state.params);
  json labels = json::array();
  for (const auto& participant : state.participants) labels.push_back(participant.label);
  json shares = json::array();
  for (const auto& share : state.shares) {
    json entry;
    entry["participant"] = share.participant;
    entry["x"] = to_hex(share.x);
    shares.push_back(std::move(entry));
  }
  json secrets = json::array();
  for (const auto& secret : state.secrets) {
    json entry;
    entry["secret_index"] = secret.index;
    entry["value"] = to_hex(secret.value);
    secrets.push_back(std::move(entry));
  }
  json j;
  j["format"] = kFormatTag;
  j["labels"] = std::move(labels);
  j["params"] = params_to_json(state.params);
  j["secrets"] = std::move(secrets);
  j["shares"] = std::move(shares);
  j["type"] = "dealer-state";
  write_file_atomic(path, dump_document(j), /*owner_only=*/true);
}

DealerState load_dealer_state(const std::filesystem::path& path) {
  const std::string where = "dealer state " + path.filename().string();
  json j = parse_document(read_file(path), where);
  require_keys(j, {"format", "labels", "params", "secrets", "shares", "type"}, where);
  check_tags(j, "dealer-state", where);

  DealerState state;
  state.params = params_from_json(j.at("params"), where + ".params");
  check_scheme_params(state.params);

  const auto& labels = j.at("labels");
  if (!labels.is_array() || labels.size() != state.params.n) {
    parse_fail(where, "\"labels\" must list one label per participant");
  }
  std::vector<std::string> label_strings;
  for (const auto& label : labels) {
    if (!label.is_string()) parse_fail(where, "labels must be strings");
    label_strings.push_back(label.get<std::string>());
  }
  state.participants = make_participants(state.params, std::move(label_strings));

  const auto& shares = j.at("shares");
  if (!shares.is_array()) parse_fail(where, "\"shares\" must be an array");
  for (const auto& entry : shares) {
    require_keys(entry, {"participant", "x"}, where + ".shares");
    state.shares.push_back(
        Share{get_u32(entry, "participant", where), get_hex(entry, "x", where)});
  }
  if (state.shares.size() != state.params.n) {
    throw Error(Errc::invariant_violation,
                where + ": expected " + std::to_string(state.params.n) + " shares, found " +
                    std::to_string(state.shares.size()));
  }
  for (std::size_t idx = 0; idx < state.shares.size(); ++idx) {
    const Share& share = state.shares[idx];
    if (share.participant != idx + 1) {
      throw Error(Errc::invariant_violation,
                  where + ": shares must be listed for participants 1..n in order");
    }
    if (share.x.size() != state.params.q_bytes()) {
      throw Error(Errc::length_mismatch,
                  where + ": share for participant " + std::to_string(share.participant) +
                      " does not have q bits");
    }
  }

  const auto& secrets = j.at("secrets");
  if (!secrets.is_array()) parse_fail(where, "\"secrets\" must be an array");
  for (const auto& entry : secrets) {
    require_keys(entry, {"secret_index", "value"}, where + ".secrets");
    state.secrets.push_back(
        Secret{get_u32(entry, "secret_index", where), get_hex(entry, "value", where)});
  }
  for (std::size_t idx = 0; idx < state.secrets.size(); ++idx) {
    if (state.secrets[idx].index != idx + 1) {
      throw Error(Errc::invariant_violation,
                  where + ": secret indices must be contiguous from 1");
    }
    check_secret(state.params, state.secrets[idx]);
  }
  return state;
}

// --- pseudo-share records -----------------------------------------------------------

void save_pseudo_share_record(const PseudoShareRecord& record,
                              const std::filesystem::path& path) {
  json j;
  j["fingerprint"] = record.fingerprint;
  j["format"] = kFormatTag;
  j["participant"] = record.participant;
  j["secret_index"] = record.secret_index;
  j["set_position"] = record.set_position;
  j["type"] = "pseudo-share";
  j["value"] = to_hex(record.value);
  write_file_atomic(path, dump_document(j), /*owner_only=*/false);
}

PseudoShareRecord load_pseudo_share_record(const std::filesystem::path& path) {
  const std::string where = "pseudo-share record " + path.filename().string();
  json j = parse_document(read_file(path), where);
  require_keys(j, {"fingerprint", "format", "participant", "secret_index", "set_position",
                   "type", "value"},
               where);
  check_tags(j, "pseudo-share", where);
  PseudoShareRecord record;
  record.participant = get_u32(j, "participant", where);
  record.secret_index = get_u32(j, "secret_index", where);
  record.set_position = get_u32(j, "set_position", where);
  record.value = get_hex(j, "value", where);
  record.fingerprint = get_string(j, "fingerprint", where);
  return record;
}

// --- session reports ------------------------------------------------------------------

std::string session_report_to_json(const SessionOutcome& outcome) {
  json verdicts = json::array();
  for (const auto& [participant, verdict] : outcome.verdicts) {
    json entry;
    entry["participant"] = participant;
    entry["verdict"] = verdict_name(verdict);
    verdicts.push_back(std::move(entry));
  }
  json j;
  j["format"] = kFormatTag;
  j["missing"] = outcome.missing;
  j["rejected"] = outcome.rejected;
  if (outcome.secret) j["secret"] = to_hex(*outcome.secret);
  j["secret_index"] = outcome.secret_index;
  j["set_position"] = outcome.set_position;
  j["status"] = outcome.ok() ? "ok" : "failed";
  j["type"] = "session-report";
  j["verdicts"] = std::move(verdicts);
  return dump_document(j);
}

void save_session_report(const SessionOutcome& outcome, const std::filesystem::path& path) {
  write_file_atomic(path, session_report_to_json(outcome), /*owner_only=*/false);
}

std::vector<AccessStructure> load_access_structures(const std::filesystem::path& path,
                                                    const SchemeParams& params) {
  const std::string where = "structures file " + path.filename().string();
  json j = parse_document(read_file(path), where);
  std::vector<AccessStructure> structures = structures_from_json(j, where);
  for (auto& structure : structures) {
    require_valid_structure(params, structure);
    for (auto& qs : structure.qualified_sets) {
      std::sort(qs.members.begin(), qs.members.end());
    }
  }
  return structures;
}

SessionOutcome load_session_report(const std::filesystem::path& path) {
  const std::string where = "session report " + path.filename().string();
  json j = parse_document(read_file(path), where);
  if (j.contains("secret")) {
    require_keys(j, {"format", "missing", "rejected", "secret", "secret_index",
                     "set_position", "status", "type", "verdicts"},
                 where);
  } else {
    require_keys(j, {"format", "missing", "rejected", "secret_index", "set_position",
                     "status", "type", "verdicts"},
                 where);
  }
  check_tags(j, "session-report", where);
  SessionOutcome outcome;
  outcome.secret_index = get_u32(j, "secret_index", where);
  outcome.set_position = get_u32(j, "set_position", where);
  if (!j.at("verdicts").is_array() || !j.at("missing").is_array() ||
      !j.at("rejected").is_array()) {
    parse_fail(where, "verdicts, missing and rejected must be arrays");
  }
  for (const auto& entry : j.at("verdicts")) {
    require_keys(entry, {"participant", "verdict"}, where + ".verdicts");
    std::string name = get_string(entry, "verdict", where);
    Verdict verdict;
    if (name == "accepted") verdict = Verdict::accepted;
    else if (name == "rejected") verdict = Verdict::rejected;
    else if (name == "missing") verdict = Verdict::missing;
    else parse_fail(where, "unknown verdict \"" + name + "\"");
    outcome.verdicts[get_u32(entry, "participant", where)] = verdict;
  }
  for (const auto& participant : j.at("missing")) {
    if (!participant.is_number_unsigned()) parse_fail(where, "missing entries must be indices");
    outcome.missing.insert(participant.get<std::uint32_t>());
  }
  for (const auto& participant : j.at("rejected")) {
    if (!participant.is_number_unsigned()) parse_fail(where, "rejected entries must be indices");
    outcome.rejected.insert(participant.get<std::uint32_t>());
  }
  if (j.contains("secret")) outcome.secret = get_hex(j, "secret", where);
  const std::string status = get_string(j, "status", where);
  if ((status == "ok") != outcome.ok()) {
    parse_fail(where, "status does not match the presence of a secret");
  }
  return outcome;
}

}  // namespace mss

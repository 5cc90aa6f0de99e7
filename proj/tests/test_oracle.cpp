#include "doctest.h"
#include "mss/combiner.hpp"
#include "mss/oracle.hpp"
#include "mss/participant.hpp"
#include "mss/store.hpp"

using namespace mss;

TEST_CASE("oracle bulletin equals the dealer's, byte for byte") {
  SUBCASE("random instances") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      oracle::Instance instance = oracle::random_instance(seed);
      HashCounter dealer_counter, oracle_counter;
      Bulletin real = build_bulletin(instance.params, instance.secrets,
                                     instance.structures, instance.shares, dealer_counter);
      Bulletin reference =
          oracle::oracle_bulletin(instance.params, instance.secrets, instance.structures,
                                  instance.shares, oracle_counter);
      CHECK(real == reference);
      CHECK(bulletin_to_json(real) == bulletin_to_json(reference));
    }
  }

  SUBCASE("degenerate n=1, k=1, t=1 instance") {
    SchemeParams params = make_scheme_params(64, 1, 1, 1, "sha-256");
    SeededEntropy entropy(from_hex("01"));
    auto shares = issue_shares(params, entropy);
    std::vector<Secret> secrets = {{1, from_hex("1111111111111111")}};
    std::vector<AccessStructure> structures = {make_access_structure(params, 1, {{1}})};
    HashCounter a, b;
    CHECK(bulletin_to_json(build_bulletin(params, secrets, structures, shares, a)) ==
          bulletin_to_json(
              oracle::oracle_bulletin(params, secrets, structures, shares, b)));
  }

  SUBCASE("instance at the capacity boundary k = k_max, t_i = t_max") {
    SchemeParams params = make_scheme_params(64, 4, 3, 3, "sha-256");
    SeededEntropy entropy(from_hex("02"));
    auto shares = issue_shares(params, entropy);
    std::vector<Secret> secrets;
    std::vector<AccessStructure> structures;
    for (std::uint32_t i = 1; i <= 3; ++i) {
      Bytes value(8, static_cast<std::uint8_t>(i));
      secrets.push_back(Secret{i, value});
      structures.push_back(
          make_access_structure(params, i, {{1, 2}, {2, 3, 4}, {1, 4}}));
    }
    HashCounter a, b;
    CHECK(bulletin_to_json(build_bulletin(params, secrets, structures, shares, a)) ==
          bulletin_to_json(
              oracle::oracle_bulletin(params, secrets, structures, shares, b)));
  }
}

TEST_CASE("instrumented counters match the oracle's expected ledger") {
  for (std::uint64_t seed = 30; seed <= 36; ++seed) {
    oracle::Instance instance = oracle::random_instance(seed);
    HashCounter counter;
    Bulletin bulletin = build_bulletin(instance.params, instance.secrets,
                                       instance.structures, instance.shares, counter);
    CHECK(counter.snapshot().dealer ==
          oracle::expected_dealer_hashes(instance.structures));

    // Combiner: one hash per member of the reconstructed row.
    const AccessStructure& structure = instance.structures.front();
    const QualifiedSet& qset = structure.qualified_sets.front();
    ReconstructionSession session{structure.secret_index, qset.position, {}};
    for (std::uint32_t member : qset.members) {
      HashCounter scratch;
      session.submissions[member] =
          derive_pseudo_share(instance.params, instance.shares[member - 1],
                              structure.secret_index, qset.position, bulletin, scratch)
              .value.bytes;
      CHECK(scratch.snapshot().participant == 1);
    }
    HashCounter combiner_counter;
    SessionOutcome outcome = reconstruct(bulletin, session, combiner_counter);
    REQUIRE(outcome.ok());
    CHECK(combiner_counter.snapshot().combiner ==
          oracle::expected_combiner_hashes(structure, qset.position));
  }
}

TEST_CASE("exhaustive forbidden scan finds no counterexamples") {
  SUBCASE("n=4 with a single qualified set {1,2,3}") {
    SchemeParams params = make_scheme_params(64, 4, 1, 1, "sha-256");
    SeededEntropy entropy(from_hex("03"));
    auto shares = issue_shares(params, entropy);
    std::vector<Secret> secrets = {{1, from_hex("a5a5a5a5a5a5a5a5")}};
    std::vector<AccessStructure> structures = {make_access_structure(params, 1, {{1, 2, 3}})};
    HashCounter counter;
    Bulletin bulletin = build_bulletin(params, secrets, structures, shares, counter);

    oracle::ForbiddenScanReport report = oracle::exhaustive_forbidden_scan(bulletin, shares);
    CHECK(report.ok());
    CHECK(report.cases_checked == 16);  // one row, 2^4 subsets

    // Direct spot checks of both extremes.
    Bytes empty_fold = reconstruct_unchecked(bulletin, 1, 1, {});
    HashCounter scratch;
    CHECK_FALSE(
        verify_secret(params, empty_fold, *bulletin.find_commitment(1), scratch));

    std::vector<Bytes> all;
    for (std::uint32_t member : {1u, 2u, 3u}) {
      all.push_back(derive_pseudo_share(params, shares[member - 1], 1, 1, bulletin, scratch)
                        .value.bytes);
    }
    CHECK(verify_secret(params, reconstruct_unchecked(bulletin, 1, 1, all),
                        *bulletin.find_commitment(1), scratch));
  }

  SUBCASE("random instances with n <= 5") {
    for (std::uint64_t seed = 50; seed < 54; ++seed) {
      oracle::Instance instance =
          oracle::random_instance(seed, {.q = 64, .max_n = 5, .max_k = 3, .max_t = 3});
      HashCounter counter;
      Bulletin bulletin = build_bulletin(instance.params, instance.secrets,
                                         instance.structures, instance.shares, counter);
      CHECK(oracle::exhaustive_forbidden_scan(bulletin, instance.shares).ok());
    }
  }
}

TEST_CASE("tamper fuzzing rejects every corruption") {
  oracle::Instance instance = oracle::random_instance(77);
  HashCounter counter;
  Bulletin bulletin = build_bulletin(instance.params, instance.secrets,
                                     instance.structures, instance.shares, counter);
  SeededEntropy fuzz_entropy(from_hex("04"));
  oracle::TamperReport report =
      oracle::tamper_fuzz(bulletin, instance.shares, 500, fuzz_entropy);
  CHECK(report.trials == 500);
  CHECK(report.ok());
}

TEST_CASE("random instances respect the requested limits") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    oracle::Instance instance = oracle::random_instance(seed);
    CHECK(instance.params.n >= 1);
    CHECK(instance.params.n <= 6);
    CHECK(instance.secrets.size() >= 1);
    CHECK(instance.secrets.size() <= 4);
    for (const auto& structure : instance.structures) {
      CHECK(structure.t() <= 4);
      CHECK(validate_access_structure(instance.params, structure).ok());
    }
  }
}

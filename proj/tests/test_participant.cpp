#include <set>

#include "doctest.h"
#include "mss/errors.hpp"
#include "mss/participant.hpp"

using namespace mss;

namespace {

struct World {
  SchemeParams params;
  std::vector<Share> shares;
  std::vector<Secret> secrets;
  Bulletin bulletin;
};

World make_world() {
  World w;
  w.params = make_scheme_params(64, 3, 4, 4, "sha-256");
  SeededEntropy entropy(from_hex("c0ffee"));
  w.shares = issue_shares(w.params, entropy);
  w.secrets = {{1, from_hex("0123456789abcdef")}, {2, from_hex("deadbeef00c0ffee")}};
  std::vector<AccessStructure> structures = {
      make_access_structure(w.params, 1, {{1, 2}, {2, 3}}),
      make_access_structure(w.params, 2, {{1, 2, 3}})};
  HashCounter counter;
  w.bulletin = build_bulletin(w.params, w.secrets, structures, w.shares, counter);
  return w;
}

}  // namespace

TEST_CASE("derive_pseudo_share matches the dealer's table under one more hash") {
  World w = make_world();
  HashCounter counter;
  PseudoShare pseudo = derive_pseudo_share(w.params, w.shares[0], 1, 1, w.bulletin, counter);
  CHECK(counter.snapshot().participant == 1);
  CHECK(counter.snapshot().total() == 1);

  Hasher hasher(w.params, Role::participant, counter);
  CHECK(hasher.hash(pseudo.value.bytes) == w.bulletin.find_verification(1, 1, 1)->digest);
}

TEST_CASE("derivation refuses rows the participant does not belong to") {
  World w = make_world();
  HashCounter counter;
  // Row (1,1) is {1,2}: participant 3 is not a member.
  try {
    derive_pseudo_share(w.params, w.shares[2], 1, 1, w.bulletin, counter);
    FAIL("expected NotAuthorized");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_authorized);
  }
  CHECK(counter.snapshot().total() == 0);  // refused before hashing

  try {
    derive_pseudo_share(w.params, w.shares[0], 7, 1, w.bulletin, counter);
    FAIL("expected UnknownRow");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_row);
  }

  SchemeParams other = make_scheme_params(64, 3, 2, 2, "sha-256");
  CHECK_THROWS_AS(derive_pseudo_share(other, w.shares[0], 1, 1, w.bulletin, counter),
                  Error);
}

TEST_CASE("pseudo-shares are distinct across rows: the multi-use property") {
  World w = make_world();
  // Participant 2 belongs to (1,1), (1,2) and (2,1).
  std::set<Bytes> values;
  HashCounter counter;
  values.insert(derive_pseudo_share(w.params, w.shares[1], 1, 1, w.bulletin, counter).value.bytes);
  values.insert(derive_pseudo_share(w.params, w.shares[1], 1, 2, w.bulletin, counter).value.bytes);
  values.insert(derive_pseudo_share(w.params, w.shares[1], 2, 1, w.bulletin, counter).value.bytes);
  CHECK(values.size() == 3);
}

TEST_CASE("verify_secret accepts the true secret and rejects tampering") {
  World w = make_world();
  const SecretCommitment& commitment = *w.bulletin.find_commitment(1);

  HashCounter counter;
  CHECK(verify_secret(w.params, w.secrets[0].value, commitment, counter));
  CHECK(counter.snapshot().participant == 1);

  SUBCASE("every single-bit flip is rejected") {
    for (std::size_t bit = 0; bit < w.params.q; ++bit) {
      Bytes flipped = w.secrets[0].value;
      flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
      HashCounter c;
      CHECK_FALSE(verify_secret(w.params, flipped, commitment, c));
    }
  }

  SUBCASE("wrong length is rejected without hashing") {
    Bytes short_candidate(w.params.q_bytes() - 1, 0x00);
    HashCounter c;
    CHECK_FALSE(verify_secret(w.params, short_candidate, commitment, c));
    CHECK(c.snapshot().total() == 0);
  }

  SUBCASE("participant budget per secret stays at two hashes") {
    HashCounter budget;
    PseudoShare pseudo =
        derive_pseudo_share(w.params, w.shares[0], 1, 1, w.bulletin, budget);
    (void)pseudo;
    verify_secret(w.params, w.secrets[0].value, commitment, budget);
    CHECK(budget.snapshot().participant == 2);
  }
}

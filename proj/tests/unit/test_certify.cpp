#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mfblocks/certify.hpp"
#include "mfblocks/error.hpp"

using namespace mfb;
using testing::table_of;

namespace {

std::shared_ptr<const CharacterTable> shipped_table(const std::string& file) {
  return std::make_shared<const CharacterTable>(load_table(data_dir() + "/tables/" + file));
}

// chi in Irr(b) with every value rational, read straight off the table
bool has_rational_character(const BlockPartition& P, int b) {
  for (int chi : P.blocks[b].chars) {
    bool rat = true;
    for (const auto& v : P.table->chars()[chi]) rat = rat && v.is_rational();
    if (rat) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("certify") {

TEST_CASE("S3 at 3: one block, certified by a rational character sum") {
  auto P = block_partition(table_of("S3"), 3);
  REQUIRE(P.num_blocks() == 1);
  auto c = certify_mf(P, 0);
  CHECK(c.exactly_one());
  CHECK(c.criterion == Criterion::RationalCharacterSum);
  CHECK(c.failed == std::vector<std::string>{"DefectZeroFullHeight"});
  CHECK(replay_certificate(P, c));
}

TEST_CASE("A5 at 5: the degree-5 block is a matrix algebra") {
  auto P = block_partition(table_of("A5"), 5);
  int found = 0;
  for (const auto& b : P.blocks) {
    if (b.chars.size() == 1 && P.table->degree(b.chars[0]) == 5) {
      auto c = certify_mf(P, b.id);
      CHECK(c.criterion == Criterion::DefectZeroFullHeight);
      CHECK(c.witness["degree"] == 5);
      CHECK(replay_certificate(P, c));
      ++found;
    }
  }
  CHECK(found == 1);
  for (const auto& c : certify_all(P)) CHECK(c.exactly_one());
}

TEST_CASE("C5 at 2: faithful blocks are defect zero") {
  auto P = block_partition(table_of("C5"), 2);
  for (const auto& b : P.blocks) {
    auto c = certify_mf(P, b.id);
    CHECK(c.criterion == Criterion::DefectZeroFullHeight);
    CHECK(replay_certificate(P, c));
  }
}

TEST_CASE("rational orbit sums") {
  auto P = block_partition(table_of("A5"), 2);
  const int b0 = P.principal_block();
  auto orbits = rational_orbits_in_block(P, b0);
  std::vector<int> deg3;
  for (int chi : P.blocks[b0].chars)
    if (P.table->degree(chi) == 3) deg3.push_back(chi);
  REQUIRE(deg3.size() == 2);
  // the two degree-3 characters are not rational individually
  for (int chi : deg3) {
    bool rat = true;
    for (const auto& v : P.table->chars()[chi]) rat = rat && v.is_rational();
    CHECK_FALSE(rat);
  }
  CHECK(std::find(orbits.begin(), orbits.end(), deg3) != orbits.end());
  auto w = check_rational_orbit_sums(P, b0);
  REQUIRE(w);
  CHECK(*w == std::vector<int>{P.table->trivial_index()});

  auto P3 = block_partition(table_of("C3"), 2);
  for (const auto& b : P3.blocks) {
    if (b.id == P3.principal_block()) continue;
    CHECK_FALSE(check_rational_orbit_sums(P3, b.id));
  }
}

TEST_CASE("ingested table without a group falls back to the orbit bound") {
  auto P = block_partition(shipped_table("C6_nogroup.json"), 2);
  REQUIRE(P.num_blocks() == 3);
  int upper = 0;
  for (const auto& b : P.blocks) {
    auto c = certify_mf(P, b.id);
    CHECK(replay_certificate(P, c));
    if (b.id == P.principal_block()) {
      CHECK(c.exactly_one());
      continue;
    }
    CHECK(c.verdict == MfCertificate::Verdict::UpperBound);
    CHECK(c.bound == sigma_orbit_bound(P, b.id));
    CHECK(c.bound == 2);
    CHECK(c.criterion == Criterion::OrbitBound);
    CHECK(c.skipped == std::vector<std::string>{"CyclicDefect", "DihedralDefect", "AutomorphismTransport"});
    CHECK(c.failed == std::vector<std::string>{"DefectZeroFullHeight", "RationalCharacterSum", "SigmaStable", "RationalIdempotent"});
    ++upper;
  }
  CHECK(upper == 2);
}

TEST_CASE("with the group attached, C6 blocks have cyclic defect") {
  auto P = block_partition(table_of("C6"), 2);
  for (const auto& b : P.blocks) {
    auto c = certify_mf(P, b.id);
    CHECK(c.exactly_one());
    if (b.id != P.principal_block()) CHECK(c.criterion == Criterion::CyclicDefect);
    CHECK(replay_certificate(P, c));
  }
}

TEST_CASE("automorphism transport on C6 x C2 at 2") {
  auto G = testing::builtin("C6xC2");
  auto P = block_partition(table_of(G), 2);
  REQUIRE(P.num_blocks() == 3);
  std::vector<Perm> inv;
  for (const auto& g : G->generators()) inv.push_back(perm_inverse(g));
  const GroupMap phi = automorphism_from_images(*G, inv);
  auto without = certify_all(P);
  auto with = certify_all(P, {phi});
  for (const auto& b : P.blocks) {
    if (b.id == P.principal_block()) continue;
    // the Klein four defect group is not dihedral, the idempotent is not rational
    CHECK(without[b.id].criterion == Criterion::OrbitBound);
    CHECK(without[b.id].bound == 2);
    CHECK(with[b.id].criterion == Criterion::AutomorphismTransport);
    CHECK(with[b.id].exactly_one());
    CHECK(replay_certificate(P, with[b.id]));
  }
  // opting in to Klein-as-dihedral certifies through the defect group instead
  CertifyOptions o;
  o.klein_is_dihedral = true;
  for (const auto& c : certify_all(P, {}, o)) CHECK(c.exactly_one());
}

TEST_CASE("replay rejects tampered certificates") {
  auto P = block_partition(table_of("S4"), 2);
  for (const auto& c : certify_all(P)) {
    CHECK(replay_certificate(P, c));
    auto j = certificate_to_json(c);
    CHECK(certificate_to_json(certificate_from_json(j)) == j);
  }
  auto c = certify_mf(P, P.principal_block());
  REQUIRE(c.criterion == Criterion::RationalCharacterSum);
  auto bad = c;
  bad.witness["characters"] = json::array({99});
  CHECK_FALSE(replay_certificate(P, bad));
  bad = c;
  bad.verdict = MfCertificate::Verdict::UpperBound;
  bad.bound = 3;
  CHECK_FALSE(replay_certificate(P, bad));

  auto P6 = block_partition(shipped_table("C6_nogroup.json"), 2);
  int nb = P6.principal_block() == 0 ? 1 : 0;
  auto u = certify_mf(P6, nb);
  u.bound = 1;
  u.witness["length"] = 1;
  CHECK_FALSE(replay_certificate(P6, u));

  auto A = block_partition(table_of("A5"), 5);
  for (const auto& b : A.blocks) {
    auto d = certify_mf(A, b.id);
    if (d.criterion != Criterion::DefectZeroFullHeight) continue;
    d.witness["degree"] = 4;
    CHECK_FALSE(replay_certificate(A, d));
  }
}

TEST_CASE("certificate JSON shape") {
  auto P = block_partition(table_of("S3"), 3);
  auto j = certificate_to_json(certify_mf(P, 0));
  CHECK(j["block"] == 0);
  CHECK(j["verdict"] == "1");
  CHECK(j["criterion"] == "RationalCharacterSum");
  CHECK(j["skipped"].is_array());
  CHECK_THROWS_AS(certificate_from_json(json{{"block", 0}, {"verdict", "2"}, {"criterion", "OrbitBound"}, {"witness", {}}}), Error);
}

TEST_CASE("orbit-fixing criteria imply a fixed block") {
  for (const char* g : {"S4", "A4", "D8", "Q8", "C12", "SL2_3", "D10"}) {
    for (int ell : {2, 3, 5}) {
      auto P = block_partition(table_of(g), ell);
      for (const auto& c : certify_all(P)) {
        CHECK(replay_certificate(P, c));
        if (c.criterion == Criterion::RationalCharacterSum || c.criterion == Criterion::SigmaStable ||
            c.criterion == Criterion::RationalIdempotent) {
          CHECK(P.sigma[c.block] == c.block);
        }
        CHECK(c.bound <= sigma_orbit_bound(P, c.block));
        // rational characters are always found by the orbit search
        if (has_rational_character(P, c.block) && c.criterion != Criterion::DefectZeroFullHeight) {
          CHECK(c.criterion == Criterion::RationalCharacterSum);
        }
      }
    }
  }
}

TEST_CASE("symmetric and alternating groups up to degree 5") {
  for (int n = 2; n <= 5; ++n) {
    for (const std::string& name : {"S" + std::to_string(n), "A" + std::to_string(n)}) {
      auto t = table_of(name);
      for (int ell : {2, 3, 5, 7}) {
        auto P = block_partition(t, ell);
        for (const auto& c : certify_all(P)) CHECK(c.exactly_one());
      }
    }
  }
}

}  // TEST_SUITE

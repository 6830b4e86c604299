#include <set>
#include <tuple>

#include "doctest.h"
#include "helpers.hpp"
#include "mfblocks/blocks.hpp"
#include "mfblocks/error.hpp"

using namespace mfb;
using testing::table_of;

namespace {

std::multiset<int> orbit_lengths(const BlockPartition& P) {
  std::multiset<int> s;
  for (const auto& b : P.blocks)
    if (b.orbit_position == 0) s.insert(b.orbit_length);
  return s;
}

GroupAlgebraElem idem(const BlockPartition& P, int b) { return block_idempotent(P, b); }

}  // namespace

TEST_SUITE("blocks") {

TEST_CASE("shipped groups have the expected orders") {
  CHECK(testing::builtin("SL2_2")->order() == 6);
  CHECK(testing::builtin("SL2_3")->order() == 24);
  CHECK(testing::builtin("SL2_4")->order() == 60);
  CHECK(testing::builtin("SL2_5")->order() == 120);
  CHECK(testing::builtin("Q8")->order() == 8);
  CHECK(testing::builtin("D12")->order() == 12);
  CHECK(testing::builtin("C6xC2")->order() == 12);
  CHECK(testing::builtin("A7")->order() == 2520);
}

TEST_CASE("central characters") {
  auto t = table_of("S3");
  // trivial character: omega(K) = |K|
  for (int k = 0; k < 3; ++k) CHECK(central_character(*t, t->trivial_index(), k) == CycloNum(static_cast<long>(t->classes()[k].size)));
  // degree-2 character on the 3-cycles: 2 * chi / 2 with chi = mn_value((2,1), (3))
  const int chi2 = 2;
  REQUIRE(t->degree(chi2) == 2);
  REQUIRE(t->classes()[1].element_order == 3);
  CycloNum expect(Rational(mn_value({2, 1}, {3}) * 2, 2));
  CHECK(central_character(*t, chi2, 1) == expect);
  CHECK(central_character(*t, chi2, 1) == CycloNum(-1));
  for (int chi = 0; chi < 3; ++chi) CHECK(central_character(*t, chi, 0) == CycloNum(1));
}

TEST_CASE("S3 at 3 is a single block of defect 1") {
  auto P = block_partition(table_of("S3"), 3);
  REQUIRE(P.num_blocks() == 1);
  CHECK(P.blocks[0].defect == 1);
  CHECK(P.blocks[0].chars == std::vector<int>{0, 1, 2});
  // hand computation in class order (1, (123), (12)): omega = (1, 2, 0) mod 3 for all three
  for (int chi = 0; chi < 3; ++chi) {
    std::vector<FiniteField::Elem> w;
    for (int k = 0; k < 3; ++k) w.push_back(reduce_raw(central_character(*P.table, chi, k), P.embedding));
    CHECK(w == std::vector<FiniteField::Elem>{1, 2, 0});
  }
  auto e = idem(P, 0);
  CHECK(e == GroupAlgebraElem::one(P.table->group(), P.embedding.field));
  auto D = defect_group(P, 0);
  CHECK(D.group.size() == 3);
  CHECK(D.shape == Shape::Cyclic);
}

TEST_CASE("C3 at 2 and ell-prime groups") {
  auto P = block_partition(table_of("C3"), 2);
  CHECK(P.num_blocks() == 3);
  for (const auto& b : P.blocks) {
    CHECK(b.chars.size() == 1);
    CHECK(b.defect == 0);
  }
  CHECK(orbit_lengths(P) == std::multiset<int>{1, 2});
  CHECK(P.sigma[P.principal_block()] == P.principal_block());
  auto P5 = block_partition(table_of("C5"), 2);
  CHECK(orbit_lengths(P5) == std::multiset<int>{1, 4});
  for (const auto& b : P5.blocks) {
    if (b.id != P5.principal_block()) CHECK(sigma_orbit_bound(P5, b.id) == 4);
  }
  auto P7 = block_partition(table_of("S4"), 5);
  CHECK(P7.num_blocks() == 5);
  for (const auto& b : P7.blocks) CHECK(b.defect == 0);
}

TEST_CASE("rational tables have trivial sigma") {
  for (int ell : {2, 3, 5}) {
    auto P = block_partition(table_of("S5"), ell);
    for (int b = 0; b < P.num_blocks(); ++b) CHECK(P.sigma[b] == b);
  }
}

TEST_CASE("idempotents of S3 at 2 by direct multiplication") {
  auto P = block_partition(table_of("S3"), 2);
  REQUIRE(P.num_blocks() == 2);
  auto G = P.table->group();
  auto F = P.embedding.field;
  auto sum = GroupAlgebraElem::zero(G, F);
  for (int b = 0; b < 2; ++b) {
    auto e = idem(P, b);
    CHECK(e * e == e);
    CHECK(e.is_central());
    sum = sum + e;
  }
  CHECK(sum == GroupAlgebraElem::one(G, F));
  CHECK((idem(P, 0) * idem(P, 1)).is_zero());
  // defect-zero block of the degree-2 character at ell = 2
  CHECK(P.blocks[1].chars == std::vector<int>{2});
  CHECK(P.blocks[1].defect == 0);
}

TEST_CASE("sigma on idempotents is the coefficientwise Frobenius") {
  for (const char* name : {"C3", "C5", "C12", "A5", "SL2_3", "D10"}) {
    for (int ell : {2, 3, 5}) {
      auto P = block_partition(table_of(name), ell);
      for (int b = 0; b < P.num_blocks(); ++b) CHECK(idem(P, b).frobenius() == idem(P, P.sigma[b]));
    }
  }
}

TEST_CASE("defect groups") {
  auto P = block_partition(table_of("S4"), 2);
  const int b0 = P.principal_block();
  auto D = defect_group(P, b0);
  CHECK(D.group.size() == 8);
  CHECK(D.shape == Shape::Dihedral);
  for (const auto& b : P.blocks) {
    if (b.defect == 0) CHECK(defect_group(P, b.id).group.size() == 1);
  }
  auto Q = block_partition(table_of("SL2_3"), 2);
  CHECK(defect_group(Q, Q.principal_block()).shape == Shape::Other);
}

TEST_CASE("covering for A3 in S3 at 2") {
  auto S3 = testing::builtin("S3");
  auto tS = table_of(S3);
  auto PS = block_partition(tS, 2);
  auto A3sub = subgroup_closure(*S3, {S3->index_of(testing::cycle_perm(3, {1, 2, 3}))});
  auto A3 = std::make_shared<const PermGroup>(subgroup_as_group(*S3, A3sub, "A3"));
  auto PA = block_partition(table_of(A3), 2, PS.embedding);
  REQUIRE(PA.num_blocks() == 3);
  const int B0 = PS.principal_block(), b0 = PA.principal_block();
  CHECK(covers(PS, B0, PA, b0));
  CHECK(covers(PS, B0, PS, B0));
  int swapped = 0;
  for (const auto& b : PA.blocks) {
    if (b.id == b0) continue;
    CHECK(PA.sigma[b.id] != b.id);
    // the nontrivial blocks of A3 lie under the defect-zero block of S3
    CHECK(covers(PS, 1, PA, b.id));
    CHECK_FALSE(covers(PS, B0, PA, b.id));
    ++swapped;
  }
  CHECK(swapped == 2);
}

TEST_CASE("domination") {
  SUBCASE("trivial normal subgroup") {
    auto G = testing::builtin("S4");
    auto P = block_partition(table_of(G), 2);
    auto q = quotient(*G, Subgroup{0});
    auto Qt = table_of(std::make_shared<const PermGroup>(q.group));
    auto PQ = block_partition(Qt, 2, P.embedding);
    for (const auto& b : P.blocks) {
      auto d = dominated_blocks(P, b.id, PQ, q.mu);
      REQUIRE(d.size() == 1);
      CHECK(PQ.blocks[d[0]].chars.size() == b.chars.size());
      CHECK(PQ.blocks[d[0]].defect == b.defect);
    }
  }
  SUBCASE("SL2(5) modulo its center at 5") {
    auto G = testing::builtin("SL2_5");
    auto t = table_of(G);
    auto P = block_partition(t, 5);
    auto q = quotient(*G, center(*G));
    auto PQ = block_partition(table_of(std::make_shared<const PermGroup>(q.group)), 5, P.embedding);
    int dominating = 0;
    for (const auto& b : P.blocks) {
      auto d = dominated_blocks(P, b.id, PQ, q.mu);
      if (d.empty()) continue;
      ++dominating;
      REQUIRE(d.size() == 1);
      std::int64_t s1 = 0, s2 = 0;
      for (int c : b.chars) s1 += t->degree(c) * t->degree(c);
      for (int c : PQ.blocks[d[0]].chars) s2 += PQ.table->degree(c) * PQ.table->degree(c);
      CHECK(s1 == s2);
    }
    CHECK(dominating == PQ.num_blocks());
  }
  SUBCASE("faithful blocks of C4 dominate nothing") {
    auto G = testing::builtin("C4");
    auto P = block_partition(table_of(G), 3);
    Subgroup Z;
    for (int x = 0; x < G->order(); ++x)
      if (G->element_order(x) <= 2) Z.push_back(x);
    auto q = quotient(*G, Z);
    auto PQ = block_partition(table_of(std::make_shared<const PermGroup>(q.group)), 3, P.embedding);
    int empty = 0;
    for (const auto& b : P.blocks) {
      const int chi = b.chars[0];
      bool faithful_on_Z = false;
      for (int k = 0; k < P.table->num_classes(); ++k)
        if (P.table->classes()[k].element_order == 2 && P.table->value(chi, k) == CycloNum(-1)) faithful_on_Z = true;
      auto d = dominated_blocks(P, b.id, PQ, q.mu);
      CHECK(d.empty() == faithful_on_Z);
      empty += d.empty();
    }
    CHECK(empty == 2);
  }
}

TEST_CASE("domination is sigma-equivariant") {
  for (const char* name : {"SL2_3", "SL2_5", "Q8", "C6xC2"}) {
    auto G = testing::builtin(name);
    auto Z = center(*G);
    for (int ell : {2, 3, 5}) {
      auto P = block_partition(table_of(G), ell);
      auto q = quotient(*G, Z);
      auto PQ = block_partition(table_of(std::make_shared<const PermGroup>(q.group)), ell, P.embedding);
      for (const auto& b : P.blocks) {
        auto d = dominated_blocks(P, b.id, PQ, q.mu);
        auto ds = dominated_blocks(P, P.sigma[b.id], PQ, q.mu);
        std::vector<int> img;
        for (int x : d) img.push_back(PQ.sigma[x]);
        std::sort(img.begin(), img.end());
        CHECK(img == ds);
      }
    }
  }
}

TEST_CASE("embedding independence") {
  for (const char* name : {"C5", "C7", "A5", "D10", "SL2_3"}) {
    auto t = table_of(name);
    for (int ell : {2, 3}) {
      if (t->exponent() % ell == 0 && std::string(name) == "C7") continue;
      auto P1 = block_partition(t, ell);
      const std::int64_t m = P1.embedding.m;
      for (std::int64_t k = 2; k < m; ++k) {
        if (gcd64(k, m) != 1) continue;
        auto P2 = block_partition(t, ell, EmbeddingSpec::make(ell, t->exponent(), k));
        std::multiset<std::tuple<std::size_t, int, int>> a, b;
        for (const auto& x : P1.blocks) a.emplace(x.chars.size(), x.defect, x.orbit_length);
        for (const auto& x : P2.blocks) b.emplace(x.chars.size(), x.defect, x.orbit_length);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("block counts in defining characteristic") {
  const std::vector<std::pair<const char*, int>> cases{{"SL2_2", 2}, {"SL2_3", 3}, {"SL2_4", 2}, {"SL2_5", 5}};
  for (auto [name, p] : cases) {
    auto G = testing::builtin(name);
    auto P = block_partition(table_of(G), p);
    const int q = std::string(name) == "SL2_4" ? 4 : p;
    CHECK(P.num_blocks() == static_cast<int>(gcd64(2, q - 1)) + 1);
    CHECK(P.num_blocks() == static_cast<int>(center(*G).size()) + 1);
  }
}

}  // TEST_SUITE

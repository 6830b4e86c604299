#include <random>
#include <set>

#include "doctest.h"
#include "mfblocks/error.hpp"
#include "mfblocks/symmetric.hpp"

using namespace mfb;

namespace {

// Young diagram cells (row, col).
std::set<std::pair<int, int>> cells(const Partition& p) {
  std::set<std::pair<int, int>> s;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    for (int j = 0; j < p[i]; ++j) s.insert({i, j});
  return s;
}

bool contained(const Partition& mu, const Partition& lam) {
  if (mu.size() > lam.size()) return false;
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > lam[i]) return false;
  return true;
}

// Rim hooks read off the diagram: lam / mu connected with no 2x2 square.
std::set<Partition> diagram_rim_hooks(const Partition& lam, int ell) {
  std::set<Partition> out;
  const int n = size_of(lam);
  if (n < ell) return out;
  for (const auto& mu : partitions_of(n - ell)) {
    if (!contained(mu, lam)) continue;
    auto a = cells(lam), b = cells(mu);
    std::set<std::pair<int, int>> skew;
    for (const auto& c : a)
      if (!b.count(c)) skew.insert(c);
    bool square = false;
    for (const auto& [r, c] : skew)
      if (skew.count({r + 1, c}) && skew.count({r, c + 1}) && skew.count({r + 1, c + 1})) square = true;
    if (square) continue;
    std::set<std::pair<int, int>> seen{*skew.begin()};
    std::vector<std::pair<int, int>> stack{*skew.begin()};
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
        if (skew.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() == skew.size()) out.insert(mu);
  }
  return out;
}

// Every fixed point reachable by removing rim hooks in any order.
std::set<Partition> all_cores_by_diagram(const Partition& lam, int ell) {
  auto hooks = diagram_rim_hooks(lam, ell);
  if (hooks.empty()) return {lam};
  std::set<Partition> out;
  for (const auto& mu : hooks) {
    auto s = all_cores_by_diagram(mu, ell);
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::set<Partition> all_bar_cores(const Partition& lam, int ell) {
  auto next = removable_bars(lam, ell);
  if (next.empty()) return {lam};
  std::set<Partition> out;
  for (const auto& mu : next) {
    auto s = all_bar_cores(mu, ell);
    out.insert(s.begin(), s.end());
  }
  return out;
}

}  // namespace

TEST_SUITE("symmetric") {

TEST_CASE("core examples") {
  CHECK(ell_core({3, 1}, 2).empty());
  CHECK(ell_core({2, 1}, 5) == Partition{2, 1});
  CHECK(ell_core({4, 2, 1}, 3) == Partition{1});
  CHECK(all_cores_by_diagram({4, 2, 1}, 3) == std::set<Partition>{{1}});
  CHECK(ell_core({}, 3).empty());
  CHECK_THROWS_AS(ell_core({1, 2}, 2), Error);
}

TEST_CASE("rim hooks agree with the diagram oracle") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lam : partitions_of(n))
      for (int ell : {1, 2, 3, 4, 5}) {
        auto got = removable_rim_hooks(lam, ell);
        CHECK(std::set<Partition>(got.begin(), got.end()) == diagram_rim_hooks(lam, ell));
        if (ell >= 2) {
          auto all = all_cores_by_diagram(lam, ell);
          REQUIRE(all.size() == 1);
          CHECK(*all.begin() == ell_core(lam, ell));
        }
      }
}

TEST_CASE("conjugation") {
  CHECK(is_symmetric({2, 1}));
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK_FALSE(is_symmetric({3, 1}));
  for (int k = 1; k <= 6; ++k) {
    Partition s;
    for (int i = k; i >= 1; --i) s.push_back(i);
    CHECK(is_symmetric(s));
  }
  for (int n = 0; n <= 10; ++n)
    for (const auto& lam : partitions_of(n)) {
      CHECK(conjugate(conjugate(lam)) == lam);
      CHECK(is_symmetric(lam) == is_symmetric(conjugate(lam)));
      // the core of the conjugate is the conjugate of the core
      CHECK(ell_core(conjugate(lam), 3) == conjugate(ell_core(lam, 3)));
    }
  CHECK(partitions_of(7).size() == 15);
  CHECK(strict_partitions_of(7).size() == 5);
}

TEST_CASE("parity of strict partitions") {
  CHECK(parity({3, 2, 1}) == 1);
  CHECK(parity({2, 1}) == 1);
  for (int n = 1; n <= 8; ++n) CHECK(parity({n}) == (n - 1) % 2);
  CHECK(SpinLabel({4, 1}).parity() == 1);
  CHECK_THROWS_AS(parity({2, 2}), Error);
  CHECK_THROWS_AS(SpinLabel({1, 1}), Error);
}

TEST_CASE("bar cores") {
  CHECK(bar_core({4, 1}, 5).empty());
  CHECK(bar_core({3}, 3).empty());
  CHECK(bar_core({4, 2}, 7) == Partition{4, 2});
  CHECK(bar_core({8, 3}, 5) == Partition{8, 3});
  CHECK(bar_core({8, 2}, 5).empty());
  CHECK_THROWS_AS(bar_core({2, 2}, 3), Error);
  CHECK_THROWS_AS(bar_core({3}, 2), Error);
  for (int n = 1; n <= 14; ++n)
    for (const auto& lam : strict_partitions_of(n))
      for (int ell : {3, 5, 7}) {
        auto all = all_bar_cores(lam, ell);
        REQUIRE(all.size() == 1);
        CHECK(*all.begin() == bar_core(lam, ell));
        CHECK((n - size_of(bar_core(lam, ell))) % ell == 0);
      }
}

TEST_CASE("random removal orders reach the same core") {
  std::mt19937_64 rng(20);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    auto parts = partitions_of(n);
    const Partition lam = parts[rng() % parts.size()];
    const int ell = std::vector<int>{2, 3, 5, 7}[rng() % 4];
    Partition cur = lam;
    for (;;) {
      auto next = removable_rim_hooks(cur, ell);
      if (next.empty()) break;
      cur = next[rng() % next.size()];
    }
    CHECK(cur == ell_core(lam, ell));
    CHECK((size_of(lam) - size_of(cur)) % ell == 0);

    auto strict = strict_partitions_of(n);
    const Partition mu = strict[rng() % strict.size()];
    const int odd = std::vector<int>{3, 5, 7}[rng() % 3];
    Partition c = mu;
    for (;;) {
      auto next = removable_bars(c, odd);
      if (next.empty()) break;
      c = next[rng() % next.size()];
    }
    CHECK(c == bar_core(mu, odd));
  }
}

TEST_CASE("S_n block reports match the computed tables") {
  auto r = sn_block_report(3, 3);
  REQUIRE(r.blocks.size() == 1);
  CHECK(r.blocks[0].core.empty());
  CHECK(r.blocks[0].chars == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(r.table_agrees);
  auto big = sn_block_report(6, 7);
  CHECK(big.blocks.size() == 11);
  for (const auto& b : big.blocks) CHECK(b.defect == 0);
  for (int n = 1; n <= 6; ++n)
    for (int ell : {2, 3, 5, 7}) {
      auto rep = sn_block_report(n, ell);
      CHECK(rep.table_checked);
      CHECK(rep.table_agrees);
      for (const auto& b : rep.blocks) CHECK(b.criterion == Criterion::RationalCharacterSum);
    }
  auto s4 = sn_block_report(4, 2);
  CHECK(s4.blocks.size() == 1);
  CHECK_FALSE(sn_block_report(12, 3).table_checked);
}

TEST_CASE("A_n reports") {
  for (int n = 2; n <= 6; ++n)
    for (int ell : {2, 3, 5, 7}) {
      auto r = an_mf_report(n, ell);
      CHECK(r.table_checked);
      CHECK(r.table_agrees);
    }
  auto a5 = an_mf_report(5, 5);
  int dz = 0;
  for (const auto& b : a5.blocks)
    if (b.criterion == Criterion::DefectZeroFullHeight) ++dz;
  CHECK(dz == 1);  // the degree-5 character from [3,2] and [2,2,1]
  auto a4 = an_mf_report(4, 3);
  for (const auto& b : a4.blocks) CHECK(b.verified);
  auto big = an_mf_report(9, 3, 0);
  CHECK_FALSE(big.table_checked);
  CHECK(an_report_to_json(big)["blocks"][0]["status"] == "combinatorial");
}

TEST_CASE("spin groups by bar core") {
  auto g = spin_bar_core_groups(5, 3);
  std::size_t total = 0;
  for (const auto& s : g) total += s.labels.size();
  CHECK(total == strict_partitions_of(5).size());
}

}  // TEST_SUITE

#pragma once

// Small constructors and brute-force oracles shared by the unit tests.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "mfblocks/perm_group.hpp"

namespace testing {

inline mfb::Perm cycle_perm(int n, std::vector<int> cyc) {  // 1-based cycle
  mfb::Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < cyc.size(); ++i) p[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
  return p;
}

inline mfb::PermGroup symmetric(int n) {
  if (n == 1) return mfb::PermGroup::generate(1, {}, 10, "S1");
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 1);
  return mfb::PermGroup::generate(n, {cycle_perm(n, {1, 2}), cycle_perm(n, c)}, 100000, "S" + std::to_string(n));
}

inline mfb::PermGroup alternating(int n) {
  std::vector<mfb::Perm> gens;
  for (int k = 3; k <= n; ++k) gens.push_back(cycle_perm(n, {1, 2, k}));
  return mfb::PermGroup::generate(n, gens, 100000, "A" + std::to_string(n));
}

inline mfb::PermGroup cyclic(int m) {
  std::vector<int> c(m);
  std::iota(c.begin(), c.end(), 1);
  return mfb::PermGroup::generate(m, {cycle_perm(m, c)}, 100000, "C" + std::to_string(m));
}

// SL_2(p) acting on the p^2 - 1 nonzero vectors of F_p^2, p prime.
inline mfb::PermGroup sl2_prime(int p) {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto act = [&](int m00, int m01, int m10, int m11) {
    mfb::Perm perm(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      std::pair<int, int> w{(m00 * x + m01 * y) % p, (m10 * x + m11 * y) % p};
      perm[i] = static_cast<int>(std::find(vecs.begin(), vecs.end(), w) - vecs.begin());
    }
    return perm;
  };
  return mfb::PermGroup::generate(static_cast<int>(vecs.size()), {act(1, 1, 0, 1), act(0, p - 1, 1, 0)}, 100000,
                                  "SL2_" + std::to_string(p));
}

// Naive closure with std::set, independent of PermGroup's hashing.
inline std::set<mfb::Perm> naive_closure(const std::vector<mfb::Perm>& gens, int n) {
  mfb::Perm id(n);
  std::iota(id.begin(), id.end(), 0);
  std::set<mfb::Perm> s{id};
  std::vector<mfb::Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<mfb::Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = mfb::perm_compose(x, g);
        if (s.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace testing

#include "mfblocks/blocks.hpp"
#include "mfblocks/chartable.hpp"
#include "mfblocks/json_io.hpp"

namespace testing {

inline std::shared_ptr<const mfb::PermGroup> builtin(const std::string& name) {
  return std::make_shared<const mfb::PermGroup>(mfb::resolve_group(name));
}

inline std::shared_ptr<const mfb::CharacterTable> table_of(std::shared_ptr<const mfb::PermGroup> G) {
  return std::make_shared<const mfb::CharacterTable>(mfb::dixon_schneider(std::move(G)));
}

inline std::shared_ptr<const mfb::CharacterTable> table_of(const std::string& name) { return table_of(builtin(name)); }

}  // namespace testing

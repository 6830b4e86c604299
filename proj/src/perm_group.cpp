#include "mfblocks/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "mfblocks/error.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

namespace {

std::uint64_t hash_perm(const int* p, int n) {
  std::uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < n; ++i) {
    h ^= static_cast<std::uint64_t>(p[i]) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

// Growable set of permutations stored flat, used during closure.
class FlatPermSet {
 public:
  explicit FlatPermSet(int degree) : n_(degree), slots_(64, -1) {}

  std::size_t size() const { return count_; }
  const int* at(std::size_t i) const { return &data_[i * n_]; }
  std::vector<int>& data() { return data_; }

  // index of p, or -1
  long find(const int* p) const {
    std::size_t mask = slots_.size() - 1;
    for (std::size_t s = hash_perm(p, n_) & mask;; s = (s + 1) & mask) {
      int v = slots_[s];
      if (v < 0) return -1;
      if (std::equal(p, p + n_, at(static_cast<std::size_t>(v)))) return v;
    }
  }

  // returns true if inserted
  bool insert(const int* p) {
    if (find(p) >= 0) return false;
    if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    data_.insert(data_.end(), p, p + n_);
    place(static_cast<int>(count_));
    ++count_;
    return true;
  }

 private:
  void place(int idx) {
    std::size_t mask = slots_.size() - 1;
    std::size_t s = hash_perm(at(static_cast<std::size_t>(idx)), n_) & mask;
    while (slots_[s] >= 0) s = (s + 1) & mask;
    slots_[s] = idx;
  }
  void rehash(std::size_t cap) {
    slots_.assign(cap, -1);
    for (std::size_t i = 0; i < count_; ++i) place(static_cast<int>(i));
  }

  int n_;
  std::size_t count_ = 0;
  std::vector<int> data_;
  std::vector<int> slots_;
};

std::int64_t perm_order(const int* p, int n) {
  std::vector<char> seen(n, 0);
  std::int64_t o = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::int64_t len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    o = lcm64(o, len);
  }
  return o;
}

bool is_ell_power(std::int64_t n, std::int64_t ell) {
  while (n % ell == 0) n /= ell;
  return n == 1;
}

}  // namespace

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool perm_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::string perm_to_cycles(const Perm& p) {
  std::ostringstream os;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    any = true;
    os << "(";
    bool first = true;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) os << " ";
      first = false;
      os << j + 1;
    }
    os << ")";
  }
  if (!any) return "()";
  return os.str();
}

PermGroup PermGroup::generate(int degree, const std::vector<Perm>& generators, std::int64_t bound, std::string name) {
  if (degree < 1) schema_error("group degree must be positive");
  if (bound < 1) domain_error("InvalidBound", "element bound must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree || !perm_valid(g)) schema_error("generator is not a permutation of degree " + std::to_string(degree));
  }
  PermGroup G;
  G.name_ = std::move(name);
  G.degree_ = degree;
  G.gens_ = generators;

  FlatPermSet set(degree);
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  set.insert(id.data());
  std::vector<int> buf(degree);
  for (std::size_t head = 0; head < set.size(); ++head) {
    for (const auto& g : generators) {
      const int* x = set.at(head);
      for (int i = 0; i < degree; ++i) buf[i] = g[x[i]];
      if (set.insert(buf.data()) && static_cast<std::int64_t>(set.size()) > bound) {
        bound_error("group order exceeds element bound " + std::to_string(bound));
      }
    }
  }
  const std::size_t n = set.size();
  std::vector<int> perm_idx(n);
  std::iota(perm_idx.begin(), perm_idx.end(), 0);
  std::sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) {
    return std::lexicographical_compare(set.at(a), set.at(a) + degree, set.at(b), set.at(b) + degree);
  });
  G.order_ = n;
  G.data_.resize(n * degree);
  for (std::size_t i = 0; i < n; ++i) std::copy(set.at(perm_idx[i]), set.at(perm_idx[i]) + degree, &G.data_[i * degree]);
  G.build_index();
  return G;
}

void PermGroup::build_index() {
  const std::size_t n = order_;
  std::size_t cap = 16;
  while (cap < 2 * n) cap *= 2;
  slots_.assign(cap, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t s = hash_perm(element_data(static_cast<int>(i)), degree_) & (cap - 1);
    while (slots_[s] >= 0) s = (s + 1) & (cap - 1);
    slots_[s] = static_cast<int>(i);
  }
  gen_idx_.clear();
  for (const auto& g : gens_) gen_idx_.push_back(index_of(g));

  inv_.resize(n);
  ord_.resize(n);
  exponent_ = 1;
  std::vector<int> buf(degree_);
  for (std::size_t i = 0; i < n; ++i) {
    const int* p = element_data(static_cast<int>(i));
    for (int k = 0; k < degree_; ++k) buf[p[k]] = k;
    inv_[i] = lookup(buf.data());
    ord_[i] = static_cast<int>(perm_order(p, degree_));
    exponent_ = lcm64(exponent_, ord_[i]);
  }
  table_.clear();
  if (n <= 1024) {
    std::vector<int> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      const int* pa = element_data(static_cast<int>(a));
      for (std::size_t b = 0; b < n; ++b) {
        const int* pb = element_data(static_cast<int>(b));
        for (int k = 0; k < degree_; ++k) buf[k] = pb[pa[k]];
        t[a * n + b] = lookup(buf.data());
      }
    }
    table_ = std::move(t);
  }

  // conjugacy classes: orbits under conjugation by the generators
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> orbits;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> orbit{static_cast<int>(x)};
    cls[x] = id;
    for (std::size_t h = 0; h < orbit.size(); ++h) {
      for (int g : gen_idx_) {
        int y = conj(orbit[h], g);
        if (cls[y] < 0) {
          cls[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  std::vector<int> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
    return orbits[a][0] < orbits[b][0];
  });
  classes_ = ConjClasses{};
  classes_.class_of.assign(n, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto& o = orbits[order[k]];
    classes_.reps.push_back(o[0]);
    classes_.sizes.push_back(static_cast<int>(o.size()));
    for (int x : o) classes_.class_of[x] = static_cast<int>(k);
  }
}

int PermGroup::lookup(const int* p) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash_perm(p, degree_) & mask;; s = (s + 1) & mask) {
    int v = slots_[s];
    if (v < 0) return -1;
    if (std::equal(p, p + degree_, element_data(v))) return v;
  }
}

Perm PermGroup::element(int i) const { return Perm(element_data(i), element_data(i) + degree_); }

int PermGroup::index_of(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return -1;
  return lookup(p.data());
}

int PermGroup::index_of(const int* p) const { return lookup(p); }

int PermGroup::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * order_ + b];
  const int* pa = element_data(a);
  const int* pb = element_data(b);
  int buf[256];
  std::vector<int> big;
  int* out = buf;
  if (degree_ > 256) {
    big.resize(degree_);
    out = big.data();
  }
  for (int k = 0; k < degree_; ++k) out[k] = pb[pa[k]];
  return lookup(out);
}

int PermGroup::pow(int a, std::int64_t k) const {
  const std::int64_t o = ord_[a];
  k %= o;
  if (k < 0) k += o;
  int r = 0;
  int b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

std::vector<int> PermGroup::class_elements(int k) const {
  std::vector<int> out;
  for (std::size_t x = 0; x < order_; ++x) {
    if (classes_.class_of[x] == k) out.push_back(static_cast<int>(x));
  }
  return out;
}

bool PermGroup::is_abelian() const {
  for (int a : gen_idx_)
    for (int b : gen_idx_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup subgroup_closure(const PermGroup& G, const std::vector<int>& gens) {
  std::vector<char> in(G.order(), 0);
  Subgroup H{0};
  in[0] = 1;
  for (std::size_t h = 0; h < H.size(); ++h) {
    for (int g : gens) {
      int y = G.mul(H[h], g);
      if (!in[y]) {
        in[y] = 1;
        H.push_back(y);
      }
    }
  }
  std::sort(H.begin(), H.end());
  return H;
}

std::vector<int> subgroup_generators(const PermGroup& G, const Subgroup& H) {
  std::vector<int> gens;
  std::vector<char> in(G.order(), 0);
  in[0] = 1;
  std::size_t have = 1;
  for (int x : H) {
    if (have == H.size()) break;
    if (in[x]) continue;
    gens.push_back(x);
    auto K = subgroup_closure(G, gens);
    for (int y : K) in[y] = 1;
    have = K.size();
  }
  return gens;
}

PermGroup subgroup_as_group(const PermGroup& G, const Subgroup& H, std::string name) {
  std::vector<Perm> gens;
  for (int g : subgroup_generators(G, H)) gens.push_back(G.element(g));
  return PermGroup::generate(G.degree(), gens, static_cast<std::int64_t>(H.size()), std::move(name));
}

Subgroup centralizer(const PermGroup& G, const std::vector<int>& S) {
  Subgroup C;
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int s : S) {
      if (G.mul(x, s) != G.mul(s, x)) {
        ok = false;
        break;
      }
    }
    if (ok) C.push_back(x);
  }
  return C;
}

Subgroup center(const PermGroup& G) { return centralizer(G, G.generator_indices()); }

Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g) {
  Subgroup K;
  K.reserve(H.size());
  for (int h : H) K.push_back(G.conj(h, g));
  std::sort(K.begin(), K.end());
  return K;
}

Subgroup normalizer(const PermGroup& G, const Subgroup& H) {
  std::vector<char> in(G.order(), 0);
  for (int h : H) in[h] = 1;
  auto gens = subgroup_generators(G, H);
  Subgroup N;
  for (int x = 0; x < G.order(); ++x) {
    bool ok = true;
    for (int h : gens) {
      if (!in[G.conj(h, x)]) {
        ok = false;
        break;
      }
    }
    if (ok) N.push_back(x);
  }
  return N;
}

bool is_normal(const PermGroup& G, const Subgroup& H) {
  std::vector<char> in(G.order(), 0);
  for (int h : H) in[h] = 1;
  if (!in[0]) return false;
  for (int h : H) {
    for (int g : G.generator_indices()) {
      if (!in[G.conj(h, g)]) return false;
    }
  }
  return true;
}

GroupMap extend_homomorphism(const PermGroup& source, const PermGroup& target, const std::vector<int>& generator_images,
                             GroupMap::Kind kind) {
  const auto& gens = source.generator_indices();
  if (gens.size() != generator_images.size()) domain_error("NotHomomorphism", "wrong number of generator images");
  GroupMap m;
  m.kind = kind;
  m.generator_images = generator_images;
  m.images.assign(source.order(), -1);
  m.images[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const int x = queue[h];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const int y = source.mul(x, gens[i]);
      const int v = target.mul(m.images[x], generator_images[i]);
      if (m.images[y] < 0) {
        m.images[y] = v;
        queue.push_back(y);
      } else if (m.images[y] != v) {
        domain_error("NotHomomorphism", "generator images do not define a homomorphism");
      }
    }
  }
  return m;
}

GroupMap automorphism_from_images(const PermGroup& G, const std::vector<Perm>& images) {
  std::vector<int> idx;
  for (const auto& p : images) {
    int i = G.index_of(p);
    if (i < 0) domain_error("NotInGroup", "automorphism image " + perm_to_cycles(p) + " is not in the group");
    idx.push_back(i);
  }
  GroupMap m = extend_homomorphism(G, G, idx, GroupMap::Kind::Automorphism);
  std::vector<char> hit(G.order(), 0);
  for (int v : m.images) {
    if (hit[v]) domain_error("NotBijective", "generator images define a non-injective endomorphism");
    hit[v] = 1;
  }
  return m;
}

std::vector<int> automorphism_class_map(const PermGroup& G, const GroupMap& phi) {
  std::vector<int> out(G.num_classes());
  for (int k = 0; k < G.num_classes(); ++k) out[k] = G.class_of(phi.images[G.classes().reps[k]]);
  return out;
}

Quotient quotient(const PermGroup& G, const Subgroup& Z, std::int64_t bound) {
  if (!is_normal(G, Z)) domain_error("NotNormal", "subgroup is not normal");
  const int n = static_cast<int>(G.order());
  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    const int c = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int z : Z) coset[G.mul(z, x)] = c;
  }
  const int index = static_cast<int>(reps.size());
  std::vector<Perm> gens;
  for (int g : G.generator_indices()) {
    Perm p(index);
    for (int c = 0; c < index; ++c) p[c] = coset[G.mul(reps[c], g)];
    gens.push_back(std::move(p));
  }
  Quotient q;
  q.group = PermGroup::generate(index, gens, bound, G.name().empty() ? "" : G.name() + "/Z");
  q.mu = extend_homomorphism(G, q.group, q.group.generator_indices(), GroupMap::Kind::Quotient);
  return q;
}

Subgroup sylow(const PermGroup& G, std::int64_t ell) {
  if (!is_prime(static_cast<std::uint64_t>(ell))) domain_error("NotPrime", std::to_string(ell) + " is not prime");
  const Integer target = ell_part(Integer(static_cast<long>(G.order())), ell);
  std::vector<int> gens;
  Subgroup P{0};
  while (Integer(static_cast<long>(P.size())) < target) {
    std::vector<char> in(G.order(), 0);
    for (int p : P) in[p] = 1;
    auto N = normalizer(G, P);
    int pick = -1;
    for (int x : N) {
      if (!in[x] && is_ell_power(G.element_order(x), ell)) {
        pick = x;
        break;
      }
    }
    if (pick < 0) internal_error("Sylow search stalled");
    gens.push_back(pick);
    P = subgroup_closure(G, gens);
  }
  return P;
}

bool are_conjugate(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
  if (H.size() != K.size()) return false;
  for (int g = 0; g < G.order(); ++g) {
    if (conjugate_subgroup(G, H, g) == K) return true;
  }
  return false;
}

std::vector<Subgroup> ell_subgroups_up_to_conjugacy(const PermGroup& G, std::int64_t ell, std::int64_t bound) {
  const Subgroup P = sylow(G, ell);
  std::set<Subgroup> seen{Subgroup{0}};
  std::deque<Subgroup> todo{Subgroup{0}};
  while (!todo.empty()) {
    Subgroup H = std::move(todo.front());
    todo.pop_front();
    std::vector<char> in(G.order(), 0);
    for (int h : H) in[h] = 1;
    auto gens = subgroup_generators(G, H);
    for (int x : P) {
      if (in[x]) continue;
      auto g2 = gens;
      g2.push_back(x);
      Subgroup K = subgroup_closure(G, g2);
      if (seen.insert(K).second) {
        if (static_cast<std::int64_t>(seen.size()) > bound) {
          bound_error("ell-subgroup search exceeds bound " + std::to_string(bound));
        }
        todo.push_back(std::move(K));
      }
    }
  }
  std::vector<Subgroup> all(seen.begin(), seen.end());
  std::stable_sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) { return a.size() > b.size(); });
  std::vector<Subgroup> reps;
  std::set<Subgroup> covered;
  for (const auto& H : all) {
    if (covered.count(H)) continue;
    reps.push_back(H);
    for (int g = 0; g < G.order(); ++g) covered.insert(conjugate_subgroup(G, H, g));
  }
  return reps;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Trivial: return "trivial";
    case Shape::Cyclic: return "cyclic";
    case Shape::Dihedral: return "dihedral";
    case Shape::Other: return "other";
  }
  return "other";
}

Shape shape(const PermGroup& G, const Subgroup& H, bool klein_is_dihedral) {
  const std::int64_t n = static_cast<std::int64_t>(H.size());
  if (n == 1) return Shape::Trivial;
  for (int h : H) {
    if (G.element_order(h) == n) return Shape::Cyclic;
  }
  if (n == 4) return klein_is_dihedral ? Shape::Dihedral : Shape::Other;
  if (n % 2 != 0 || n < 8) return Shape::Other;
  const std::int64_t m = n / 2;
  for (int c : H) {
    if (G.element_order(c) != m) continue;
    auto C = subgroup_closure(G, {c});
    std::vector<char> inC(G.order(), 0);
    for (int x : C) inC[x] = 1;
    for (int t : H) {
      if (inC[t] || G.element_order(t) != 2) continue;
      if (G.conj(c, t) == G.inv(c)) return Shape::Dihedral;
    }
  }
  return Shape::Other;
}

}  // namespace mfb

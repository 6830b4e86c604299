#include "mfblocks/blocks.hpp"

#include <algorithm>
#include <map>

#include "mfblocks/error.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

CycloNum central_character(const CharacterTable& t, int chi, int k) {
  Rational r(static_cast<long>(t.classes()[k].size), static_cast<long>(t.degree(chi)));
  r.canonicalize();
  return t.value(chi, k).scaled(r);
}

std::vector<int> galois_on_characters(const CharacterTable& t, std::int64_t s) {
  std::map<std::vector<CycloNum>, int> index;
  for (int i = 0; i < t.num_chars(); ++i) index.emplace(t.chars()[i], i);
  std::vector<int> out(t.num_chars(), -1);
  for (int i = 0; i < t.num_chars(); ++i) {
    std::vector<CycloNum> row;
    row.reserve(t.num_classes());
    for (const auto& v : t.chars()[i]) row.push_back(v.galois_power(s));
    auto it = index.find(row);
    if (it == index.end()) internal_error("Galois image of character " + std::to_string(i) + " is not a row of the table");
    out[i] = it->second;
  }
  return out;
}

std::vector<int> sigma_hat_on_characters(const CharacterTable& t, std::int64_t ell) {
  return galois_on_characters(t, sigma_hat_exponent(t.exponent(), ell));
}

BlockPartition block_partition(std::shared_ptr<const CharacterTable> table, std::int64_t ell,
                               std::optional<EmbeddingSpec> embedding) {
  const CharacterTable& t = *table;
  BlockPartition P;
  P.ell = ell;
  P.embedding = embedding ? *embedding : EmbeddingSpec::make(ell, t.exponent());
  if (P.embedding.ell != ell) domain_error("EmbeddingMismatch", "embedding characteristic differs from ell");
  if (P.embedding.conductor % t.exponent() != 0) {
    domain_error("EmbeddingMismatch", "embedding conductor is not a multiple of the table exponent");
  }
  P.sigma_exponent = sigma_hat_exponent(P.embedding.conductor, ell);
  P.table = table;

  const int n = t.num_chars(), k = t.num_classes();
  std::map<std::vector<FiniteField::Elem>, std::vector<int>> groups;
  for (int chi = 0; chi < n; ++chi) {
    std::vector<FiniteField::Elem> w(k);
    for (int K = 0; K < k; ++K) w[K] = reduce_raw(central_character(t, chi, K), P.embedding);
    groups[w].push_back(chi);
  }
  const unsigned nu_g = nu_ell(Integer(static_cast<long>(t.order())), ell);
  std::vector<Block> bl;
  for (auto& [w, chars] : groups) {
    Block b;
    b.chars = chars;
    std::sort(b.chars.begin(), b.chars.end());
    unsigned mn = nu_g;
    for (int c : b.chars) mn = std::min(mn, nu_ell(Integer(static_cast<long>(t.degree(c))), ell));
    b.defect = static_cast<int>(nu_g - mn);
    bl.push_back(std::move(b));
  }
  std::sort(bl.begin(), bl.end(), [](const Block& a, const Block& b) {
    if (a.defect != b.defect) return a.defect > b.defect;
    return a.chars[0] < b.chars[0];
  });
  P.block_of.assign(n, -1);
  for (std::size_t i = 0; i < bl.size(); ++i) {
    bl[i].id = static_cast<int>(i);
    for (int c : bl[i].chars) P.block_of[c] = static_cast<int>(i);
  }
  P.blocks = std::move(bl);

  P.sigma_on_chars = galois_on_characters(t, P.sigma_exponent);
  P.sigma.assign(P.blocks.size(), -1);
  for (const auto& b : P.blocks) {
    int target = P.block_of[P.sigma_on_chars[b.chars[0]]];
    std::vector<int> img;
    for (int c : b.chars) {
      img.push_back(P.sigma_on_chars[c]);
      if (P.block_of[P.sigma_on_chars[c]] != target) internal_error("sigma-hat does not map blocks to blocks");
    }
    std::sort(img.begin(), img.end());
    if (img != P.blocks[target].chars) internal_error("sigma-hat image of a block is not a block");
    P.sigma[b.id] = target;
  }
  std::vector<char> seen(P.blocks.size(), 0);
  int orbit = 0;
  for (auto& b : P.blocks) {
    if (seen[b.id]) continue;
    std::vector<int> members;
    for (int x = b.id; !seen[x]; x = P.sigma[x]) {
      seen[x] = 1;
      members.push_back(x);
    }
    if (P.sigma[members.back()] != b.id) internal_error("sigma is not a permutation of blocks");
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      Block& m = P.blocks[members[pos]];
      m.orbit = orbit;
      m.orbit_position = static_cast<int>(pos);
      m.orbit_length = static_cast<int>(members.size());
    }
    ++orbit;
  }
  return P;
}

int sigma_orbit_bound(const BlockPartition& P, int block) {
  int a = 1;
  for (int x = P.sigma[block]; x != block; x = P.sigma[x]) ++a;
  return a;
}

std::vector<FiniteField::Elem> idempotent_class_coeffs(const BlockPartition& P, int block) {
  const CharacterTable& t = *P.table;
  std::vector<FiniteField::Elem> out(t.num_classes());
  const Rational inv_order(1, static_cast<long>(t.order()));
  for (int K = 0; K < t.num_classes(); ++K) {
    CycloNum s;
    const int Kinv = t.inverse_class(K);
    for (int chi : P.blocks[block].chars) s += t.value(chi, Kinv).scaled(Rational(static_cast<long>(t.degree(chi))));
    try {
      out[K] = reduce_raw(s.scaled(inv_order), P.embedding);
    } catch (const Error& e) {
      if (e.name() == "NotEllIntegral") internal_error("block idempotent coefficient is not ell-integral");
      throw;
    }
  }
  return out;
}

GroupAlgebraElem GroupAlgebraElem::zero(std::shared_ptr<const PermGroup> G, FieldPtr F) {
  GroupAlgebraElem e;
  e.coeffs.assign(G->order(), 0);
  e.group = std::move(G);
  e.field = std::move(F);
  return e;
}

GroupAlgebraElem GroupAlgebraElem::one(std::shared_ptr<const PermGroup> G, FieldPtr F) {
  auto e = zero(std::move(G), std::move(F));
  e.coeffs[0] = 1;
  return e;
}

GroupAlgebraElem GroupAlgebraElem::from_class_coeffs(std::shared_ptr<const PermGroup> G, FieldPtr F,
                                                     const std::vector<FiniteField::Elem>& c) {
  auto e = zero(G, std::move(F));
  for (int x = 0; x < G->order(); ++x) e.coeffs[x] = c[G->class_of(x)];
  return e;
}

GroupAlgebraElem GroupAlgebraElem::operator+(const GroupAlgebraElem& o) const {
  GroupAlgebraElem r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] = field->add(coeffs[i], o.coeffs[i]);
  return r;
}

GroupAlgebraElem GroupAlgebraElem::operator*(const GroupAlgebraElem& o) const {
  auto r = zero(group, field);
  const int n = static_cast<int>(group->order());
  std::vector<int> sb;
  for (int y = 0; y < n; ++y)
    if (o.coeffs[y]) sb.push_back(y);
  for (int x = 0; x < n; ++x) {
    if (!coeffs[x]) continue;
    for (int y : sb) {
      const int z = group->mul(x, y);
      r.coeffs[z] = field->add(r.coeffs[z], field->mul(coeffs[x], o.coeffs[y]));
    }
  }
  return r;
}

bool GroupAlgebraElem::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](FiniteField::Elem c) { return c == 0; });
}

bool GroupAlgebraElem::is_central() const {
  for (int g : group->generator_indices()) {
    for (int x = 0; x < group->order(); ++x) {
      if (coeffs[group->conj(x, g)] != coeffs[x]) return false;
    }
  }
  return true;
}

GroupAlgebraElem GroupAlgebraElem::frobenius() const {
  GroupAlgebraElem r = *this;
  for (auto& c : r.coeffs) c = field->frobenius(c);
  return r;
}

std::size_t GroupAlgebraElem::support_size() const {
  return static_cast<std::size_t>(std::count_if(coeffs.begin(), coeffs.end(), [](FiniteField::Elem c) { return c != 0; }));
}

GroupAlgebraElem block_idempotent(const BlockPartition& P, int block) {
  if (!P.table->group()) domain_error("NoGroup", "block idempotents need the group elements");
  return GroupAlgebraElem::from_class_coeffs(P.table->group(), P.embedding.field, idempotent_class_coeffs(P, block));
}

DefectGroup defect_group(const BlockPartition& P, int block, const std::vector<Subgroup>& ell_subgroups,
                         bool klein_is_dihedral) {
  const auto& Gp = P.table->group();
  if (!Gp) domain_error("NoGroup", "defect groups need the group elements");
  const PermGroup& G = *Gp;
  auto coeffs = idempotent_class_coeffs(P, block);
  std::vector<const Subgroup*> hits;
  std::size_t level = 0;
  for (const auto& D : ell_subgroups) {
    if (!hits.empty() && D.size() < level) break;
    auto C = centralizer(G, subgroup_generators(G, D));
    bool nonzero = false;
    for (int x : C) {
      if (coeffs[G.class_of(x)] != 0) {
        nonzero = true;
        break;
      }
    }
    if (nonzero) {
      hits.push_back(&D);
      level = D.size();
    }
  }
  if (hits.size() != 1) internal_error("Brauer map search found " + std::to_string(hits.size()) + " candidate defect group classes");
  Integer expect;
  mpz_ui_pow_ui(expect.get_mpz_t(), static_cast<unsigned long>(P.ell), static_cast<unsigned long>(P.blocks[block].defect));
  if (Integer(static_cast<long>(hits[0]->size())) != expect) internal_error("defect group order disagrees with the block defect");
  DefectGroup d;
  d.group = *hits[0];
  d.klein_is_dihedral = klein_is_dihedral;
  d.shape = shape(G, d.group, klein_is_dihedral);
  return d;
}

DefectGroup defect_group(const BlockPartition& P, int block, bool klein_is_dihedral, std::int64_t subgroup_bound) {
  const auto& Gp = P.table->group();
  if (!Gp) domain_error("NoGroup", "defect groups need the group elements");
  if (P.blocks[block].defect == 0) return DefectGroup{Subgroup{0}, Shape::Trivial, klein_is_dihedral};
  return defect_group(P, block, ell_subgroups_up_to_conjugacy(*Gp, P.ell, subgroup_bound), klein_is_dihedral);
}

ClassAlgebra::ClassAlgebra(const PermGroup& G, FieldPtr F) : k_(G.num_classes()), F_(std::move(F)) {
  a_ = class_multiplication_coefficients(G);
  for (auto& M : a_)
    for (auto& row : M)
      for (auto& x : row) x %= F_->ell();
}

std::vector<FiniteField::Elem> ClassAlgebra::mul(const std::vector<FiniteField::Elem>& x,
                                                 const std::vector<FiniteField::Elem>& y) const {
  std::vector<FiniteField::Elem> out(k_, 0);
  for (int i = 0; i < k_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < k_; ++j) {
      if (!y[j]) continue;
      const FiniteField::Elem xy = F_->mul(x[i], y[j]);
      for (int l = 0; l < k_; ++l) {
        if (a_[i][j][l]) out[l] = F_->add(out[l], F_->mul(xy, F_->from_int(a_[i][j][l])));
      }
    }
  }
  return out;
}

namespace {

void require_same_embedding(const BlockPartition& a, const BlockPartition& b) {
  if (a.ell != b.ell || a.embedding.conductor != b.embedding.conductor || a.embedding.root != b.embedding.root ||
      a.embedding.field->modulus() != b.embedding.field->modulus()) {
    domain_error("EmbeddingMismatch", "block partitions use different embeddings");
  }
}

}  // namespace

bool covers(const BlockPartition& big, int B, const BlockPartition& small, int b) {
  require_same_embedding(big, small);
  const auto& H = big.table->group();
  const auto& G = small.table->group();
  if (!H || !G) domain_error("NoGroup", "covering needs both groups");
  std::vector<int> to_H(G->order());
  for (int x = 0; x < G->order(); ++x) {
    to_H[x] = H->index_of(G->element(x));
    if (to_H[x] < 0) domain_error("NotSubgroup", "group is not contained in the larger group");
  }
  const auto eB = block_idempotent(big, B);
  const auto cb = idempotent_class_coeffs(small, b);
  const FiniteField& F = *big.embedding.field;
  std::vector<std::pair<int, FiniteField::Elem>> supp;
  for (int x = 0; x < G->order(); ++x) {
    auto c = cb[G->class_of(x)];
    if (c) supp.emplace_back(H->inv(to_H[x]), c);
  }
  for (int x = 0; x < H->order(); ++x) {
    FiniteField::Elem acc = 0;
    for (const auto& [hinv, c] : supp) acc = F.add(acc, F.mul(eB.coeffs[H->mul(x, hinv)], c));
    if (acc) return true;
  }
  return false;
}

std::vector<int> dominated_blocks(const BlockPartition& P, int b, const BlockPartition& quot, const GroupMap& mu) {
  require_same_embedding(P, quot);
  const auto& G = P.table->group();
  const auto& Q = quot.table->group();
  if (!G || !Q) domain_error("NoGroup", "domination needs both groups");
  const FiniteField& F = *P.embedding.field;
  const auto cb = idempotent_class_coeffs(P, b);
  std::vector<FiniteField::Elem> img(Q->order(), 0);
  for (int x = 0; x < G->order(); ++x) img[mu.images[x]] = F.add(img[mu.images[x]], cb[G->class_of(x)]);
  std::vector<FiniteField::Elem> cls(Q->num_classes());
  for (int k = 0; k < Q->num_classes(); ++k) cls[k] = img[Q->classes().reps[k]];
  for (int y = 0; y < Q->order(); ++y) {
    if (img[y] != cls[Q->class_of(y)]) internal_error("image of a central idempotent is not central");
  }
  ClassAlgebra A(*Q, P.embedding.field);
  std::vector<int> out;
  for (const auto& bb : quot.blocks) {
    auto e = idempotent_class_coeffs(quot, bb.id);
    auto prod = A.mul(cls, e);
    if (std::all_of(prod.begin(), prod.end(), [](FiniteField::Elem c) { return c == 0; })) continue;
    if (prod != e) internal_error("image of a block idempotent is not a sum of block idempotents");
    out.push_back(bb.id);
  }
  return out;
}

}  // namespace mfb

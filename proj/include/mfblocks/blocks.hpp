#pragma once

// ell-blocks of group algebras: partition of Irr by reduced central
// characters, block idempotents, the Galois action sigma on blocks, defect
// groups through the Brauer map, covering and domination.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfblocks/chartable.hpp"
#include "mfblocks/finite_field.hpp"
#include "mfblocks/perm_group.hpp"

namespace mfb {

struct Block {
  int id = 0;
  std::vector<int> chars;  // ascending row indices
  int defect = 0;
  int orbit = 0;           // sigma-orbit id
  int orbit_position = 0;  // b = sigma^position(first block of the orbit)
  int orbit_length = 1;
};

struct BlockPartition {
  std::shared_ptr<const CharacterTable> table;
  std::int64_t ell = 2;
  EmbeddingSpec embedding;
  std::int64_t sigma_exponent = 1;  // t with sigma-hat(zeta_N) = zeta_N^t
  std::vector<Block> blocks;        // indexed by id
  std::vector<int> block_of;        // character -> block id
  std::vector<int> sigma;           // block id -> block id
  std::vector<int> sigma_on_chars;  // character -> character

  int num_blocks() const { return static_cast<int>(blocks.size()); }
  int principal_block() const { return block_of[table->trivial_index()]; }
};

// omega_chi(K) = |K| chi(g_K) / chi(1)
CycloNum central_character(const CharacterTable& t, int chi, int k);

// The embedding defaults to EmbeddingSpec::make(ell, exponent); a supplied
// embedding must have conductor divisible by the table exponent.
BlockPartition block_partition(std::shared_ptr<const CharacterTable> table, std::int64_t ell,
                               std::optional<EmbeddingSpec> embedding = std::nullopt);

// Row index of chi^(s): zeta_N -> zeta_N^s applied to values; gcd(s, N) = 1.
// Throws Internal if an image is not a row.
std::vector<int> galois_on_characters(const CharacterTable& t, std::int64_t s);

// Row index of the sigma-hat image of each character. Throws Internal if an
// image is not a row.
std::vector<int> sigma_hat_on_characters(const CharacterTable& t, std::int64_t ell);

int sigma_orbit_bound(const BlockPartition& P, int block);

// Coefficients of the block idempotent on each class:
// c_K = (1/|G|) sum_{chi in b} chi(1) chi(g_K^-1), reduced.
std::vector<FiniteField::Elem> idempotent_class_coeffs(const BlockPartition& P, int block);

// Elements of kG stored densely over the element list.
struct GroupAlgebraElem {
  std::shared_ptr<const PermGroup> group;
  FieldPtr field;
  std::vector<FiniteField::Elem> coeffs;

  static GroupAlgebraElem zero(std::shared_ptr<const PermGroup> G, FieldPtr F);
  static GroupAlgebraElem one(std::shared_ptr<const PermGroup> G, FieldPtr F);
  // class coefficients in G's class order
  static GroupAlgebraElem from_class_coeffs(std::shared_ptr<const PermGroup> G, FieldPtr F,
                                            const std::vector<FiniteField::Elem>& c);

  GroupAlgebraElem operator+(const GroupAlgebraElem& o) const;
  GroupAlgebraElem operator*(const GroupAlgebraElem& o) const;
  bool operator==(const GroupAlgebraElem& o) const { return coeffs == o.coeffs; }
  bool is_zero() const;
  bool is_central() const;  // commutes with every generator
  // coefficient-wise x -> x^ell
  GroupAlgebraElem frobenius() const;
  std::size_t support_size() const;
};

// Requires the table's group; throws Domain "NoGroup" otherwise.
GroupAlgebraElem block_idempotent(const BlockPartition& P, int block);

struct DefectGroup {
  Subgroup group;
  Shape shape = Shape::Trivial;
  bool klein_is_dihedral = false;
};

// Maximal ell-subgroups D with Br_D(e_b) != 0, searched by descending order
// over the supplied conjugacy representatives (see ell_subgroups_up_to_conjugacy).
DefectGroup defect_group(const BlockPartition& P, int block, const std::vector<Subgroup>& ell_subgroups,
                         bool klein_is_dihedral = false);
DefectGroup defect_group(const BlockPartition& P, int block, bool klein_is_dihedral = false,
                         std::int64_t subgroup_bound = kDefaultSubgroupBound);

// Multiplication of central elements in the class-sum basis of kG.
class ClassAlgebra {
 public:
  ClassAlgebra(const PermGroup& G, FieldPtr F);
  std::vector<FiniteField::Elem> mul(const std::vector<FiniteField::Elem>& x, const std::vector<FiniteField::Elem>& y) const;
  int dim() const { return k_; }

 private:
  int k_;
  FieldPtr F_;
  std::vector<std::vector<std::vector<std::int64_t>>> a_;  // reduced mod ell
};

// B a block of kH, b a block of kG for G normal in H; both partitions must
// share the embedding. Tests B * b != 0 in kH.
bool covers(const BlockPartition& big, int B, const BlockPartition& small, int b);

// Blocks of k(G/Z) whose idempotent occurs in mu(e_b); `quot` must be a
// partition of the quotient's table over the same embedding, and `mu` the
// quotient map from quotient().
std::vector<int> dominated_blocks(const BlockPartition& P, int b, const BlockPartition& quot, const GroupMap& mu);

}  // namespace mfb

#pragma once

// Finite permutation groups small enough to enumerate.
//
// A PermGroup stores every element explicitly, sorted lexicographically by
// image list, so element indices are stable and index 0 is the identity.
// Permutations are 0-based internally and 1-based in JSON. Products compose
// left to right: (p * q)(x) = q(p(x)), i.e. first p, then q.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace mfb {

using Perm = std::vector<int>;

inline constexpr std::int64_t kDefaultElementBound = 20000;
inline constexpr std::int64_t kDefaultSubgroupBound = 5000;

Perm perm_compose(const Perm& p, const Perm& q);  // first p, then q
Perm perm_inverse(const Perm& p);
bool perm_valid(const Perm& p);
// "(1 2 3)(4 5)" in 1-based cycle notation; "()" for the identity.
std::string perm_to_cycles(const Perm& p);

struct ConjClasses {
  std::vector<int> reps;      // smallest element of each class
  std::vector<int> sizes;
  std::vector<int> class_of;  // element index -> class index
};

class PermGroup {
 public:
  PermGroup() = default;
  // Throws Bound "BoundExceeded" when the closure exceeds `bound`, Schema
  // "SchemaError" for malformed permutations.
  static PermGroup generate(int degree, const std::vector<Perm>& generators, std::int64_t bound = kDefaultElementBound,
                            std::string name = "");

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  std::int64_t order() const { return static_cast<std::int64_t>(order_); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& generator_indices() const { return gen_idx_; }

  Perm element(int i) const;
  const int* element_data(int i) const { return &data_[static_cast<std::size_t>(i) * degree_]; }
  // -1 if p is not in the group
  int index_of(const Perm& p) const;
  int index_of(const int* p) const;

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int pow(int a, std::int64_t k) const;
  int element_order(int a) const { return ord_[a]; }
  std::int64_t exponent() const { return exponent_; }
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

  const ConjClasses& classes() const { return classes_; }
  int num_classes() const { return static_cast<int>(classes_.reps.size()); }
  int class_of(int x) const { return classes_.class_of[x]; }
  int inverse_class(int k) const { return class_of(inv(classes_.reps[k])); }
  int power_class(int k, std::int64_t e) const { return class_of(pow(classes_.reps[k], e)); }
  // elements of class k, ascending
  std::vector<int> class_elements(int k) const;
  bool is_abelian() const;

 private:
  void build_index();
  int lookup(const int* p) const;

  std::string name_;
  int degree_ = 0;
  std::size_t order_ = 0;
  std::vector<int> data_;  // order_ x degree_
  std::vector<Perm> gens_;
  std::vector<int> gen_idx_;
  std::vector<int> slots_;
  std::vector<int> inv_;
  std::vector<int> ord_;
  std::vector<int> table_;  // Cayley table when small
  std::int64_t exponent_ = 1;
  ConjClasses classes_;
};

// Subgroups are sorted element-index lists of the parent group.
using Subgroup = std::vector<int>;

Subgroup subgroup_closure(const PermGroup& G, const std::vector<int>& gens);
// A small generating set (greedy, deterministic).
std::vector<int> subgroup_generators(const PermGroup& G, const Subgroup& H);
// H as a group in its own right (same degree).
PermGroup subgroup_as_group(const PermGroup& G, const Subgroup& H, std::string name = "");
Subgroup center(const PermGroup& G);
Subgroup centralizer(const PermGroup& G, const std::vector<int>& S);
Subgroup normalizer(const PermGroup& G, const Subgroup& H);
bool is_normal(const PermGroup& G, const Subgroup& H);
Subgroup conjugate_subgroup(const PermGroup& G, const Subgroup& H, int g);

// Homomorphism between enumerated groups, stored elementwise.
struct GroupMap {
  enum class Kind { Quotient, Automorphism, Inclusion };
  Kind kind = Kind::Automorphism;
  std::vector<int> generator_images;  // target indices of source generators
  std::vector<int> images;            // source element index -> target index
};

// Extends generator images to a homomorphism, verifying well-definedness on
// the whole Cayley graph. Throws Domain "NotHomomorphism".
GroupMap extend_homomorphism(const PermGroup& source, const PermGroup& target, const std::vector<int>& generator_images,
                             GroupMap::Kind kind);
// Automorphism of G from images (as permutations in G) of G's generators.
// Throws Domain "NotHomomorphism" / "NotBijective" / "NotInGroup".
GroupMap automorphism_from_images(const PermGroup& G, const std::vector<Perm>& images);
// Class permutation induced by an automorphism.
std::vector<int> automorphism_class_map(const PermGroup& G, const GroupMap& phi);

struct Quotient {
  PermGroup group;  // action on right cosets of Z
  GroupMap mu;
};
// Throws Domain "NotNormal".
Quotient quotient(const PermGroup& G, const Subgroup& Z, std::int64_t bound = kDefaultElementBound);

Subgroup sylow(const PermGroup& G, std::int64_t ell);
// Representatives of the G-conjugacy classes of ell-subgroups (including the
// trivial group), ordered by (order descending, sorted element list).
// Throws Bound "BoundExceeded" if more than `bound` subgroups of a Sylow
// subgroup are visited.
std::vector<Subgroup> ell_subgroups_up_to_conjugacy(const PermGroup& G, std::int64_t ell,
                                                    std::int64_t bound = kDefaultSubgroupBound);
bool are_conjugate(const PermGroup& G, const Subgroup& H, const Subgroup& K);

enum class Shape { Trivial, Cyclic, Dihedral, Other };
std::string shape_name(Shape s);
// Cyclic: some element generates H. Dihedral: |H| = 2m >= 8 with a cyclic
// subgroup of index 2 inverted by an involution outside it; with
// klein_is_dihedral the Klein four-group also counts as dihedral.
Shape shape(const PermGroup& G, const Subgroup& H, bool klein_is_dihedral = false);

}  // namespace mfb

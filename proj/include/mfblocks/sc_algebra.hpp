#pragma once

// Finite-dimensional algebras over F_q given by structure constants, their
// Frobenius twists, and twisted group algebras.
//
// Basis products: b_i b_j = sum_k c[i][j][k] b_k. Elements are coordinate
// vectors. Twisting by a replaces every constant (and the unit's
// coordinates) by its ell^a-th power, which is the same ring with the scalar
// action precomposed with the inverse Frobenius.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "mfblocks/finite_field.hpp"
#include "mfblocks/json_io.hpp"
#include "mfblocks/perm_group.hpp"

namespace mfb {

using Vec = std::vector<FiniteField::Elem>;
using Mat = std::vector<Vec>;  // row-major, rows are basis images

class SCAlgebra {
 public:
  SCAlgebra() = default;
  // Verifies associativity on all basis triples and the unit laws; throws
  // Domain "NotAssociative" / "NoUnit".
  SCAlgebra(FieldPtr F, std::vector<std::vector<Vec>> constants, Vec unit);

  const FieldPtr& field() const { return F_; }
  int dim() const { return m_; }
  const std::vector<std::vector<Vec>>& constants() const { return c_; }
  const Vec& unit() const { return unit_; }

  Vec mul(const Vec& x, const Vec& y) const;
  Vec add(const Vec& x, const Vec& y) const;
  Vec scale(FiniteField::Elem a, const Vec& x) const;
  bool constants_in_prime_field() const;
  // Same algebra in the basis whose i-th vector has coordinates B[i].
  // Throws Domain "Singular".
  SCAlgebra change_basis(const Mat& B) const;

  friend bool operator==(const SCAlgebra& a, const SCAlgebra& b) {
    return a.F_->modulus() == b.F_->modulus() && a.F_->ell() == b.F_->ell() && a.c_ == b.c_ && a.unit_ == b.unit_;
  }

 private:
  FieldPtr F_;
  int m_ = 0;
  std::vector<std::vector<Vec>> c_;
  Vec unit_;
};

// Unchecked check helpers usable before constructing an SCAlgebra.
bool is_associative(const FiniteField& F, const std::vector<std::vector<Vec>>& c);

SCAlgebra frobenius_twist(const SCAlgebra& A, int a);

// Linear algebra over F_q.
std::optional<Mat> mat_inverse(const FiniteField& F, const Mat& A);
int mat_rank(const FiniteField& F, Mat A);

// An algebra isomorphism A -> B as the matrix of basis images, if one exists.
// Exhaustive with the unit fixed; dim <= 3 (Domain "DimensionTooLarge").
std::optional<Mat> find_isomorphism(const SCAlgebra& A, const SCAlgebra& B, std::int64_t node_bound = 50'000'000);
// True iff some basis change puts every structure constant in F_ell.
// Searches for an F_ell-subalgebra of F_ell-dimension dim that spans A,
// growing it generator by generator. dim <= 4 (Domain "DimensionTooLarge");
// Bound "BoundExceeded" after node_bound visited candidates.
bool has_small_ell_form(const SCAlgebra& A, std::int64_t node_bound = 50'000'000);
// The F_ell-basis found by has_small_ell_form, as coordinate rows.
std::optional<Mat> small_ell_form_basis(const SCAlgebra& A, std::int64_t node_bound = 50'000'000);

// 2-cocycles G x G -> F_q^x, indexed by element indices of G.
struct Cocycle {
  std::shared_ptr<const PermGroup> group;
  FieldPtr field;
  std::vector<std::vector<FiniteField::Elem>> values;

  // Nonzero values and gamma(g,h) gamma(gh,l) = gamma(h,l) gamma(g,hl).
  bool is_valid() const;
  Cocycle frobenius(int times = 1) const;  // coefficient-wise ell-th power
  static Cocycle trivial(std::shared_ptr<const PermGroup> G, FieldPtr F);
};

// Basis u_g (g in element order), u_g u_h = gamma(g,h) u_gh. Throws Domain
// "CocycleInvalid".
SCAlgebra twisted_group_algebra(const Cocycle& gamma);

struct RootIsoReport {
  bool ring_isomorphism = false;   // multiplicative on basis pairs, bijective
  bool semilinear = false;         // phi(lambda x) = lambda^(1/ell) phi(x)
  bool twist_matches = false;      // k_{sigma(gamma)}G equals the twist of k_gamma G
  bool ok() const { return ring_isomorphism && semilinear && twist_matches; }
};

// Builds k_gamma G and k_{sigma(gamma)} G and checks that the coefficient-wise
// ell-th root map k_{sigma(gamma)} G -> (k_gamma G)^(ell) is an isomorphism
// of k-algebras. Above kDenseCocycleOrder the checks run on the monomial
// basis without structure constants. |G| <= kMaxCocycleOrder (Bound
// "BoundExceeded"); throws Domain "CocycleInvalid".
inline constexpr std::int64_t kDenseCocycleOrder = 24;
inline constexpr std::int64_t kMaxCocycleOrder = 5040;
RootIsoReport root_iso_report(const Cocycle& gamma);
// The same checks on the monomial basis u_g, for any size.
RootIsoReport monomial_root_iso_report(const Cocycle& gamma);
bool verify_root_iso(const Cocycle& gamma);

// JSON: {"ell", "poly", "dim", "unit": [c...], "constants": [[[c...]...]...]}
// with every field element given by its coefficient list.
json algebra_to_json(const SCAlgebra& A);
SCAlgebra algebra_from_json(const json& j);
// {"group": name or inline group, "ell", "poly", "elements": [perm...],
//  "values": [[c...]...]} with rows and columns in the listed element order.
json cocycle_to_json(const Cocycle& g);
Cocycle cocycle_from_json(const json& j, std::shared_ptr<const PermGroup> G = nullptr);

}  // namespace mfb

#pragma once

// Generic data for finite groups of Lie type: e_ell(q), polynomial orders,
// centers, good and bad primes, the table of non-rational unipotent
// e-cuspidal pairs of central ell-defect, and Morita Frobenius verdicts for
// unipotent blocks.
//
// Exceptional-type data is read from data/lietype.json; classical types are
// computed from their standard order formulas.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfblocks/json_io.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

enum class Family {
  G2, F4, E6, E6Twisted, E7, E8, D4Triality,
  Suzuki, ReeSmall, ReeLarge,
  SL, SU, Sp, SpinOdd, SpinPlus, SpinMinus,
};

struct PolynomialOrder {
  int q_power = 0;
  std::map<int, int> phi;  // d -> multiplicity of Phi_d
  int degree() const;
  Integer evaluate(const Integer& q) const;
};

struct GenericType {
  Family family = Family::G2;
  int n = 0;  // SL_n, SU_n: n; Sp_2n, Spin: the rank-defining n (Spin(2n+1), Spin^pm(2n))
  std::string label;

  bool is_exceptional() const;  // G2, F4, E6, 2E6, E7, E8
  bool is_suzuki_ree() const;
  int rank() const;
  int dimension() const;
  PolynomialOrder polynomial_order() const;
  std::int64_t center_order(std::int64_t q) const;
  std::vector<int> bad_primes() const;
};

// "G2", "F4", "E6", "2E6", "E7", "E8", "3D4", "2B2", "2G2", "2F4", "SL3",
// "SU4", "Sp4", "Spin7", "Spin+8", "Spin-8". Throws Domain "UnknownType".
GenericType parse_type(const std::string& s);

// Order of q mod ell (mod 4 when ell = 2). Domain "NotCoprime", "NotPrime".
int e_of(std::int64_t ell, std::int64_t q);

// Number of ell-blocks of G^F in its defining characteristic: |Z(G^F)| + 1.
std::int64_t defining_char_block_count(const GenericType& t, std::int64_t q);

bool is_good_prime(const GenericType& t, std::int64_t ell);

struct CuspidalPairRow {
  int index = 0;  // position in the table
  std::string group;
  std::vector<int> e;
  std::string levi;            // as labelled in the table
  std::string levi_structure;  // e.g. "phi1^2.E6"
  int center_dim = 0;          // rk G - rk [L, L]
  std::vector<std::string> characters;
  std::vector<int> central_defect_except;  // empty: every ell
  std::optional<std::string> footnote;
  std::string footnote_text;
  std::string source;

  bool levi_is_group() const { return center_dim == 0; }
};

const std::vector<CuspidalPairRow>& cuspidal_rows();

struct RowMatch {
  CuspidalPairRow row;
  bool footnote_applies = false;  // the footnote's (ell, e) equals the query
};

// Rows of the type with e = e_of(ell, q) and ell outside the row's exclusion
// set. Exceptional types only (Domain "UnknownType" otherwise).
std::vector<RowMatch> lookup_cuspidal_rows(const GenericType& t, std::int64_t ell, std::int64_t q);
// Same, for an explicit e.
std::vector<RowMatch> lookup_cuspidal_rows_e(const GenericType& t, std::int64_t ell, int e);

enum class Reason {
  RationalCuspidal,
  GoodPrimeTrivialDefect,
  GoodPrimeCyclicDefect,
  SelfCuspidalFullHeight,
  PuigD12Twist,
  CyclicCenterDefect,
  DihedralDefect,
  SigmaStable,
  SigmaSquareStable,
};
std::string reason_name(Reason r);

struct UnipotentVerdict {
  std::optional<CuspidalPairRow> row;  // none for the rational-lambda catch-all
  std::int64_t ell = 0;
  std::int64_t q = 0;
  int e = 0;
  bool upper_bound_2 = false;  // otherwise mf(b) = 1
  Reason reason = Reason::RationalCuspidal;
  // false when the branch is applied outside the (ell, e) range the
  // argument was written for; `note` says how
  bool stated = true;
  std::string condition;  // congruence data behind the verdict
  std::string note;

  std::string verdict_string() const { return upper_bound_2 ? "<=2" : "1"; }
};

// One verdict per applicable row, then the catch-all for blocks whose
// cuspidal character is rational. Classical types and 3D4 get the catch-all
// only. Suzuki and Ree types: Domain "UnknownType" (see suzuki_ree_mf).
std::vector<UnipotentVerdict> classify_unipotent_mf(const GenericType& t, std::int64_t ell, std::int64_t q);

struct SuzukiReeVerdict {
  std::string blocks;     // which blocks the line covers
  std::string condition;  // e.g. "ell | Q - 1"
  std::string reason;     // CyclicDefect, DihedralDefect, RationalCharacterSum, DefectZero
  std::vector<std::string> characters;  // 2F4 character families
};

// Verdicts (all mf = 1) for 2B2, 2G2, 2F4 at ell. field_size is the size
// Q = q^2 of the defining field (an odd power of 2 or 3); without it the 2F4
// case split is emitted in full. Domain "DefiningPrime", "UnknownType".
std::vector<SuzukiReeVerdict> suzuki_ree_mf(const GenericType& t, std::int64_t ell,
                                            std::optional<std::int64_t> field_size = std::nullopt);

json row_to_json(const CuspidalPairRow& r);
json verdict_to_json(const UnipotentVerdict& v);
json suzuki_ree_to_json(const SuzukiReeVerdict& v);

}  // namespace mfb

#pragma once

// Finite fields F_{l^d} and the reduction map from cyclotomic integers.
//
// Elements are encoded as integers sum c_i l^i over the coefficients of the
// polynomial basis 1, x, ..., x^(d-1) modulo a monic irreducible polynomial.
// For each (l, d) the canonical modulus is the lexicographically smallest
// monic irreducible polynomial, coefficients compared from the constant term
// up. Fields are shared immutable objects.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mfblocks/cyclo.hpp"

namespace mfb {

class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Canonical field of order ell^degree (cached; thread-safe).
  static std::shared_ptr<const FiniteField> get(std::int64_t ell, int degree);
  // Field defined by an explicit monic irreducible modulus (constant term
  // first, length degree + 1). Throws Schema "NotIrreducible".
  static std::shared_ptr<const FiniteField> with_modulus(std::int64_t ell, std::vector<int> modulus);

  std::int64_t ell() const { return ell_; }
  int degree() const { return degree_; }
  std::uint64_t size() const { return size_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_digits(const std::vector<int>& digits) const;
  std::vector<int> digits(Elem x) const;
  bool in_prime_field(Elem x) const { return x < static_cast<Elem>(ell_); }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // Domain "DivisionByZero" on 0
  Elem pow(Elem a, std::uint64_t e) const;
  // x -> x^(l^times)
  Elem frobenius(Elem a, int times = 1) const;
  // Generator of the multiplicative group (smallest under lex_less).
  Elem primitive_element() const { return generator_; }

  // Order on coefficient tuples, constant term compared first.
  bool lex_less(Elem a, Elem b) const;

  std::string to_string(Elem a) const;

  FiniteField(std::int64_t ell, std::vector<int> modulus);

 private:
  Elem poly_mul(Elem a, Elem b) const;

  std::int64_t ell_;
  int degree_;
  std::uint64_t size_;
  std::vector<int> modulus_;
  Elem generator_ = 1;
  std::vector<Elem> exp_;    // exp_[k] = g^k, k < q - 1
  std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// Value type for field elements with a field reference; used at API
// boundaries and in serialized data.
struct FqElem {
  FieldPtr field;
  FiniteField::Elem value = 0;

  std::int64_t ell() const { return field->ell(); }
  int degree() const { return field->degree(); }
  std::vector<int> coeffs() const { return field->digits(value); }

  FqElem operator+(const FqElem& o) const { return {field, field->add(value, o.value)}; }
  FqElem operator-(const FqElem& o) const { return {field, field->sub(value, o.value)}; }
  FqElem operator*(const FqElem& o) const { return {field, field->mul(value, o.value)}; }
  FqElem pow(std::uint64_t e) const { return {field, field->pow(value, e)}; }
  FqElem frobenius(int times = 1) const { return {field, field->frobenius(value, times)}; }
  bool operator==(const FqElem& o) const { return value == o.value && field->modulus() == o.field->modulus() && ell() == o.ell(); }
  std::string to_string() const { return field->to_string(value); }
};

// Lexicographically smallest monic irreducible polynomial of degree d over
// F_ell (constant term first).
std::vector<int> canonical_irreducible(std::int64_t ell, int degree);
bool is_irreducible_mod(const std::vector<int>& poly, std::int64_t ell);

// The choice of maximal ideal above ell in Z[zeta_N]: the image of zeta_m,
// m the ell'-part of N, in F_{ell^d}, d = ord_m(ell). Roots of unity of
// ell-power order map to 1.
struct EmbeddingSpec {
  std::int64_t ell = 2;
  std::int64_t conductor = 1;  // N
  std::int64_t m = 1;          // ell'-part of N
  std::int64_t twist = 1;      // image = (default root)^twist
  FieldPtr field;
  FiniteField::Elem root = 1;                  // image of zeta_m
  std::vector<FiniteField::Elem> zeta_images;  // image of zeta_N^k, k < N

  // Deterministic default: the root of the lexicographically smallest
  // irreducible factor of Phi_m over F_ell, smallest among that factor's
  // roots; then raised to `twist` (gcd(twist, m) = 1 required).
  static EmbeddingSpec make(std::int64_t ell, std::int64_t conductor, std::int64_t twist = 1);

  FqElem root_elem() const { return {field, root}; }
};

// Reduction of an ell-integral element; throws Domain "NotEllIntegral" if a
// coefficient denominator is divisible by ell, Domain "ConductorMismatch" if
// the conductor of x does not divide the embedding conductor.
FiniteField::Elem reduce_raw(const CycloNum& x, const EmbeddingSpec& emb);
FqElem reduce_mod(const CycloNum& x, const EmbeddingSpec& emb);

// Exponent t with t = ell (mod m) and t = 1 (mod ell-part of n): the action
// of the fixed lift of Frobenius on the n-th roots of unity.
std::int64_t sigma_hat_exponent(std::int64_t n, std::int64_t ell);

}  // namespace mfb

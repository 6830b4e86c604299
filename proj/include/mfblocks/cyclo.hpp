#pragma once

// Exact elements of cyclotomic fields Q(zeta_n).
//
// A CycloNum stores its conductor n and phi(n) rational coordinates in the
// power basis 1, z, ..., z^(phi(n)-1), z = exp(2 pi i / n), reduced modulo the
// n-th cyclotomic polynomial. For a fixed conductor the representation is
// canonical. Binary operations lift both operands to the lcm of their
// conductors; equality and ordering are field-level, so 1/2 stored with
// conductor 1 equals 1/2 stored with conductor 12.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mfblocks/numtheory.hpp"

namespace mfb {

class CycloNum {
 public:
  CycloNum();  // zero, conductor 1
  CycloNum(long v);  // NOLINT: implicit integer constants are convenient
  explicit CycloNum(Rational v);
  // coeffs must have length phi(n)
  CycloNum(std::int64_t n, std::vector<Rational> coeffs);

  // zeta_n^k for any integer k
  static CycloNum root_of_unity(std::int64_t n, std::int64_t k = 1);

  std::int64_t conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational rational_value() const;

  // Same element expressed at conductor m (n must divide m).
  CycloNum lift(std::int64_t m) const;
  // Same element at the smallest conductor whose field contains it.
  CycloNum normalized() const;

  // zeta_n -> zeta_n^t; requires gcd(t, n) = 1 (Domain "NotCoprime").
  CycloNum galois_power(std::int64_t t) const;
  CycloNum conj() const { return galois_power(-1); }

  CycloNum operator-() const;
  friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  // Throws Domain "DivisionByZero".
  friend CycloNum operator/(const CycloNum& a, const CycloNum& b);
  CycloNum& operator+=(const CycloNum& b) { return *this = *this + b; }
  CycloNum& operator-=(const CycloNum& b) { return *this = *this - b; }
  CycloNum& operator*=(const CycloNum& b) { return *this = *this * b; }
  CycloNum scaled(const Rational& r) const;
  CycloNum inverse() const;

  friend bool operator==(const CycloNum& a, const CycloNum& b);
  // Canonical total order: by minimal conductor, then coordinates at that
  // conductor compared lexicographically.
  friend std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b);

  // e.g. "-1/2 + 3*z5^2"
  std::string to_string() const;

 private:
  std::int64_t n_;
  std::vector<Rational> coeffs_;
  bool minimal_ = false;  // n_ is known to be the minimal conductor
};

// Power-basis coordinates of zeta_n^k, k in [0, n). Cached per conductor.
const std::vector<std::vector<long>>& cyclo_power_table(std::int64_t n);

}  // namespace mfb

#pragma once

// Elementary number theory on machine integers and GMP big integers:
// valuations, multiplicative orders, cyclotomic polynomials.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace mfb {

using Integer = mpz_class;
using Rational = mpq_class;

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

bool is_prime(std::uint64_t n);
std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);  // ascending
std::vector<std::int64_t> prime_factors(std::int64_t n);  // distinct, ascending

// Smallest k >= 1 with a^k = 1 (mod m). Requires gcd(a, m) = 1, m >= 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);
// Smallest primitive root modulo the prime p.
std::int64_t primitive_root(std::int64_t p);

// Exponent of ell in n; throws Domain "ZeroInput" for n = 0.
unsigned nu_ell(const Integer& n, std::int64_t ell);
// ell^nu_ell(n, ell).
Integer ell_part(const Integer& n, std::int64_t ell);
// n with every factor of ell removed.
std::int64_t ell_prime_part(std::int64_t n, std::int64_t ell);

// Integer polynomials are coefficient vectors, constant term first.
using IntPoly = std::vector<Integer>;

// d-th cyclotomic polynomial via Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
IntPoly cyclotomic_poly(std::int64_t d);
Integer eval_poly(const IntPoly& p, const Integer& x);
Integer eval_phi(std::int64_t d, const Integer& q);

Integer factorial(unsigned n);

}  // namespace mfb

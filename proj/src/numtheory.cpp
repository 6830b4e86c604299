#include "mfblocks/numtheory.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "mfblocks/error.hpp"

namespace mfb {

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1, b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = (result * b) % mod;
    b = (b * b) % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_pair(a1, g - q * a1);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  if (g != 1) domain_error("NotInvertible", "element is not invertible modulo " + std::to_string(m));
  return ((x % m) + m) % m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t d = 17; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  a = ((a % m) + m) % m;
  if (std::gcd(a, m) != 1) domain_error("NotCoprime", "order of a non-unit requested");
  std::int64_t order = euler_phi(m);
  for (auto p : prime_factors(order)) {
    while (order % p == 0 && mod_pow(a, order / p, m) == 1) order /= p;
  }
  return order;
}

std::int64_t primitive_root(std::int64_t p) {
  if (p == 2) return 1;
  for (std::int64_t g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  internal_error("no primitive root found");
}

unsigned nu_ell(const Integer& n, std::int64_t ell) {
  if (n == 0) domain_error("ZeroInput", "valuation of zero is undefined");
  if (ell < 2) domain_error("NotPrime", "ell must be a prime");
  Integer m = abs(n);
  unsigned v = 0;
  Integer l = static_cast<long>(ell);
  while (mpz_divisible_p(m.get_mpz_t(), l.get_mpz_t())) {
    m /= l;
    ++v;
  }
  return v;
}

Integer ell_part(const Integer& n, std::int64_t ell) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(ell), nu_ell(n, ell));
  return r;
}

std::int64_t ell_prime_part(std::int64_t n, std::int64_t ell) {
  if (n == 0) domain_error("ZeroInput", "ell'-part of zero is undefined");
  while (n % ell == 0) n /= ell;
  return n;
}

namespace {

IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
  // den is monic
  IntPoly quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer c = num[i + den.size() - 1];
    quot[i] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
  }
  for (const auto& r : num) {
    if (r != 0) internal_error("cyclotomic division left a remainder");
  }
  return quot;
}

}  // namespace

IntPoly cyclotomic_poly(std::int64_t d) {
  if (d < 1) domain_error("BadArgument", "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<std::int64_t, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p[d] = 1;
  for (auto e : divisors(d)) {
    if (e < d) p = poly_div_exact(p, cyclotomic_poly(e));
  }
  std::lock_guard lock(mu);
  cache.emplace(d, p);
  return p;
}

Integer eval_poly(const IntPoly& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

Integer eval_phi(std::int64_t d, const Integer& q) { return eval_poly(cyclotomic_poly(d), q); }

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace mfb

#include "mfblocks/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "mfblocks/error.hpp"

namespace mfb {

namespace {

using Poly = std::vector<std::int64_t>;  // over F_ell, constant first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::int64_t inv_mod(std::int64_t a, std::int64_t ell) { return mod_inverse(((a % ell) + ell) % ell, ell); }

Poly poly_mod(Poly a, const Poly& f, std::int64_t ell) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::int64_t lead_inv = inv_mod(f.back(), ell);
  while (a.size() >= f.size()) {
    const std::int64_t c = a.back() * lead_inv % ell;
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = ((a[shift + i] - c * f[i]) % ell + ell) % ell;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t ell) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % ell;
  }
  return poly_mod(std::move(r), f, ell);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::int64_t ell) {
  Poly r{1};
  base = poly_mod(std::move(base), f, ell);
  while (e > 0) {
    if (e & 1) r = poly_mulmod(r, base, f, ell);
    base = poly_mulmod(base, base, f, ell);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t ell) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, ell);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::int64_t li = inv_mod(a.back(), ell);
    for (auto& c : a) c = c * li % ell;
  }
  return a;
}

std::uint64_t checked_power(std::int64_t ell, int d) {
  std::uint64_t q = 1;
  for (int i = 0; i < d; ++i) {
    q *= static_cast<std::uint64_t>(ell);
    if (q >= (1ull << 31)) bound_error("finite field of order " + std::to_string(ell) + "^" + std::to_string(d) + " is too large");
  }
  return q;
}

}  // namespace

bool is_irreducible_mod(const std::vector<int>& poly, std::int64_t ell) {
  Poly f(poly.begin(), poly.end());
  for (auto& c : f) c = ((c % ell) + ell) % ell;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  // Ben-Or: f is irreducible iff gcd(x^(ell^i) - x, f) = 1 for i <= d/2
  Poly xp{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    xp = poly_powmod(xp, static_cast<std::uint64_t>(ell), f, ell);
    Poly h = xp;
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = ((h[1] - 1) % ell + ell) % ell;
    if (poly_gcd(f, h, ell).size() != 1) return false;
  }
  return true;
}

std::vector<int> canonical_irreducible(std::int64_t ell, int degree) {
  if (degree < 1) domain_error("InvalidDegree", "field degree must be positive");
  const std::uint64_t count = checked_power(ell, degree);
  std::vector<int> f(degree + 1, 0);
  f[degree] = 1;
  // k enumerates tuples (c0, ..., c_{d-1}) with c0 most significant
  for (std::uint64_t k = 0; k < count; ++k) {
    std::uint64_t r = k;
    for (int i = degree - 1; i >= 0; --i) {
      f[i] = static_cast<int>(r % ell);
      r /= ell;
    }
    if (degree > 1 && f[0] == 0) continue;
    if (is_irreducible_mod(f, ell)) return f;
  }
  internal_error("no irreducible polynomial found");
}

FiniteField::FiniteField(std::int64_t ell, std::vector<int> modulus)
    : ell_(ell), degree_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  size_ = checked_power(ell_, degree_);
  const std::uint64_t q = size_;
  const std::uint64_t n = q - 1;
  auto factors = prime_factors(static_cast<std::int64_t>(n));
  auto is_generator = [&](Elem g) {
    if (g == 0) return false;
    if (n == 1) return g == 1;
    for (auto p : factors) {
      if (pow(g, n / p) == 1) return false;
    }
    return true;
  };
  // smallest generator in constant-first lex order
  std::vector<int> dig(degree_, 0);
  for (std::uint64_t k = 0; k < q; ++k) {
    std::uint64_t r = k;
    for (int i = degree_ - 1; i >= 0; --i) {
      dig[i] = static_cast<int>(r % ell_);
      r /= ell_;
    }
    Elem g = from_digits(dig);
    if (is_generator(g)) {
      generator_ = g;
      break;
    }
  }
  if (q <= (1u << 22)) {
    exp_.resize(n);
    log_.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t k = 0; k < n; ++k) {
      exp_[k] = x;
      log_[x] = static_cast<std::uint32_t>(k);
      x = poly_mul(x, generator_);
    }
  }
}

std::shared_ptr<const FiniteField> FiniteField::get(std::int64_t ell, int degree) {
  static std::mutex mu;
  static std::map<std::pair<std::int64_t, int>, std::shared_ptr<const FiniteField>> cache;
  if (!is_prime(static_cast<std::uint64_t>(ell))) domain_error("NotPrime", std::to_string(ell) + " is not prime");
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(ell, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FiniteField>(ell, canonical_irreducible(ell, degree));
  cache.emplace(key, f);
  return f;
}

std::shared_ptr<const FiniteField> FiniteField::with_modulus(std::int64_t ell, std::vector<int> modulus) {
  if (!is_prime(static_cast<std::uint64_t>(ell))) schema_error("field characteristic " + std::to_string(ell) + " is not prime");
  if (modulus.size() < 2 || modulus.back() != 1) schema_error("field modulus must be monic of degree >= 1");
  if (!is_irreducible_mod(modulus, ell)) throw Error(ErrorCategory::Schema, "NotIrreducible", "field modulus is reducible");
  int d = static_cast<int>(modulus.size()) - 1;
  auto canon = FiniteField::get(ell, d);
  if (canon->modulus() == modulus) return canon;
  return std::make_shared<const FiniteField>(ell, std::move(modulus));
}

FiniteField::Elem FiniteField::from_int(std::int64_t v) const { return static_cast<Elem>(((v % ell_) + ell_) % ell_); }

FiniteField::Elem FiniteField::from_digits(const std::vector<int>& digits) const {
  if (static_cast<int>(digits.size()) > degree_) schema_error("too many coefficients for field element");
  std::uint64_t v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    v = v * ell_ + static_cast<std::uint64_t>(((digits[i] % ell_) + ell_) % ell_);
  }
  return static_cast<Elem>(v);
}

std::vector<int> FiniteField::digits(Elem x) const {
  std::vector<int> d(degree_, 0);
  for (int i = 0; i < degree_; ++i) {
    d[i] = static_cast<int>(x % ell_);
    x /= static_cast<Elem>(ell_);
  }
  return d;
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (degree_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % ell_);
  if (ell_ == 2) return a ^ b;
  std::uint64_t r = 0, p = 1;
  const auto l = static_cast<Elem>(ell_);
  while (a > 0 || b > 0) {
    r += p * ((a % l + b % l) % l);
    a /= l;
    b /= l;
    p *= l;
  }
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (ell_ == 2) return a;
  std::uint64_t r = 0, p = 1;
  const auto l = static_cast<Elem>(ell_);
  while (a > 0) {
    r += p * ((l - a % l) % l);
    a /= l;
    p *= l;
  }
  return static_cast<Elem>(r);
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::poly_mul(Elem a, Elem b) const {
  if (degree_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % ell_);
  auto da = digits(a), db = digits(b);
  std::vector<std::int64_t> r(2 * degree_ - 1, 0);
  for (int i = 0; i < degree_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < degree_; ++j) r[i + j] = (r[i + j] + static_cast<std::int64_t>(da[i]) * db[j]) % ell_;
  }
  for (int k = 2 * degree_ - 2; k >= degree_; --k) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    r[k] = 0;
    for (int i = 0; i < degree_; ++i) r[k - degree_ + i] = ((r[k - degree_ + i] - c * modulus_[i]) % ell_ + ell_) % ell_;
  }
  std::vector<int> out(degree_);
  for (int i = 0; i < degree_; ++i) out[i] = static_cast<int>(r[i]);
  return from_digits(out);
}

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= exp_.size()) s -= exp_.size();
    return exp_[s];
  }
  return poly_mul(a, b);
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t n = exp_.size();
    return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * (e % n)) % n)];
  }
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = poly_mul(r, a);
    a = poly_mul(a, a);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) domain_error("DivisionByZero", "inverse of zero in finite field");
  if (!exp_.empty()) {
    const std::uint64_t n = exp_.size();
    return exp_[(n - log_[a]) % n];
  }
  return pow(a, size_ - 2);
}

FiniteField::Elem FiniteField::frobenius(Elem a, int times) const {
  times %= degree_;
  if (times < 0) times += degree_;
  for (int i = 0; i < times; ++i) a = pow(a, static_cast<std::uint64_t>(ell_));
  return a;
}

bool FiniteField::lex_less(Elem a, Elem b) const {
  auto da = digits(a), db = digits(b);
  return da < db;
}

std::string FiniteField::to_string(Elem a) const {
  if (degree_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree_; ++i) {
    if (d[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i] << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

namespace {

// Minimal polynomial over F_ell of r, constant term first.
std::vector<int> minimal_polynomial(const FiniteField& F, FiniteField::Elem r) {
  std::vector<FiniteField::Elem> conj{r};
  for (FiniteField::Elem s = F.frobenius(r); s != r; s = F.frobenius(s)) conj.push_back(s);
  std::vector<FiniteField::Elem> p{1};
  for (auto c : conj) {
    std::vector<FiniteField::Elem> np(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      np[i + 1] = F.add(np[i + 1], p[i]);
      np[i] = F.sub(np[i], F.mul(c, p[i]));
    }
    p = std::move(np);
  }
  std::vector<int> out;
  for (auto c : p) {
    if (!F.in_prime_field(c)) internal_error("minimal polynomial not over the prime field");
    out.push_back(static_cast<int>(c));
  }
  return out;
}

}  // namespace

EmbeddingSpec EmbeddingSpec::make(std::int64_t ell, std::int64_t conductor, std::int64_t twist) {
  if (!is_prime(static_cast<std::uint64_t>(ell))) domain_error("NotPrime", std::to_string(ell) + " is not prime");
  if (conductor < 1) domain_error("InvalidConductor", "conductor must be positive");
  EmbeddingSpec e;
  e.ell = ell;
  e.conductor = conductor;
  e.m = ell_prime_part(conductor, ell);
  if (gcd64(twist, e.m) != 1) domain_error("NotCoprime", "embedding exponent " + std::to_string(twist) + " is not coprime to " + std::to_string(e.m));
  e.twist = ((twist % e.m) + e.m) % e.m;
  if (e.m == 1) e.twist = 1;
  const int d = e.m == 1 ? 1 : static_cast<int>(multiplicative_order(ell, e.m));
  e.field = FiniteField::get(ell, d);
  const FiniteField& F = *e.field;
  FiniteField::Elem beta = 1;
  if (e.m > 1) {
    const FiniteField::Elem b0 = F.pow(F.primitive_element(), (F.size() - 1) / e.m);
    std::vector<int> best_poly;
    bool have = false;
    for (std::int64_t k = 1; k < e.m; ++k) {
      if (gcd64(k, e.m) != 1) continue;
      FiniteField::Elem r = F.pow(b0, k);
      auto mp = minimal_polynomial(F, r);
      if (!have || mp < best_poly || (mp == best_poly && F.lex_less(r, beta))) {
        best_poly = std::move(mp);
        beta = r;
        have = true;
      }
    }
    beta = F.pow(beta, e.twist);
  }
  e.root = beta;
  const std::int64_t a_part = conductor / e.m;
  const std::int64_t tprime = e.m == 1 ? 0 : mod_inverse(a_part % e.m, e.m);
  e.zeta_images.resize(conductor);
  for (std::int64_t k = 0; k < conductor; ++k) {
    e.zeta_images[k] = e.m == 1 ? 1 : F.pow(beta, static_cast<std::uint64_t>((k % e.m) * tprime % e.m));
  }
  return e;
}

FiniteField::Elem reduce_raw(const CycloNum& x, const EmbeddingSpec& emb) {
  const std::int64_t n = x.conductor();
  if (emb.conductor % n != 0) {
    domain_error("ConductorMismatch", "conductor " + std::to_string(n) + " does not divide embedding conductor " + std::to_string(emb.conductor));
  }
  const FiniteField& F = *emb.field;
  const std::int64_t step = emb.conductor / n;
  const Integer ell(static_cast<long>(emb.ell));
  FiniteField::Elem acc = 0;
  const auto& c = x.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) == 0) continue;
    Integer den = c[j].get_den();
    Integer num = c[j].get_num();
    if (den % ell == 0) domain_error("NotEllIntegral", x.to_string() + " is not " + std::to_string(emb.ell) + "-integral");
    Integer nr = num % ell;
    if (nr < 0) nr += ell;
    Integer dr = den % ell;
    const std::int64_t v = static_cast<std::int64_t>(nr.get_si()) * mod_inverse(dr.get_si(), emb.ell) % emb.ell;
    if (v == 0) continue;
    acc = F.add(acc, F.mul(F.from_int(v), emb.zeta_images[(static_cast<std::int64_t>(j) * step) % emb.conductor]));
  }
  return acc;
}

FqElem reduce_mod(const CycloNum& x, const EmbeddingSpec& emb) { return {emb.field, reduce_raw(x, emb)}; }

std::int64_t sigma_hat_exponent(std::int64_t n, std::int64_t ell) {
  const std::int64_t m = ell_prime_part(n, ell);
  const std::int64_t a = n / m;
  if (m == 1) return 1;
  // t = 1 + a*s with 1 + a*s = ell (mod m)
  const std::int64_t s = ((ell - 1) % m + m) % m * mod_inverse(a % m, m) % m;
  std::int64_t t = (1 + a * s) % n;
  if (t == 0) t = n;
  return t;
}

}  // namespace mfb

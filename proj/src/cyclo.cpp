#include "mfblocks/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mfblocks/error.hpp"

namespace mfb {

namespace {

struct ConductorData {
  std::int64_t phi;
  std::vector<std::vector<long>> powers;  // zeta^k, k in [0, n)
};

const ConductorData& conductor_data(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, std::unique_ptr<ConductorData>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto data = std::make_unique<ConductorData>();
    const std::int64_t phi = euler_phi(n);
    data->phi = phi;
    IntPoly cp = cyclotomic_poly(n);
    std::vector<long> phi_coeffs(cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) phi_coeffs[i] = cp[i].get_si();
    std::vector<long> cur(static_cast<std::size_t>(phi), 0);
    cur[0] = 1;
    data->powers.reserve(static_cast<std::size_t>(n));
    for (std::int64_t k = 0; k < n; ++k) {
      data->powers.push_back(cur);
      // multiply by zeta and reduce by the monic Phi_n
      long top = cur[phi - 1];
      for (std::int64_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::int64_t i = 0; i < phi; ++i) cur[i] -= top * phi_coeffs[i];
      }
    }
    slot = std::move(data);
  }
  return *slot;
}

// Reduce sum_k acc[k] zeta_n^k (k in [0, n)) to power-basis coordinates.
std::vector<Rational> reduce_exponents(std::int64_t n, const std::vector<Rational>& acc) {
  const auto& data = conductor_data(n);
  std::vector<Rational> out(static_cast<std::size_t>(data.phi));
  for (std::int64_t k = 0; k < n; ++k) {
    if (acc[k] == 0) continue;
    const auto& row = data.powers[k];
    for (std::int64_t j = 0; j < data.phi; ++j) {
      if (row[j] != 0) out[j] += acc[k] * row[j];
    }
  }
  return out;
}

// Solve A y = b over Q for a consistent system with full column rank.
// A is given column-major as cols[j][i].
std::vector<Rational> solve_exact(std::vector<std::vector<Rational>> cols, std::vector<Rational> rhs) {
  const std::size_t rows = rhs.size(), ncols = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(ncols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
    m[i][ncols] = rhs[i];
  }
  std::vector<std::size_t> pivot_row(ncols);
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) internal_error("singular system in cyclotomic solve");
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= ncols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_row[c] = r++;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][ncols] != 0) internal_error("inconsistent system in cyclotomic solve");
  }
  std::vector<Rational> y(ncols);
  for (std::size_t c = 0; c < ncols; ++c) y[c] = m[pivot_row[c]][ncols];
  return y;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

const std::vector<std::vector<long>>& cyclo_power_table(std::int64_t n) { return conductor_data(n).powers; }

CycloNum::CycloNum() : n_(1), coeffs_(1), minimal_(true) {}

CycloNum::CycloNum(long v) : n_(1), coeffs_{Rational(v)}, minimal_(true) {}

CycloNum::CycloNum(Rational v) : n_(1), coeffs_{std::move(v)}, minimal_(true) { coeffs_[0].canonicalize(); }

CycloNum::CycloNum(std::int64_t n, std::vector<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) domain_error("BadConductor", "conductor must be positive");
  if (static_cast<std::int64_t>(coeffs_.size()) != euler_phi(n)) {
    schema_error("CycloNum with conductor " + std::to_string(n) + " needs " + std::to_string(euler_phi(n)) +
                 " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (auto& c : coeffs_) c.canonicalize();
}

CycloNum CycloNum::root_of_unity(std::int64_t n, std::int64_t k) {
  if (n < 1) domain_error("BadConductor", "conductor must be positive");
  const auto& data = conductor_data(n);
  const auto& row = data.powers[positive_mod(k, n)];
  std::vector<Rational> c(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) c[i] = row[i];
  return CycloNum(n, std::move(c));
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rational CycloNum::rational_value() const {
  if (!is_rational()) domain_error("NotRational", "value " + to_string() + " is not rational");
  return coeffs_[0];
}

CycloNum CycloNum::lift(std::int64_t m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) internal_error("lift to a conductor that is not a multiple");
  if (is_rational()) {
    std::vector<Rational> c(static_cast<std::size_t>(euler_phi(m)));
    c[0] = coeffs_[0];
    return CycloNum(m, std::move(c));
  }
  const std::int64_t step = m / n_;
  std::vector<Rational> acc(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) acc[j * step] = coeffs_[j];
  CycloNum out;
  out.n_ = m;
  out.coeffs_ = reduce_exponents(m, acc);
  out.minimal_ = false;
  return out;
}

CycloNum CycloNum::galois_power(std::int64_t t) const {
  if (std::gcd(positive_mod(t, n_), n_) != 1 && n_ > 1) {
    domain_error("NotCoprime", "galois_power(" + std::to_string(t) + ") needs gcd(t, " + std::to_string(n_) + ") = 1");
  }
  if (n_ <= 2 || is_rational()) return *this;
  const std::int64_t tt = positive_mod(t, n_);
  std::vector<Rational> acc(static_cast<std::size_t>(n_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != 0) acc[(static_cast<std::int64_t>(j) * tt) % n_] += coeffs_[j];
  }
  CycloNum out;
  out.n_ = n_;
  out.coeffs_ = reduce_exponents(n_, acc);
  out.minimal_ = minimal_;
  return out;
}

CycloNum CycloNum::normalized() const {
  if (minimal_) return *this;
  if (is_rational()) return CycloNum(coeffs_[0]);
  for (auto c : divisors(n_)) {
    if (c == n_) break;
    if (c % 4 == 2) continue;  // Q(zeta_c) = Q(zeta_{c/2})
    bool fixed = true;
    for (std::int64_t t = 1; t < n_ && fixed; ++t) {
      if (std::gcd(t, n_) != 1 || t % c != 1 % c) continue;
      if (galois_power(t).coeffs_ != coeffs_) fixed = false;
    }
    if (!fixed) continue;
    const std::int64_t phi_c = euler_phi(c);
    std::vector<std::vector<Rational>> cols;
    cols.reserve(static_cast<std::size_t>(phi_c));
    for (std::int64_t i = 0; i < phi_c; ++i) cols.push_back(root_of_unity(c, i).lift(n_).coeffs_);
    CycloNum out(c, solve_exact(std::move(cols), coeffs_));
    out.minimal_ = true;
    return out;
  }
  CycloNum out = *this;
  out.minimal_ = true;
  return out;
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
  const std::int64_t m = lcm64(a.n_, b.n_);
  CycloNum x = a.lift(m);
  const CycloNum y = b.lift(m);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  x.minimal_ = m == 1;
  return x;
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

CycloNum CycloNum::scaled(const Rational& r) const {
  CycloNum out = *this;
  Rational rr = r;
  rr.canonicalize();
  for (auto& c : out.coeffs_) c *= rr;
  if (rr == 0) out.minimal_ = n_ == 1;
  return out;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  if (a.is_rational()) return b.scaled(a.coeffs_[0]);
  if (b.is_rational()) return a.scaled(b.coeffs_[0]);
  const std::int64_t m = lcm64(a.n_, b.n_);
  const CycloNum x = a.lift(m), y = b.lift(m);
  std::vector<Rational> acc(static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      acc[(i + j) % static_cast<std::size_t>(m)] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  CycloNum out;
  out.n_ = m;
  out.coeffs_ = reduce_exponents(m, acc);
  out.minimal_ = false;
  return out;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) domain_error("DivisionByZero", "division by zero in Q(zeta_n)");
  if (is_rational()) return CycloNum(Rational(1 / coeffs_[0]));
  // Solve x * y = 1 with y unknown: columns are x * zeta^i.
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    cols.push_back((*this * root_of_unity(n_, static_cast<std::int64_t>(i))).lift(n_).coeffs_);
  }
  std::vector<Rational> rhs(coeffs_.size());
  rhs[0] = 1;
  return CycloNum(n_, solve_exact(std::move(cols), std::move(rhs)));
}

CycloNum operator/(const CycloNum& a, const CycloNum& b) {
  if (b.is_zero()) domain_error("DivisionByZero", "division by zero in Q(zeta_n)");
  if (b.is_rational()) return a.scaled(1 / b.coeffs_[0]);
  return a * b.inverse();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  if (a.n_ == b.n_) return a.coeffs_ == b.coeffs_;
  if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
  const std::int64_t m = lcm64(a.n_, b.n_);
  return a.lift(m).coeffs_ == b.lift(m).coeffs_;
}

std::strong_ordering operator<=>(const CycloNum& a, const CycloNum& b) {
  const CycloNum x = a.normalized(), y = b.normalized();
  if (x.n_ != y.n_) return x.n_ <=> y.n_;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << n_;
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace mfb

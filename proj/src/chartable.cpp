#include "mfblocks/chartable.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "mfblocks/error.hpp"
#include "mfblocks/numtheory.hpp"

namespace mfb {

namespace {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

std::int64_t md(std::int64_t a, std::int64_t r) {
  a %= r;
  return a < 0 ? a + r : a;
}

std::int64_t inv_r(std::int64_t a, std::int64_t r) { return mod_inverse(md(a, r), r); }

// Row-reduced echelon basis of a subspace of F_r^k.
struct Space {
  Mat rows;
  std::vector<int> pivots;
};

Space rref(Mat rows, std::int64_t r) {
  Space s;
  if (rows.empty()) return s;
  const int k = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < k && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t iv = inv_r(rows[rank][col], r);
    for (auto& x : rows[rank]) x = x * iv % r;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::int64_t f = rows[i][col];
      for (int c = 0; c < k; ++c) rows[i][c] = md(rows[i][c] - f * rows[rank][c], r);
    }
    s.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  s.rows = std::move(rows);
  return s;
}

// Null space of a square matrix A over F_r, as row vectors.
Mat null_space(Mat A, std::int64_t r) {
  const int n = static_cast<int>(A.size());
  std::vector<int> pivcol;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i) {
      if (A[i][col] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(A[piv], A[rank]);
    const std::int64_t iv = inv_r(A[rank][col], r);
    for (auto& x : A[rank]) x = x * iv % r;
    for (int i = 0; i < n; ++i) {
      if (i == rank || A[i][col] == 0) continue;
      const std::int64_t f = A[i][col];
      for (int c = 0; c < n; ++c) A[i][c] = md(A[i][c] - f * A[rank][c], r);
    }
    pivcol.push_back(col);
    ++rank;
  }
  std::vector<char> is_piv(n, 0);
  for (int c : pivcol) is_piv[c] = 1;
  Mat out;
  for (int free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (int i = 0; i < rank; ++i) v[pivcol[i]] = md(-A[i][free], r);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial via reduction to Hessenberg form; coefficients
// constant term first, monic.
Vec charpoly(Mat H, std::int64_t r) {
  const int n = static_cast<int>(H.size());
  for (int m = 1; m < n - 1; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i) {
      if (H[i][m - 1] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != m) {
      std::swap(H[piv], H[m]);
      for (int i = 0; i < n; ++i) std::swap(H[i][piv], H[i][m]);
    }
    const std::int64_t iv = inv_r(H[m][m - 1], r);
    for (int i = m + 1; i < n; ++i) {
      const std::int64_t u = H[i][m - 1] * iv % r;
      if (u == 0) continue;
      for (int j = 0; j < n; ++j) H[i][j] = md(H[i][j] - u * H[m][j], r);
      for (int j = 0; j < n; ++j) H[j][m] = (H[j][m] + u * H[j][i]) % r;
    }
  }
  // p_0 = 1; p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<Vec> p(n + 1);
  p[0] = Vec{1};
  for (int m = 1; m <= n; ++m) {
    Vec cur(m + 1, 0);
    for (int d = 0; d < m; ++d) {
      cur[d + 1] = (cur[d + 1] + p[m - 1][d]) % r;
      cur[d] = md(cur[d] - H[m - 1][m - 1] * p[m - 1][d], r);
    }
    std::int64_t t = 1;
    for (int i = m - 1; i >= 1; --i) {
      t = t * H[i][i - 1] % r;
      const std::int64_t c = H[i - 1][m - 1] * t % r;
      if (c == 0) continue;
      for (int d = 0; d < static_cast<int>(p[i - 1].size()); ++d) cur[d] = md(cur[d] - c * p[i - 1][d], r);
    }
    p[m] = std::move(cur);
  }
  return p[n];
}

std::vector<std::int64_t> roots_mod(const Vec& poly, std::int64_t r) {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < r; ++x) {
    std::int64_t acc = 0;
    for (int d = static_cast<int>(poly.size()) - 1; d >= 0; --d) acc = (acc * x + poly[d]) % r;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

// An algebraic integer in Z[zeta_N] written as a sum of N-th roots of unity.
struct RootSum {
  std::vector<std::pair<int, long>> terms;  // (exponent mod N, multiplicity)
};

RootSum to_root_sum(const CycloNum& x, std::int64_t N) {
  RootSum s;
  const std::int64_t n = x.conductor();
  const std::int64_t step = N / n;
  const auto& c = x.coeffs();
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (sgn(c[t]) == 0) continue;
    if (c[t].get_den() != 1 || !c[t].get_num().fits_slong_p()) {
      throw Error(ErrorCategory::Schema, "OrthogonalityFailure", "character value " + x.to_string() + " is not an algebraic integer");
    }
    s.terms.emplace_back(static_cast<int>(static_cast<std::int64_t>(t) * step % N), c[t].get_num().get_si());
  }
  return s;
}

std::string class_label(std::int64_t order, int ordinal) {
  std::string s = std::to_string(order);
  std::string suffix;
  int v = ordinal;
  do {
    suffix.insert(suffix.begin(), static_cast<char>('a' + v % 26));
    v = v / 26 - 1;
  } while (v >= 0);
  return s + suffix;
}

void beta_recurse(std::vector<int>& beta, const std::vector<int>& mu, std::size_t idx,
                  std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo, Integer& out) {
  if (idx == mu.size()) {
    out = 1;
    return;
  }
  auto key = std::make_pair(beta, idx);
  auto it = memo.find(key);
  if (it != memo.end()) {
    out = it->second;
    return;
  }
  Integer total = 0;
  const int h = mu[idx];
  std::vector<char> occ;
  int mx = beta.empty() ? 0 : *std::max_element(beta.begin(), beta.end());
  occ.assign(mx + 1, 0);
  for (int b : beta) occ[b] = 1;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int nb = b - h;
    if (nb < 0 || occ[nb]) continue;
    int between = 0;
    for (int x = nb + 1; x < b; ++x) between += occ[x];
    beta[i] = nb;
    Integer sub;
    beta_recurse(beta, mu, idx + 1, memo, sub);
    beta[i] = b;
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.emplace(std::move(key), total);
  out = total;
}

}  // namespace

std::int64_t dixon_prime(std::int64_t order, std::int64_t exponent) {
  for (std::int64_t r = exponent + 1;; r += exponent) {
    if (r * r > 4 * order && is_prime(static_cast<std::uint64_t>(r))) return r;
  }
}

std::vector<std::vector<std::vector<std::int64_t>>> class_multiplication_coefficients(const PermGroup& G) {
  const int k = G.num_classes();
  std::vector<std::vector<std::vector<std::int64_t>>> a(k, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0)));
  for (int l = 0; l < k; ++l) {
    const int g = G.classes().reps[l];
    for (int x = 0; x < G.order(); ++x) {
      const int j = G.class_of(x);
      const int i = G.class_of(G.mul(G.inv(x), g));
      ++a[j][i][l];
    }
  }
  return a;
}

void sort_rows(std::vector<std::vector<CycloNum>>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const std::vector<CycloNum>& x, const std::vector<CycloNum>& y) {
    const Rational dx = x[0].rational_value(), dy = y[0].rational_value();
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
}

CharacterTable dixon_schneider(std::shared_ptr<const PermGroup> Gp) {
  const PermGroup& G = *Gp;
  const int k = G.num_classes();
  const std::int64_t order = G.order();
  const std::int64_t e = G.exponent();
  const std::int64_t r = dixon_prime(order, e);
  auto a = class_multiplication_coefficients(G);
  for (auto& M : a)
    for (auto& row : M)
      for (auto& x : row) x %= r;

  std::vector<Space> done;
  std::vector<Space> todo;
  {
    Mat id(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) id[i][i] = 1;
    Space s = rref(id, r);
    if (k == 1) done.push_back(s);
    else todo.push_back(s);
  }
  for (int j = 1; j < k && !todo.empty(); ++j) {
    const auto& M = a[j];
    std::vector<Space> next;
    for (auto& S : todo) {
      const int d = static_cast<int>(S.rows.size());
      // R[t][s] = (M b_s)[p_t]
      Mat R(d, Vec(d, 0));
      for (int s = 0; s < d; ++s) {
        const auto& b = S.rows[s];
        for (int t = 0; t < d; ++t) {
          const int i = S.pivots[t];
          std::int64_t acc = 0;
          for (int l = 0; l < k; ++l) acc = (acc + M[i][l] * b[l]) % r;
          R[t][s] = acc;
        }
      }
      auto roots = roots_mod(charpoly(R, r), r);
      if (roots.size() == 1) {
        next.push_back(std::move(S));
        continue;
      }
      int total = 0;
      for (auto lam : roots) {
        Mat A = R;
        for (int t = 0; t < d; ++t) A[t][t] = md(A[t][t] - lam, r);
        Mat ns = null_space(A, r);
        Mat full;
        for (const auto& c : ns) {
          Vec v(k, 0);
          for (int s = 0; s < d; ++s) {
            if (c[s] == 0) continue;
            for (int l = 0; l < k; ++l) v[l] = (v[l] + c[s] * S.rows[s][l]) % r;
          }
          full.push_back(std::move(v));
        }
        Space sub = rref(std::move(full), r);
        total += static_cast<int>(sub.rows.size());
        if (sub.rows.size() == 1) done.push_back(std::move(sub));
        else next.push_back(std::move(sub));
      }
      if (total != d) internal_error("class matrix is not diagonalizable modulo " + std::to_string(r));
    }
    todo = std::move(next);
  }
  if (!todo.empty() || static_cast<int>(done.size()) != k) internal_error("eigenspace splitting did not separate all characters");

  const std::int64_t w = primitive_root(r);
  std::vector<std::int64_t> inv_class(k);
  for (int l = 0; l < k; ++l) inv_class[l] = G.inverse_class(l);

  std::vector<std::vector<CycloNum>> rows;
  for (const auto& S : done) {
    Vec omega = S.rows[0];
    const std::int64_t s0 = omega[0];
    if (s0 == 0) internal_error("central character vanishes on the identity class");
    const std::int64_t is0 = inv_r(s0, r);
    for (auto& x : omega) x = x * is0 % r;
    std::int64_t s = 0;
    for (int l = 0; l < k; ++l) {
      s = (s + omega[l] * omega[inv_class[l]] % r * inv_r(G.classes().sizes[l], r)) % r;
    }
    const std::int64_t deg2 = md(order % r * inv_r(s, r), r);
    std::int64_t deg = -1;
    for (std::int64_t f = 1; 2 * f < r; ++f) {
      if (f * f % r == deg2) {
        deg = f;
        break;
      }
    }
    if (deg < 0 || order % deg != 0) internal_error("degree recovery failed");
    Vec chi(k);
    for (int l = 0; l < k; ++l) chi[l] = deg % r * omega[l] % r * inv_r(G.classes().sizes[l], r) % r;

    std::vector<CycloNum> row(k);
    for (int l = 0; l < k; ++l) {
      const int rep = G.classes().reps[l];
      const std::int64_t o = G.element_order(rep);
      const std::int64_t z = static_cast<std::int64_t>(mod_pow(w, (r - 1) / o, r));
      Vec vals(o);
      for (std::int64_t t = 0; t < o; ++t) vals[t] = chi[G.power_class(l, t)];
      const auto& table = cyclo_power_table(o);
      std::vector<Integer> coeffs(euler_phi(o), 0);
      const std::int64_t io = inv_r(o, r);
      const std::int64_t zinv = inv_r(z, r);
      for (std::int64_t j = 0; j < o; ++j) {
        // m_j = (1/o) sum_t chi(g^t) z^(-jt)
        const std::int64_t step = static_cast<std::int64_t>(mod_pow(zinv, j, r));
        std::int64_t acc = 0, zp = 1;
        for (std::int64_t t = 0; t < o; ++t) {
          acc = (acc + vals[t] * zp) % r;
          zp = zp * step % r;
        }
        const std::int64_t m = acc * io % r;
        if (m > deg) internal_error("eigenvalue multiplicity out of range");
        if (m == 0) continue;
        for (std::size_t c = 0; c < coeffs.size(); ++c) coeffs[c] += Integer(static_cast<long>(m * table[j][c]));
      }
      std::vector<Rational> q(coeffs.begin(), coeffs.end());
      row[l] = CycloNum(o, std::move(q)).normalized();
    }
    rows.push_back(std::move(row));
  }
  sort_rows(rows);

  std::vector<ClassInfo> classes;
  std::map<std::int64_t, int> seen_orders;
  for (int l = 0; l < k; ++l) {
    ClassInfo c;
    const int rep = G.classes().reps[l];
    c.rep = G.element(rep);
    c.size = G.classes().sizes[l];
    c.element_order = G.element_order(rep);
    c.label = class_label(c.element_order, seen_orders[c.element_order]++);
    classes.push_back(std::move(c));
  }
  return CharacterTable(order, e, std::move(classes), std::move(rows), std::move(Gp));
}

CharacterTable::CharacterTable(std::int64_t order, std::int64_t exponent, std::vector<ClassInfo> classes,
                               std::vector<std::vector<CycloNum>> chars, std::shared_ptr<const PermGroup> group)
    : order_(order), exponent_(exponent), classes_(std::move(classes)), chars_(std::move(chars)), group_(std::move(group)) {
  verify();
}

bool CharacterTable::is_rational_row(int chi) const {
  for (const auto& v : chars_[chi]) {
    if (!v.is_rational()) return false;
  }
  return true;
}

void CharacterTable::verify() {
  auto fail = [](const std::string& msg) { throw Error(ErrorCategory::Schema, "OrthogonalityFailure", msg); };
  const int k = num_classes();
  if (order_ < 1 || exponent_ < 1) schema_error("order and exponent must be positive");
  if (k == 0) schema_error("table has no classes");
  if (static_cast<int>(chars_.size()) != k) schema_error("table is not square");
  std::int64_t total = 0;
  for (const auto& c : classes_) {
    if (c.size < 1 || order_ % c.size != 0) fail("class size " + std::to_string(c.size) + " does not divide the group order");
    total += c.size;
  }
  if (total != order_) fail("class sizes do not sum to the group order");
  if (classes_[0].size != 1) schema_error("first class must be the identity class");
  for (const auto& row : chars_) {
    if (static_cast<int>(row.size()) != k) schema_error("character row has wrong length");
    for (const auto& v : row) {
      if (exponent_ % v.conductor() != 0 && exponent_ % v.normalized().conductor() != 0) {
        schema_error("entry " + v.to_string() + " does not lie in Q(zeta_" + std::to_string(exponent_) + ")");
      }
    }
  }
  degrees_.clear();
  Integer sumsq = 0;
  for (const auto& row : chars_) {
    if (!row[0].is_rational()) fail("degree is not rational");
    Rational d = row[0].rational_value();
    if (d.get_den() != 1 || d <= 0 || !d.get_num().fits_slong_p()) fail("degree is not a positive integer");
    const std::int64_t deg = d.get_num().get_si();
    if (order_ % deg != 0) fail("degree " + std::to_string(deg) + " does not divide the group order");
    degrees_.push_back(deg);
    sumsq += Integer(static_cast<long>(deg)) * deg;
  }
  if (sumsq != Integer(static_cast<long>(order_))) fail("sum of squared degrees differs from the group order");
  trivial_ = -1;
  for (int i = 0; i < k && trivial_ < 0; ++i) {
    bool all_one = true;
    for (const auto& v : chars_[i]) all_one = all_one && v == CycloNum(1);
    if (all_one) trivial_ = i;
  }
  if (trivial_ < 0) fail("no trivial character");

  // entries as sums of roots of unity at conductor N
  const std::int64_t N = exponent_;
  std::vector<std::vector<RootSum>> rs(k, std::vector<RootSum>(k));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < k; ++l) rs[i][l] = to_root_sum(chars_[i][l].normalized().lift(N), N);

  const auto& table = cyclo_power_table(N);
  const std::size_t phi = static_cast<std::size_t>(euler_phi(N));
  std::vector<long> acc(N);
  auto reduce_equals = [&](std::int64_t expect) {
    std::vector<long> coords(phi, 0);
    for (std::int64_t j = 0; j < N; ++j) {
      if (acc[j] == 0) continue;
      for (std::size_t c = 0; c < phi; ++c) coords[c] += acc[j] * table[j][c];
    }
    if (coords[0] != expect) return false;
    for (std::size_t c = 1; c < phi; ++c)
      if (coords[c] != 0) return false;
    return true;
  };
  auto accumulate = [&](const RootSum& x, const RootSum& y, long weight) {
    for (const auto& [ex, cx] : x.terms)
      for (const auto& [ey, cy] : y.terms) {
        std::int64_t idx = (ex - ey) % N;
        if (idx < 0) idx += N;
        acc[idx] += weight * cx * cy;
      }
  };
  for (int i = 0; i < k; ++i) {
    for (int j = i; j < k; ++j) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int l = 0; l < k; ++l) accumulate(rs[i][l], rs[j][l], classes_[l].size);
      if (!reduce_equals(i == j ? order_ : 0)) {
        fail("row orthogonality fails for characters " + std::to_string(i) + " and " + std::to_string(j));
      }
    }
  }
  for (int l = 0; l < k; ++l) {
    for (int m = l; m < k; ++m) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int i = 0; i < k; ++i) accumulate(rs[i][l], rs[i][m], 1);
      if (!reduce_equals(l == m ? order_ / classes_[l].size : 0)) {
        fail("column orthogonality fails for classes " + std::to_string(l) + " and " + std::to_string(m));
      }
    }
  }
  inverse_class_.assign(k, -1);
  for (int l = 0; l < k; ++l) {
    for (int m = 0; m < k && inverse_class_[l] < 0; ++m) {
      bool match = true;
      for (int i = 0; i < k && match; ++i) match = chars_[i][m] == chars_[i][l].conj();
      if (match) inverse_class_[l] = m;
    }
    if (inverse_class_[l] < 0) fail("no column is the complex conjugate of class " + std::to_string(l));
  }
  if (group_) {
    if (group_->order() != order_ || group_->num_classes() != k) schema_error("attached group does not match the table");
    for (int l = 0; l < k; ++l) {
      if (group_->classes().sizes[l] != classes_[l].size) schema_error("attached group class order does not match");
    }
  }
}

bool operator==(const CharacterTable& a, const CharacterTable& b) {
  if (a.order_ != b.order_ || a.exponent_ != b.exponent_ || a.classes_.size() != b.classes_.size()) return false;
  for (std::size_t i = 0; i < a.classes_.size(); ++i) {
    const auto& x = a.classes_[i];
    const auto& y = b.classes_[i];
    if (x.label != y.label || x.size != y.size || x.rep != y.rep || x.element_order != y.element_order) return false;
  }
  return a.chars_ == b.chars_;
}

Integer mn_value(const std::vector<int>& lambda, const std::vector<int>& mu) {
  long n1 = 0, n2 = 0;
  for (int x : lambda) n1 += x;
  for (int x : mu) n2 += x;
  if (n1 != n2) domain_error("SizeMismatch", "partition and cycle type have different sizes");
  const int r = static_cast<int>(lambda.size());
  std::vector<int> beta(r);
  for (int i = 0; i < r; ++i) beta[i] = lambda[i] + (r - 1 - i);
  std::vector<int> m = mu;
  std::sort(m.begin(), m.end(), std::greater<int>());
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  Integer out;
  beta_recurse(beta, m, 0, memo, out);
  return out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<int>());
  return out;
}

}  // namespace mfb

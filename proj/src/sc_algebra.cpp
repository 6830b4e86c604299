#include "mfblocks/sc_algebra.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "mfblocks/error.hpp"

namespace mfb {

namespace {

using Elem = FiniteField::Elem;

Vec vec_from_json(const FiniteField& F, const json& j) {
  if (!j.is_array()) schema_error("field element must be a coefficient list");
  auto d = j.get<std::vector<int>>();
  if (static_cast<int>(d.size()) != F.degree()) schema_error("field element has the wrong number of coefficients");
  for (int c : d)
    if (c < 0 || c >= F.ell()) schema_error("field coefficient out of range");
  return Vec{F.from_digits(d)};
}

Elem elem_from_json(const FiniteField& F, const json& j) { return vec_from_json(F, j)[0]; }

json elem_to_json(const FiniteField& F, Elem x) { return F.digits(x); }

// Row reduction over F_ell of vectors in F_q^m written as d*m digits.
struct EllSpan {
  std::int64_t ell;
  std::vector<std::vector<int>> rows;  // reduced echelon form
  std::vector<int> pivots;

  std::vector<int> reduce(std::vector<int> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const int p = pivots[r];
      const int c = v[p];
      if (!c) continue;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(((v[i] - c * rows[r][i]) % ell + ell) % ell);
    }
    return v;
  }
  // Adds v; false if v was already in the span.
  bool insert(std::vector<int> v) {
    v = reduce(std::move(v));
    int p = -1;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) {
        p = static_cast<int>(i);
        break;
      }
    if (p < 0) return false;
    const int inv = static_cast<int>(mod_inverse(v[p], ell));
    for (auto& x : v) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % ell);
    for (auto& r : rows) {
      const int c = r[p];
      if (!c) continue;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<int>(((r[i] - c * v[i]) % ell + ell) % ell);
    }
    rows.push_back(v);
    pivots.push_back(p);
    // keep rows ordered by pivot so the form is canonical
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<std::vector<int>> r2;
    std::vector<int> p2;
    for (auto i : order) {
      r2.push_back(rows[i]);
      p2.push_back(pivots[i]);
    }
    rows = std::move(r2);
    pivots = std::move(p2);
    return true;
  }
};

std::vector<int> digits_of(const FiniteField& F, const Vec& v) {
  std::vector<int> out;
  for (Elem x : v) {
    auto d = F.digits(x);
    out.insert(out.end(), d.begin(), d.end());
  }
  return out;
}

// Solves y * S = v for y (S rows F_q-independent); nullopt if v is outside the span.
std::optional<Vec> coords_in(const FiniteField& F, const Mat& S, const Vec& v) {
  const int r = static_cast<int>(S.size()), m = static_cast<int>(v.size());
  // augmented transpose: m equations, r unknowns
  Mat A(m, Vec(r + 1));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < r; ++j) A[i][j] = S[j][i];
    A[i][r] = v[i];
  }
  int row = 0;
  std::vector<int> piv;
  for (int col = 0; col < r && row < m; ++col) {
    int p = -1;
    for (int i = row; i < m; ++i)
      if (A[i][col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[row]);
    const Elem inv = F.inv(A[row][col]);
    for (auto& x : A[row]) x = F.mul(x, inv);
    for (int i = 0; i < m; ++i) {
      if (i == row || !A[i][col]) continue;
      const Elem c = A[i][col];
      for (int j = 0; j <= r; ++j) A[i][j] = F.sub(A[i][j], F.mul(c, A[row][j]));
    }
    piv.push_back(col);
    ++row;
  }
  for (int i = row; i < m; ++i)
    if (A[i][r]) return std::nullopt;
  Vec y(r, 0);
  for (int i = 0; i < row; ++i) y[piv[i]] = A[i][r];
  return y;
}

class FormSearch {
 public:
  FormSearch(const SCAlgebra& A, std::int64_t bound) : A_(A), F_(*A.field()), bound_(bound) {}

  std::optional<Mat> run() {
    Mat S{A_.unit()};
    if (!close(S)) return std::nullopt;
    return dfs(S);
  }

 private:
  // F_ell-algebra closure of S; false when it stops being F_q-independent.
  bool close(Mat& S) {
    for (std::size_t i = 0; i < S.size(); ++i) {
      for (std::size_t j = 0; j < S.size(); ++j) {
        for (;;) {
          const Vec p = A_.mul(S[i], S[j]);
          auto y = coords_in(F_, S, p);
          if (!y) {
            if (static_cast<int>(S.size()) == A_.dim()) internal_error("vector outside a full-rank span");
            S.push_back(p);
            i = 0;
            j = 0;
            continue;
          }
          for (Elem c : *y)
            if (!F_.in_prime_field(c)) return false;
          break;
        }
      }
    }
    return true;
  }

  std::optional<Mat> dfs(const Mat& S) {
    if (static_cast<int>(S.size()) == A_.dim()) return S;
    EllSpan span{F_.ell(), {}, {}};
    for (const auto& s : S) span.insert(digits_of(F_, s));
    std::vector<int> key;
    for (const auto& r : span.rows) key.insert(key.end(), r.begin(), r.end());
    if (!visited_.insert(key).second) return std::nullopt;
    std::set<std::vector<int>> tried;
    const int m = A_.dim();
    const std::uint64_t q = F_.size();
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    Vec x(m);
    for (std::uint64_t code = 1; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = 0; i < m; ++i) {
        x[i] = static_cast<Elem>(c % q);
        c /= q;
      }
      if (++nodes_ > bound_) bound_error("F_ell-form search exceeded " + std::to_string(bound_) + " candidates");
      if (coords_in(F_, S, x)) continue;
      // x and x + v, v in the current F_ell-span, generate the same closure
      auto red = span.reduce(digits_of(F_, x));
      for (int v : red)
        if (v) {
          const int inv = static_cast<int>(mod_inverse(v, F_.ell()));
          for (auto& t : red) t = static_cast<int>(static_cast<std::int64_t>(t) * inv % F_.ell());
          break;
        }
      if (!tried.insert(red).second) continue;
      Mat T = S;
      T.push_back(x);
      if (!close(T)) continue;
      if (auto r = dfs(T)) return r;
    }
    return std::nullopt;
  }

  const SCAlgebra& A_;
  const FiniteField& F_;
  std::int64_t bound_;
  std::int64_t nodes_ = 0;
  std::set<std::vector<int>> visited_;
};

}  // namespace

bool is_associative(const FiniteField& F, const std::vector<std::vector<Vec>>& c) {
  const int m = static_cast<int>(c.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        // (b_i b_j) b_k versus b_i (b_j b_k), coordinate t
        for (int t = 0; t < m; ++t) {
          Elem lhs = 0, rhs = 0;
          for (int s = 0; s < m; ++s) {
            lhs = F.add(lhs, F.mul(c[i][j][s], c[s][k][t]));
            rhs = F.add(rhs, F.mul(c[j][k][s], c[i][s][t]));
          }
          if (lhs != rhs) return false;
        }
      }
  return true;
}

SCAlgebra::SCAlgebra(FieldPtr F, std::vector<std::vector<Vec>> constants, Vec unit)
    : F_(std::move(F)), m_(static_cast<int>(constants.size())), c_(std::move(constants)), unit_(std::move(unit)) {
  if (m_ < 1) schema_error("algebra dimension must be positive");
  if (static_cast<int>(unit_.size()) != m_) schema_error("unit has the wrong length");
  for (const auto& row : c_) {
    if (static_cast<int>(row.size()) != m_) schema_error("structure constants must be dim x dim x dim");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != m_) schema_error("structure constants must be dim x dim x dim");
  }
  if (!is_associative(*F_, c_)) domain_error("NotAssociative", "structure constants are not associative");
  for (int i = 0; i < m_; ++i) {
    Vec e(m_, 0);
    e[i] = 1;
    if (mul(unit_, e) != e || mul(e, unit_) != e) domain_error("NoUnit", "the given unit is not a two-sided identity");
  }
}

Vec SCAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec out(m_, 0);
  for (int i = 0; i < m_; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < m_; ++j) {
      if (!y[j]) continue;
      const Elem xy = F_->mul(x[i], y[j]);
      for (int k = 0; k < m_; ++k)
        if (c_[i][j][k]) out[k] = F_->add(out[k], F_->mul(xy, c_[i][j][k]));
    }
  }
  return out;
}

Vec SCAlgebra::add(const Vec& x, const Vec& y) const {
  Vec out(m_);
  for (int i = 0; i < m_; ++i) out[i] = F_->add(x[i], y[i]);
  return out;
}

Vec SCAlgebra::scale(Elem a, const Vec& x) const {
  Vec out(m_);
  for (int i = 0; i < m_; ++i) out[i] = F_->mul(a, x[i]);
  return out;
}

bool SCAlgebra::constants_in_prime_field() const {
  for (const auto& r : c_)
    for (const auto& v : r)
      for (Elem x : v)
        if (!F_->in_prime_field(x)) return false;
  return true;
}

std::optional<Mat> mat_inverse(const FiniteField& F, const Mat& A) {
  const int n = static_cast<int>(A.size());
  Mat M(n, Vec(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = A[i][j];
    M[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int p = -1;
    for (int i = col; i < n; ++i)
      if (M[i][col]) {
        p = i;
        break;
      }
    if (p < 0) return std::nullopt;
    std::swap(M[p], M[col]);
    const Elem inv = F.inv(M[col][col]);
    for (auto& x : M[col]) x = F.mul(x, inv);
    for (int i = 0; i < n; ++i) {
      if (i == col || !M[i][col]) continue;
      const Elem c = M[i][col];
      for (int j = 0; j < 2 * n; ++j) M[i][j] = F.sub(M[i][j], F.mul(c, M[col][j]));
    }
  }
  Mat out(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = M[i][n + j];
  return out;
}

int mat_rank(const FiniteField& F, Mat A) {
  if (A.empty()) return 0;
  const int rows = static_cast<int>(A.size()), cols = static_cast<int>(A[0].size());
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (A[i][col]) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(A[p], A[r]);
    const Elem inv = F.inv(A[r][col]);
    for (auto& x : A[r]) x = F.mul(x, inv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !A[i][col]) continue;
      const Elem c = A[i][col];
      for (int j = 0; j < cols; ++j) A[i][j] = F.sub(A[i][j], F.mul(c, A[r][j]));
    }
    ++r;
  }
  return r;
}

namespace {

Vec vec_times_mat(const FiniteField& F, const Vec& v, const Mat& M) {
  Vec out(M.empty() ? 0 : M[0].size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = F.add(out[j], F.mul(v[i], M[i][j]));
  }
  return out;
}

}  // namespace

SCAlgebra SCAlgebra::change_basis(const Mat& B) const {
  auto Binv = mat_inverse(*F_, B);
  if (!Binv) domain_error("Singular", "basis change matrix is singular");
  std::vector<std::vector<Vec>> c(m_, std::vector<Vec>(m_));
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) c[i][j] = vec_times_mat(*F_, mul(B[i], B[j]), *Binv);
  return SCAlgebra(F_, std::move(c), vec_times_mat(*F_, unit_, *Binv));
}

SCAlgebra frobenius_twist(const SCAlgebra& A, int a) {
  if (a < 0) domain_error("NegativeTwist", "twist exponent must be nonnegative");
  const FiniteField& F = *A.field();
  auto c = A.constants();
  for (auto& r : c)
    for (auto& v : r)
      for (auto& x : v) x = F.frobenius(x, a);
  Vec u = A.unit();
  for (auto& x : u) x = F.frobenius(x, a);
  return SCAlgebra(A.field(), std::move(c), std::move(u));
}

std::optional<Mat> find_isomorphism(const SCAlgebra& A, const SCAlgebra& B, std::int64_t node_bound) {
  if (A.dim() > 3) domain_error("DimensionTooLarge", "isomorphism search is limited to dimension 3");
  if (A.dim() != B.dim() || A.field()->modulus() != B.field()->modulus() || A.field()->ell() != B.field()->ell()) {
    return std::nullopt;
  }
  const FiniteField& F = *A.field();
  const int m = A.dim();
  // Basis of A starting with the unit, so that phi(b_0) = 1_B is forced.
  Mat basis{A.unit()};
  for (int i = 0; i < m && static_cast<int>(basis.size()) < m; ++i) {
    Vec e(m, 0);
    e[i] = 1;
    Mat t = basis;
    t.push_back(e);
    if (mat_rank(F, t) == static_cast<int>(t.size())) basis = t;
  }
  const SCAlgebra A2 = A.change_basis(basis);
  const auto& c = A2.constants();
  Mat M(m);
  M[0] = B.unit();
  std::int64_t nodes = 0;
  const std::uint64_t q = F.size();
  auto image_of = [&](const Vec& v, int upto) -> std::optional<Vec> {
    for (int k = upto + 1; k < m; ++k)
      if (v[k]) return std::nullopt;
    Vec out(m, 0);
    for (int k = 0; k <= upto; ++k)
      if (v[k])
        for (int t = 0; t < m; ++t) out[t] = F.add(out[t], F.mul(v[k], M[k][t]));
    return out;
  };
  auto consistent = [&](int upto, bool final) {
    for (int i = 0; i <= upto; ++i)
      for (int j = 0; j <= upto; ++j) {
        if (i != upto && j != upto && !final) continue;
        auto lhs = image_of(c[i][j], final ? m - 1 : upto);
        if (!lhs) continue;
        if (*lhs != B.mul(M[i], M[j])) return false;
      }
    return true;
  };
  std::function<bool(int)> rec = [&](int r) -> bool {
    if (r == m) return mat_rank(F, M) == m && consistent(m - 1, true);
    std::uint64_t total = 1;
    for (int i = 0; i < m; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      if (++nodes > node_bound) bound_error("isomorphism search exceeded " + std::to_string(node_bound) + " nodes");
      Vec x(m);
      std::uint64_t cc = code;
      for (int i = 0; i < m; ++i) {
        x[i] = static_cast<Elem>(cc % q);
        cc /= q;
      }
      M[r] = x;
      Mat partial(M.begin(), M.begin() + r + 1);
      if (mat_rank(F, partial) != r + 1) continue;
      if (!consistent(r, false)) continue;
      if (rec(r + 1)) return true;
    }
    return false;
  };
  if (!consistent(0, false) || !rec(1)) return std::nullopt;
  // M maps the adapted basis; compose with the basis change back to A's basis.
  auto inv = mat_inverse(F, basis);
  Mat out(m);
  for (int i = 0; i < m; ++i) out[i] = vec_times_mat(F, (*inv)[i], M);
  return out;
}

std::optional<Mat> small_ell_form_basis(const SCAlgebra& A, std::int64_t node_bound) {
  if (A.dim() > 4) domain_error("DimensionTooLarge", "F_ell-form search is limited to dimension 4");
  if (A.constants_in_prime_field()) {
    Mat I(A.dim(), Vec(A.dim(), 0));
    for (int i = 0; i < A.dim(); ++i) I[i][i] = 1;
    return I;
  }
  return FormSearch(A, node_bound).run();
}

bool has_small_ell_form(const SCAlgebra& A, std::int64_t node_bound) { return small_ell_form_basis(A, node_bound).has_value(); }

bool Cocycle::is_valid() const {
  if (!group || !field) return false;
  const int n = static_cast<int>(group->order());
  if (static_cast<int>(values.size()) != n) return false;
  for (const auto& r : values) {
    if (static_cast<int>(r.size()) != n) return false;
    for (Elem x : r)
      if (x == 0 || x >= field->size()) return false;
  }
  // The identity for g in a generating set and all h, l gives
  // L_g L_h = gamma(g, h) L_gh for generators, and then for every g by
  // induction on word length; that is the identity everywhere.
  const FiniteField& F = *field;
  const auto gens = group->generator_indices();
  // l = parent[l] * gens[via[l]] along a breadth-first tree from the
  // identity (index 0), so rows of products h * l need no lookups
  std::vector<std::vector<int>> right(gens.size(), std::vector<int>(n));
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (int x = 0; x < n; ++x) right[s][x] = group->mul(x, gens[s]);
  std::vector<int> order{0}, parent(n, -1), via(n, -1);
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const int y = right[s][order[i]];
      if (parent[y] < 0) {
        parent[y] = order[i];
        via[y] = static_cast<int>(s);
        order.push_back(y);
      }
    }
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> hl(n);
  for (int h = 0; h < n; ++h) {
    hl[0] = h;
    for (std::size_t i = 1; i < order.size(); ++i) {
      const int l = order[i];
      hl[l] = right[via[l]][hl[parent[l]]];
    }
    for (int g : gens) {
      const auto& vgh = values[group->mul(g, h)];
      const auto& vg = values[g];
      for (int l = 0; l < n; ++l)
        if (F.mul(vg[h], vgh[l]) != F.mul(values[h][l], vg[hl[l]])) return false;
    }
  }
  return true;
}

Cocycle Cocycle::frobenius(int times) const {
  Cocycle out = *this;
  for (auto& r : out.values)
    for (auto& x : r) x = field->frobenius(x, times);
  return out;
}

Cocycle Cocycle::trivial(std::shared_ptr<const PermGroup> G, FieldPtr F) {
  if (G->order() > kMaxCocycleOrder) bound_error("cocycle tables are limited to |G| <= " + std::to_string(kMaxCocycleOrder));
  const auto n = static_cast<std::size_t>(G->order());
  return Cocycle{std::move(G), std::move(F), std::vector<std::vector<Elem>>(n, std::vector<Elem>(n, 1))};
}

SCAlgebra twisted_group_algebra(const Cocycle& gamma) {
  if (!gamma.is_valid()) domain_error("CocycleInvalid", "values do not form a 2-cocycle");
  const PermGroup& G = *gamma.group;
  const FiniteField& F = *gamma.field;
  const int n = static_cast<int>(G.order());
  std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n, Vec(n, 0)));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) c[g][h][G.mul(g, h)] = gamma.values[g][h];
  Vec unit(n, 0);
  unit[0] = F.inv(gamma.values[0][0]);
  return SCAlgebra(gamma.field, std::move(c), std::move(unit));
}

RootIsoReport monomial_root_iso_report(const Cocycle& gamma) {
  if (!gamma.is_valid()) domain_error("CocycleInvalid", "values do not form a 2-cocycle");
  const PermGroup& G = *gamma.group;
  const FiniteField& F = *gamma.field;
  const int n = static_cast<int>(G.order());
  const int d = F.degree();
  std::vector<Elem> root_of(F.size());
  for (Elem x = 0; x < F.size(); ++x) root_of[x] = F.frobenius(x, d - 1);
  auto root = [&](Elem x) { return root_of[x]; };
  RootIsoReport rep;
  // phi(u_g u_h) in k_{sigma(gamma)}G against phi(u_g) phi(u_h) in k_gamma G;
  // phi is additive and semilinear, so basis pairs decide multiplicativity
  const Cocycle sigma = gamma.frobenius(1);
  std::vector<Elem> power_of(F.size());
  for (Elem x = 0; x < F.size(); ++x) {
    Elem y = 1;
    for (std::int64_t i = 0; i < F.ell(); ++i) y = F.mul(y, x);
    power_of[x] = y;
  }
  auto ell_power = [&](Elem x) { return power_of[x]; };
  bool mult = true, twist = true;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (root(sigma.values[g][h]) != gamma.values[g][h]) mult = false;
      // constants of the twist of k_gamma G are gamma^ell at (g, h, gh)
      if (ell_power(gamma.values[g][h]) != sigma.values[g][h]) twist = false;
    }
  std::set<Elem> roots;
  for (Elem x = 0; x < F.size(); ++x) roots.insert(root(x));
  const Elem unit_b = F.inv(sigma.values[0][0]);
  rep.ring_isomorphism = mult && roots.size() == F.size() && root(unit_b) == F.inv(gamma.values[0][0]);
  bool semi = true;
  for (Elem lam = 0; lam < F.size() && semi; ++lam)
    for (Elem x = 0; x < F.size() && semi; ++x)
      if (root(F.mul(lam, x)) != F.mul(root(lam), root(x))) semi = false;
  rep.semilinear = semi;
  rep.twist_matches = twist;
  return rep;
}

RootIsoReport root_iso_report(const Cocycle& gamma) {
  if (!gamma.group) domain_error("CocycleInvalid", "cocycle has no group");
  if (gamma.group->order() > kMaxCocycleOrder) bound_error("cocycle checks are limited to |G| <= " + std::to_string(kMaxCocycleOrder));
  if (gamma.group->order() > kDenseCocycleOrder) return monomial_root_iso_report(gamma);
  const SCAlgebra A = twisted_group_algebra(gamma);
  const SCAlgebra B = twisted_group_algebra(gamma.frobenius(1));
  const FiniteField& F = *gamma.field;
  const int n = A.dim();
  const int d = F.degree();
  auto root = [&](Elem x) { return F.frobenius(x, d - 1); };  // x^(1/ell)
  auto phi = [&](const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = root(v[i]);
    return out;
  };
  RootIsoReport rep;
  bool mult = true;
  for (int g = 0; g < n && mult; ++g)
    for (int h = 0; h < n && mult; ++h) {
      Vec ug(n, 0), uh(n, 0);
      ug[g] = 1;
      uh[h] = 1;
      if (phi(B.mul(ug, uh)) != A.mul(phi(ug), phi(uh))) mult = false;
    }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(0, F.size() - 1);
  auto random_vec = [&] {
    Vec v(n);
    for (auto& x : v) x = static_cast<Elem>(pick(rng));
    return v;
  };
  for (int trial = 0; trial < 32 && mult; ++trial) {
    const Vec x = random_vec(), y = random_vec();
    if (phi(B.mul(x, y)) != A.mul(phi(x), phi(y))) mult = false;
    if (phi(B.add(x, y)) != A.add(phi(x), phi(y))) mult = false;
  }
  // the coordinate-wise root is a bijection of F_q^n since Frobenius is
  std::set<Elem> roots;
  for (Elem x = 0; x < F.size(); ++x) roots.insert(root(x));
  rep.ring_isomorphism = mult && roots.size() == F.size() && phi(B.unit()) == A.unit();
  bool semi = true;
  for (int trial = 0; trial < 32 && semi; ++trial) {
    const Vec x = random_vec();
    const Elem lam = static_cast<Elem>(pick(rng));
    if (phi(B.scale(lam, x)) != A.scale(root(lam), phi(x))) semi = false;
  }
  rep.semilinear = semi;
  rep.twist_matches = frobenius_twist(A, 1) == B;
  return rep;
}

bool verify_root_iso(const Cocycle& gamma) { return root_iso_report(gamma).ok(); }

json algebra_to_json(const SCAlgebra& A) {
  const FiniteField& F = *A.field();
  json c = json::array();
  for (const auto& r : A.constants()) {
    json row = json::array();
    for (const auto& v : r) {
      json vv = json::array();
      for (Elem x : v) vv.push_back(elem_to_json(F, x));
      row.push_back(vv);
    }
    c.push_back(row);
  }
  json u = json::array();
  for (Elem x : A.unit()) u.push_back(elem_to_json(F, x));
  return json{{"ell", F.ell()}, {"poly", F.modulus()}, {"dim", A.dim()}, {"unit", u}, {"constants", c}};
}

SCAlgebra algebra_from_json(const json& j) {
  try {
    const std::int64_t ell = j.at("ell").get<std::int64_t>();
    auto F = FiniteField::with_modulus(ell, j.at("poly").get<std::vector<int>>());
    const int m = j.at("dim").get<int>();
    if (m < 1 || m > 64) schema_error("algebra dimension out of range");
    const json& cj = j.at("constants");
    if (!cj.is_array() || static_cast<int>(cj.size()) != m) schema_error("constants must be dim x dim x dim");
    std::vector<std::vector<Vec>> c(m, std::vector<Vec>(m, Vec(m)));
    for (int a = 0; a < m; ++a) {
      if (!cj[a].is_array() || static_cast<int>(cj[a].size()) != m) schema_error("constants must be dim x dim x dim");
      for (int b = 0; b < m; ++b) {
        if (!cj[a][b].is_array() || static_cast<int>(cj[a][b].size()) != m) schema_error("constants must be dim x dim x dim");
        for (int k = 0; k < m; ++k) c[a][b][k] = elem_from_json(*F, cj[a][b][k]);
      }
    }
    const json& uj = j.at("unit");
    if (!uj.is_array() || static_cast<int>(uj.size()) != m) schema_error("unit must have dim entries");
    Vec u(m);
    for (int k = 0; k < m; ++k) u[k] = elem_from_json(*F, uj[k]);
    return SCAlgebra(F, std::move(c), std::move(u));
  } catch (const json::exception& e) {
    schema_error(std::string("algebra: ") + e.what());
  }
}

json cocycle_to_json(const Cocycle& g) {
  const PermGroup& G = *g.group;
  json elems = json::array();
  for (int i = 0; i < G.order(); ++i) elems.push_back(perm_to_json(G.element(i)));
  json vals = json::array();
  for (const auto& r : g.values) {
    json row = json::array();
    for (Elem x : r) row.push_back(elem_to_json(*g.field, x));
    vals.push_back(row);
  }
  json grp = G.name().empty() ? group_to_json(G) : json(G.name());
  return json{{"group", grp}, {"ell", g.field->ell()}, {"poly", g.field->modulus()}, {"elements", elems}, {"values", vals}};
}

Cocycle cocycle_from_json(const json& j, std::shared_ptr<const PermGroup> G) {
  try {
    if (!G) {
      const json& gj = j.at("group");
      if (gj.is_string()) {
        G = std::make_shared<const PermGroup>(resolve_group(gj.get<std::string>()));
      } else {
        G = std::make_shared<const PermGroup>(group_from_json(gj));
      }
    }
    auto F = FiniteField::with_modulus(j.at("ell").get<std::int64_t>(), j.at("poly").get<std::vector<int>>());
    const int n = static_cast<int>(G->order());
    const json& ej = j.at("elements");
    if (!ej.is_array() || static_cast<int>(ej.size()) != n) schema_error("cocycle must list every group element once");
    std::vector<int> idx;
    std::set<int> seen;
    for (const auto& e : ej) {
      int i = G->index_of(perm_from_json(e, G->degree()));
      if (i < 0 || !seen.insert(i).second) schema_error("cocycle element list is not the group");
      idx.push_back(i);
    }
    const json& vj = j.at("values");
    if (!vj.is_array() || static_cast<int>(vj.size()) != n) schema_error("cocycle values must be |G| x |G|");
    Cocycle c{G, F, std::vector<std::vector<Elem>>(n, std::vector<Elem>(n))};
    for (int a = 0; a < n; ++a) {
      if (!vj[a].is_array() || static_cast<int>(vj[a].size()) != n) schema_error("cocycle values must be |G| x |G|");
      for (int b = 0; b < n; ++b) c.values[idx[a]][idx[b]] = elem_from_json(*F, vj[a][b]);
    }
    return c;
  } catch (const json::exception& e) {
    schema_error(std::string("cocycle: ") + e.what());
  }
}

}  // namespace mfb

#pragma once

// Random associative algebras for the algebra tests.

#include <random>

#include "mfblocks/sc_algebra.hpp"

namespace testing {

using mfb::FieldPtr, mfb::FiniteField, mfb::Mat, mfb::SCAlgebra, mfb::Vec;
using Elem = FiniteField::Elem;
using Constants = std::vector<std::vector<Vec>>;

inline Vec basis_vec(int m, int i) {
  Vec v(m, 0);
  v[i] = 1;
  return v;
}

// F_q[x]/(f) for monic f = x^m + f[m-1] x^(m-1) + ... + f[0], basis 1, x, ..., x^(m-1).
inline SCAlgebra quotient_algebra(const FieldPtr& F, const std::vector<Elem>& f) {
  const int m = static_cast<int>(f.size());
  // powers x^k for k < 2m - 1 reduced mod f
  std::vector<Vec> pw;
  for (int k = 0; k < m; ++k) pw.push_back(basis_vec(m, k));
  for (int k = m; k < 2 * m - 1; ++k) {
    const Vec& p = pw.back();
    Vec s(m, 0);
    for (int i = 1; i < m; ++i) s[i] = p[i - 1];
    for (int i = 0; i < m; ++i) s[i] = F->sub(s[i], F->mul(p[m - 1], f[i]));
    pw.push_back(s);
  }
  Constants c(m, std::vector<Vec>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c[i][j] = pw[i + j];
  return SCAlgebra(F, c, basis_vec(m, 0));
}

// Upper triangular 2x2 matrices, basis e11, e12, e22.
inline SCAlgebra upper_triangular(const FieldPtr& F) {
  Constants c(3, std::vector<Vec>(3, Vec(3, 0)));
  c[0][0][0] = 1;
  c[0][1][1] = 1;
  c[1][2][1] = 1;
  c[2][2][2] = 1;
  return SCAlgebra(F, c, Vec{1, 0, 1});
}

inline Mat random_invertible(const FiniteField& F, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F.size() - 1));
  for (;;) {
    Mat B(m, Vec(m));
    for (auto& r : B)
      for (auto& x : r) x = pick(rng);
    if (mfb::mat_rank(F, B) == m) return B;
  }
}

// Random 3-dimensional associative unital algebra: a quotient of F_q[x] or the
// triangular algebra, in a random basis.
inline SCAlgebra random_algebra(const FieldPtr& F, int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(F->size() - 1));
  SCAlgebra A;
  if (m == 3 && rng() % 4 == 0) {
    A = upper_triangular(F);
  } else {
    std::vector<Elem> f(m);
    for (auto& x : f) x = pick(rng);
    A = quotient_algebra(F, f);
  }
  return A.change_basis(random_invertible(*F, m, rng));
}

}  // namespace testing

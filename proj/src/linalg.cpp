#include "hecke/linalg.hpp"

#include "hecke/errors.hpp"

#include <numeric>
#include <utility>

namespace hecke {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("add");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("mul");
  return r;
}

IntMat identity_mat(int n) {
  IntMat r(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat r(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      Int x = a[i][l];
      if (x == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        r[i][j] = checked_add(r[i][j], checked_mul(x, b[l][j]));
    }
  return r;
}

IntVec mat_vec(const IntMat& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      r[i] = checked_add(r[i], checked_mul(a[i][j], v[j]));
  return r;
}

IntVec vec_mat(const IntVec& v, const IntMat& a) {
  std::size_t m = a.empty() ? 0 : a[0].size();
  IntVec r(m, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j)
      r[j] = checked_add(r[j], checked_mul(v[i], a[i][j]));
  }
  return r;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat r(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

RatMat to_rat(const IntMat& a) {
  RatMat r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (Int x : a[i]) r[i].push_back(Rat(x));
  return r;
}

namespace {

// Gaussian elimination in place; returns pivot columns.
std::vector<int> row_reduce(RatMat& a) {
  std::vector<int> piv;
  if (a.empty()) return piv;
  int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    Rat inv = Rat(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Rat(0)) continue;
      Rat f = a[i][c];
      for (int j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

int mat_rank(RatMat a) { return static_cast<int>(row_reduce(a).size()); }

bool solve_row(const RatMat& a, const RatVec& b, RatVec& x) {
  // x * a = b  <=>  a^T x^T = b^T.  Build augmented [a^T | b^T].
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(b.size());
  RatMat aug(cols, RatVec(rows + 1));
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) aug[j][i] = a[i][j];
    aug[j][rows] = b[j];
  }
  auto piv = row_reduce(aug);
  if (!piv.empty() && piv.back() == rows) return false;
  x.assign(rows, Rat(0));
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][rows];
  // verify (free variables set to zero)
  for (int j = 0; j < cols; ++j) {
    Rat s = 0;
    for (int i = 0; i < rows; ++i) s += x[i] * a[i][j];
    if (s != b[j]) return false;
  }
  return true;
}

RatMat kernel(const RatMat& a) {
  RatMat red = a;
  auto piv = row_reduce(red);
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  RatMat ker;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -red[k][f];
    ker.push_back(v);
  }
  return ker;
}

Smith smith_normal_form(const IntMat& a0) {
  int n = static_cast<int>(a0.size());
  int m = n ? static_cast<int>(a0[0].size()) : 0;
  Smith s;
  IntMat a = a0;
  s.u = identity_mat(n);
  s.v = identity_mat(m);
  auto row_op = [&](int dst, int src, Int f) {  // row dst -= f * row src
    for (int j = 0; j < m; ++j) a[dst][j] = checked_add(a[dst][j], -checked_mul(f, a[src][j]));
    for (int j = 0; j < n; ++j) s.u[dst][j] = checked_add(s.u[dst][j], -checked_mul(f, s.u[src][j]));
  };
  auto col_op = [&](int dst, int src, Int f) {  // col dst -= f * col src
    for (int i = 0; i < n; ++i) a[i][dst] = checked_add(a[i][dst], -checked_mul(f, a[i][src]));
    for (int i = 0; i < m; ++i) s.v[i][dst] = checked_add(s.v[i][dst], -checked_mul(f, s.v[i][src]));
  };
  auto swap_rows = [&](int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](int i, int j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : s.v) std::swap(r[i], r[j]);
  };
  auto negate_row = [&](int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };
  int t = 0;
  while (t < n && t < m) {
    // pick smallest nonzero entry in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < n; ++i)
      for (int j = t; j < m; ++j)
        if (a[i][j] != 0 && (pi < 0 || std::abs(a[i][j]) < std::abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < n; ++i) {
        if (a[i][t] == 0) continue;
        row_op(i, t, a[i][t] / a[t][t]);
        if (a[i][t] != 0) {
          swap_rows(t, i);
          clean = false;
        }
      }
      for (int j = t + 1; j < m; ++j) {
        if (a[t][j] == 0) continue;
        col_op(j, t, a[t][j] / a[t][t]);
        if (a[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the rest of the block
        for (int i = t + 1; i < n && clean; ++i)
          for (int j = t + 1; j < m && clean; ++j)
            if (a[i][j] % a[t][t] != 0) {
              row_op(t, i, -1);
              clean = false;
            }
      }
    }
    if (a[t][t] < 0) negate_row(t);
    ++t;
  }
  for (int i = 0; i < std::min(n, m); ++i) s.diag.push_back(a[i][i]);
  return s;
}

IntMat lattice_basis(const IntMat& a) {
  // row HNF via repeated gcd elimination
  IntMat h = a;
  int rows = static_cast<int>(h.size());
  int cols = rows ? static_cast<int>(h[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    bool any = true;
    while (any) {
      any = false;
      int p = -1;
      for (int i = r; i < rows; ++i)
        if (h[i][c] != 0 && (p < 0 || std::abs(h[i][c]) < std::abs(h[p][c]))) p = i;
      if (p < 0) break;
      std::swap(h[p], h[r]);
      for (int i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Int f = h[i][c] / h[r][c];
        for (int j = 0; j < cols; ++j) h[i][j] = checked_add(h[i][j], -checked_mul(f, h[r][j]));
        if (h[i][c] != 0) any = true;
      }
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0)
      for (auto& x : h[r]) x = -x;
    ++r;
  }
  h.resize(r);
  return h;
}

IntMat inverse_unimodular(const IntMat& a) {
  int n = static_cast<int>(a.size());
  RatMat aug(n, RatVec(2 * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      aug[i][j] = a[i][j];
      aug[i][n + j] = (i == j) ? 1 : 0;
    }
  row_reduce(aug);
  IntMat r(n, IntVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rat& x = aug[i][n + j];
      if (rden(x) != 1) throw ArithmeticOverflow("matrix not unimodular");
      r[i][j] = rnum(x);
    }
  return r;
}

Int gcd_vec(const IntVec& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace hecke

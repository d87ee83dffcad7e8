#include "hecke/root_datum.hpp"

#include "hecke/errors.hpp"
#include "hecke/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hecke {

Int RealRoot::height() const { return std::accumulate(root.begin(), root.end(), Int(0)); }

bool is_gcm(const IntMat& a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) return false;
      if ((a[i][j] == 0) != (a[j][i] == 0)) return false;
    }
  }
  return true;
}

namespace {

Rat det(RatMat a) {
  int n = static_cast<int>(a.size());
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != Rat(0)) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      Rat f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

Rat principal_minor(const IntMat& a, unsigned mask) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (mask & (1u << i)) idx.push_back(i);
  RatMat s(idx.size(), RatVec(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s[i][j] = a[idx[i]][idx[j]];
  return det(s);
}

bool indecomposable(const IntMat& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<int> st{0};
  seen[0] = true;
  while (!st.empty()) {
    int i = st.back();
    st.pop_back();
    for (int j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        st.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

IntVec primitive_positive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = std::lcm(den, rden(x));
  IntVec r;
  for (const auto& x : v) r.push_back(rnum(x) * (den / rden(x)));
  Int g = gcd_vec(r);
  if (g == 0) return r;
  bool neg = false;
  for (Int x : r)
    if (x != 0) {
      neg = x < 0;
      break;
    }
  for (auto& x : r) x = (neg ? -x : x) / g;
  return r;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool is_finite_cartan(const IntMat& a) {
  int n = static_cast<int>(a.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask)
    if (principal_minor(a, mask) <= Rat(0)) return false;
  return true;
}

bool is_affine_cartan(const IntMat& a) {
  int n = static_cast<int>(a.size());
  if (n < 2 || !indecomposable(a)) return false;
  unsigned full = (1u << n) - 1;
  if (principal_minor(a, full) != Rat(0)) return false;
  for (unsigned mask = 1; mask < full; ++mask)
    if (principal_minor(a, mask) <= Rat(0)) return false;
  return true;
}

DatumPtr RootDatum::build(const IntMat& cartan, const std::optional<RatMat>& y_gens,
                          std::vector<std::string> labels, const std::vector<std::pair<int, int>>& ties) {
  if (cartan.empty() || !is_gcm(cartan)) throw NotGCM("matrix is not a generalized Cartan matrix");
  auto d = std::shared_ptr<RootDatum>(new RootDatum());
  int n = static_cast<int>(cartan.size());
  d->n_ = n;
  d->cartan_ = cartan;
  int r = mat_rank(to_rat(cartan));
  int k = n - r;
  d->dim_v_ = n + k;

  // alpha_j as a vector of V^*: (A_{0j}, ..., A_{n-1,j}, B_{0j}, ...)
  RatMat alpha(n, RatVec());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) alpha[j].push_back(Rat(cartan[i][j]));
  auto try_add = [&](const IntVec& col) {
    RatMat t = alpha;
    for (int j = 0; j < n; ++j) t[j].push_back(Rat(col[j]));
    if (mat_rank(t) > mat_rank(alpha)) {
      alpha = t;
      d->extra_.push_back(col);
      return true;
    }
    return false;
  };
  if (k > 0) try_add(IntVec(n, 1));
  for (int j = 0; j < n && static_cast<int>(d->extra_.size()) < k; ++j) {
    IntVec e(n, 0);
    e[j] = 1;
    try_add(e);
  }

  int dv = d->dim_v_;
  if (y_gens) {
    for (const auto& row : *y_gens)
      if (static_cast<int>(row.size()) != dv)
        throw LatticeOutOfRange("Y generators must have length dim V = " + std::to_string(dv));
    RatMat g = *y_gens;
    if (mat_rank(g) == static_cast<int>(g.size())) {
      d->y_basis_ = g;
    } else {
      Int den = 1;
      for (const auto& row : g)
        for (const auto& x : row) den = std::lcm(den, rden(x));
      IntMat gi;
      for (const auto& row : g) {
        IntVec v;
        for (const auto& x : row) v.push_back(rnum(x) * (den / rden(x)));
        gi.push_back(v);
      }
      for (const auto& row : lattice_basis(gi)) {
        RatVec v;
        for (Int x : row) v.push_back(rat(x, den));
        d->y_basis_.push_back(v);
      }
    }
  } else {
    for (int i = 0; i < n; ++i) {
      RatVec v(dv, Rat(0));
      v[i] = 1;
      d->y_basis_.push_back(v);
    }
  }
  int ry = d->y_rank();
  d->alpha_y_.assign(n, IntVec(ry));
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < ry; ++t) {
      Rat s = 0;
      for (int l = 0; l < dv; ++l) s += alpha[i][l] * d->y_basis_[t][l];
      if (rden(s) != 1) throw LatticeOutOfRange("Y is not contained in P^vee");
      d->alpha_y_[i][t] = rnum(s);
    }
  d->coroot_y_.assign(n, IntVec(ry));
  for (int i = 0; i < n; ++i) {
    RatVec e(dv, Rat(0)), x;
    e[i] = 1;
    if (!solve_row(d->y_basis_, e, x)) throw LatticeOutOfRange("Y does not contain Q^vee");
    for (int t = 0; t < ry; ++t) {
      if (rden(x[t]) != 1) throw LatticeOutOfRange("Y does not contain Q^vee");
      d->coroot_y_[i][t] = rnum(x[t]);
    }
  }
  d->coroot_solve_ = to_rat(d->coroot_y_);

  Smith s = smith_normal_form(d->coroot_y_);
  d->m_ = 1;
  for (Int x : s.diag) d->m_ = std::max(d->m_, x);
  // a = lambda * P with P = v[:, :n] diag(m / d_k) u
  IntMat left(ry, IntVec(n, 0));
  for (int t = 0; t < ry; ++t)
    for (int c = 0; c < n; ++c) left[t][c] = s.v[t][c] * (d->m_ / s.diag[c]);
  d->delta_proj_ = mat_mul(left, s.u);

  UnionFind uf(2 * n);
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < ry; ++t)
      if (d->alpha_y_[i][t] % 2 != 0) uf.unite(2 * i, 2 * i + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan[i][j] == -1 && cartan[j][i] == -1) {
        uf.unite(2 * i, 2 * j);
        uf.unite(2 * i, 2 * i + 1);
        uf.unite(2 * i, 2 * j + 1);
      }
  for (auto [i, j] : ties) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw NotGCM("parameter tie index out of range");
    uf.unite(2 * i, 2 * j);
    uf.unite(2 * i + 1, 2 * j + 1);
  }
  std::map<int, int> rep_to_sym;
  d->sym_.assign(2 * n, 0);
  for (int x = 0; x < 2 * n; ++x) {
    int rt = uf.find(x);
    auto it = rep_to_sym.find(rt);
    if (it == rep_to_sym.end()) {
      int id = static_cast<int>(d->sym_names_.size());
      rep_to_sym[rt] = id;
      d->sym_names_.push_back("q" + std::to_string(rt / 2 + 1) + (rt % 2 ? "p" : ""));
      d->sym_[x] = id;
    } else {
      d->sym_[x] = it->second;
    }
  }

  auto ring = std::make_shared<Ring>();
  ring->names = d->sym_names_;
  ring->m = d->m_;
  for (int i = 0; i < n; ++i) {
    ring->aliases["q" + std::to_string(i + 1)] = d->sym_[2 * i];
    ring->aliases["q" + std::to_string(i + 1) + "p"] = d->sym_[2 * i + 1];
  }
  d->ring_ = ring;

  d->finite_ = is_finite_cartan(cartan);
  d->affine_ = !d->finite_ && is_affine_cartan(cartan);

  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  d->labels_ = labels;
  for (int t = 0; t < ry; ++t) {
    int unit = -1;
    int nonzero = 0;
    for (int l = 0; l < dv; ++l)
      if (d->y_basis_[t][l] != Rat(0)) {
        ++nonzero;
        if (d->y_basis_[t][l] == 1) unit = l;
      }
    if (nonzero == 1 && unit >= 0 && unit < n)
      d->y_names_.push_back("a" + std::to_string(unit + 1) + "v");
    else if (nonzero == 1 && unit >= n)
      d->y_names_.push_back("d" + std::to_string(unit - n + 1));
    else
      d->y_names_.push_back("y" + std::to_string(t + 1));
  }
  return d;
}

Int RootDatum::alpha(int i, const Coweight& y) const {
  Int s = 0;
  for (int t = 0; t < y_rank(); ++t) s = checked_add(s, checked_mul(alpha_y_[i][t], y[t]));
  return s;
}

IntVec RootDatum::alpha_values(const Coweight& y) const {
  IntVec r(n_);
  for (int i = 0; i < n_; ++i) r[i] = alpha(i, y);
  return r;
}

Int RootDatum::pair(const IntVec& root, const Coweight& y) const {
  Int s = 0;
  for (int i = 0; i < n_; ++i)
    if (root[i] != 0) s = checked_add(s, checked_mul(root[i], alpha(i, y)));
  return s;
}

Coweight RootDatum::coroot_comb(const IntVec& coeffs) const {
  Coweight r = zero();
  for (int i = 0; i < n_; ++i)
    for (int t = 0; t < y_rank(); ++t) r[t] = checked_add(r[t], checked_mul(coeffs[i], coroot_y_[i][t]));
  return r;
}

Coweight RootDatum::reflect(int i, const Coweight& y) const {
  Int a = alpha(i, y);
  Coweight r = y;
  if (a == 0) return r;
  for (int t = 0; t < y_rank(); ++t) r[t] = checked_add(r[t], -checked_mul(a, coroot_y_[i][t]));
  return r;
}

RatVec RootDatum::to_v(const Coweight& y) const {
  RatVec v(dim_v_, Rat(0));
  for (int t = 0; t < y_rank(); ++t)
    if (y[t] != 0)
      for (int l = 0; l < dim_v_; ++l) v[l] += Rat(y[t]) * y_basis_[t][l];
  return v;
}

std::optional<Coweight> RootDatum::from_v(const RatVec& v) const {
  RatVec x;
  if (!solve_row(y_basis_, v, x)) return std::nullopt;
  Coweight r;
  for (const auto& c : x) {
    if (rden(c) != 1) return std::nullopt;
    r.push_back(rnum(c));
  }
  return r;
}

std::vector<int> RootDatum::parameter_classes() const {
  std::vector<int> r(n_);
  for (int i = 0; i < n_; ++i) r[i] = symbol(i, false);
  return r;
}

namespace {

IntVec reflect_root(const IntMat& a, int i, IntVec b) {
  // r_i(beta) = beta - beta(alpha_i^vee) alpha_i
  Int p = 0;
  for (std::size_t j = 0; j < b.size(); ++j) p += b[j] * a[i][j];
  b[i] -= p;
  return b;
}

IntVec reflect_coroot(const IntMat& a, int i, IntVec g) {
  // r_i(gamma) = gamma - alpha_i(gamma) alpha_i^vee
  Int p = 0;
  for (std::size_t j = 0; j < g.size(); ++j) p += g[j] * a[j][i];
  g[i] -= p;
  return g;
}

std::vector<RealRoot> positive_roots_bounded(const RootDatum& d, Int bound) {
  int n = d.rank();
  std::map<IntVec, IntVec> found;  // root -> coroot
  std::vector<IntVec> frontier;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    found[e] = e;
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        IntVec nb = reflect_root(d.cartan(), i, b);
        Int h = std::accumulate(nb.begin(), nb.end(), Int(0));
        if (h <= std::accumulate(b.begin(), b.end(), Int(0)) || (bound >= 0 && h > bound)) continue;
        if (found.count(nb)) continue;
        found[nb] = reflect_coroot(d.cartan(), i, found[b]);
        next.push_back(nb);
      }
    }
    frontier = std::move(next);
  }
  std::vector<RealRoot> out;
  for (const auto& [b, g] : found) out.push_back({b, g, d.coroot_comb(g)});
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) {
    if (x.height() != y.height()) return x.height() < y.height();
    return x.root > y.root;
  });
  return out;
}

}  // namespace

std::vector<RealRoot> RootDatum::real_roots(int height_bound) const {
  auto pos = positive_roots_bounded(*this, height_bound);
  std::vector<RealRoot> out = pos;
  for (const auto& r : pos) {
    RealRoot nr = r;
    for (auto& x : nr.root) x = -x;
    for (auto& x : nr.coroot) x = -x;
    for (auto& x : nr.coroot_y) x = -x;
    out.push_back(nr);
  }
  return out;
}

std::vector<RealRoot> RootDatum::positive_roots_finite() const {
  if (!finite_) throw NotFiniteType("positive roots requested in infinite type");
  return positive_roots_bounded(*this, -1);
}

bool RootDatum::is_dominant(const Coweight& y) const {
  for (int i = 0; i < n_; ++i)
    if (alpha(i, y) < 0) return false;
  return true;
}

ConeResult RootDatum::tits_cone_membership(const Coweight& y, int cap) const {
  if (cap < 0) {
    Int norm = 0;
    for (Int x : y) norm += std::abs(x);
    cap = static_cast<int>(10 * std::max<Int>(1, norm));
  }
  ConeResult res;
  Coweight cur = y;
  while (true) {
    int i = -1;
    for (int j = 0; j < n_; ++j)
      if (alpha(j, cur) < 0) {
        i = j;
        break;
      }
    if (i < 0) {
      res.status = ConeStatus::Positive;
      res.dominant = cur;
      return res;
    }
    // finite type always terminates; the cap only guards infinite type
    if (!finite_ && res.steps >= cap) break;
    cur = reflect(i, cur);
    res.word.push_back(i);
    ++res.steps;
  }
  if (affine_) {
    IntVec dl = imaginary_delta();
    if (pair(dl, y) <= 0) {
      auto cc = coroot_coords(y);
      bool on_line = false;
      if (cc) {
        IntVec c = central_c();
        // y in Q c : proportional to c
        on_line = true;
        Rat ratio = 0;
        bool set = false;
        for (int i = 0; i < n_; ++i) {
          if (c[i] == 0) {
            if ((*cc)[i] != Rat(0)) on_line = false;
            continue;
          }
          Rat q = (*cc)[i] / Rat(c[i]);
          if (!set) {
            ratio = q;
            set = true;
          } else if (q != ratio) {
            on_line = false;
          }
        }
      }
      if (!on_line) res.status = ConeStatus::NotInCone;
    }
  }
  return res;
}

bool RootDatum::in_tits_cone(const Coweight& y) const {
  return tits_cone_membership(y).status == ConeStatus::Positive;
}

std::pair<Coweight, WeylElt> RootDatum::dominant_rep(const Coweight& y) const {
  ConeResult r = tits_cone_membership(y);
  if (r.status != ConeStatus::Positive) throw NotInTitsCone("coweight not certified in the Tits cone");
  WeylElt w = WeylElt::from_word(*this, r.word);
  w = coset_min_rep(w, stabilizer_indices(*this, r.dominant));
  return {r.dominant, w};
}

std::optional<RatVec> RootDatum::coroot_coords(const Coweight& y) const {
  RatVec v = to_v(y);
  for (int l = n_; l < dim_v_; ++l)
    if (v[l] != Rat(0)) return std::nullopt;
  v.resize(n_);
  return v;
}

bool RootDatum::qvee_leq(const Coweight& lambda, const Coweight& mu, bool* in_span) const {
  Coweight diff(mu.size());
  for (std::size_t t = 0; t < mu.size(); ++t) diff[t] = mu[t] - lambda[t];
  auto cc = coroot_coords(diff);
  if (in_span) *in_span = cc.has_value();
  if (!cc) return false;
  for (const auto& x : *cc)
    if (rden(x) != 1 || x < Rat(0)) return false;
  return true;
}

IntVec RootDatum::delta_half_exponents(const Coweight& y) const { return vec_mat(y, delta_proj_); }

IntVec RootDatum::imaginary_delta() const {
  if (!affine_) throw NotAffineType("delta requested for a non-affine datum");
  auto ker = kernel(to_rat(cartan_));  // A a = 0
  return primitive_positive(ker.at(0));
}

IntVec RootDatum::central_c() const {
  if (!affine_) throw NotAffineType("c requested for a non-affine datum");
  auto ker = kernel(to_rat(transpose(cartan_)));  // a A = 0
  return primitive_positive(ker.at(0));
}

Int RootDatum::height(const Coweight& y) const {
  auto cc = coroot_coords(y);
  if (cc) {
    bool integral = std::all_of(cc->begin(), cc->end(), [](const Rat& x) { return rden(x) == 1; });
    if (integral) {
      Int s = 0;
      for (const auto& x : *cc) s += rnum(x);
      return s;
    }
  }
  Int s = 0;
  for (Int x : y) s += std::abs(x);
  return s;
}

}  // namespace hecke

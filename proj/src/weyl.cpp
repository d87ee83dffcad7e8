#include "hecke/weyl.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace hecke {

namespace {

// simple reflection on root coordinates, column convention
IntMat root_reflection(const RootDatum& d, int i) {
  int n = d.rank();
  IntMat s = identity_mat(n);
  for (int l = 0; l < n; ++l) s[i][l] -= d.cartan(i, l);
  return s;
}

IntMat y_reflection(const RootDatum& d, int i) {
  int ry = d.y_rank();
  IntMat s = identity_mat(ry);
  const Coweight& c = d.coroot(i);
  for (int l = 0; l < ry; ++l) {
    Coweight e(ry, 0);
    e[l] = 1;
    Int a = d.alpha(i, e);
    for (int k = 0; k < ry; ++k) s[k][l] -= c[k] * a;
  }
  return s;
}

// left-multiply by the root reflection: rows change (S_i M)
void lmul_root(const RootDatum& d, int i, IntMat& m) {
  int n = d.rank();
  for (int col = 0; col < n; ++col) {
    Int p = 0;
    for (int l = 0; l < n; ++l) p = checked_add(p, checked_mul(d.cartan(i, l), m[l][col]));
    m[i][col] = checked_add(m[i][col], -p);
  }
}

// right-multiply by the root reflection (M S_i)
void rmul_root(const RootDatum& d, int i, IntMat& m) {
  int n = d.rank();
  IntMat r = m;
  for (int row = 0; row < n; ++row)
    for (int l = 0; l < n; ++l) {
      // S_i[k][l] = delta_kl - delta_ki A_il
      r[row][l] = checked_add(m[row][l], -checked_mul(m[row][i], d.cartan(i, l)));
    }
  m = std::move(r);
}

}  // namespace

bool is_negative_root(const IntVec& root) {
  for (Int x : root)
    if (x != 0) return x < 0;
  return false;
}

namespace {

std::vector<int> canonical_word(const RootDatum& d, const IntMat& inv) {
  // strip least left descents: w^{-1}(alpha_i) < 0 means l(r_i w) < l(w)
  IntMat mi = inv;
  std::vector<int> word;
  int n = d.rank();
  while (true) {
    int desc = -1;
    for (int i = 0; i < n && desc < 0; ++i) {
      IntVec col(n);
      for (int l = 0; l < n; ++l) col[l] = mi[l][i];
      if (is_negative_root(col)) desc = i;
    }
    if (desc < 0) break;
    word.push_back(desc);
    rmul_root(d, desc, mi);
  }
  return word;
}

const std::vector<int>& empty_word() {
  static const std::vector<int> e;
  return e;
}

}  // namespace

std::shared_ptr<WeylElt::Rep> WeylElt::make_rep(const RootDatum& d, IntMat act, IntMat inv, IntMat yact) {
  auto r = std::make_shared<Rep>();
  r->word = canonical_word(d, inv);
  r->act = std::move(act);
  r->inv = std::move(inv);
  r->yact = std::move(yact);
  r->up.resize(d.rank());
  r->down.resize(d.rank());
  return r;
}

const std::vector<int>& WeylElt::word() const { return rep_ ? rep_->word : empty_word(); }

WeylElt WeylElt::identity(const RootDatum& d) {
  WeylElt w;
  w.d_ = &d;
  IntMat id = identity_mat(d.rank());
  w.rep_ = make_rep(d, id, id, identity_mat(d.y_rank()));
  return w;
}

WeylElt WeylElt::simple(const RootDatum& d, int i) {
  WeylElt w;
  w.d_ = &d;
  IntMat s = root_reflection(d, i);
  w.rep_ = make_rep(d, s, s, y_reflection(d, i));
  return w;
}

WeylElt WeylElt::from_word(const RootDatum& d, const std::vector<int>& word) {
  IntMat act = identity_mat(d.rank()), inv = act, yact = identity_mat(d.y_rank());
  for (int i : word) {
    if (i < 0 || i >= d.rank()) throw DatumMismatch("index out of range in word");
    rmul_root(d, i, act);
    lmul_root(d, i, inv);
    yact = mat_mul(yact, y_reflection(d, i));
  }
  WeylElt w;
  w.d_ = &d;
  w.rep_ = make_rep(d, std::move(act), std::move(inv), std::move(yact));
  return w;
}

WeylElt WeylElt::operator*(const WeylElt& o) const {
  if (d_ != o.d_) throw DatumMismatch("Weyl elements from different data");
  WeylElt r;
  r.d_ = d_;
  r.rep_ = make_rep(*d_, mat_mul(rep_->act, o.rep_->act), mat_mul(o.rep_->inv, rep_->inv),
                    mat_mul(rep_->yact, o.rep_->yact));
  return r;
}

WeylElt WeylElt::inverse() const {
  WeylElt r;
  r.d_ = d_;
  r.rep_ = make_rep(*d_, rep_->inv, rep_->act, inverse_unimodular(rep_->yact));
  return r;
}

WeylElt WeylElt::lmul(int i) const {
  {
    std::lock_guard<std::mutex> lock(rep_->mu);
    std::shared_ptr<const Rep> hit = rep_->up[i] ? rep_->up[i] : rep_->down[i].lock();
    if (hit) {
      WeylElt r;
      r.d_ = d_;
      r.rep_ = std::move(hit);
      return r;
    }
  }
  WeylElt r = simple(*d_, i) * *this;
  // owning links only point to longer elements, so there are no cycles.
  // r is not shared yet, so its links need no lock.
  bool longer = r.length() > length();
  if (longer)
    r.rep_->down[i] = rep_;
  else
    r.rep_->up[i] = rep_;
  std::lock_guard<std::mutex> lock(rep_->mu);
  if (longer)
    rep_->up[i] = r.rep_;
  else
    rep_->down[i] = r.rep_;
  return r;
}

WeylElt WeylElt::rmul(int i) const { return *this * simple(*d_, i); }

Coweight WeylElt::apply(const Coweight& y) const { return mat_vec(rep_->yact, y); }
IntVec WeylElt::apply_root(const IntVec& root) const { return mat_vec(rep_->act, root); }
IntVec WeylElt::apply_inverse_root(const IntVec& root) const { return mat_vec(rep_->inv, root); }

bool WeylElt::is_left_descent(int i) const {
  int n = d_->rank();
  IntVec col(n);
  for (int l = 0; l < n; ++l) col[l] = rep_->inv[l][i];
  return is_negative_root(col);
}

bool WeylElt::is_right_descent(int i) const {
  int n = d_->rank();
  IntVec col(n);
  for (int l = 0; l < n; ++l) col[l] = rep_->act[l][i];
  return is_negative_root(col);
}

std::string WeylElt::to_string() const {
  if (word().empty()) return "e";
  std::string s;
  for (int i : word()) s += "r" + std::to_string(i + 1);
  return s;
}

std::string word_to_csv(const std::vector<int>& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k] + 1);
  }
  return s;
}

namespace {

struct BruhatKey {
  const RootDatum* d;
  std::vector<int> u, w;
  bool operator<(const BruhatKey& o) const {
    if (d != o.d) return d < o.d;
    if (u != o.u) return u < o.u;
    return w < o.w;
  }
};

bool bruhat_rec(const WeylElt& u, const WeylElt& w, std::map<BruhatKey, bool>& memo) {
  if (u.length() > w.length()) return false;
  if (u.is_identity()) return true;
  if (u == w) return true;
  if (u.length() == w.length()) return false;
  BruhatKey key{u.datum(), u.word(), w.word()};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int s = w.word().front();  // a left descent of w
  WeylElt sw = w.lmul(s);
  bool res;
  if (u.is_left_descent(s))
    res = bruhat_rec(u.lmul(s), sw, memo);
  else
    res = bruhat_rec(u, sw, memo);
  memo[key] = res;
  return res;
}

}  // namespace

bool bruhat_leq(const WeylElt& u, const WeylElt& w) {
  if (u.datum() != w.datum()) throw DatumMismatch("Bruhat comparison across data");
  thread_local std::map<BruhatKey, bool> memo;
  if (memo.size() > 2000000) memo.clear();
  return bruhat_rec(u, w, memo);
}

WeylElt coset_min_rep(const WeylElt& w, const std::vector<int>& J) {
  WeylElt cur = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j : J)
      if (cur.is_right_descent(j)) {
        cur = cur.rmul(j);
        changed = true;
        break;
      }
  }
  return cur;
}

std::vector<WeylElt> enumerate_up_to_length(const RootDatum& d, int L) {
  std::vector<WeylElt> out{WeylElt::identity(d)};
  std::vector<WeylElt> level = out;
  for (int len = 1; len <= L; ++len) {
    std::map<std::vector<int>, WeylElt> next;
    for (const auto& w : level)
      for (int i = 0; i < d.rank(); ++i) {
        if (w.is_right_descent(i)) continue;
        WeylElt x = w.rmul(i);
        next.emplace(x.word(), x);
      }
    level.clear();
    for (auto& [k, v] : next) level.push_back(v);
    if (level.empty()) break;
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<WeylElt> enumerate_all(const RootDatum& d) {
  if (!d.finite_type()) throw NotFiniteType("W^v is infinite");
  return enumerate_up_to_length(d, static_cast<int>(d.positive_roots_finite().size()));
}

WeylElt longest_element(const RootDatum& d, const std::vector<int>& J) {
  IntMat sub(J.size(), IntVec(J.size()));
  for (std::size_t a = 0; a < J.size(); ++a)
    for (std::size_t b = 0; b < J.size(); ++b) sub[a][b] = d.cartan(J[a], J[b]);
  if (!J.empty() && !is_finite_cartan(sub)) throw NotSpherical("parabolic subgroup is infinite");
  WeylElt w = WeylElt::identity(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : J)
      if (!w.is_right_descent(j)) {
        w = w.rmul(j);
        grew = true;
        break;
      }
  }
  return w;
}

std::vector<int> stabilizer_indices(const RootDatum& d, const Coweight& dominant) {
  std::vector<int> J;
  for (int i = 0; i < d.rank(); ++i)
    if (d.alpha(i, dominant) == 0) J.push_back(i);
  return J;
}

WeylElt w_lambda_plus(const RootDatum& d, const Coweight& y) {
  auto [dom, w] = d.dominant_rep(y);
  return w * longest_element(d, stabilizer_indices(d, dom));
}

}  // namespace hecke

#include "hecke/bases.hpp"

#include "hecke/cache.hpp"
#include "hecke/errors.hpp"

#include <algorithm>

namespace hecke {

namespace {

struct BasesMemo {
  std::shared_mutex mu;
  std::map<Coweight, AlgElt> t_lambda;
  std::map<std::pair<Coweight, std::vector<int>>, AlgElt> t_bold;
  std::map<std::pair<Coweight, std::vector<int>>, std::shared_ptr<const XCoords>> t_bold_x;
};

bool is_zero_vec(const Coweight& y) {
  return std::all_of(y.begin(), y.end(), [](Int x) { return x == 0; });
}

Coweight shift(const Coweight& y, const Coweight& v, Int k) {
  Coweight r = y;
  for (std::size_t t = 0; t < r.size(); ++t) r[t] = checked_add(r[t], checked_mul(k, v[t]));
  return r;
}

void axpy(XCoords& acc, const LaurentPoly& c, const XCoords& x) {
  for (const auto& [k, v] : x) {
    LaurentPoly t = v * c;
    auto it = acc.find(k);
    if (it == acc.end()) {
      if (!t.is_zero()) acc.emplace(k, std::move(t));
      continue;
    }
    it->second += t;
    if (it->second.is_zero()) acc.erase(it);
  }
}

// factor converting a Z^lambda H_w coefficient to the X^lambda T_w one
LaurentPoly z_to_x_factor(const RootDatum& d, const BasisKey& k) {
  return (delta_half(d, k.lambda) * sigma_w(d, k.w)).inverse_unit();
}

std::string x_basis_name(const RootDatum& d, const BasisKey& k) {
  std::string basis;
  if (!is_zero_vec(k.lambda)) basis = "X[" + format_coweight(d, k.lambda) + "]";
  if (!k.w.is_identity()) basis += std::string(basis.empty() ? "" : "*") + "Tw[" + k.w.to_string() + "]";
  return basis;
}

std::shared_ptr<const XCoords> t_bold_x(const DatumPtr& d, const WPlusIndex& idx) {
  auto memo = datum_cache<BasesMemo>(d);
  return memo_lookup(memo->mu, memo->t_bold_x, std::make_pair(idx.lambda, idx.w.word()),
                     [&] { return std::make_shared<const XCoords>(to_x_coords(T_bold(d, idx))); });
}

}  // namespace

AlgElt X_elt(const DatumPtr& d, const Coweight& lambda) {
  return AlgElt::Z(d, lambda).scaled(delta_half(*d, lambda));
}

XCoords to_x_coords(const AlgElt& e) {
  XCoords out;
  for (const auto& [k, c] : e.terms()) out.emplace(k, c * z_to_x_factor(*e.datum(), k));
  return out;
}

AlgElt from_x_coords(const DatumPtr& d, const XCoords& x) {
  TermMap t;
  for (const auto& [k, c] : x) t.emplace(k, c * delta_half(*d, k.lambda) * sigma_w(*d, k.w));
  return AlgElt(d, std::move(t));
}

std::string to_x_string(const AlgElt& e) {
  XCoords x = to_x_coords(e);
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = x.rbegin(); it != x.rend(); ++it) {
    out += format_summand(it->second, x_basis_name(*e.datum(), it->first), first);
    first = false;
  }
  return out;
}

AlgElt T_lambda(const DatumPtr& d, const Coweight& lambda) {
  auto memo = datum_cache<BasesMemo>(d);
  return memo_lookup(memo->mu, memo->t_lambda, lambda, [&] {
    auto [dom, w] = d->dominant_rep(lambda);
    AlgElt x = X_elt(d, dom);
    if (w.is_identity()) return x;
    return mul(mul(AlgElt::Tw(d, w), x), AlgElt::Tw_inv(d, w));
  });
}

AlgElt T_bold_along(const DatumPtr& d, const Coweight& lambda, const std::vector<int>& word) {
  AlgElt e = T_lambda(d, lambda);
  WeylElt w = WeylElt::identity(*d);
  for (int i : word) {
    // T_{lambda.w r_i} = T_{lambda.w} T_i iff (w alpha_i)(lambda) <= 0 along a reduced word
    IntVec ai(d->rank(), 0);
    ai[i] = 1;
    Int v = d->pair(w.apply_root(ai), lambda);
    e = mul(e, v <= 0 ? AlgElt::Ti(d, i) : AlgElt::Ti_inv(d, i));
    w = w.rmul(i);
  }
  return e;
}

AlgElt T_bold(const DatumPtr& d, const WPlusIndex& idx) {
  const std::vector<int>& word = idx.w.word();
  if (word.empty()) return T_lambda(d, idx.lambda);
  auto memo = datum_cache<BasesMemo>(d);
  return memo_lookup(memo->mu, memo->t_bold, std::make_pair(idx.lambda, word), [&] {
    std::vector<int> prefix(word.begin(), word.end() - 1);
    int i = word.back();
    WeylElt w = WeylElt::from_word(*d, prefix);
    IntVec ai(d->rank(), 0);
    ai[i] = 1;
    Int v = d->pair(w.apply_root(ai), idx.lambda);
    AlgElt head = T_bold(d, WPlusIndex{idx.lambda, w});
    return mul(head, v <= 0 ? AlgElt::Ti(d, i) : AlgElt::Ti_inv(d, i));
  });
}

LaurentPoly tw_diagonal(const DatumPtr& d, const WPlusIndex& idx) {
  auto x = t_bold_x(d, idx);
  auto it = x->find(idx);
  return it == x->end() ? LaurentPoly(d->ring()) : it->second;
}

TCoords express_in_TW_basis(const AlgElt& e) {
  const DatumPtr& d = e.datum();
  TCoords out;
  if (e.is_zero()) return out;
  XCoords rem = to_x_coords(e);
  {
    std::map<Coweight, bool> seen;
    for (const auto& [k, c] : rem) {
      if (seen.count(k.lambda)) continue;
      seen[k.lambda] = true;
      if (d->tits_cone_membership(k.lambda).status != ConeStatus::Positive)
        throw NotPositivePart("X-support contains " + format_coweight(*d, k.lambda) + " outside Y^+");
    }
  }
  std::size_t steps = 0, limit = 100000 + 100 * rem.size();
  while (!rem.empty()) {
    if (++steps > limit) throw PeelStalled("no convergence after " + std::to_string(limit) + " peels");
    // outer: Q^vee-minimal lambda, lexicographic tie-break (map order is lexicographic)
    std::vector<Coweight> lams;
    for (const auto& [k, c] : rem)
      if (lams.empty() || lams.back() != k.lambda) lams.push_back(k.lambda);
    const Coweight* lam0 = nullptr;
    for (const auto& l : lams) {
      bool minimal = true;
      for (const auto& o : lams)
        if (o != l && d->qvee_leq(o, l)) {
          minimal = false;
          break;
        }
      if (minimal) {
        lam0 = &l;
        break;
      }
    }
    if (!lam0) throw PeelStalled("no Q^vee-minimal stratum");
    // inner: a Bruhat-maximal w in the stratum (maximal length is enough)
    const BasisKey* top = nullptr;
    for (const auto& [k, c] : rem)
      if (k.lambda == *lam0 && (!top || top->w.length() <= k.w.length())) top = &k;
    WPlusIndex idx = *top;
    LaurentPoly c = rem.at(idx);
    auto tb = t_bold_x(d, idx);
    auto dg = tb->find(idx);
    if (dg == tb->end() || !dg->second.is_primitive_monomial())
      throw PeelStalled("diagonal entry of T[" + format_coweight(*d, idx.lambda) + ";" + idx.w.to_string() +
                        "] is not a primitive monomial");
    for (const auto& [k, v] : *tb) {
      bool ok = k.lambda == idx.lambda ? (k.w == idx.w || k.w.length() < idx.w.length())
                                       : d->qvee_leq(idx.lambda, k.lambda);
      if (!ok) throw PeelStalled("T basis element not triangular at " + format_coweight(*d, k.lambda));
    }
    LaurentPoly coef = c * dg->second.inverse_unit();
    axpy(rem, -coef, *tb);
    if (rem.count(idx)) throw PeelStalled("stratum failed to clear");
    auto it = out.find(idx);
    if (it == out.end())
      out.emplace(idx, coef);
    else if ((it->second += coef).is_zero())
      out.erase(it);
  }
  return out;
}

AlgElt from_t_coords(const DatumPtr& d, const TCoords& t) {
  AlgElt r(d);
  for (const auto& [k, c] : t) r += T_bold(d, k).scaled(c);
  return r;
}

std::string format_t_coords(const RootDatum& d, const TCoords& t) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    out += format_summand(it->second, "T[" + format_coweight(d, it->first.lambda) + ";" + it->first.w.to_string() + "]",
                          first);
    first = false;
  }
  return out;
}

TCoords structure_constants(const DatumPtr& d, const WPlusIndex& w, const WPlusIndex& v) {
  return express_in_TW_basis(mul(T_bold(d, w), T_bold(d, v)));
}

AlgElt blt_closed_form(const DatumPtr& d, const Coweight& lambda, const Coweight& mu, int i) {
  if (!d->is_dominant(lambda) || !d->is_dominant(mu)) throw NotDominant("BLT needs dominant lambda and mu");
  Int al = d->alpha(i, lambda), am = d->alpha(i, mu);
  Int n = std::min(al, am);
  bool case_a = am <= al;
  Coweight sum = shift(lambda, mu, 1);
  const Coweight& cv = d->coroot(i);
  AlgElt ti = AlgElt::Ti(d, i);
  AlgElt lead = T_lambda(d, shift(sum, cv, -n));
  AlgElt r = (case_a ? mul(lead, ti) : mul(ti, lead)).scaled(q_star(*d, i, static_cast<int>(n)));
  for (Int k = 1; k <= n; ++k) {
    LaurentPoly c = q_star(*d, i, static_cast<int>(k)) - q_star(*d, i, static_cast<int>(k - 1));
    r += T_lambda(d, shift(sum, cv, -(k - 1))).scaled(c);
  }
  return r;
}

std::pair<AlgElt, AlgElt> blx_relation_check(const DatumPtr& d, const Coweight& lambda, int i) {
  AlgElt ti = AlgElt::Ti(d, i);
  AlgElt lhs = mul(ti, X_elt(d, lambda));
  Int a = d->alpha(i, lambda);
  const Coweight& cv = d->coroot(i);
  AlgElt head = mul(X_elt(d, d->reflect(i, lambda)), ti);
  AlgElt rhs(d);
  if (a >= 0) {
    rhs = head.scaled(q_star(*d, i, static_cast<int>(a)));
    for (Int h = 0; h < a; ++h) {
      LaurentPoly c = q_star(*d, i, static_cast<int>(h + 1)) - q_star(*d, i, static_cast<int>(h));
      rhs += X_elt(d, shift(lambda, cv, -h)).scaled(c);
    }
  } else {
    Int n = -a;
    LaurentPoly inv = q_star(*d, i, static_cast<int>(n)).inverse_unit();
    rhs = head.scaled(inv);
    for (Int h = a; h <= -1; ++h) {
      LaurentPoly c = q_star(*d, i, static_cast<int>(n + h + 1)) - q_star(*d, i, static_cast<int>(n + h));
      rhs -= X_elt(d, shift(lambda, cv, -h)).scaled(c * inv);
    }
  }
  return {lhs, rhs};
}

std::pair<AlgElt, AlgElt> blz_relation_check(const DatumPtr& d, const Coweight& lambda, int i) {
  AlgElt hi = AlgElt::Hi(d, i);
  AlgElt lhs = mul(hi, AlgElt::Z(d, lambda));
  Int a = d->alpha(i, lambda);
  const Coweight& cv = d->coroot(i);
  AlgElt rhs = mul(AlgElt::Z(d, d->reflect(i, lambda)), hi);
  LaurentPoly ds = sigma_diff(*d, i, false), dp = sigma_diff(*d, i, true);
  if (a >= 0) {
    for (Int k = 0; k <= a - 1; k += 2) rhs += AlgElt::Z(d, shift(lambda, cv, -k)).scaled(ds);
    for (Int k = 1; k <= a - 1; k += 2) rhs += AlgElt::Z(d, shift(lambda, cv, -k)).scaled(dp);
  } else {
    for (Int k = 2; k <= -a; k += 2) rhs -= AlgElt::Z(d, shift(lambda, cv, k)).scaled(ds);
    for (Int k = 1; k <= -a; k += 2) rhs -= AlgElt::Z(d, shift(lambda, cv, k)).scaled(dp);
  }
  return {lhs, rhs};
}

std::map<WPlusIndex, mpq_class> specialize_constants(const TCoords& c, const std::vector<mpq_class>& q_values) {
  std::map<WPlusIndex, mpq_class> out;
  for (const auto& [k, v] : c) out.emplace(k, v.specialize(q_values));
  return out;
}

}  // namespace hecke

#include "hecke/bl_algebra.hpp"

#include "hecke/cache.hpp"
#include "hecke/errors.hpp"

#include <algorithm>
#include <atomic>

namespace hecke {

namespace {

std::atomic<std::size_t> g_term_cap{2000000};

void enforce_cap(const TermMap& t) {
  if (t.size() > g_term_cap.load()) throw TermOverflow("support exceeded " + std::to_string(g_term_cap.load()) + " terms");
}

void accumulate(TermMap& t, const BasisKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t.erase(it);
}

struct Memo {
  std::shared_mutex mu;
  std::map<std::pair<std::vector<int>, Coweight>, std::shared_ptr<const TermMap>> hz;
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::shared_ptr<const TermMap>> hh;
};

}  // namespace

void set_term_cap(std::size_t cap) { g_term_cap = cap; }
std::size_t term_cap() { return g_term_cap.load(); }

AlgElt::AlgElt(DatumPtr d, TermMap terms) : d_(std::move(d)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

AlgElt AlgElt::basis_term(DatumPtr d, const Coweight& lambda, const WeylElt& w, const LaurentPoly& c) {
  AlgElt e(std::move(d));
  e.add_term(lambda, w, c);
  return e;
}

AlgElt AlgElt::one(DatumPtr d) { return scalar(std::move(d), 1); }

AlgElt AlgElt::scalar(DatumPtr d, const LaurentPoly& c) {
  Coweight z = d->zero();
  WeylElt e = WeylElt::identity(*d);
  return basis_term(std::move(d), z, e, c);
}

AlgElt AlgElt::Z(DatumPtr d, const Coweight& lambda) {
  WeylElt e = WeylElt::identity(*d);
  return basis_term(std::move(d), lambda, e);
}

AlgElt AlgElt::H(DatumPtr d, const WeylElt& w) {
  Coweight z = d->zero();
  return basis_term(std::move(d), z, w);
}

AlgElt AlgElt::Hi(DatumPtr d, int i) {
  WeylElt s = WeylElt::simple(*d, i);
  return H(std::move(d), s);
}

AlgElt AlgElt::Ti(DatumPtr d, int i) {
  LaurentPoly s = LaurentPoly::sigma(d->ring(), d->symbol(i, false));
  return Hi(std::move(d), i).scaled(s);
}

AlgElt AlgElt::Ti_inv(DatumPtr d, int i) {
  // T_i^{-1} = sigma^{-1} H_i - 1 + sigma^{-2}
  auto r = d->ring();
  int s = d->symbol(i, false);
  AlgElt out = Hi(d, i).scaled(LaurentPoly::sigma(r, s, -1));
  out += scalar(d, LaurentPoly::sigma(r, s, -2) - 1);
  return out;
}

AlgElt AlgElt::Tw(DatumPtr d, const WeylElt& w) { return H(d, w).scaled(sigma_w(*d, w)); }

AlgElt AlgElt::Tw_inv(DatumPtr d, const WeylElt& w) {
  AlgElt out = one(d);
  const auto& word = w.word();
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = mul(out, Ti_inv(d, *it));
  return out;
}

LaurentPoly AlgElt::coeff(const Coweight& lambda, const WeylElt& w) const {
  auto it = terms_.find(BasisKey{lambda, w});
  if (it == terms_.end()) return LaurentPoly(d_ ? d_->ring() : nullptr);
  return it->second;
}

void AlgElt::check_same(const AlgElt& o) const {
  if (d_ && o.d_ && d_ != o.d_) throw DatumMismatch("algebra elements over different data");
}

AlgElt& AlgElt::add_term(const Coweight& lambda, const WeylElt& w, const LaurentPoly& c) {
  accumulate(terms_, BasisKey{lambda, w}, c);
  return *this;
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  check_same(o);
  if (!d_) d_ = o.d_;
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  check_same(o);
  if (!d_) d_ = o.d_;
  for (const auto& [k, c] : o.terms_) accumulate(terms_, k, -c);
  return *this;
}

AlgElt AlgElt::operator+(const AlgElt& o) const {
  AlgElt r = *this;
  r += o;
  return r;
}

AlgElt AlgElt::operator-(const AlgElt& o) const {
  AlgElt r = *this;
  r -= o;
  return r;
}

AlgElt AlgElt::operator-() const { return scaled(-1); }

AlgElt AlgElt::scaled(const LaurentPoly& c) const {
  AlgElt r(d_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : terms_) accumulate(r.terms_, k, x * c);
  return r;
}

AlgElt AlgElt::operator*(const AlgElt& o) const { return mul(*this, o); }

bool AlgElt::operator==(const AlgElt& o) const {
  check_same(o);
  return terms_ == o.terms_;
}

std::string AlgElt::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string basis;
    bool zl = std::all_of(k.lambda.begin(), k.lambda.end(), [](Int x) { return x == 0; });
    if (!zl) basis = "Z[" + format_coweight(*d_, k.lambda) + "]";
    if (!k.w.is_identity()) basis += std::string(basis.empty() ? "" : "*") + "Hw[" + k.w.to_string() + "]";
    out += format_summand(c, basis, first);
    first = false;
  }
  return out;
}

LaurentPoly sigma_w(const RootDatum& d, const WeylElt& w) {
  Exponent e(d.num_symbols(), 0);
  for (int i : w.word()) e[d.symbol(i, false)] += d.m();
  return LaurentPoly::monomial(d.ring(), e);
}

LaurentPoly delta_half(const RootDatum& d, const Coweight& lambda) {
  IntVec a = d.delta_half_exponents(lambda);
  Exponent e(d.num_symbols(), 0);
  for (int i = 0; i < d.rank(); ++i) {
    e[d.symbol(i, false)] += a[i];
    e[d.symbol(i, true)] += a[i];
  }
  return LaurentPoly::monomial(d.ring(), e);
}

std::map<Coweight, LaurentPoly> blz_correction(const RootDatum& d, int i, const Coweight& lambda) {
  std::map<Coweight, LaurentPoly> out;
  Int a = d.alpha(i, lambda);
  const Coweight& cv = d.coroot(i);
  auto shift = [&](Int k) {
    Coweight y = lambda;
    for (std::size_t t = 0; t < y.size(); ++t) y[t] = checked_add(y[t], checked_mul(k, cv[t]));
    return y;
  };
  LaurentPoly ds = sigma_diff(d, i, false), dp = sigma_diff(d, i, true);
  if (a >= 0) {
    for (Int k = 0; k < a; ++k) out[shift(-k)] += (k % 2 == 0) ? ds : dp;
  } else {
    for (Int k = 1; k <= -a; ++k) out[shift(k)] -= (k % 2 == 0) ? ds : dp;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

namespace {

// H_i * H_w as a term map with lambda = `lambda`, scaled by c
void add_hi_hw(const RootDatum& d, int i, const Coweight& lambda, const WeylElt& w, const LaurentPoly& c,
               TermMap& out) {
  WeylElt rw = w.lmul(i);
  accumulate(out, BasisKey{lambda, rw}, c);
  if (rw.length() < w.length()) accumulate(out, BasisKey{lambda, w}, c * sigma_diff(d, i, false));
}

}  // namespace

AlgElt left_mul_Hi(int i, const AlgElt& e) {
  const DatumPtr& dp = e.datum();
  if (!dp) return e;
  const RootDatum& d = *dp;
  TermMap out;
  for (const auto& [k, c] : e.terms()) {
    add_hi_hw(d, i, d.reflect(i, k.lambda), k.w, c, out);
    for (const auto& [nu, b] : blz_correction(d, i, k.lambda)) accumulate(out, BasisKey{nu, k.w}, c * b);
  }
  enforce_cap(out);
  return AlgElt(dp, std::move(out));
}

namespace {

using TermPtr = std::shared_ptr<const TermMap>;

TermPtr hz_impl(const DatumPtr& d, Memo& memo, const WeylElt& w, const Coweight& mu) {
  auto key = std::make_pair(w.word(), mu);
  return memo_lookup(memo.mu, memo.hz, key, [&] {
    if (w.is_identity()) return std::make_shared<const TermMap>(AlgElt::Z(d, mu).terms());
    // w = r_i w' with i the first letter of the canonical word
    int i = w.word().front();
    TermPtr inner = hz_impl(d, memo, w.lmul(i), mu);
    return std::make_shared<const TermMap>(left_mul_Hi(i, AlgElt(d, *inner)).terms());
  });
}

TermPtr hh_impl(const DatumPtr& d, Memo& memo, const WeylElt& u, const WeylElt& v) {
  auto key = std::make_pair(u.word(), v.word());
  return memo_lookup(memo.mu, memo.hh, key, [&] {
    if (u.is_identity()) return std::make_shared<const TermMap>(AlgElt::H(d, v).terms());
    int i = u.word().front();
    TermPtr inner = hh_impl(d, memo, u.lmul(i), v);
    TermMap out;
    for (const auto& [k, c] : *inner) add_hi_hw(*d, i, k.lambda, k.w, c, out);
    return std::make_shared<const TermMap>(std::move(out));
  });
}

}  // namespace

AlgElt hw_times_z(const DatumPtr& d, const WeylElt& w, const Coweight& mu) {
  auto memo = datum_cache<Memo>(d);
  return AlgElt(d, *hz_impl(d, *memo, w, mu));
}

AlgElt hecke_hh(const DatumPtr& d, const WeylElt& u, const WeylElt& v) {
  auto memo = datum_cache<Memo>(d);
  return AlgElt(d, *hh_impl(d, *memo, u, v));
}

AlgElt mul(const AlgElt& a, const AlgElt& b) {
  if (a.datum() && b.datum() && a.datum() != b.datum()) throw DatumMismatch("algebra elements over different data");
  DatumPtr d = a.datum() ? a.datum() : b.datum();
  if (!d) return AlgElt();
  auto memo = datum_cache<Memo>(d);
  TermMap out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      LaurentPoly c = ca * cb;
      TermPtr mid = hz_impl(d, *memo, ka.w, kb.lambda);
      for (const auto& [km, cm] : *mid) {
        Coweight nu = ka.lambda;
        for (std::size_t t = 0; t < nu.size(); ++t) nu[t] = checked_add(nu[t], km.lambda[t]);
        LaurentPoly cc = c * cm;
        TermPtr hh = hh_impl(d, *memo, km.w, kb.w);
        for (const auto& [kh, ch] : *hh) accumulate(out, BasisKey{nu, kh.w}, cc * ch);
      }
      enforce_cap(out);
    }
  return AlgElt(d, std::move(out));
}

AlgElt hecke_wv_mul(const AlgElt& a, const AlgElt& b) {
  for (const auto* e : {&a, &b})
    for (const auto& [k, c] : e->terms())
      for (Int x : k.lambda)
        if (x != 0) throw DatumMismatch("hecke_wv_mul expects support on lambda = 0");
  return mul(a, b);
}

std::string format_coweight(const RootDatum& d, const Coweight& y) {
  std::string out;
  const auto& names = d.y_names();
  for (std::size_t t = 0; t < y.size(); ++t) {
    Int c = y[t];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    Int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += names[t];
  }
  return out.empty() ? "0" : out;
}

std::string format_summand(const LaurentPoly& c0, const std::string& basis, bool first) {
  LaurentPoly c = c0;
  bool neg = false;
  if (c.size() == 1 && c.terms().begin()->second < 0) {
    neg = true;
    c = -c;
  }
  std::string s = c.to_string();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  std::string body;
  if (basis.empty())
    body = (c.size() > 1 && !first) ? "(" + s + ")" : s;
  else if (c.is_constant() && c.constant_term() == 1)
    body = basis;
  else if (c.size() == 1)
    body = s + "*" + basis;
  else
    body = "(" + s + ")*" + basis;
  std::string sep = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  return sep + body;
}

}  // namespace hecke

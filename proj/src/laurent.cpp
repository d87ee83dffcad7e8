#include "hecke/laurent.hpp"

#include "hecke/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace hecke {

namespace {

bool is_zero_exp(const Exponent& e) {
  return std::all_of(e.begin(), e.end(), [](Int x) { return x == 0; });
}

// sort, merge equal exponents, drop zeros
void canonical(LaurentTerms& t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t k = 0; k < t.size();) {
    std::size_t j = k;
    Int c = 0;
    while (j < t.size() && t[j].first == t[k].first) c = checked_add(c, t[j++].second);
    if (c != 0) {
      if (out != k) t[out].first = std::move(t[k].first);
      t[out].second = c;
      ++out;
    }
    k = j;
  }
  t.resize(out);
}

// a + sign * b for sorted term lists
LaurentTerms merge(const LaurentTerms& a, const LaurentTerms& b, Int sign) {
  LaurentTerms r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, checked_mul(sign, b[j].second));
      ++j;
    } else {
      Int c = checked_add(a[i].second, checked_mul(sign, b[j].second));
      if (c != 0) r.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Int c) {
  if (c != 0) terms_.emplace_back(Exponent{}, c);
}

LaurentPoly::LaurentPoly(RingPtr ring, Int c) : ring_(std::move(ring)) {
  if (c != 0) terms_.emplace_back(Exponent(ring_ ? ring_->names.size() : 0, 0), c);
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, const Exponent& e, Int c) {
  LaurentPoly p(ring);
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

LaurentPoly LaurentPoly::sigma(RingPtr ring, int s, Int k) {
  Exponent e(ring->names.size(), 0);
  e[s] = checked_mul(k, ring->m);
  return monomial(ring, e);
}

LaurentPoly LaurentPoly::q(RingPtr ring, int s, Int k) { return sigma(ring, s, checked_mul(2, k)); }

void LaurentPoly::adopt(const LaurentPoly& o) {
  if (ring_ == o.ring_ || !o.ring_) return;
  if (!ring_) {
    // pure constant: re-key to the other ring
    Int c = constant_term();
    ring_ = o.ring_;
    terms_.clear();
    if (c != 0) terms_.emplace_back(Exponent(ring_->names.size(), 0), c);
    return;
  }
  throw SymbolMismatch("Laurent polynomials over different rings");
}

void LaurentPoly::normalize() { canonical(terms_); }

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && is_zero_exp(terms_.front().first);
}

Int LaurentPoly::constant_term() const {
  for (const auto& [e, c] : terms_)
    if (is_zero_exp(e)) return c;
  return 0;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (ring_ == o.ring_) {
    terms_ = merge(terms_, o.terms_, 1);
    return *this;
  }
  LaurentPoly rhs = o;
  rhs.adopt(*this);
  adopt(rhs);
  terms_ = merge(terms_, rhs.terms_, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (ring_ == o.ring_) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
  }
  LaurentPoly rhs = o;
  rhs.adopt(*this);
  adopt(rhs);
  terms_ = merge(terms_, rhs.terms_, -1);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::scaled(Int c) const {
  LaurentPoly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.second = checked_mul(t.second, c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (terms_.empty() || o.terms_.empty()) return LaurentPoly(ring_ ? ring_ : o.ring_);
  if (is_constant() && (!o.ring_ || ring_ == o.ring_)) return o.scaled(terms_.front().second);
  if (o.is_constant() && (!ring_ || ring_ == o.ring_)) return scaled(o.terms_.front().second);
  if (ring_ != o.ring_) {
    LaurentPoly a = *this, b = o;
    a.adopt(b);
    b.adopt(a);
    return a * b;
  }
  LaurentPoly r(ring_);
  r.terms_.reserve(terms_.size() * o.terms_.size());
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e = ea;
      for (std::size_t s = 0; s < e.size(); ++s) e[s] += eb[s];
      r.terms_.emplace_back(std::move(e), checked_mul(ca, cb));
    }
  if (terms_.size() > 1 && o.terms_.size() > 1) r.normalize();
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r(ring_);
  for (const auto& [x, c] : terms_) {
    Exponent y = x;
    if (y.size() < e.size()) y.resize(e.size(), 0);
    for (std::size_t s = 0; s < e.size(); ++s) y[s] += e[s];
    r.terms_.emplace_back(std::move(y), c);
  }
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (ring_ == o.ring_) return terms_ == o.terms_;
  LaurentPoly a = *this, b = o;
  try {
    a.adopt(b);
    b.adopt(a);
  } catch (const SymbolMismatch&) {
    return false;
  }
  return a.terms_ == b.terms_;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

bool LaurentPoly::is_monomial_unit() const {
  return terms_.size() == 1 && (terms_.front().second == 1 || terms_.front().second == -1);
}

bool LaurentPoly::is_primitive_monomial() const { return terms_.size() == 1 && terms_.front().second == 1; }

LaurentPoly LaurentPoly::inverse_unit() const {
  if (!is_monomial_unit()) throw NotMonomialUnit("not a unit monomial: " + to_string());
  Exponent e = terms_.front().first;
  Int c = terms_.front().second;
  for (auto& x : e) x = -x;
  return monomial(ring_, e, c);
}

LaurentPoly LaurentPoly::divide_by_monomial(const LaurentPoly& mono) const {
  return *this * mono.inverse_unit();
}

bool LaurentPoly::integral_in_q() const {
  Int step = 2 * (ring_ ? ring_->m : 1);
  for (const auto& [e, c] : terms_)
    for (Int x : e)
      if (x % step != 0) return false;
  return true;
}

Exponent LaurentPoly::min_exponent() const {
  Exponent r;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      r = e;
      first = false;
    } else {
      for (std::size_t s = 0; s < e.size(); ++s) r[s] = std::min(r[s], e[s]);
    }
  }
  return r;
}

namespace {

mpq_class power(const mpq_class& base, Int k) {
  mpq_class r = 1, b = base;
  bool inv = k < 0;
  Int n = inv ? -k : k;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) {
    if (r == 0) throw ArithmeticOverflow("division by zero at specialization");
    r = 1 / r;
  }
  return r;
}

}  // namespace

mpq_class LaurentPoly::specialize(const std::vector<mpq_class>& q_values,
                                  const std::optional<std::vector<mpq_class>>& sigma_values) const {
  Int m = ring_ ? ring_->m : 1;
  // callers may hand in uncanonicalized fractions such as 4/2
  std::vector<mpq_class> qv = q_values;
  for (auto& x : qv) x.canonicalize();
  std::optional<std::vector<mpq_class>> sv = sigma_values;
  if (sv)
    for (auto& x : *sv) x.canonicalize();
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = static_cast<long>(c);
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (e[s] % (2 * m) == 0) {
        t *= power(qv.at(s), e[s] / (2 * m));
      } else if (sv && e[s] % m == 0) {
        t *= power(sv->at(s), e[s] / m);
      } else {
        throw FractionalExponentAtSpecialization("exponent " + std::to_string(e[s]) + "/" +
                                                 std::to_string(2 * m) + " of symbol " +
                                                 std::to_string(s));
      }
    }
    total += t;
  }
  return total;
}

std::string format_exponent(const Ring& r, const Exponent& e) {
  std::string out;
  for (std::size_t s = 0; s < e.size(); ++s) {
    if (e[s] == 0) continue;
    if (!out.empty()) out += "*";
    out += r.names[s];
    Int num = e[s], den = 2 * r.m;
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den == 1) {
      if (num != 1) out += "^" + std::to_string(num);
    } else {
      out += "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
  }
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponent, Int>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    Int da = std::accumulate(a.first.begin(), a.first.end(), Int(0));
    Int db = std::accumulate(b.first.begin(), b.first.end(), Int(0));
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : ts) {
    std::string mono = ring_ ? format_exponent(*ring_, e) : "";
    Int a = c < 0 ? -c : c;
    std::string body;
    if (mono.empty())
      body = std::to_string(a);
    else if (a == 1)
      body = mono;
    else
      body = std::to_string(a) + "*" + mono;
    if (first)
      out += (c < 0 ? "-" : "") + body;
    else
      out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, const std::string& s) : ring_(std::move(ring)), s_(s) {}

  LaurentPoly run() {
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("Laurent polynomial '" + s_ + "': " + why + " at position " + std::to_string(pos_));
  }
  Int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }
  LaurentPoly expr() {
    LaurentPoly acc(ring_);
    bool neg = false;
    skip();
    if (accept('-'))
      neg = true;
    else
      accept('+');
    LaurentPoly t = term();
    acc += neg ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }
  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }
  // exponent as a rational num/den
  std::pair<Int, Int> exponent() {
    if (accept('(')) {
      bool neg = accept('-');
      Int num = integer(), den = 1;
      if (accept('/')) den = integer();
      if (!accept(')')) fail("expected ')'");
      return {neg ? -num : num, den};
    }
    bool neg = accept('-');
    Int num = integer();
    return {neg ? -num : num, 1};
  }
  LaurentPoly factor() {
    skip();
    LaurentPoly base(ring_);
    if (accept('(')) {
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      base = LaurentPoly(ring_, integer());
    } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (!ring_) fail("symbol without a ring");
      auto it = ring_->aliases.find(name);
      if (it == ring_->aliases.end()) fail("unknown symbol '" + name + "'");
      base = LaurentPoly::q(ring_, it->second, 1);
    } else {
      fail("expected factor");
    }
    if (!accept('^')) return base;
    auto [num, den] = exponent();
    if (base.is_monomial_unit() && base.constant_term() == 0) {
      Exponent e = base.terms().begin()->first;
      Int c = base.terms().begin()->second;
      for (auto& x : e) {
        if ((x * num) % den != 0) fail("exponent leaves (1/m)Z");
        x = x * num / den;
      }
      if (c == -1 && den != 1) fail("fractional power of a negative monomial");
      return LaurentPoly::monomial(ring_, e, c == -1 && num % 2 != 0 ? -1 : 1);
    }
    if (den != 1 || num < 0) fail("only nonnegative integer powers of sums");
    LaurentPoly r(ring_, 1);
    for (Int k = 0; k < num; ++k) r *= base;
    return r;
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(RingPtr ring, const std::string& text) { return PolyParser(std::move(ring), text).run(); }

LaurentPoly q_star(const RootDatum& d, int i, int n) {
  LaurentPoly r(d.ring(), 1);
  for (int k = 0; k < n; ++k) r *= LaurentPoly::q(d.ring(), d.symbol(i, k % 2 == 1));
  return r;
}

LaurentPoly sigma_diff(const RootDatum& d, int i, bool primed) {
  int s = d.symbol(i, primed);
  return LaurentPoly::sigma(d.ring(), s, 1) - LaurentPoly::sigma(d.ring(), s, -1);
}

}  // namespace hecke

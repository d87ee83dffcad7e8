#include "hecke/extended.hpp"

#include "hecke/bases.hpp"
#include "hecke/cache.hpp"
#include "hecke/errors.hpp"

#include <algorithm>
#include <numeric>

namespace hecke {

namespace {

struct OmegaCache {
  std::once_flag once;
  std::vector<OmegaElt> group;
};

// image of every V basis vector under omega, as rows in V coordinates;
// nullopt when the pairing constraints have no solution
std::optional<RatMat> omega_on_v(const RootDatum& d, const std::vector<int>& perm) {
  int n = d.rank(), dim = d.dim_v();
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  RatMat rows(dim, RatVec(dim, 0));
  for (int i = 0; i < n; ++i) rows[i][perm[i]] = 1;
  // independent rows of A, to solve y A = b
  std::vector<int> pick;
  RatMat sub;
  RatMat a = to_rat(d.cartan());
  for (int i = 0; i < n; ++i) {
    RatMat t = sub;
    t.push_back(a[i]);
    if (mat_rank(t) > static_cast<int>(sub.size())) {
      sub = t;
      pick.push_back(i);
    }
  }
  const IntMat& ex = d.realization_extra();
  for (int k = 0; k < dim - n; ++k) {
    // omega(d_k) = d_k + sum y_i alpha_i^vee with alpha_j(omega d_k) = alpha_{inv j}(d_k)
    RatVec b(n);
    for (int j = 0; j < n; ++j) b[j] = Rat(static_cast<long>(ex[k][inv[j]] - ex[k][j]));
    RatVec y;
    if (!solve_row(sub, b, y)) return std::nullopt;
    for (std::size_t p = 0; p < pick.size(); ++p) rows[n + k][pick[p]] = y[p];
    rows[n + k][n + k] += 1;
  }
  return rows;
}

std::optional<OmegaElt> build_omega(const RootDatum& d, const std::vector<int>& perm, bool check_classes) {
  int n = d.rank();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d.cartan(perm[i], perm[j]) != d.cartan(i, j)) return std::nullopt;
  if (check_classes)
    for (int i = 0; i < n; ++i)
      for (bool p : {false, true})
        if (d.symbol(i, p) != d.symbol(perm[i], p)) return std::nullopt;
  auto rows = omega_on_v(d, perm);
  if (!rows) return std::nullopt;
  OmegaElt om;
  om.perm = perm;
  for (const auto& b : d.y_basis()) {
    RatVec img(d.dim_v(), 0);
    for (int s = 0; s < d.dim_v(); ++s)
      for (int t = 0; t < d.dim_v(); ++t) img[t] += b[s] * (*rows)[s][t];
    auto y = d.from_v(img);
    if (!y) return std::nullopt;
    om.y_map.push_back(*y);
  }
  return om;
}

ExtAlgElt from_parts(const DatumPtr& d, const std::map<std::vector<int>, AlgElt>& parts) {
  ExtAlgElt r(d);
  for (const auto& [p, e] : parts) r += ExtAlgElt(omega_from_perm(d, p), e);
  return r;
}

}  // namespace

bool OmegaElt::is_identity() const {
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != static_cast<int>(i)) return false;
  return true;
}

Coweight OmegaElt::apply(const Coweight& y) const { return vec_mat(y, y_map); }

WeylElt OmegaElt::apply(const RootDatum& d, const WeylElt& w) const {
  std::vector<int> word = w.word();
  for (auto& i : word) i = perm[i];
  return WeylElt::from_word(d, word);
}

std::string OmegaElt::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i] + 1);
  return s;
}

const std::vector<OmegaElt>& diagram_automorphisms(const DatumPtr& d) {
  auto c = datum_cache<OmegaCache>(d);
  std::call_once(c->once, [&] {
    std::vector<int> p(d->rank());
    std::iota(p.begin(), p.end(), 0);
    do {
      if (auto om = build_omega(*d, p, true)) c->group.push_back(*om);
    } while (std::next_permutation(p.begin(), p.end()));
  });
  // the cache keeps the vector alive as long as the datum
  return c->group;
}

DatumPtr omega_compatible(const DatumPtr& d) {
  std::vector<std::pair<int, int>> ties;
  std::vector<int> p(d->rank());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (build_omega(*d, p, false))
      for (int i = 0; i < d->rank(); ++i)
        if (p[i] != i) ties.emplace_back(i, p[i]);
  } while (std::next_permutation(p.begin(), p.end()));
  if (ties.empty()) return d;
  return RootDatum::build(d->cartan(), d->y_basis(), d->labels(), ties);
}

OmegaElt omega_from_perm(const DatumPtr& d, const std::vector<int>& perm) {
  for (const auto& om : diagram_automorphisms(d))
    if (om.perm == perm) return om;
  std::string s;
  for (int x : perm) s += std::to_string(x + 1) + " ";
  throw OmegaNotAdmitted("permutation " + s + "is not a diagram automorphism of this datum");
}

OmegaElt omega_compose(const DatumPtr& d, const OmegaElt& a, const OmegaElt& b) {
  std::vector<int> p(a.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm[b.perm[i]];
  return omega_from_perm(d, p);
}

OmegaElt omega_inverse(const DatumPtr& d, const OmegaElt& a) {
  std::vector<int> p(a.perm.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[a.perm[i]] = static_cast<int>(i);
  return omega_from_perm(d, p);
}

AlgElt twist(const OmegaElt& om, const AlgElt& e) {
  if (om.is_identity()) return e;
  const DatumPtr& d = e.datum();
  AlgElt r(d);
  for (const auto& [k, c] : e.terms()) r.add_term(om.apply(k.lambda), om.apply(*d, k.w), c);
  return r;
}

ExtAlgElt::ExtAlgElt(const OmegaElt& om, const AlgElt& e) : d_(e.datum()) {
  for (const auto& [k, c] : e.terms()) terms_.emplace(ExtKey{om.perm, k}, c);
}

ExtAlgElt ExtAlgElt::lift(const AlgElt& e) { return ExtAlgElt(diagram_automorphisms(e.datum()).front(), e); }

ExtAlgElt ExtAlgElt::T_omega(DatumPtr d, const OmegaElt& om) { return ExtAlgElt(om, AlgElt::one(d)); }

AlgElt ExtAlgElt::component(const OmegaElt& om) const {
  TermMap t;
  for (const auto& [k, c] : terms_)
    if (k.omega == om.perm) t.emplace(k.key, c);
  return AlgElt(d_, std::move(t));
}

ExtAlgElt& ExtAlgElt::operator+=(const ExtAlgElt& o) {
  if (!d_) d_ = o.d_;
  if (o.d_ && o.d_ != d_) throw DatumMismatch("extended elements over different data");
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

ExtAlgElt ExtAlgElt::operator+(const ExtAlgElt& o) const {
  ExtAlgElt r = *this;
  r += o;
  return r;
}

ExtAlgElt ExtAlgElt::operator-(const ExtAlgElt& o) const { return *this + o.scaled(-1); }

ExtAlgElt ExtAlgElt::scaled(const LaurentPoly& c) const {
  ExtAlgElt r(d_);
  for (const auto& [k, v] : terms_) {
    LaurentPoly x = v * c;
    if (!x.is_zero()) r.terms_.emplace(k, std::move(x));
  }
  return r;
}

std::string ExtAlgElt::to_string() const {
  if (terms_.empty()) return "0";
  std::map<std::vector<int>, bool> seen;
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (seen.count(it->first.omega)) continue;
    seen[it->first.omega] = true;
    OmegaElt om = omega_from_perm(d_, it->first.omega);
    std::string body = component(om).to_string();
    std::string head = om.is_identity() ? "" : "Tomega[" + om.to_string() + "]";
    std::string s = head.empty() ? body : body == "1" ? head : head + "*(" + body + ")";
    if (head.empty() && terms_.size() > 1 && seen.size() > 1) s = "(" + body + ")";
    out += (first ? "" : " + ") + s;
    first = false;
  }
  return out;
}

ExtAlgElt ext_mul(const ExtAlgElt& a, const ExtAlgElt& b) {
  const DatumPtr& d = a.datum() ? a.datum() : b.datum();
  std::map<std::vector<int>, AlgElt> pa, pb;
  for (const auto& [k, c] : a.terms()) pa.try_emplace(k.omega, d).first->second.add_term(k.key.lambda, k.key.w, c);
  for (const auto& [k, c] : b.terms()) pb.try_emplace(k.omega, d).first->second.add_term(k.key.lambda, k.key.w, c);
  std::map<std::vector<int>, AlgElt> out;
  for (const auto& [p1, e1] : pa) {
    OmegaElt w1 = omega_from_perm(d, p1);
    for (const auto& [p2, e2] : pb) {
      OmegaElt w2 = omega_from_perm(d, p2);
      AlgElt prod = mul(twist(omega_inverse(d, w2), e1), e2);
      OmegaElt w12 = omega_compose(d, w1, w2);
      auto it = out.try_emplace(w12.perm, d).first;
      it->second += prod;
    }
  }
  return from_parts(d, out);
}

ExtAlgElt ext_twist(const OmegaElt& om, const ExtAlgElt& e) {
  const DatumPtr& d = e.datum();
  OmegaElt inv = omega_inverse(d, om);
  ExtAlgElt r(d);
  for (const auto& [k, c] : e.terms()) {
    OmegaElt w = omega_compose(d, omega_compose(d, om, omega_from_perm(d, k.omega)), inv);
    r += ExtAlgElt(w, AlgElt::basis_term(d, om.apply(k.key.lambda), om.apply(*d, k.key.w), c));
  }
  return r;
}

AffineData affine_data(const DatumPtr& d) {
  if (!d->affine_type()) throw NotAffineType("affine data requested for a non-affine datum");
  AffineData a;
  a.delta = d->imaginary_delta();
  a.c = d->central_c();
  a.c_y = d->coroot_comb(a.c);
  Int g = gcd_vec(a.c_y);
  a.lambda_c = a.c_y;
  for (auto& x : a.lambda_c) x /= g;
  return a;
}

Int degree(const RootDatum& d, const Coweight& lambda) { return d.pair(d.imaginary_delta(), lambda); }

std::map<Int, ExtAlgElt> grade(const ExtAlgElt& e) {
  const DatumPtr& d = e.datum();
  if (!d->affine_type()) throw NotAffineType("grading needs an affine datum");
  IntVec delta = d->imaginary_delta();
  std::map<Int, ExtAlgElt> out;
  for (const auto& [k, c] : e.terms()) {
    Int n = d->pair(delta, k.key.lambda);
    auto it = out.try_emplace(n, d).first;
    it->second += ExtAlgElt(omega_from_perm(d, k.omega), AlgElt::basis_term(d, k.key.lambda, k.key.w, c));
  }
  return out;
}

ExtAlgElt daha_degree_zero(const ExtAlgElt& e) {
  auto g = grade(e);
  auto it = g.find(0);
  return it == g.end() ? ExtAlgElt(e.datum()) : it->second;
}

bool is_central_check(const DatumPtr& d, const Coweight& lambda) {
  AffineData a = affine_data(d);
  // lambda = k lambda_c
  Int k = 0;
  bool set = false;
  for (std::size_t t = 0; t < lambda.size(); ++t) {
    if (a.lambda_c[t] == 0) {
      if (lambda[t] != 0) throw NotAffineType("coweight is not a multiple of lambda_c");
      continue;
    }
    if (lambda[t] % a.lambda_c[t] != 0) throw NotAffineType("coweight is not a multiple of lambda_c");
    Int q = lambda[t] / a.lambda_c[t];
    if (set && q != k) throw NotAffineType("coweight is not a multiple of lambda_c");
    k = q;
    set = true;
  }
  ExtAlgElt t = ExtAlgElt::lift(T_lambda(d, lambda));
  std::vector<ExtAlgElt> gens;
  for (int i = 0; i < d->rank(); ++i) {
    gens.push_back(ExtAlgElt::lift(AlgElt::Hi(d, i)));
    gens.push_back(ExtAlgElt::lift(AlgElt::Z(d, d->coroot(i))));
  }
  for (int s = 0; s < d->y_rank(); ++s) {
    Coweight b = d->zero();
    b[s] = 1;
    gens.push_back(ExtAlgElt::lift(AlgElt::Z(d, b)));
  }
  for (const auto& om : diagram_automorphisms(d)) gens.push_back(ExtAlgElt::T_omega(d, om));
  for (const auto& g : gens)
    if (ext_mul(t, g) != ext_mul(g, t)) return false;
  return true;
}

}  // namespace hecke

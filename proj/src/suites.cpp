#include "hecke/suites.hpp"

#include "hecke/bases.hpp"
#include "hecke/errors.hpp"
#include "hecke/extended.hpp"
#include "hecke/geometry.hpp"

#include <functional>
#include <random>

namespace hecke {

namespace {

using Rng = std::mt19937_64;

Coweight random_coweight(const RootDatum& d, Rng& rng, int bound) {
  std::uniform_int_distribution<int> u(-bound, bound);
  Coweight y(d.y_rank());
  while (true) {
    Int l1 = 0;
    for (auto& x : y) {
      x = u(rng);
      l1 += x < 0 ? -x : x;
    }
    if (l1 <= bound) return y;
  }
}

Coweight random_dominant(const RootDatum& d, Rng& rng, int bound) {
  for (int k = 0; k < 2000; ++k) {
    Coweight y = random_coweight(d, rng, bound);
    if (d.is_dominant(y)) return y;
  }
  return d.zero();
}

Coweight random_positive(const RootDatum& d, Rng& rng, int bound) {
  while (true) {
    Coweight y = random_coweight(d, rng, bound);
    if (d.tits_cone_membership(y).status == ConeStatus::Positive) return y;
  }
}

LaurentPoly random_coeff(const RootDatum& d, Rng& rng) {
  std::uniform_int_distribution<int> co(-3, 3), ex(-2, 2), nt(1, 2);
  LaurentPoly p(d.ring());
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    Exponent e(d.num_symbols());
    for (auto& x : e) x = ex(rng) * d.m();
    p += LaurentPoly::monomial(d.ring(), e, co(rng));
  }
  if (p.is_zero()) p = LaurentPoly(d.ring(), 1);
  return p;
}

AlgElt random_elt(const DatumPtr& d, Rng& rng, int terms = 3, int lam = 3, int len = 3) {
  std::vector<WeylElt> ws = enumerate_up_to_length(*d, len);
  std::uniform_int_distribution<int> nt(1, terms);
  std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
  AlgElt e(d);
  int k = nt(rng);
  for (int t = 0; t < k; ++t) e.add_term(random_coweight(*d, rng, lam), ws[pick(rng)], random_coeff(*d, rng));
  return e;
}

ExtAlgElt random_ext(const DatumPtr& d, Rng& rng) {
  const auto& g = diagram_automorphisms(d);
  std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
  ExtAlgElt r(d);
  for (int k = 0; k < 2; ++k) r += ExtAlgElt(g[pick(rng)], random_elt(d, rng, 2, 2, 2));
  return r;
}

AlgElt flip(const AlgElt& e) {
  AlgElt r = e;
  if (e.is_zero()) return AlgElt::one(e.datum());
  const auto& [k, c] = *e.terms().begin();
  r.add_term(k.lambda, k.w, -(c + c));
  return r;
}

ExtAlgElt flip(const ExtAlgElt& e) {
  if (e.is_zero()) return ExtAlgElt::lift(AlgElt::one(e.datum()));
  const auto& [k, c] = *e.terms().begin();
  return e - ExtAlgElt(omega_from_perm(e.datum(), k.omega), AlgElt::basis_term(e.datum(), k.key.lambda, k.key.w, c + c));
}

TCoords flip(const TCoords& t) {
  TCoords r = t;
  if (r.empty()) return r;
  r.begin()->second = -r.begin()->second;
  return r;
}

Coweight add(const Coweight& a, const Coweight& b) {
  Coweight r = a;
  for (std::size_t t = 0; t < r.size(); ++t) r[t] += b[t];
  return r;
}

AlgElt apply_word_L(const std::vector<int>& word, AlgElt e) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) e = left_mul_Hi(*it, e);
  return e;
}

class Runner {
 public:
  Runner(std::string name, bool fault) : fault_(fault) { rep_.name = std::move(name); }

  template <class T>
  void check(const T& lhs, const T& rhs, const std::string& what) {
    bool eq = fault_ ? flip(lhs) == rhs : lhs == rhs;
    if (eq) {
      ++rep_.passed;
    } else {
      ++rep_.failed;
      if (rep_.failures.size() < 5) rep_.failures.push_back(what);
    }
  }
  void check_bool(bool ok, const std::string& what) {
    if (fault_) ok = !ok;
    if (ok) {
      ++rep_.passed;
    } else {
      ++rep_.failed;
      if (rep_.failures.size() < 5) rep_.failures.push_back(what);
    }
  }
  void skip() { ++rep_.skipped; }
  SuiteReport done() { return rep_; }

 private:
  bool fault_;
  SuiteReport rep_;
};

std::string key_str(const RootDatum& d, const Coweight& l, const WeylElt& w) {
  return format_coweight(d, l) + "." + w.to_string();
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"assoc", "braid",     "quadratic", "blt",   "blx",    "blz",     "roundtrip", "triangular",
          "law451", "dominant", "grading",   "centrality", "twist", "degree0", "geometric"};
}

SuiteReport run_suite(const DatumPtr& d, const std::string& suite, std::uint64_t seed, int n, bool fault) {
  Rng rng(seed);
  Runner r(suite, fault);
  int rank = d->rank();
  std::uniform_int_distribution<int> pick_i(0, rank - 1);
  auto ws = enumerate_up_to_length(*d, 3);
  std::uniform_int_distribution<std::size_t> pick_w(0, ws.size() - 1);
  WeylElt id = WeylElt::identity(*d);

  if (suite == "assoc") {
    for (int k = 0; k < n; ++k) {
      AlgElt a = random_elt(d, rng), b = random_elt(d, rng), c = random_elt(d, rng);
      r.check(mul(mul(a, b), c), mul(a, mul(b, c)), "(ab)c != a(bc) for a = " + a.to_string());
    }
  } else if (suite == "braid") {
    for (int k = 0; k < n; ++k) {
      AlgElt e = random_elt(d, rng);
      for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j) {
          Int p = d->cartan(i, j) * d->cartan(j, i);
          int m = p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : p == 3 ? 6 : 0;
          if (m == 0) {
            r.skip();
            continue;
          }
          std::vector<int> w1, w2;
          for (int t = 0; t < m; ++t) {
            w1.push_back(t % 2 ? j : i);
            w2.push_back(t % 2 ? i : j);
          }
          r.check(apply_word_L(w1, e), apply_word_L(w2, e), "braid " + std::to_string(i + 1) + "," + std::to_string(j + 1));
        }
      if (rank == 1) r.skip();
    }
  } else if (suite == "quadratic") {
    for (int k = 0; k < n; ++k) {
      AlgElt e = random_elt(d, rng);
      int i = pick_i(rng);
      AlgElt le = left_mul_Hi(i, e);
      r.check(left_mul_Hi(i, le), le.scaled(sigma_diff(*d, i, false)) + e, "quadratic " + std::to_string(i + 1));
    }
  } else if (suite == "blt") {
    for (int k = 0; k < n; ++k) {
      Coweight l = random_dominant(*d, rng, 3), m = random_dominant(*d, rng, 3);
      int i = pick_i(rng);
      r.check(mul(mul(T_lambda(d, l), AlgElt::Ti(d, i)), T_lambda(d, m)), blt_closed_form(d, l, m, i),
              "BLT " + format_coweight(*d, l) + " " + format_coweight(*d, m));
    }
  } else if (suite == "blx" || suite == "blz") {
    for (int k = 0; k < n; ++k) {
      Coweight l = random_coweight(*d, rng, 4);
      int i = pick_i(rng);
      auto [a, b] = suite == "blx" ? blx_relation_check(d, l, i) : blz_relation_check(d, l, i);
      r.check(a, b, suite + " " + format_coweight(*d, l) + " i=" + std::to_string(i + 1));
    }
  } else if (suite == "roundtrip" || suite == "triangular") {
    for (int k = 0; k < n; ++k) {
      WPlusIndex idx{random_positive(*d, rng, 3), ws[pick_w(rng)]};
      if (suite == "roundtrip")
        r.check(express_in_TW_basis(T_bold(d, idx)), TCoords{{idx, LaurentPoly(d->ring(), 1)}},
                "roundtrip " + key_str(*d, idx.lambda, idx.w));
      else
        r.check_bool(tw_diagonal(d, idx).is_primitive_monomial(), "diagonal " + key_str(*d, idx.lambda, idx.w));
    }
  } else if (suite == "law451") {
    for (int k = 0; k < n; ++k) {
      Coweight mu = random_dominant(*d, rng, 4), lam = random_positive(*d, rng, 3);
      Coweight s = add(lam, mu);
      if (!d->is_dominant(s)) {
        r.skip();
        continue;
      }
      r.check(mul(T_lambda(d, mu), X_elt(d, lam)), T_lambda(d, s), "T_mu X^lambda " + format_coweight(*d, s));
    }
  } else if (suite == "dominant") {
    for (int k = 0; k < n; ++k) {
      Coweight l = random_dominant(*d, rng, 4), m = random_dominant(*d, rng, 4);
      r.check(structure_constants(d, {l, id}, {m, id}), TCoords{{{add(l, m), id}, LaurentPoly(d->ring(), 1)}},
              "dominant " + format_coweight(*d, l) + " " + format_coweight(*d, m));
    }
  } else if (suite == "grading" || suite == "degree0" || suite == "centrality") {
    if (!d->affine_type()) {
      r.skip();
      return r.done();
    }
    for (int k = 0; k < n; ++k) {
      if (suite == "centrality") {
        Coweight lc = affine_data(d).lambda_c;
        std::uniform_int_distribution<int> mult(-2, 2);
        int m = mult(rng);
        Coweight y = lc, ny = lc;
        for (std::size_t t = 0; t < y.size(); ++t) y[t] *= m, ny[t] *= -m;
        r.check_bool(is_central_check(d, y), "T_lambda_c central");
        r.check(mul(T_lambda(d, y), T_lambda(d, ny)), AlgElt::one(d), "T_lambda_c invertible");
        continue;
      }
      ExtAlgElt x = random_ext(d, rng), y = random_ext(d, rng);
      if (suite == "grading") {
        auto gx = grade(x), gy = grade(y);
        std::map<Int, ExtAlgElt> want;
        for (const auto& [n1, e1] : gx)
          for (const auto& [n2, e2] : gy) want.try_emplace(n1 + n2, d).first->second += ext_mul(e1, e2);
        for (auto it = want.begin(); it != want.end();) it = it->second.is_zero() ? want.erase(it) : std::next(it);
        auto got = grade(ext_mul(x, y));
        bool eq = got == want;
        r.check_bool(eq, "grading");
      } else {
        ExtAlgElt z = ext_mul(daha_degree_zero(x), daha_degree_zero(y));
        r.check(daha_degree_zero(z), z, "degree-0 closure");
      }
    }
  } else if (suite == "twist") {
    const auto& g = diagram_automorphisms(d);
    for (int k = 0; k < n; ++k) {
      ExtAlgElt a = random_ext(d, rng), b = random_ext(d, rng);
      for (const auto& om : g) {
        r.check(ext_twist(om, ext_mul(a, b)), ext_mul(ext_twist(om, a), ext_twist(om, b)), "twist " + om.to_string());
        ExtAlgElt t = ExtAlgElt::T_omega(d, om), ti = ExtAlgElt::T_omega(d, omega_inverse(d, om));
        r.check(ext_twist(om, a), ext_mul(ext_mul(t, a), ti), "conjugation " + om.to_string());
      }
    }
  } else if (suite == "geometric") {
    if (!d->finite_type()) {
      r.skip();
      return r.done();
    }
    auto all = enumerate_all(*d);
    std::uniform_int_distribution<std::size_t> pw(0, all.size() - 1);
    for (int k = 0; k < n; ++k) {
      Coweight lam = random_coweight(*d, rng, 2), mu = random_coweight(*d, rng, 2);
      Coweight mpp = d->dominant_rep(mu).first;
      bool regular = true;
      for (int i = 0; i < rank; ++i) regular = regular && d->alpha(i, mpp) > 0;
      if (!regular) {
        r.skip();
        continue;
      }
      WPlusIndex w{lam, all[pw(rng)]}, v{mu, all[pw(rng)]};
      TCoords alg = structure_constants(d, w, v), geo;
      for (const auto& [u, c] : alg) {
        LaurentPoly g = geometric_structure_constant(d, w, v, u);
        if (!g.is_zero()) geo[u] = g;
      }
      r.check(geo, alg, "geometric " + key_str(*d, lam, w.w) + " * " + key_str(*d, mu, v.w));
    }
  } else {
    throw ParseError("unknown suite '" + suite + "'");
  }
  return r.done();
}

}  // namespace hecke

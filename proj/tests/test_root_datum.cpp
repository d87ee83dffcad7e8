#include "doctest.h"
#include "fixtures.hpp"
#include "hecke/errors.hpp"
#include "hecke/weyl.hpp"

#include <set>

using namespace hecke;

TEST_CASE("build: A1 default lattice") {
  auto d = fx::a1();
  CHECK(d->rank() == 1);
  CHECK(d->dim_v() == 1);
  CHECK(d->m() == 1);
  CHECK(d->finite_type());
  CHECK(d->real_roots(5).size() == 2);
}

TEST_CASE("build: A2 with P^vee pairs fundamental coweights dually") {
  auto d = fx::a2_pvee();
  // oracle: the given generators are A^{-1} columns, so alpha_i(w_j) = delta_ij
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Coweight e{0, 0};
      e[j] = 1;
      CHECK(d->alpha(i, e) == (i == j ? 1 : 0));
    }
  CHECK(d->m() == 3);
}

TEST_CASE("build: axioms") {
  CHECK_THROWS_AS(RootDatum::build({{2, 0}, {-1, 2}}), NotGCM);
  CHECK_THROWS_AS(RootDatum::build({{2, 1}, {1, 2}}), NotGCM);
  CHECK_THROWS_AS(RootDatum::build({{3}}), NotGCM);
  // alpha(alpha^vee / 4) = 1/2
  CHECK_THROWS_AS(RootDatum::build({{2}}, RatMat{{rat(1, 4)}}), LatticeOutOfRange);
  // 2 alpha^vee Z misses alpha^vee
  CHECK_THROWS_AS(RootDatum::build({{2}}, RatMat{{rat(2)}}), LatticeOutOfRange);
}

TEST_CASE("parameter classes") {
  CHECK(fx::a2()->num_symbols() == 1);
  auto a1 = fx::a1();
  CHECK(a1->num_symbols() == 2);
  CHECK(a1->symbol(0, false) != a1->symbol(0, true));
  CHECK(fx::a1_pvee()->num_symbols() == 1);
  // B2: alpha_2(alpha_1^vee) = -1 is odd, alpha_1 takes only even values on Q^vee
  auto b2 = fx::b2();
  CHECK(b2->symbol(1, false) == b2->symbol(1, true));
  CHECK(b2->symbol(0, false) != b2->symbol(0, true));
  CHECK(b2->num_symbols() == 3);
  // affine A1 with Y = Q^vee: all values even, four symbols
  CHECK(fx::affine_a1()->num_symbols() == 4);
}

namespace {

// brute-force oracle: images of simple roots under all words up to length L
std::set<IntVec> reflection_orbit(const RootDatum& d, int L, Int height_bound) {
  int n = d.rank();
  std::set<IntVec> all, frontier;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    frontier.insert(e);
  }
  all = frontier;
  for (int step = 0; step < L; ++step) {
    std::set<IntVec> next;
    for (const auto& b : frontier)
      for (int i = 0; i < n; ++i) {
        IntVec nb = b;
        Int p = 0;
        for (int j = 0; j < n; ++j) p += b[j] * d.cartan(i, j);
        nb[i] -= p;
        if (all.insert(nb).second) next.insert(nb);
      }
    frontier = next;
  }
  std::set<IntVec> out;
  for (const auto& b : all) {
    Int h = 0;
    for (Int x : b) h += std::abs(x);
    if (h <= height_bound) out.insert(b);
  }
  return out;
}

}  // namespace

TEST_CASE("real roots against reflection orbits") {
  auto a2 = fx::a2();
  auto r = a2->real_roots(2);
  CHECK(r.size() == 6);
  for (auto d : {fx::a1(), fx::a2(), fx::b2(), fx::affine_a1()}) {
    std::set<IntVec> got;
    for (const auto& x : d->real_roots(3)) got.insert(x.root);
    CHECK(got == reflection_orbit(*d, 8, 3));
  }
  // coroot pairing: beta(beta^vee) = 2
  for (const auto& x : fx::b2()->real_roots(10)) CHECK(fx::b2()->pair(x.root, x.coroot_y) == 2);
}

TEST_CASE("Tits cone membership") {
  auto a1 = fx::a1();
  auto r = a1->tits_cone_membership({1});
  CHECK(r.status == ConeStatus::Positive);
  CHECK(r.word.empty());
  r = a1->tits_cone_membership({-1});
  CHECK(r.status == ConeStatus::Positive);
  CHECK(r.dominant == Coweight{1});
  CHECK(r.word == std::vector<int>{0});

  auto aff = fx::affine_a1();
  Coweight lam{1, -1};
  // oracle: delta(lam) = 0 and lam is not proportional to c = (1,1)
  IntVec delta{1, 1};
  CHECK(aff->pair(delta, lam) == 0);
  CHECK(aff->tits_cone_membership(lam).status == ConeStatus::NotInCone);
  CHECK(aff->tits_cone_membership({2, 2}).status == ConeStatus::Positive);
  CHECK(aff->tits_cone_membership({-2, -2}).status == ConeStatus::Positive);

  auto affd = fx::affine_a1_d();
  // level one: always reaches the dominant chamber
  CHECK(affd->tits_cone_membership({5, -3, 1}).status == ConeStatus::Positive);
  CHECK(affd->tits_cone_membership({5, -3, -1}).status == ConeStatus::NotInCone);
}

TEST_CASE("dominant_rep recovers minimal w") {
  auto d = fx::a2();
  Coweight top{1, 1};
  WeylElt w12 = WeylElt::from_word(*d, {0, 1});
  Coweight lam = w12.apply(top);
  auto [dom, w] = d->dominant_rep(lam);
  CHECK(dom == top);
  // oracle: minimal-length element of W mapping top to lam
  int best = 100;
  WeylElt arg;
  for (const auto& x : enumerate_all(*d))
    if (x.apply(top) == lam && x.length() < best) {
      best = x.length();
      arg = x;
    }
  CHECK(w == arg);
  CHECK(w == w12);

  std::mt19937_64 rng(7);
  for (auto dd : {fx::a2(), fx::b2(), fx::a2_pvee()})
    for (int k = 0; k < 50; ++k) {
      Coweight y = fx::random_coweight(*dd, rng, 4);
      auto [p, u] = dd->dominant_rep(y);
      CHECK(dd->is_dominant(p));
      CHECK(u.apply(p) == y);
      for (int j : stabilizer_indices(*dd, p)) CHECK(!u.is_right_descent(j));
    }
}

TEST_CASE("qvee order") {
  auto a1 = fx::a1();
  CHECK(a1->qvee_leq({0}, {1}));
  CHECK(!a1->qvee_leq({1}, {0}));
  CHECK(a1->qvee_leq({3}, {3}));
  auto a2 = fx::a2();
  Coweight top{1, 0};
  CHECK(a2->qvee_leq(a2->reflect(0, top), top));
  auto p = fx::a1_pvee();
  bool span = false;
  // fundamental coweight minus zero lies in the span but not in Q^vee_+
  CHECK(!p->qvee_leq({0}, {1}, &span));
  CHECK(span);
  auto affd = fx::affine_a1_d();
  CHECK(!affd->qvee_leq({0, 0, 0}, {0, 0, 1}, &span));
  CHECK(!span);
}

TEST_CASE("delta^{1/2} exponents") {
  auto a1 = fx::a1();
  CHECK(a1->delta_half_exponents({0}) == IntVec{0});
  CHECK(a1->delta_half_exponents({1}) == IntVec{1});
  auto p = fx::a1_pvee();
  CHECK(p->m() == 2);
  CHECK(p->delta_half_exponents({1}) == IntVec{1});  // exponent 1/m = 1/2
  CHECK(p->delta_half_exponents({2}) == IntVec{2});
  auto a2p = fx::a2_pvee();
  // alpha_1^vee = 2 w_1 - w_2 has exponent m = 3 on class 1 only
  CHECK(a2p->delta_half_exponents(a2p->coroot(0)) == IntVec{3, 0});
  std::mt19937_64 rng(3);
  for (auto d : {fx::a2_pvee(), fx::affine_a1_d(), fx::b2()})
    for (int k = 0; k < 30; ++k) {
      Coweight x = fx::random_coweight(*d, rng, 5), y = fx::random_coweight(*d, rng, 5);
      Coweight s(x.size());
      for (std::size_t t = 0; t < x.size(); ++t) s[t] = x[t] + y[t];
      IntVec ex = d->delta_half_exponents(x), ey = d->delta_half_exponents(y);
      IntVec es = d->delta_half_exponents(s);
      for (std::size_t i = 0; i < es.size(); ++i) CHECK(es[i] == ex[i] + ey[i]);
    }
}

TEST_CASE("type detection") {
  CHECK(fx::b2()->finite_type());
  CHECK(fx::affine_a1()->affine_type());
  CHECK(!fx::affine_a1()->finite_type());
  CHECK(fx::affine_a1()->imaginary_delta() == IntVec{1, 1});
  CHECK(fx::affine_a1()->central_c() == IntVec{1, 1});
  auto hyp = RootDatum::build({{2, -3}, {-3, 2}});
  CHECK(!hyp->finite_type());
  CHECK(!hyp->affine_type());
  CHECK(hyp->tits_cone_membership({1, -1}).status == ConeStatus::Inconclusive);
}

#include "doctest.h"
#include "fixtures.hpp"
#include "hecke/errors.hpp"
#include "hecke/laurent.hpp"

using namespace hecke;

namespace {

LaurentPoly random_poly(const RingPtr& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nt(0, 3), ex(-3, 3), co(-4, 4);
  LaurentPoly p(r);
  int k = nt(rng);
  for (int t = 0; t < k; ++t) {
    Exponent e(r->names.size());
    for (auto& x : e) x = ex(rng) * r->m;
    p += LaurentPoly::monomial(r, e, co(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("ring operations") {
  auto d = fx::a1();
  auto r = d->ring();
  LaurentPoly s = LaurentPoly::sigma(r, d->symbol(0, false));
  LaurentPoly zero(r);
  CHECK(s + zero == s);
  CHECK((s - s.inverse_unit()) * s == LaurentPoly::q(r, d->symbol(0, false)) - LaurentPoly(r, 1));
  // (q-1)(q'+1) = qq' + q - q' - 1, by distributing term by term
  LaurentPoly q = LaurentPoly::q(r, d->symbol(0, false)), qp = LaurentPoly::q(r, d->symbol(0, true));
  LaurentPoly lhs = (q - 1) * (qp + 1);
  LaurentPoly rhs = q * qp + q - qp - 1;
  CHECK(lhs == rhs);
  CHECK(lhs.size() == 4);
  CHECK_THROWS_AS(q + LaurentPoly::q(fx::a2()->ring(), 0), SymbolMismatch);
}

TEST_CASE("q_star") {
  auto d = fx::a1();
  auto r = d->ring();
  LaurentPoly q = LaurentPoly::q(r, d->symbol(0, false)), qp = LaurentPoly::q(r, d->symbol(0, true));
  CHECK(q_star(*d, 0, 0) == LaurentPoly(r, 1));
  CHECK(q_star(*d, 0, 1) == q);
  CHECK(q_star(*d, 0, 3) == q * q * qp);
  CHECK(q_star(*d, 0, 3).is_primitive_monomial());
  for (int a = 0; a <= 6; a += 2)
    for (int b = 0; b <= 5; ++b) CHECK(q_star(*d, 0, a + b) == q_star(*d, 0, a) * q_star(*d, 0, b));
}

TEST_CASE("division and primitive monomials") {
  auto d = fx::a2();
  auto r = d->ring();
  LaurentPoly q = LaurentPoly::q(r, 0);
  LaurentPoly one(r, 1);
  CHECK((q - 1).divide_by_monomial(one) == q - 1);
  CHECK((q - 1).divide_by_monomial(q) == one - q.inverse_unit());
  CHECK_THROWS_AS((q - 1).divide_by_monomial(q + 1), NotMonomialUnit);
  CHECK_THROWS_AS((q - 1).divide_by_monomial(q.scaled(2)), NotMonomialUnit);
  CHECK(!q.scaled(-1).is_primitive_monomial());
}

TEST_CASE("specialization") {
  auto d = fx::a1();
  auto r = d->ring();
  LaurentPoly q = LaurentPoly::q(r, d->symbol(0, false));
  std::vector<mpq_class> three{3, 3}, two{2, 2};
  CHECK((q - 1).specialize(three) == 2);
  CHECK(q_star(*d, 0, 2).specialize(two) == 4);
  LaurentPoly s = LaurentPoly::sigma(r, 0);
  CHECK_THROWS_AS(s.specialize({4, 4}), FractionalExponentAtSpecialization);
  CHECK(s.specialize({4, 4}, std::vector<mpq_class>{2, 2}) == 2);
  CHECK(q.inverse_unit().specialize(three) == mpq_class(1, 3));
  std::mt19937_64 rng(5);
  for (int k = 0; k < 200; ++k) {
    LaurentPoly a = random_poly(r, rng), b = random_poly(r, rng);
    std::vector<mpq_class> v{mpq_class(2 + k % 3, 1), mpq_class(3 + k % 2, 2)};
    // polynomials with even sigma exponents only
    auto even = [&](const LaurentPoly& p) {
      LaurentPoly o(r);
      for (const auto& [e, c] : p.terms()) {
        Exponent f = e;
        for (auto& x : f) x *= 2;
        o += LaurentPoly::monomial(r, f, c);
      }
      return o;
    };
    LaurentPoly ea = even(a), eb = even(b);
    CHECK((ea * eb).specialize(v) == ea.specialize(v) * eb.specialize(v));
    CHECK((ea + eb).specialize(v) == ea.specialize(v) + eb.specialize(v));
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937_64 rng(9);
  for (auto d : {fx::a1(), fx::a1_pvee(), fx::b2()}) {
    auto r = d->ring();
    for (int k = 0; k < 350; ++k) {
      LaurentPoly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a - a == LaurentPoly(r));
    }
  }
}

TEST_CASE("text round trip") {
  auto d = fx::a1();
  auto r = d->ring();
  LaurentPoly p = LaurentPoly::parse(r, "q1^2*q1p - 1");
  CHECK(p.to_string() == "q1^2*q1p - 1");
  CHECK(LaurentPoly::parse(r, p.to_string()) == p);
  LaurentPoly s = LaurentPoly::parse(r, "q1^(1/2) - q1^(-1/2)");
  CHECK(s == sigma_diff(*d, 0, false));
  CHECK(LaurentPoly::parse(r, "(q1 - 1)*(q1p + 1)") == LaurentPoly::parse(r, "q1*q1p + q1 - q1p - 1"));
  CHECK(LaurentPoly(r).to_string() == "0");
  CHECK(LaurentPoly::parse(r, "-3*q1^-2").to_string() == "-3*q1^-2");
  CHECK_THROWS_AS(LaurentPoly::parse(r, "q7"), ParseError);
  std::mt19937_64 rng(2);
  for (auto dd : {fx::a1(), fx::a1_pvee(), fx::a2_pvee(), fx::b2()})
    for (int k = 0; k < 100; ++k) {
      LaurentPoly x = random_poly(dd->ring(), rng);
      CHECK(LaurentPoly::parse(dd->ring(), x.to_string()) == x);
    }
  // aliases: in A2 every parameter name reaches the single symbol
  auto a2 = fx::a2();
  CHECK(LaurentPoly::parse(a2->ring(), "q2p") == LaurentPoly::parse(a2->ring(), "q1"));
}

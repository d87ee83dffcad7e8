#include "doctest.h"
#include "fixtures.hpp"
#include "hecke/errors.hpp"
#include "hecke/weyl.hpp"

#include <algorithm>
#include <set>

using namespace hecke;

namespace {

// oracle: does w's reduced word contain some reduced word of u as a subword?
bool subword_oracle(const RootDatum& d, const WeylElt& u, const WeylElt& w) {
  const auto& word = w.word();
  int L = static_cast<int>(word.size());
  for (unsigned mask = 0; mask < (1u << L); ++mask) {
    std::vector<int> sub;
    for (int k = 0; k < L; ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    if (static_cast<int>(sub.size()) != u.length()) continue;
    if (WeylElt::from_word(d, sub) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group operations") {
  auto d = fx::a2();
  WeylElt e = WeylElt::identity(*d);
  WeylElt r1 = WeylElt::simple(*d, 0), r2 = WeylElt::simple(*d, 1);
  CHECK(e * r1 == r1);
  CHECK(r1 * r1 == e);
  CHECK(r1 * r2 * r1 == r2 * r1 * r2);
  CHECK((r1 * r2 * r1).root_matrix() == (r2 * r1 * r2).root_matrix());
  CHECK((r1 * r2 * r1).length() == 3);
  CHECK((r1 * r2).inverse() == r2 * r1);
  auto a1 = fx::a1();
  CHECK(WeylElt::simple(*a1, 0).apply({1}) == Coweight{-1});
  // canonical word ShortLex least: r2 r1 r2 is written r1 r2 r1
  CHECK((r2 * r1 * r2).word() == std::vector<int>{0, 1, 0});
  auto aff = fx::affine_a1();
  CHECK_THROWS_AS(WeylElt::simple(*aff, 0) * r1, DatumMismatch);
}

TEST_CASE("length, parity and pairing properties") {
  std::mt19937_64 rng(11);
  for (auto d : {fx::a2(), fx::b2(), fx::affine_a1_d()}) {
    auto elts = enumerate_up_to_length(*d, 4);
    std::uniform_int_distribution<std::size_t> pick(0, elts.size() - 1);
    auto roots = d->real_roots(4);
    for (int k = 0; k < 100; ++k) {
      const auto& u = elts[pick(rng)];
      const auto& w = elts[pick(rng)];
      WeylElt uw = u * w;
      CHECK(uw.length() <= u.length() + w.length());
      CHECK((uw.length() - u.length() - w.length()) % 2 == 0);
      Coweight y = fx::random_coweight(*d, rng, 3);
      const auto& beta = roots[k % roots.size()].root;
      CHECK(d->pair(beta, y) == d->pair(w.apply_root(beta), w.apply(y)));
      // random non-reduced words canonicalize to the same element
      std::vector<int> word = w.word();
      word.push_back(k % d->rank());
      word.push_back(k % d->rank());
      CHECK(WeylElt::from_word(*d, word) == w);
    }
    // length = number of positive roots sent negative (finite sample)
    if (d->finite_type()) {
      auto pos = d->positive_roots_finite();
      for (const auto& w : elts) {
        int inv = 0;
        for (const auto& b : pos)
          if (is_negative_root(w.apply_root(b.root))) ++inv;
        CHECK(inv == w.length());
      }
    }
  }
}

TEST_CASE("Matsumoto: shuffled reduced words canonicalize identically") {
  auto d = fx::b2();
  auto w0 = longest_element(*d, {0, 1});
  CHECK(w0.length() == 4);
  CHECK(WeylElt::from_word(*d, {0, 1, 0, 1}) == WeylElt::from_word(*d, {1, 0, 1, 0}));
  auto a2 = fx::a2();
  auto x = WeylElt::from_word(*a2, {1, 0, 1});
  CHECK(WeylElt::from_word(*a2, x.word()) == x);
}

TEST_CASE("Bruhat order matches the subword oracle") {
  auto d = fx::a2();
  WeylElt r1 = WeylElt::simple(*d, 0), r2 = WeylElt::simple(*d, 1);
  CHECK(bruhat_leq(r1, r1 * r2));
  CHECK(!bruhat_leq(r2, r1));
  for (auto dd : {fx::a2(), fx::b2(), fx::affine_a1()}) {
    auto elts = enumerate_up_to_length(*dd, dd->finite_type() ? 10 : 4);
    for (const auto& u : elts)
      for (const auto& w : elts) CHECK(bruhat_leq(u, w) == subword_oracle(*dd, u, w));
  }
}

TEST_CASE("coset representatives and enumeration") {
  auto d = fx::a2();
  WeylElt e = WeylElt::identity(*d);
  CHECK(coset_min_rep(e, {0}) == e);
  WeylElt r12 = WeylElt::from_word(*d, {0, 1});
  // oracle: coset {r1r2, r1r2r2 = r1}
  CHECK(coset_min_rep(r12, {1}) == WeylElt::simple(*d, 0));
  CHECK(coset_min_rep(WeylElt::simple(*d, 1), {1}) == e);
  CHECK(enumerate_up_to_length(*d, 0).size() == 1);
  CHECK(enumerate_up_to_length(*d, 3).size() == 6);
  auto aff = fx::affine_a1();
  auto el = enumerate_up_to_length(*aff, 4);
  CHECK(el.size() == 9);
  std::set<std::vector<int>> words;
  for (const auto& w : el) words.insert(w.word());
  CHECK(words.size() == 9);
}

TEST_CASE("longest elements") {
  auto d = fx::a2();
  CHECK(longest_element(*d, {}).is_identity());
  CHECK(longest_element(*d, {0, 1}).length() == 3);
  CHECK_THROWS_AS(longest_element(*fx::affine_a1(), {0, 1}), NotSpherical);
  auto a1 = fx::a1();
  CHECK(w_lambda_plus(*a1, {1}).is_identity());
  CHECK(w_lambda_plus(*a1, {0}) == WeylElt::simple(*a1, 0));
  // A2, lambda = r1(w) with w = alpha_1^vee + alpha_2^vee: regular, w^+ = w_lambda
  CHECK(w_lambda_plus(*d, d->reflect(0, {1, 1})) == WeylElt::simple(*d, 0));
}

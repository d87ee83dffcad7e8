#pragma once

#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

#include <map>
#include <string>

namespace hecke {

// Basis index Z^lambda H_w.
struct BasisKey {
  Coweight lambda;
  WeylElt w;
  bool operator<(const BasisKey& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    return w < o.w;
  }
  bool operator==(const BasisKey& o) const { return lambda == o.lambda && w == o.w; }
};

using TermMap = std::map<BasisKey, LaurentPoly>;

// Element of the Bernstein-Lusztig-Hecke algebra over R_1, stored on the
// basis Z^lambda H_w.
class AlgElt {
 public:
  AlgElt() = default;
  explicit AlgElt(DatumPtr d) : d_(std::move(d)) {}
  AlgElt(DatumPtr d, TermMap terms);

  static AlgElt basis_term(DatumPtr d, const Coweight& lambda, const WeylElt& w,
                           const LaurentPoly& c = 1);
  static AlgElt one(DatumPtr d);
  static AlgElt scalar(DatumPtr d, const LaurentPoly& c);
  static AlgElt Z(DatumPtr d, const Coweight& lambda);
  static AlgElt H(DatumPtr d, const WeylElt& w);
  static AlgElt Hi(DatumPtr d, int i);
  static AlgElt Ti(DatumPtr d, int i);
  static AlgElt Ti_inv(DatumPtr d, int i);
  static AlgElt Tw(DatumPtr d, const WeylElt& w);
  static AlgElt Tw_inv(DatumPtr d, const WeylElt& w);

  const DatumPtr& datum() const { return d_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const Coweight& lambda, const WeylElt& w) const;

  AlgElt& add_term(const Coweight& lambda, const WeylElt& w, const LaurentPoly& c);
  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  AlgElt operator+(const AlgElt& o) const;
  AlgElt operator-(const AlgElt& o) const;
  AlgElt operator-() const;
  AlgElt scaled(const LaurentPoly& c) const;
  AlgElt operator*(const AlgElt& o) const;
  bool operator==(const AlgElt& o) const;
  bool operator!=(const AlgElt& o) const { return !(*this == o); }

  // terse Z-basis rendering, e.g. "(q1^(1/2)-q1^(-1/2))*Z[0]*Hw[r1] + Z[a1v]"
  std::string to_string() const;

 private:
  void check_same(const AlgElt& o) const;
  DatumPtr d_;
  TermMap terms_;
};

// sigma_w: the product of sigma_{i_j} along a reduced word, so T_w = sigma_w H_w
LaurentPoly sigma_w(const RootDatum& d, const WeylElt& w);
// monomial delta^{1/2}(lambda), so X^lambda = delta^{1/2}(lambda) Z^lambda
LaurentPoly delta_half(const RootDatum& d, const Coweight& lambda);
// correction term of H_i * Z^lambda - Z^{r_i lambda} * H_i (a combination of
// Z^nu only, returned as nu -> coefficient)
std::map<Coweight, LaurentPoly> blz_correction(const RootDatum& d, int i, const Coweight& lambda);

AlgElt left_mul_Hi(int i, const AlgElt& e);
AlgElt mul(const AlgElt& a, const AlgElt& b);
// both factors supported on lambda = 0
AlgElt hecke_wv_mul(const AlgElt& a, const AlgElt& b);
// H_w * Z^mu, memoized per datum
AlgElt hw_times_z(const DatumPtr& d, const WeylElt& w, const Coweight& mu);
// H_u * H_v in the Hecke algebra of W^v, memoized per datum
AlgElt hecke_hh(const DatumPtr& d, const WeylElt& u, const WeylElt& v);

// Products whose support exceeds the cap raise TermOverflow.
void set_term_cap(std::size_t cap);
std::size_t term_cap();

// "2a1v-a2v", "0"; names from RootDatum::y_names
std::string format_coweight(const RootDatum& d, const Coweight& y);
// one summand "c*basis"; basis may be empty for a pure scalar.  `first`
// controls whether a leading " + " / " - " separator is emitted.
std::string format_summand(const LaurentPoly& c, const std::string& basis, bool first);

}  // namespace hecke

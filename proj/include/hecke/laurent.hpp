#pragma once

#include "hecke/root_datum.hpp"

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Exponent vector: entry s is the exponent of sigma_s times m.
using Exponent = boost::container::small_vector<Int, 6>;
// sorted by exponent, no zero coefficients
using LaurentTerms = std::vector<std::pair<Exponent, Int>>;

// Integer Laurent polynomial in the symbols of a Ring.  A polynomial with a
// null ring is a pure integer constant and combines with any ring.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(Int c);  // NOLINT: implicit integer constants are convenient
  explicit LaurentPoly(RingPtr ring, Int c = 0);

  static LaurentPoly monomial(RingPtr ring, const Exponent& e, Int c = 1);
  // sigma_s^k (k in sigma units, not scaled)
  static LaurentPoly sigma(RingPtr ring, int s, Int k = 1);
  // (sigma_s^2)^k
  static LaurentPoly q(RingPtr ring, int s, Int k = 1);

  const RingPtr& ring() const { return ring_; }
  const LaurentTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Int constant_term() const;
  std::size_t size() const { return terms_.size(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scaled(Int c) const;
  LaurentPoly shifted(const Exponent& e) const;  // multiply by monomial
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const;

  // single term with coefficient +-1
  bool is_monomial_unit() const;
  // single term, coefficient 1
  bool is_primitive_monomial() const;
  LaurentPoly inverse_unit() const;
  LaurentPoly divide_by_monomial(const LaurentPoly& mono) const;

  // every exponent is a multiple of 2m (lies in Z[q^{+-1}])
  bool integral_in_q() const;
  // minimum exponent (sigma units times m) over all terms, per symbol
  Exponent min_exponent() const;

  // q-level values per symbol, or sigma-level values when given
  mpq_class specialize(const std::vector<mpq_class>& q_values,
                       const std::optional<std::vector<mpq_class>>& sigma_values = std::nullopt) const;

  std::string to_string() const;
  static LaurentPoly parse(RingPtr ring, const std::string& text);

 private:
  void adopt(const LaurentPoly& o);
  void normalize();
  RingPtr ring_;
  LaurentTerms terms_;
};

// q^{*n} = q_s q'_s q_s ... (n factors) for index i of the datum
LaurentPoly q_star(const RootDatum& d, int i, int n);
// sigma_i - sigma_i^{-1} and sigma'_i - sigma'_i^{-1}
LaurentPoly sigma_diff(const RootDatum& d, int i, bool primed);

std::string format_exponent(const Ring& r, const Exponent& e);

}  // namespace hecke

#pragma once

#include "hecke/bl_algebra.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

// Index lambda.w of W^+ (lambda in Y^+).
using WPlusIndex = BasisKey;
using TCoords = std::map<WPlusIndex, LaurentPoly>;
// coordinates on the basis X^lambda T_w, same key layout as TermMap
using XCoords = std::map<BasisKey, LaurentPoly>;

AlgElt X_elt(const DatumPtr& d, const Coweight& lambda);
XCoords to_x_coords(const AlgElt& e);
AlgElt from_x_coords(const DatumPtr& d, const XCoords& x);
// "X[a1v]*Tw[r1] + ..."; zero prints as "0"
std::string to_x_string(const AlgElt& e);

// T_lambda = T_{w_lambda} * X^{lambda++} * T_{w_lambda}^{-1}, memoized
AlgElt T_lambda(const DatumPtr& d, const Coweight& lambda);
// T_{lambda.w} along the canonical word of w, memoized
AlgElt T_bold(const DatumPtr& d, const WPlusIndex& idx);
// same recursion along an arbitrary reduced word (not memoized)
AlgElt T_bold_along(const DatumPtr& d, const Coweight& lambda, const std::vector<int>& word);

// coefficient of X^lambda T_w in T_{lambda.w}
LaurentPoly tw_diagonal(const DatumPtr& d, const WPlusIndex& idx);

TCoords express_in_TW_basis(const AlgElt& e);
AlgElt from_t_coords(const DatumPtr& d, const TCoords& t);
std::string format_t_coords(const RootDatum& d, const TCoords& t);

TCoords structure_constants(const DatumPtr& d, const WPlusIndex& w, const WPlusIndex& v);

// right-hand side of the BLT relation for T_lambda T_i T_mu, lambda, mu dominant
AlgElt blt_closed_form(const DatumPtr& d, const Coweight& lambda, const Coweight& mu, int i);
// (T_i * X^lambda via mul, closed form)
std::pair<AlgElt, AlgElt> blx_relation_check(const DatumPtr& d, const Coweight& lambda, int i);
// (H_i * Z^lambda via mul, closed form)
std::pair<AlgElt, AlgElt> blz_relation_check(const DatumPtr& d, const Coweight& lambda, int i);

// q_values holds one value per symbol, at the q = sigma^2 level
std::map<WPlusIndex, mpq_class> specialize_constants(const TCoords& c, const std::vector<mpq_class>& q_values);

}  // namespace hecke

#pragma once

#include "hecke/bl_algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

// Diagram automorphism: perm[i] = omega(i); y_map row t holds the Y
// coordinates of omega(b_t) for the Y basis vector b_t.
struct OmegaElt {
  std::vector<int> perm;
  IntMat y_map;

  bool is_identity() const;
  Coweight apply(const Coweight& y) const;
  int apply(int i) const { return perm[i]; }
  WeylElt apply(const RootDatum& d, const WeylElt& w) const;
  bool operator==(const OmegaElt& o) const { return perm == o.perm; }
  bool operator<(const OmegaElt& o) const { return perm < o.perm; }
  std::string to_string() const;  // 1-based image list "2,1"
};

// Permutations of I preserving A whose induced map on V stabilizes Y and the
// parameter classes.  Identity first.
const std::vector<OmegaElt>& diagram_automorphisms(const DatumPtr& d);
// the same datum with q_i = q_{omega(i)} imposed for every permutation
// preserving A and Y, so that all of them enter the group above
DatumPtr omega_compatible(const DatumPtr& d);
// composition (a b)(i) = a(b(i)); throws OmegaNotAdmitted if not in the group
OmegaElt omega_compose(const DatumPtr& d, const OmegaElt& a, const OmegaElt& b);
OmegaElt omega_inverse(const DatumPtr& d, const OmegaElt& a);
// lookup by 0-based permutation
OmegaElt omega_from_perm(const DatumPtr& d, const std::vector<int>& perm);

// omega(Z^lambda H_w) = Z^{omega lambda} H_{omega w}
AlgElt twist(const OmegaElt& om, const AlgElt& e);

struct ExtKey {
  std::vector<int> omega;
  BasisKey key;
  bool operator<(const ExtKey& o) const {
    if (omega != o.omega) return omega < o.omega;
    return key < o.key;
  }
  bool operator==(const ExtKey& o) const { return omega == o.omega && key == o.key; }
};

// Element of the extended algebra on the basis T_omega Z^lambda H_w.
class ExtAlgElt {
 public:
  ExtAlgElt() = default;
  explicit ExtAlgElt(DatumPtr d) : d_(std::move(d)) {}
  // T_omega * e
  ExtAlgElt(const OmegaElt& om, const AlgElt& e);
  static ExtAlgElt lift(const AlgElt& e);  // omega = id
  static ExtAlgElt T_omega(DatumPtr d, const OmegaElt& om);

  const DatumPtr& datum() const { return d_; }
  const std::map<ExtKey, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // the BL part sitting behind a given T_omega
  AlgElt component(const OmegaElt& om) const;

  ExtAlgElt& operator+=(const ExtAlgElt& o);
  ExtAlgElt operator+(const ExtAlgElt& o) const;
  ExtAlgElt operator-(const ExtAlgElt& o) const;
  ExtAlgElt scaled(const LaurentPoly& c) const;
  bool operator==(const ExtAlgElt& o) const { return terms_ == o.terms_; }
  bool operator!=(const ExtAlgElt& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  DatumPtr d_;
  std::map<ExtKey, LaurentPoly> terms_;
};

// (T_w' a)(T_w'' b) = T_{w' w''} (w''^{-1}(a) b)
ExtAlgElt ext_mul(const ExtAlgElt& a, const ExtAlgElt& b);
// omega acting on every factor: T_{om w om^-1} om(a)
ExtAlgElt ext_twist(const OmegaElt& om, const ExtAlgElt& e);

struct AffineData {
  IntVec delta;       // simple-root coordinates
  IntVec c;           // coroot coordinates
  Coweight c_y;       // c in Y coordinates
  Coweight lambda_c;  // generator of Y meet Q c, positive multiple of c
};

AffineData affine_data(const DatumPtr& d);
Int degree(const RootDatum& d, const Coweight& lambda);
std::map<Int, ExtAlgElt> grade(const ExtAlgElt& e);
ExtAlgElt daha_degree_zero(const ExtAlgElt& e);
// T_lambda commutes with H_i, Z^{alpha_j^vee}, Z^{b_t} and every T_omega;
// lambda must lie in Z lambda_c
bool is_central_check(const DatumPtr& d, const Coweight& lambda);

}  // namespace hecke

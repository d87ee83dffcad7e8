#pragma once

#include "hecke/linalg.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Coordinates of an element of Y in the chosen Z-basis of Y.
using Coweight = IntVec;

class WeylElt;

struct RealRoot {
  IntVec root;        // coordinates in the simple roots
  IntVec coroot;      // coordinates in the simple coroots
  Coweight coroot_y;  // the coroot as an element of Y
  Int height() const;
};

enum class ConeStatus { Positive, NotInCone, Inconclusive };

struct ConeResult {
  ConeStatus status = ConeStatus::Inconclusive;
  Coweight dominant;     // valid when Positive
  std::vector<int> word; // reflections applied, lambda = r_{w0} r_{w1} ... (dominant)
  int steps = 0;
};

// Coefficient ring data: symbol names (one per parameter class slot) and the
// global exponent denominator m.
struct Ring {
  std::vector<std::string> names;
  std::map<std::string, int> aliases;  // q<i> / q<i>p for every index
  Int m = 1;
};
using RingPtr = std::shared_ptr<const Ring>;

class RootDatum;
using DatumPtr = std::shared_ptr<const RootDatum>;

class RootDatum {
 public:
  // cartan[i][j] = alpha_j(alpha_i^vee).  y_gens rows are vectors of V in
  // the basis (alpha_1^vee, ..., alpha_n^vee, d_1, ..., d_k).
  // `ties` lists index pairs (i, j) whose parameters are identified on top
  // of the lattice rules: sigma_i = sigma_j and sigma'_i = sigma'_j.
  static DatumPtr build(const IntMat& cartan,
                        const std::optional<RatMat>& y_gens = std::nullopt,
                        std::vector<std::string> labels = {},
                        const std::vector<std::pair<int, int>>& ties = {});

  int rank() const { return n_; }
  int dim_v() const { return dim_v_; }
  int y_rank() const { return static_cast<int>(y_basis_.size()); }
  const IntMat& cartan() const { return cartan_; }
  Int cartan(int i, int j) const { return cartan_[i][j]; }
  const IntMat& realization_extra() const { return extra_; }
  const RatMat& y_basis() const { return y_basis_; }
  Int m() const { return m_; }
  bool finite_type() const { return finite_; }
  bool affine_type() const { return affine_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::string>& y_names() const { return y_names_; }

  // alpha_i on y in Y
  Int alpha(int i, const Coweight& y) const;
  IntVec alpha_values(const Coweight& y) const;
  // root given in simple-root coordinates, evaluated on y
  Int pair(const IntVec& root, const Coweight& y) const;
  const Coweight& coroot(int i) const { return coroot_y_[i]; }
  Coweight coroot_comb(const IntVec& coeffs) const;
  Coweight reflect(int i, const Coweight& y) const;
  Coweight zero() const { return Coweight(y_rank(), 0); }
  RatVec to_v(const Coweight& y) const;
  // y as element of V, expressed back in Y coordinates; nullopt if not in Y
  std::optional<Coweight> from_v(const RatVec& v) const;

  // symbol bookkeeping: sigma_i -> symbol(i,false), sigma'_i -> symbol(i,true)
  int symbol(int i, bool primed) const { return sym_[2 * i + (primed ? 1 : 0)]; }
  int num_symbols() const { return static_cast<int>(sym_names_.size()); }
  const std::vector<std::string>& symbol_names() const { return sym_names_; }
  const RingPtr& ring() const { return ring_; }
  // class id of index i (the symbol of sigma_i)
  std::vector<int> parameter_classes() const;

  std::vector<RealRoot> real_roots(int height_bound) const;
  // positive roots only; finite type, all of them
  std::vector<RealRoot> positive_roots_finite() const;

  ConeResult tits_cone_membership(const Coweight& y, int cap = -1) const;
  std::pair<Coweight, WeylElt> dominant_rep(const Coweight& y) const;
  bool is_dominant(const Coweight& y) const;
  bool in_tits_cone(const Coweight& y) const;

  // mu - lambda in Q^vee_+ ?  sets *in_span=false when mu - lambda is not
  // in the rational span of the coroots.
  bool qvee_leq(const Coweight& lambda, const Coweight& mu, bool* in_span = nullptr) const;
  // coefficients of y in the coroots, if y lies in Q^vee (x) Q
  std::optional<RatVec> coroot_coords(const Coweight& y) const;

  // delta^{1/2}(y) exponents: entry i is a_i, the power of (sigma_i sigma'_i)
  // is a_i / m.
  IntVec delta_half_exponents(const Coweight& y) const;

  // affine type data (see extended.hpp); delta in simple-root coords,
  // c in coroot coords
  IntVec imaginary_delta() const;
  IntVec central_c() const;
  Int height(const Coweight& y) const;  // sum of coroot coordinates if defined, else L1 norm

 private:
  RootDatum() = default;
  int n_ = 0;
  int dim_v_ = 0;
  IntMat cartan_;
  IntMat extra_;  // extra_[k][j] = alpha_j(d_k)
  RatMat y_basis_;
  IntMat alpha_y_;   // n x rY
  IntMat coroot_y_;  // n x rY
  RatMat coroot_solve_;  // coroot rows in Y coords, as a rational matrix
  IntMat delta_proj_;    // rY x n
  Int m_ = 1;
  bool finite_ = false;
  bool affine_ = false;
  std::vector<std::string> labels_;
  std::vector<std::string> y_names_;
  std::vector<int> sym_;
  std::vector<std::string> sym_names_;
  RingPtr ring_;
};

bool is_gcm(const IntMat& a);
// all principal minors positive
bool is_finite_cartan(const IntMat& a);
bool is_affine_cartan(const IntMat& a);

}  // namespace hecke

#pragma once

#include "hecke/bases.hpp"
#include "hecke/laurent.hpp"
#include "hecke/weyl.hpp"

#include <optional>
#include <vector>

namespace hecke {

// Local chambers at a point z of the standard apartment.  A chamber is a Weyl
// element u with sign: positive means germ_z(z + u C_f), negative means
// germ_z(z - u C_f).  Panel i of either lies in ker(u alpha_i).
struct LocalChamber {
  WeylElt u;
  int sign = 1;
  bool operator==(const LocalChamber& o) const { return sign == o.sign && u == o.u; }
};

// A gallery of type `type` from `start`, c[j] = true when it moves
// (c_j = r_{i_j}), false when it stays (c_j = 1).  Walls are tested at `z`
// and separation against `ref`.
struct Gallery {
  RatVec z;
  std::vector<int> type;
  LocalChamber start, ref;
  std::vector<bool> moves;
  std::vector<LocalChamber> chambers;  // C_0 .. C_r
  std::vector<IntVec> beta;            // root positive on C_j with wall M_j
};

Gallery make_gallery(const RootDatum& d, const RatVec& z, const std::vector<int>& type, const LocalChamber& start,
                     const LocalChamber& ref, const std::vector<bool>& moves);
bool is_centrifugally_folded(const RootDatum& d, const Gallery& g);
// every sign vector of the type that is centrifugally folded wrt ref,
// optionally ending in `end`
std::vector<Gallery> folded_galleries(const RootDatum& d, const RatVec& z, const std::vector<int>& type,
                                      const LocalChamber& start, const LocalChamber& ref,
                                      const std::optional<LocalChamber>& end = std::nullopt);
LaurentPoly count_liftings(const RootDatum& d, const Gallery& g);
// parameter q_M of the wall {beta = beta(z)}
LaurentPoly wall_parameter(const RootDatum& d, const IntVec& beta, const RatVec& z);

// C_z^- = pr_z(C_x) for C_x = germ_0(C_f), as a negative chamber
WeylElt negative_toward_origin(const RootDatum& d, const RatVec& z);
// u with u^{-1} xi dominant regular
WeylElt chamber_of(const RootDatum& d, const Coweight& xi);

struct PathFold {
  Rat t;
  RatVec z;
  std::vector<IntVec> roots;      // beta_1 .. beta_s
  std::vector<Coweight> xis;      // xi_0 .. xi_s
};

struct HeckePath {
  Coweight shape;
  std::vector<RatVec> vertices;     // z_0, direction changes, y
  std::vector<Rat> times;           // matching vertices
  std::vector<Coweight> directions; // one per segment
  std::vector<PathFold> folds;
  // derivative chain increasing in the Q^vee order (flag only)
  bool monotone = true;
};

// every wall point z in (0, 1) of the path with incoming / outgoing directions
struct WallPoint {
  Rat t;
  RatVec z;
  Coweight in, out;
};
std::vector<WallPoint> wall_points(const RootDatum& d, const HeckePath& p);

// depth_cap < 0 picks 8 * height(shape)
std::vector<HeckePath> enumerate_hecke_paths(const DatumPtr& d, const Coweight& shape, const RatVec& y0,
                                             const RatVec& y1, int depth_cap = -1);
bool validate_path(const RootDatum& d, const HeckePath& p);

// number of triangles [0, z, nu] with d^v(0, z) = lambda, d^v(z, nu) = mu
LaurentPoly m_lambda_mu(const DatumPtr& d, const Coweight& lambda, const Coweight& mu, const Coweight& nu);

// a^u_{w,v} from Hecke paths and folded galleries; mu regular
LaurentPoly geometric_structure_constant(const DatumPtr& d, const WPlusIndex& w, const WPlusIndex& v,
                                         const WPlusIndex& u, int depth_cap = -1);

RatVec to_rat_vec(const Coweight& y);

}  // namespace hecke

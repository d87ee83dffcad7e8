#pragma once

#include "hecke/root_datum.hpp"

#include <random>

namespace fx {

using namespace hecke;

inline DatumPtr a1() { return RootDatum::build({{2}}); }
inline DatumPtr a1_pvee() { return RootDatum::build({{2}}, RatMat{{rat(1, 2)}}); }
inline DatumPtr a2() { return RootDatum::build({{2, -1}, {-1, 2}}); }
inline DatumPtr a2_pvee() {
  return RootDatum::build({{2, -1}, {-1, 2}}, RatMat{{rat(2, 3), rat(1, 3)}, {rat(1, 3), rat(2, 3)}});
}
inline DatumPtr b2() { return RootDatum::build({{2, -1}, {-2, 2}}); }
inline DatumPtr affine_a1() { return RootDatum::build({{2, -2}, {-2, 2}}); }
// Y = Q^vee + Z d with alpha_1(d) = alpha_2(d) = 1, so delta(d) = 2
inline DatumPtr affine_a1_d() {
  return RootDatum::build({{2, -2}, {-2, 2}}, RatMat{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

// uniform over coordinate vectors with L1 norm <= bound
inline Coweight random_coweight(const RootDatum& d, std::mt19937_64& rng, int bound) {
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

}  // namespace fx

#pragma once

// Small exact linear algebra over Z and Q.  Matrices are dense row-major
// vectors of rows; sizes here never exceed a few dozen.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace hecke {

using Int = std::int64_t;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Rat rat(Int n, Int d = 1) {
  Rat r(static_cast<long>(n), static_cast<long>(d));
  r.canonicalize();
  return r;
}
inline Int rnum(const Rat& x) { return x.get_num().get_si(); }
inline Int rden(const Rat& x) { return x.get_den().get_si(); }
inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

IntMat identity_mat(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& a, const IntVec& v);   // a * v (column)
IntVec vec_mat(const IntVec& v, const IntMat& a);   // v * a (row)
IntMat transpose(const IntMat& a);

RatMat to_rat(const IntMat& a);
int mat_rank(RatMat a);

// Solve x * a = b for a row vector x, a having independent rows.  Returns
// false if no solution exists.
bool solve_row(const RatMat& a, const RatVec& b, RatVec& x);

// Basis of {x : a * x = 0} (column kernel) and of {x : x * a = 0}.
RatMat kernel(const RatMat& a);

// Smith normal form: u * a * v = d with u, v unimodular and d diagonal with
// d_1 | d_2 | ....  Returns the diagonal (including zeros up to min size).
struct Smith {
  IntMat u, v;
  IntVec diag;
};
Smith smith_normal_form(const IntMat& a);

// Row-style Hermite basis of the Z-lattice spanned by the rows of `a`.
IntMat lattice_basis(const IntMat& a);

IntMat inverse_unimodular(const IntMat& a);

Int gcd_vec(const IntVec& v);

}  // namespace hecke

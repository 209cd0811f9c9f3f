#ifndef SDSP_LINALG_HPP
#define SDSP_LINALG_HPP

#include <optional>
#include <vector>

#include "sdsp/common.hpp"

namespace sdsp {

using IntVec = std::vector<BigInt>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<BigRat>;
using RatMat = std::vector<RatVec>;

// Basis of the integer kernel {u : A u = 0} via unimodular column operations
// (column-style Hermite reduction). The result is a lattice basis, not just a
// full-rank sublattice.
IntMat integer_kernel(const IntMat& a);

int rational_rank(RatMat m);

// One solution of A x = b over the rationals, if consistent.
std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b);

// Divides by the gcd of the entries; first nonzero entry made positive when
// fix_sign is set.
void make_primitive(IntVec& v, bool fix_sign = false);

// Scales a rational vector to a primitive integer vector (same direction).
IntVec scale_to_integer(const RatVec& v);

}  // namespace sdsp

#endif

#ifndef SDSP_GEOMETRY_HPP
#define SDSP_GEOMETRY_HPP

#include <optional>
#include <vector>

#include "sdsp/ehrhart.hpp"
#include "sdsp/linalg.hpp"
#include "sdsp/symmat.hpp"

namespace sdsp {

// Linear conditions over the upper-triangular coordinates (row-major, length
// n(n+1)/2), with primitive integer coefficients. Inequalities read
// coeffs . x >= rhs, equalities coeffs . x = rhs. Dilating by m scales rhs.
struct LinearCondition {
  IntVec coeffs;
  BigInt rhs;
  bool operator==(const LinearCondition&) const = default;
};

struct HRep {
  int n = 0;  // matrix side of the ambient coordinates
  std::vector<LinearCondition> eqs;
  std::vector<LinearCondition> ineqs;
};

struct GorensteinWitness {
  int index;        // r with c in r*S_n
  SymIntMatrix c;   // lattice distance 1 from every facet
};

// The facets of S_n are the coordinate hyperplanes, so the only candidate is
// the all-ones matrix; it has row sum n, hence lies in (n/2) S_n exactly when
// n is even.
std::optional<GorensteinWitness> gorenstein_witness(int n);

struct SpecialSimplex {
  int n = 0;
  std::vector<SymIntMatrix> vertices;  // k = n/2 circulants, disjoint supports
};

// The circulant simplex from the even-n Gorenstein construction: matrices
// a_i = a_{n-i} = 1 (i = 1..k-1) plus a_0 = a_k = 1, entry (r,c) = a_{(c-r) mod n}.
SpecialSimplex special_simplex(int n);

// Lattice points of m*S_n with every entry >= 1 (all facet inequalities
// strict). Zero when 2m < n.
BigInt interior_count(int n, int m);

// I(n) = I(n-1) + (n-1) I(n-2).
BigInt involution_count(int n);

// Vertices of S_n among its lattice points, decided by exact LP: a point is a
// vertex iff it is not a convex combination of the other lattice points.
PointList polytope_vertices(int n);

// Convex-combination certificate: coefficients lambda >= 0 with sum 1 and
// sum lambda_i candidates[i] = target, if one exists.
std::optional<RatVec> convex_combination(const SymIntMatrix& target,
                                         const std::vector<SymIntMatrix>& candidates);

// Exact V-to-H conversion on the affine hull (double description on the
// polar cone of the lifted points).
HRep v_to_h(const std::vector<SymIntMatrix>& points);

// Lattice points of the m-th dilate of the H-rep polytope: candidates with
// the family's row sums, filtered by the (dilated) conditions.
PointList lattice_points_of_dilate(const HRep& h, int m, Family family,
                                   std::uint64_t max_points = ResourceLimits{}.max_points);

// Dimension of the affine hull of a point set.
int affine_dimension(const std::vector<SymIntMatrix>& points);

struct HStarWithVerdict {
  HStarVector hstar;
  bool unimodal = false;
};

// h* of P_n = conv(lattice points of Sigma_n), plus a unimodality verdict.
HStarWithVerdict hstar_P(int n);

}  // namespace sdsp

#endif

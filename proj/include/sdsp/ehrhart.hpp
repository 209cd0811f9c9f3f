#ifndef SDSP_EHRHART_HPP
#define SDSP_EHRHART_HPP

#include <vector>

#include "sdsp/common.hpp"

namespace sdsp {

// Dense polynomial with exact rational coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRat> coeffs);

  int degree() const;  // -1 for the zero polynomial
  const std::vector<BigRat>& coeffs() const { return c_; }
  BigRat coeff(int k) const;
  BigRat leading_coeff() const;

  BigRat operator()(const BigRat& x) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<BigRat> c_;  // c_[k] is the coefficient of x^k; no trailing zeros
};

// Unique polynomial of degree <= d through (0, counts[0]), ..., (d, counts[d]).
// Requires exactly d+1 counts.
Polynomial interpolate(const std::vector<BigInt>& counts, int d);

// Newton divided differences at arbitrary distinct nodes.
Polynomial newton_interpolate(const std::vector<BigRat>& xs, const std::vector<BigRat>& ys);

struct HStarVector {
  std::vector<BigInt> coeffs;  // h*_0 .. h*_deg, trailing entry nonzero
  int d = 0;                   // polytope dimension (denominator exponent d+1)
  int den = 1;                 // 1 for S_n and P_n, 2 for Sigma_n

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool palindromic() const;
  BigInt sum() const;
};

// Alternating-sum transform h*_j = sum_i (-1)^(j-i) C(d+1, j-i) L(i), computed
// through expected_degree with one guard coefficient required to vanish.
// Needs counts L(0 .. expected_degree+1).
HStarVector hstar_from_counts(const std::vector<BigInt>& counts, int d, int expected_degree);

// Same transform when no degree is known in advance: computes h*_0..h*_d from
// L(0..d+1), requires the index-(d+1) guard to vanish, trims trailing zeros.
HStarVector hstar_capped(const std::vector<BigInt>& counts, int d);

bool is_unimodal(const std::vector<BigInt>& v);

// h* of S_n; dimension C(n,2), expected degree 2k^2-2k+1 (n = 2k) or
// 2k^2 (n = 2k+1).
HStarVector hstar_S(int n);
int expected_hstar_degree_S(int n);

// h* of Sigma_n over (1-t^2)^(d+1); asserts palindromicity and that the
// even-indexed entries reproduce h*(S_n).
HStarVector hstar_sigma(int n);

// Constituents of the Ehrhart quasipolynomial of Sigma_n, written
// L(t) = f(t) + (-1)^t g(t). Degree checks do not apply at n = 2, where the
// two constituents coincide.
struct QuasiConstituents {
  Polynomial f;
  Polynomial g;
  bool degree_check_applicable = true;
};

QuasiConstituents quasipoly_sigma(int n);

struct ReciprocityReport {
  int n = 0;
  int first_interior_dilate = 0;        // (n+1)/2
  bool zero_below = false;              // L(-m) = 0 for m < (n+1)/2
  BigInt signed_value;                  // (-1)^d L(-(n+1)/2)
  BigInt interior;                      // direct interior count
  BigInt involutions;                   // I(n)
  bool match = false;
};

// Ehrhart reciprocity for odd n: the first interior dilate carries exactly
// the involution matrices.
ReciprocityReport reciprocity_check(int n);

struct EhrhartData {
  int dimension = 0;
  std::vector<BigInt> counts;  // L(0..M)
  Polynomial poly;             // reproduces every stored count
};

// Counts and interpolated Ehrhart polynomial of S_n (counts through
// max(dimension, extra) with consistency verification).
EhrhartData ehrhart_S(int n, int extra_counts = 1);

}  // namespace sdsp

#endif

#ifndef SDSP_SYMMAT_HPP
#define SDSP_SYMMAT_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "sdsp/common.hpp"

namespace sdsp {

// Symmetric n x n matrix of nonnegative integers. One storage cell per
// unordered index pair, so symmetry holds by construction.
class SymIntMatrix {
 public:
  explicit SymIntMatrix(int n);

  // Builds from full n x n rows; rejects asymmetry and negative entries.
  static SymIntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int side() const { return n_; }

  std::int64_t operator()(int i, int j) const { return cells_[cell_index(i, j)]; }
  void set(int i, int j, std::int64_t v);

  std::int64_t row_sum(int i) const;
  std::vector<std::int64_t> row_sums() const;

  std::vector<std::vector<std::int64_t>> rows() const;

  // Canonical order: ascending lexicographic on the row-major full entry
  // sequence (for symmetric matrices this equals the row-major scan of the
  // upper triangle).
  std::strong_ordering operator<=>(const SymIntMatrix& o) const;
  bool operator==(const SymIntMatrix& o) const = default;

  const std::vector<std::int64_t>& cells() const { return cells_; }

  static int cell_count(int n) { return n * (n + 1) / 2; }

 private:
  int cell_index(int i, int j) const;

  int n_;
  std::vector<std::int64_t> cells_;  // upper triangle, row-major
};

// Number of cells equal to 2 (resp. 0). FullMatrix mode counts off-diagonal
// cells twice.
int two_count(const SymIntMatrix& m, TwoCountMode mode = TwoCountMode::FullMatrix);
int zero_count(const SymIntMatrix& m, TwoCountMode mode = TwoCountMode::FullMatrix);

// Row-sum target of the m-th dilate: 2m for family S, m for Sigma.
std::int64_t dilate_row_sum(Family family, int m);

// A lattice point of the m-th dilate of S_n or Sigma_n.
struct DilatePoint {
  SymIntMatrix matrix;
  int dilate;
  Family family;

  DilatePoint(SymIntMatrix mat, int m, Family fam);
};

struct PointList {
  int n = 0;
  Family family = Family::S;
  int dilate = 1;
  std::vector<SymIntMatrix> points;  // strictly sorted in canonical order
};

// All lattice points of the m-th dilate, in canonical order. Backtracking
// over upper-triangular cells with residual row-sum pruning.
PointList enumerate_points(int n, int m, Family family,
                           std::uint64_t max_points = ResourceLimits{}.max_points);

// Exact count of the same set, by memoized DP over the multiset of residual
// row sums. Independent of the enumeration path.
BigInt count_points(int n, int m, Family family);

// Symmetric nonnegative integer matrices with the given row sums (DP core;
// also used for interior counts).
BigInt count_symmetric_with_row_sums(const std::vector<std::int64_t>& sums);

}  // namespace sdsp

#endif

#include "sdsp/symmat.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sdsp {

SymIntMatrix::SymIntMatrix(int n) : n_(n), cells_(cell_count(n), 0) {
  if (n < 1) throw InputError("matrix side must be positive");
}

int SymIntMatrix::cell_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  // row-major upper triangle: row i starts at i*n - i*(i-1)/2
  return i * n_ - i * (i - 1) / 2 + (j - i);
}

void SymIntMatrix::set(int i, int j, std::int64_t v) {
  if (v < 0) throw InputError("matrix entries must be nonnegative");
  cells_[cell_index(i, j)] = v;
}

std::int64_t SymIntMatrix::row_sum(int i) const {
  std::int64_t s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

std::vector<std::int64_t> SymIntMatrix::row_sums() const {
  std::vector<std::int64_t> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = row_sum(i);
  return out;
}

std::vector<std::vector<std::int64_t>> SymIntMatrix::rows() const {
  std::vector<std::vector<std::int64_t>> out(n_, std::vector<std::int64_t>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

SymIntMatrix SymIntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw InputError("empty matrix");
  SymIntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix is not square");
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] < 0) throw InputError("matrix entries must be nonnegative");
      if (rows[j][i] != rows[i][j]) throw InputError("matrix is not symmetric");
      if (j >= i) m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

std::strong_ordering SymIntMatrix::operator<=>(const SymIntMatrix& o) const {
  if (n_ != o.n_) return n_ <=> o.n_;
  // Row-major full scan; cells before (i,j) with j < i repeat earlier values,
  // so scanning the upper triangle row-major gives the same order.
  for (std::size_t k = 0; k < cells_.size(); ++k)
    if (cells_[k] != o.cells_[k]) return cells_[k] <=> o.cells_[k];
  return std::strong_ordering::equal;
}

int two_count(const SymIntMatrix& m, TwoCountMode mode) {
  int c = 0;
  const int n = m.side();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (m(i, j) == 2) c += (mode == TwoCountMode::FullMatrix && j != i) ? 2 : 1;
  return c;
}

int zero_count(const SymIntMatrix& m, TwoCountMode mode) {
  int c = 0;
  const int n = m.side();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (m(i, j) == 0) c += (mode == TwoCountMode::FullMatrix && j != i) ? 2 : 1;
  return c;
}

std::int64_t dilate_row_sum(Family family, int m) {
  return family == Family::S ? 2 * static_cast<std::int64_t>(m) : m;
}

DilatePoint::DilatePoint(SymIntMatrix mat, int m, Family fam)
    : matrix(std::move(mat)), dilate(m), family(fam) {
  if (m < 1) throw InputError("dilate must be positive");
  const std::int64_t target = dilate_row_sum(family, dilate);
  for (int i = 0; i < matrix.side(); ++i)
    if (matrix.row_sum(i) != target)
      throw InputError("row sum " + std::to_string(matrix.row_sum(i)) + " at row " +
                       std::to_string(i) + ", expected " + std::to_string(target));
}

namespace {

// Backtracking over upper-triangular cells in row-major order; ascending
// entry values yield canonical (lexicographic) output order directly.
void enumerate_rec(int n, std::int64_t target, int i, int j, SymIntMatrix& work,
                   std::vector<std::int64_t>& used, std::vector<SymIntMatrix>& out,
                   std::uint64_t max_points) {
  if (i == n) {
    if (out.size() >= max_points)
      throw CapacityError("enumeration exceeds max_points = " + std::to_string(max_points));
    out.push_back(work);
    return;
  }
  const int next_i = (j == n - 1) ? i + 1 : i;
  const int next_j = (j == n - 1) ? next_i : j + 1;
  const std::int64_t rem_i = target - used[i];
  if (j == n - 1) {
    // last cell of row i: value forced by the row-sum constraint
    const std::int64_t v = rem_i;
    const std::int64_t cap = (j == i) ? rem_i : target - used[j];
    if (v >= 0 && v <= cap) {
      work.set(i, j, v);
      used[i] += v;
      if (j != i) used[j] += v;
      enumerate_rec(n, target, next_i, next_j, work, used, out, max_points);
      used[i] -= v;
      if (j != i) used[j] -= v;
      work.set(i, j, 0);
    }
    return;
  }
  const std::int64_t cap = (j == i) ? rem_i : std::min(rem_i, target - used[j]);
  for (std::int64_t v = 0; v <= cap; ++v) {
    work.set(i, j, v);
    used[i] += v;
    if (j != i) used[j] += v;
    enumerate_rec(n, target, next_i, next_j, work, used, out, max_points);
    used[i] -= v;
    if (j != i) used[j] -= v;
    work.set(i, j, 0);
  }
}

BigInt count_sym_sorted(std::vector<std::int64_t> sums,
                        std::map<std::vector<std::int64_t>, BigInt>& memo);

// Distribute the first row sum over the later columns (bounded by their own
// residuals); the diagonal absorbs the remainder.
void distribute(const std::vector<std::int64_t>& rest, std::size_t j, std::int64_t rem,
                std::vector<std::int64_t>& cur, BigInt& acc,
                std::map<std::vector<std::int64_t>, BigInt>& memo) {
  if (j == rest.size()) {
    std::vector<std::int64_t> next = cur;
    std::sort(next.begin(), next.end());
    acc += count_sym_sorted(std::move(next), memo);
    return;
  }
  const std::int64_t cap = std::min(rem, rest[j]);
  for (std::int64_t e = 0; e <= cap; ++e) {
    cur.push_back(rest[j] - e);
    distribute(rest, j + 1, rem - e, cur, acc, memo);
    cur.pop_back();
  }
}

BigInt count_sym_sorted(std::vector<std::int64_t> sums,
                        std::map<std::vector<std::int64_t>, BigInt>& memo) {
  if (sums.size() <= 1) return 1;  // diagonal absorbs a lone residual
  auto it = memo.find(sums);
  if (it != memo.end()) return it->second;
  const std::int64_t s1 = sums.front();
  std::vector<std::int64_t> rest(sums.begin() + 1, sums.end());
  BigInt acc = 0;
  std::vector<std::int64_t> cur;
  cur.reserve(rest.size());
  distribute(rest, 0, s1, cur, acc, memo);
  memo.emplace(std::move(sums), acc);
  return acc;
}

}  // namespace

PointList enumerate_points(int n, int m, Family family, std::uint64_t max_points) {
  if (n < 1 || m < 1) throw InputError("enumerate_points requires n >= 1, m >= 1");
  PointList list;
  list.n = n;
  list.family = family;
  list.dilate = m;
  SymIntMatrix work(n);
  std::vector<std::int64_t> used(n, 0);
  enumerate_rec(n, dilate_row_sum(family, m), 0, 0, work, used, list.points, max_points);
  std::sort(list.points.begin(), list.points.end());
  return list;
}

BigInt count_symmetric_with_row_sums(const std::vector<std::int64_t>& sums) {
  for (std::int64_t s : sums)
    if (s < 0) return 0;
  std::vector<std::int64_t> sorted = sums;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::vector<std::int64_t>, BigInt> memo;
  return count_sym_sorted(std::move(sorted), memo);
}

BigInt count_points(int n, int m, Family family) {
  if (n < 1 || m < 0) throw InputError("count_points requires n >= 1, m >= 0");
  if (m == 0) return 1;
  return count_symmetric_with_row_sums(
      std::vector<std::int64_t>(n, dilate_row_sum(family, m)));
}

}  // namespace sdsp

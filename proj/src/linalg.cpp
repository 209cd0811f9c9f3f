#include "sdsp/linalg.hpp"

#include <algorithm>

namespace sdsp {

namespace {

BigInt gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

void make_primitive(IntVec& v, bool fix_sign) {
  BigInt g = 0;
  for (const BigInt& x : v) g = gcd(g, x);
  if (g > 1)
    for (BigInt& x : v) x /= g;
  if (fix_sign)
    for (const BigInt& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (BigInt& y : v) y = -y;
      break;
    }
}

IntVec scale_to_integer(const RatVec& v) {
  BigInt lcm = 1;
  for (const BigRat& x : v) {
    const BigInt d = denominator(x);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = numerator(v[i]) * (lcm / denominator(v[i]));
  make_primitive(out);
  return out;
}

IntMat integer_kernel(const IntMat& a) {
  if (a.empty()) return {};
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();

  // Work columns stacked with the tracking identity below.
  IntMat work(cols, IntVec(rows + cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < rows; ++r) work[c][r] = a[r][c];
    work[c][rows + c] = 1;
  }

  std::vector<bool> pivot_used(cols, false);
  for (std::size_t r = 0; r < rows; ++r) {
    // Euclid across free columns until at most one has a nonzero entry here.
    while (true) {
      std::size_t best = cols, second = cols;
      for (std::size_t c = 0; c < cols; ++c) {
        if (pivot_used[c] || work[c][r] == 0) continue;
        if (best == cols || abs(work[c][r]) < abs(work[best][r])) {
          second = best;
          best = c;
        } else if (second == cols || abs(work[c][r]) < abs(work[second][r])) {
          second = c;
        }
      }
      if (second == cols) {
        if (best != cols) pivot_used[best] = true;
        break;
      }
      const BigInt q = work[second][r] / work[best][r];
      for (std::size_t k = 0; k < rows + cols; ++k) work[second][k] -= q * work[best][k];
    }
  }

  IntMat kernel;
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_used[c]) continue;
    IntVec v(work[c].begin() + rows, work[c].end());
    kernel.push_back(std::move(v));
  }
  return kernel;
}

int rational_rank(RatMat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const BigRat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::optional<RatVec> solve_rational(const RatMat& a, const RatVec& b) {
  const std::size_t rows = a.size();
  if (rows == 0) return RatVec{};
  const std::size_t cols = a[0].size();
  RatMat m(rows, RatVec(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    std::copy(a[r].begin(), a[r].end(), m[r].begin());
    m[r][cols] = b[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const BigRat f = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  RatVec x(cols, 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r)
    x[pivot_col[r]] = m[r][cols] / m[r][pivot_col[r]];
  return x;
}

}  // namespace sdsp

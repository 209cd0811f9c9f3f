#include "sdsp/lp.hpp"

#include <algorithm>

namespace sdsp {

std::optional<RatVec> lp_feasible_point(const RatMat& a, const RatVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (rows == 0) return RatVec(cols, 0);

  // Tableau for: minimize sum of artificials, A x + I s = b (b >= 0 after
  // sign flips), basis starts as the artificials.
  const std::size_t total = cols + rows;
  RatMat t(rows, RatVec(total + 1, 0));
  for (std::size_t r = 0; r < rows; ++r) {
    const bool flip = b[r] < 0;
    for (std::size_t c = 0; c < cols; ++c) t[r][c] = flip ? -a[r][c] : a[r][c];
    t[r][cols + r] = 1;
    t[r][total] = flip ? -b[r] : b[r];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

  // objective row: cost of artificials
  RatVec obj(total + 1, 0);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c <= total; ++c) obj[c] += t[r][c];

  while (true) {
    // Bland: entering = lowest-index column with positive reduced cost among
    // structural columns (artificials never re-enter).
    std::size_t enter = total;
    for (std::size_t c = 0; c < cols; ++c)
      if (obj[c] > 0) {
        enter = c;
        break;
      }
    if (enter == total) break;

    std::size_t leave = rows;
    BigRat best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      const BigRat ratio = t[r][total] / t[r][enter];
      if (leave == rows || ratio < best ||
          (ratio == best && basis[r] < basis[leave]))  // Bland tie-break
      {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen here

    // pivot
    const BigRat p = t[leave][enter];
    for (std::size_t c = 0; c <= total; ++c) t[leave][c] /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const BigRat f = t[r][enter];
      for (std::size_t c = 0; c <= total; ++c) t[r][c] -= f * t[leave][c];
    }
    if (obj[enter] != 0) {
      const BigRat f = obj[enter];
      for (std::size_t c = 0; c <= total; ++c) obj[c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }

  if (obj[total] != 0) return std::nullopt;  // artificials still positive

  RatVec x(cols, 0);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < cols) x[basis[r]] = t[r][total];
  return x;
}

}  // namespace sdsp

#include <doctest.h>

#include <algorithm>
#include <random>

#include "sdsp/symmat.hpp"

using namespace sdsp;

namespace {

// Independent oracle: plain product enumeration over all upper-triangular
// tuples with entries bounded by the row sum, filtered afterwards. No
// pruning, no shared code with the library's backtracking.
std::vector<SymIntMatrix> oracle_enumerate(int n, std::int64_t target) {
  const int cells = SymIntMatrix::cell_count(n);
  std::vector<SymIntMatrix> out;
  std::vector<std::int64_t> tuple(cells, 0);
  while (true) {
    SymIntMatrix m(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, tuple[k++]);
    bool good = true;
    for (int i = 0; i < n; ++i)
      if (m.row_sum(i) != target) good = false;
    if (good) out.push_back(m);
    int c = cells - 1;
    while (c >= 0 && tuple[c] == target) tuple[c--] = 0;
    if (c < 0) break;
    ++tuple[c];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Involutions of {0..n-1} as symmetric permutation matrices.
std::vector<SymIntMatrix> oracle_involutions(int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<SymIntMatrix> out;
  do {
    bool inv = true;
    for (int i = 0; i < n; ++i)
      if (perm[perm[i]] != i) inv = false;
    if (!inv) continue;
    SymIntMatrix m(n);
    for (int i = 0; i < n; ++i)
      if (i <= perm[i]) m.set(i, perm[i], 1);
    out.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_SUITE("symmat") {

TEST_CASE("S_2 dilate 1 has exactly the three known points") {
  const auto pts = enumerate_points(2, 1, Family::S);
  REQUIRE(pts.points.size() == 3);
  CHECK(pts.points[0] == SymIntMatrix::from_rows({{0, 2}, {2, 0}}));
  CHECK(pts.points[1] == SymIntMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(pts.points[2] == SymIntMatrix::from_rows({{2, 0}, {0, 2}}));
  CHECK(pts.points == oracle_enumerate(2, 2));
}

TEST_CASE("S_3 dilate 1 matches the product-enumeration oracle") {
  const auto pts = enumerate_points(3, 1, Family::S);
  CHECK(pts.points.size() == 11);
  CHECK(pts.points == oracle_enumerate(3, 2));
}

TEST_CASE("Sigma_3 dilate 1 is the involution matrices") {
  const auto pts = enumerate_points(3, 1, Family::Sigma);
  CHECK(pts.points.size() == 4);
  CHECK(pts.points == oracle_involutions(3));
}

TEST_CASE("counts match enumeration for n <= 4, m <= 2") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 2; ++m)
      for (Family f : {Family::S, Family::Sigma})
        CHECK(count_points(n, m, f) == BigInt(enumerate_points(n, m, f).points.size()));
}

TEST_CASE("L_S3(2) = 42 against the bounded-triple oracle") {
  // off-diagonals (b12, b13, b23) with pairwise sums <= 4; diagonal forced
  int count = 0;
  for (int b12 = 0; b12 <= 4; ++b12)
    for (int b13 = 0; b13 + b12 <= 4; ++b13)
      for (int b23 = 0; b23 + b12 <= 4 && b23 + b13 <= 4; ++b23) ++count;
  CHECK(count == 42);
  CHECK(count_points(3, 2, Family::S) == 42);
  CHECK(count_points(3, 3, Family::S) == 106);
}

TEST_CASE("m = 0 counts one (the origin convention)") {
  CHECK(count_points(3, 0, Family::S) == 1);
  CHECK(count_points(4, 0, Family::Sigma) == 1);
}

TEST_CASE("S_n is Sigma_n dilated by two") {
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 3; ++m)
      CHECK(count_points(n, m, Family::S) == count_points(n, 2 * m, Family::Sigma));
}

TEST_CASE("row-sum invariant holds for every enumerated point") {
  for (int n = 2; n <= 3; ++n)
    for (int m = 1; m <= 2; ++m)
      for (Family f : {Family::S, Family::Sigma})
        for (const auto& p : enumerate_points(n, m, f).points)
          for (int i = 0; i < n; ++i) CHECK(p.row_sum(i) == dilate_row_sum(f, m));
}

TEST_CASE("canonical order is strict and shuffle-stable") {
  auto pts = enumerate_points(3, 2, Family::S).points;
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  auto shuffled = pts;
  std::mt19937 rng(99u);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::sort(shuffled.begin(), shuffled.end());
  CHECK(shuffled == pts);
}

TEST_CASE("two_count and zero_count per mode") {
  const auto diag = SymIntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  CHECK(two_count(diag, TwoCountMode::FullMatrix) == 3);
  CHECK(zero_count(diag, TwoCountMode::FullMatrix) == 6);
  CHECK(two_count(diag, TwoCountMode::UpperTriangle) == 3);
  CHECK(zero_count(diag, TwoCountMode::UpperTriangle) == 3);

  const auto tri = SymIntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(two_count(tri) == 0);
  CHECK(zero_count(tri) == 3);

  const auto mid = SymIntMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK(two_count(mid) == 0);
  CHECK(zero_count(mid) == 0);

  // off-diagonal cells count twice in full-matrix mode
  const auto t12 = SymIntMatrix::from_rows({{0, 2, 0}, {2, 0, 0}, {0, 0, 2}});
  CHECK(two_count(t12, TwoCountMode::FullMatrix) == 3);
  CHECK(two_count(t12, TwoCountMode::UpperTriangle) == 2);
}

TEST_CASE("from_rows validates symmetry and sign") {
  CHECK_THROWS_AS(SymIntMatrix::from_rows({{0, 1}, {2, 0}}), InputError);
  CHECK_THROWS_AS(SymIntMatrix::from_rows({{0, -1}, {-1, 0}}), InputError);
  CHECK_THROWS_AS(SymIntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}}), InputError);
}

TEST_CASE("capacity limit raises") {
  CHECK_THROWS_AS(enumerate_points(3, 1, Family::S, 5), CapacityError);
}

TEST_CASE("dilate point validation") {
  CHECK_THROWS_AS(DilatePoint(SymIntMatrix::from_rows({{1, 1}, {1, 1}}), 2, Family::S),
                  InputError);
  CHECK_NOTHROW(DilatePoint(SymIntMatrix::from_rows({{1, 1}, {1, 1}}), 1, Family::S));
  CHECK_NOTHROW(DilatePoint(SymIntMatrix::from_rows({{1, 1}, {1, 1}}), 2, Family::Sigma));
}

}  // TEST_SUITE

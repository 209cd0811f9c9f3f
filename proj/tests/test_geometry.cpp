#include <doctest.h>

#include <algorithm>

#include "sdsp/geometry.hpp"
#include "sdsp/lp.hpp"

using namespace sdsp;

namespace {

IntVec coords(const SymIntMatrix& m) {
  IntVec v;
  for (int i = 0; i < m.side(); ++i)
    for (int j = i; j < m.side(); ++j) v.push_back(m(i, j));
  return v;
}

// Barycentric membership oracle for P_3: its four vertices are affinely
// independent, so m*P_3 membership is a single exact linear solve.
bool in_m_P3(const SymIntMatrix& x, int m, const std::vector<SymIntMatrix>& verts) {
  RatMat a(7, RatVec(4));
  RatVec b(7);
  for (std::size_t c = 0; c < 4; ++c) {
    const IntVec vc = coords(verts[c]);
    for (std::size_t r = 0; r < 6; ++r) a[r][c] = BigRat(vc[r]);
    a[6][c] = 1;
  }
  const IntVec xc = coords(x);
  for (std::size_t r = 0; r < 6; ++r) b[r] = BigRat(xc[r]);
  b[6] = m;
  const auto sol = solve_rational(a, b);
  if (!sol) return false;
  // consistency: the solver returns one solution; independence makes it unique
  for (std::size_t r = 0; r < 7; ++r) {
    BigRat acc = 0;
    for (std::size_t c = 0; c < 4; ++c) acc += a[r][c] * (*sol)[c];
    if (acc != b[r]) return false;
  }
  return std::all_of(sol->begin(), sol->end(), [](const BigRat& l) { return l >= 0; });
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("gorenstein witness exists exactly for even n") {
  for (int n = 2; n <= 8; ++n) {
    const auto w = gorenstein_witness(n);
    CHECK(w.has_value() == (n % 2 == 0));
    if (w) {
      CHECK(w->index == n / 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(w->c(i, j) == 1);
    }
  }
}

TEST_CASE("special simplex base cases") {
  const SpecialSimplex s2 = special_simplex(2);
  REQUIRE(s2.vertices.size() == 1);
  CHECK(s2.vertices[0] == SymIntMatrix::from_rows({{1, 1}, {1, 1}}));

  const SpecialSimplex s4 = special_simplex(4);
  REQUIRE(s4.vertices.size() == 2);
  SymIntMatrix sum(4);
  for (const auto& v : s4.vertices)
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) sum.set(i, j, sum(i, j) + v(i, j));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(sum(i, j) == 1);
}

TEST_CASE("special simplex invariants hold through n = 8") {
  for (int n : {2, 4, 6, 8}) {
    const SpecialSimplex s = special_simplex(n);  // throws on any violation
    CHECK(static_cast<int>(s.vertices.size()) == n / 2);
    CHECK(affine_dimension(s.vertices) == n / 2 - 1);
  }
  CHECK_THROWS_AS(special_simplex(3), InputError);
}

TEST_CASE("involution counts follow the recurrence") {
  const std::vector<BigInt> expected{1, 1, 2, 4, 10, 26, 76};
  for (int n = 0; n <= 6; ++n) CHECK(involution_count(n) == expected[n]);
}

TEST_CASE("interior counts by direct enumeration") {
  CHECK(interior_count(3, 1) == 0);
  int direct = 0;
  for (const auto& p : enumerate_points(3, 2, Family::S).points) {
    bool strict = true;
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j)
        if (p(i, j) < 1) strict = false;
    if (strict) ++direct;
  }
  CHECK(direct == 4);
  CHECK(interior_count(3, 2) == 4);
  CHECK(interior_count(3, 2) == involution_count(3));
}

TEST_CASE("first interior dilate of odd n is (n+1)/2") {
  for (int n : {3, 5}) {
    for (int m = 1; 2 * m < n + 1; ++m) CHECK(interior_count(n, m) == 0);
    CHECK(interior_count(n, (n + 1) / 2) == involution_count(n));
  }
}

TEST_CASE("vertices of S_2") {
  const PointList v = polytope_vertices(2);
  REQUIRE(v.points.size() == 2);
  CHECK(v.points[0] == SymIntMatrix::from_rows({{0, 2}, {2, 0}}));
  CHECK(v.points[1] == SymIntMatrix::from_rows({{2, 0}, {0, 2}}));
}

TEST_CASE("vertices of S_3 are the five known matrices") {
  const PointList v = polytope_vertices(3);
  REQUIRE(v.points.size() == 5);
  const std::vector<SymIntMatrix> expected{
      SymIntMatrix::from_rows({{0, 0, 2}, {0, 2, 0}, {2, 0, 0}}),
      SymIntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}),
      SymIntMatrix::from_rows({{0, 2, 0}, {2, 0, 0}, {0, 0, 2}}),
      SymIntMatrix::from_rows({{2, 0, 0}, {0, 0, 2}, {0, 2, 0}}),
      SymIntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})};
  CHECK(v.points == expected);
}

TEST_CASE("a known midpoint is not a vertex") {
  const auto mid = SymIntMatrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 2}});
  const auto diag = SymIntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const auto t12 = SymIntMatrix::from_rows({{0, 2, 0}, {2, 0, 0}, {0, 0, 2}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(2 * mid(i, j) == diag(i, j) + t12(i, j));
  const PointList v = polytope_vertices(3);
  CHECK(std::find(v.points.begin(), v.points.end(), mid) == v.points.end());
}

TEST_CASE("every non-vertex has a convex-combination certificate over the vertices") {
  const PointList all = enumerate_points(3, 1, Family::S);
  const PointList verts = polytope_vertices(3);
  for (const auto& p : all.points) {
    if (std::find(verts.points.begin(), verts.points.end(), p) != verts.points.end())
      continue;
    const auto cert = convex_combination(p, verts.points);
    REQUIRE(cert.has_value());
    BigRat total = 0;
    std::vector<BigRat> acc(SymIntMatrix::cell_count(3), 0);
    for (std::size_t c = 0; c < cert->size(); ++c) {
      CHECK((*cert)[c] >= 0);
      total += (*cert)[c];
      const IntVec vc = coords(verts.points[c]);
      for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += (*cert)[c] * BigRat(vc[r]);
    }
    CHECK(total == 1);
    const IntVec pc = coords(p);
    for (std::size_t r = 0; r < acc.size(); ++r) CHECK(acc[r] == BigRat(pc[r]));
  }
}

TEST_CASE("v_to_h of the S_2 points is a segment") {
  const HRep h = v_to_h(enumerate_points(2, 1, Family::S).points);
  CHECK(h.ineqs.size() == 2);
  CHECK(affine_dimension(enumerate_points(2, 1, Family::S).points) == 1);
  // both endpoints satisfy everything, with one tight inequality each
  for (const auto& p : enumerate_points(2, 1, Family::S).points) {
    const IntVec x = coords(p);
    for (const auto& eq : h.eqs) {
      BigInt acc = 0;
      for (std::size_t c = 0; c < x.size(); ++c) acc += eq.coeffs[c] * x[c];
      CHECK(acc == eq.rhs);
    }
  }
}

TEST_CASE("the hull of the S_3 vertices recovers the coordinate facets") {
  const PointList verts = polytope_vertices(3);
  const HRep h = v_to_h(verts.points);
  REQUIRE(h.ineqs.size() == 6);  // one facet per upper-tri cell

  // every facet's zero pattern on the vertices matches one coordinate's
  std::vector<std::vector<bool>> facet_patterns, cell_patterns;
  for (const auto& iq : h.ineqs) {
    std::vector<bool> pat;
    for (const auto& v : verts.points) {
      const IntVec x = coords(v);
      BigInt acc = -iq.rhs;
      for (std::size_t c = 0; c < x.size(); ++c) acc += iq.coeffs[c] * x[c];
      REQUIRE(acc >= 0);
      pat.push_back(acc == 0);
    }
    facet_patterns.push_back(pat);
  }
  for (std::size_t cell = 0; cell < 6; ++cell) {
    std::vector<bool> pat;
    for (const auto& v : verts.points) pat.push_back(coords(v)[cell] == 0);
    cell_patterns.push_back(pat);
  }
  for (const auto& pat : cell_patterns)
    CHECK(std::count(facet_patterns.begin(), facet_patterns.end(), pat) == 1);
}

TEST_CASE("dilate filtering agrees with direct counting on the full S_n hull") {
  for (int n : {2, 3}) {
    const HRep h = v_to_h(enumerate_points(n, 1, Family::S).points);
    for (int m = 1; m <= 2; ++m)
      CHECK(BigInt(lattice_points_of_dilate(h, m, Family::S).points.size()) ==
            count_points(n, m, Family::S));
  }
}

TEST_CASE("P_3 dilate counts against the barycentric oracle") {
  const PointList pts = enumerate_points(3, 1, Family::Sigma);
  REQUIRE(pts.points.size() == 4);
  CHECK(affine_dimension(pts.points) == 3);

  const HRep h = v_to_h(pts.points);
  std::vector<BigInt> counts{1};
  for (int m = 1; m <= 4; ++m) {
    const PointList mine = lattice_points_of_dilate(h, m, Family::Sigma);
    int oracle = 0;
    for (const auto& x : enumerate_points(3, m, Family::Sigma).points)
      if (in_m_P3(x, m, pts.points)) ++oracle;
    CHECK(BigInt(oracle) == BigInt(mine.points.size()));
    counts.push_back(mine.points.size());
  }
  CHECK(counts == std::vector<BigInt>{1, 4, 10, 20, 35});
}

TEST_CASE("h*(P_3) is the unimodular-simplex vector") {
  const HStarWithVerdict h = hstar_P(3);
  CHECK(h.hstar.coeffs == std::vector<BigInt>{1});
  CHECK(h.hstar.d == 3);
  CHECK(h.unimodal);
}

TEST_CASE("h*(P_2) collapses to a segment") {
  const HStarWithVerdict h = hstar_P(2);
  CHECK(h.hstar.d == 1);
  CHECK(h.hstar.coeffs.front() == 1);
  CHECK(h.unimodal);
}

TEST_CASE("the triangle point of 2 Sigma_3 lies outside 2 P_3") {
  const PointList pts = enumerate_points(3, 1, Family::Sigma);
  const auto tri = SymIntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(in_m_P3(tri, 2, pts.points));
  const HRep h = v_to_h(pts.points);
  const auto filtered = lattice_points_of_dilate(h, 2, Family::Sigma);
  CHECK(std::find(filtered.points.begin(), filtered.points.end(), tri) ==
        filtered.points.end());
}

}  // TEST_SUITE

#include "sdsp/geometry.hpp"

#include <algorithm>
#include <string>

#include "sdsp/lp.hpp"

namespace sdsp {

namespace {

IntVec upper_tri_coords(const SymIntMatrix& m) {
  IntVec v;
  v.reserve(SymIntMatrix::cell_count(m.side()));
  for (int i = 0; i < m.side(); ++i)
    for (int j = i; j < m.side(); ++j) v.push_back(m(i, j));
  return v;
}

BigInt dot(const IntVec& a, const IntVec& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Extreme rays of the pointed cone {y : row . y >= 0 for every row}, by the
// double description method, rows processed in the given order.
IntMat dd_extreme_rays(const IntMat& rows) {
  if (rows.empty()) throw InputError("double description needs at least one row");
  const std::size_t dim = rows[0].size();
  if (rows.size() > 64) throw CapacityError("double description limited to 64 rows");

  // initial simplicial cone from the first dim independent rows
  std::vector<std::size_t> base;
  RatMat checker;
  for (std::size_t i = 0; i < rows.size() && base.size() < dim; ++i) {
    checker.emplace_back(rows[i].begin(), rows[i].end());
    if (rational_rank(checker) == static_cast<int>(checker.size()))
      base.push_back(i);
    else
      checker.pop_back();
  }
  if (base.size() != dim) throw InputError("cone is not pointed (rank-deficient rows)");

  RatMat bmat(dim, RatVec(dim));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t c = 0; c < dim; ++c) bmat[k][c] = BigRat(rows[base[k]][c]);

  struct Ray {
    IntVec v;
    std::uint64_t active = 0;  // bit i set when row i is tight
  };
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RatVec e(dim, 0);
    e[j] = 1;
    auto sol = solve_rational(bmat, e);
    if (!sol) throw InputError("initial cone solve failed");
    Ray r{scale_to_integer(*sol), 0};
    for (std::size_t k = 0; k < dim; ++k)
      if (k != j) r.active |= (1ull << base[k]);
    rays.push_back(std::move(r));
  }

  std::vector<bool> processed(rows.size(), false);
  for (std::size_t i : base) processed[i] = true;

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (processed[i]) continue;
    std::vector<BigInt> val(rays.size());
    for (std::size_t r = 0; r < rays.size(); ++r) val[r] = dot(rows[i], rays[r].v);

    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      Ray keep = rays[r];
      if (val[r] == 0) keep.active |= (1ull << i);
      next.push_back(std::move(keep));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        const std::uint64_t common = rays[p].active & rays[q].active;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t)
          if (t != p && t != q && (rays[t].active & common) == common) adjacent = false;
        if (!adjacent) continue;
        IntVec nv(rows[0].size());
        for (std::size_t c = 0; c < nv.size(); ++c)
          nv[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
        make_primitive(nv);
        Ray nr{std::move(nv), common | (1ull << i)};
        bool dup = false;
        for (const Ray& ex : next)
          if (ex.v == nr.v) dup = true;
        if (!dup) next.push_back(std::move(nr));
      }
    }
    rays = std::move(next);
    processed[i] = true;
  }

  IntMat out;
  out.reserve(rays.size());
  for (Ray& r : rays) out.push_back(std::move(r.v));
  return out;
}

SymIntMatrix all_ones(int n) {
  SymIntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, 1);
  return m;
}

}  // namespace

std::optional<GorensteinWitness> gorenstein_witness(int n) {
  if (n < 2) throw InputError("n >= 2 required");
  // Facets are the coordinate hyperplanes, so the candidate is forced: every
  // coordinate of c must be exactly 1.
  const SymIntMatrix c = all_ones(n);
  const std::int64_t line_sum = c.row_sum(0);  // = n
  if (line_sum % 2 != 0) return std::nullopt;  // odd line sum, not in any r*S_n
  const int r = static_cast<int>(line_sum / 2);
  [[maybe_unused]] DilatePoint check(c, r, Family::S);
  return GorensteinWitness{r, c};
}

SpecialSimplex special_simplex(int n) {
  if (n < 2 || n % 2 != 0) throw InputError("special simplex needs even n >= 2");
  const int k = n / 2;
  SpecialSimplex s;
  s.n = n;
  for (int idx = 1; idx <= k; ++idx) {
    std::vector<int> a(n, 0);
    if (idx < k) {
      a[idx] = 1;
      a[n - idx] = 1;
    } else {
      a[0] = 1;
      a[k] = 1;
    }
    SymIntMatrix m(n);
    for (int r = 0; r < n; ++r)
      for (int c = r; c < n; ++c) {
        const int v = a[((c - r) % n + n) % n];
        const int mirror = a[((r - c) % n + n) % n];
        if (v != mirror) throw FalsificationError("circulant template is not symmetric");
        m.set(r, c, v);
      }
    for (int r = 0; r < n; ++r)
      if (m.row_sum(r) != 2)
        throw FalsificationError("special simplex vertex has row sum != 2");
    s.vertices.push_back(std::move(m));
  }

  // pairwise disjoint supports, entrywise sum = all-ones
  SymIntMatrix sum(n);
  for (const auto& v : s.vertices)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        if (v(i, j) != 0 && sum(i, j) != 0)
          throw FalsificationError("special simplex supports overlap");
        sum.set(i, j, sum(i, j) + v(i, j));
      }
  if (!(sum == all_ones(n)))
    throw FalsificationError("special simplex does not sum to the all-ones matrix");
  if (affine_dimension(s.vertices) != k - 1)
    throw FalsificationError("special simplex is not (k-1)-dimensional");
  return s;
}

BigInt interior_count(int n, int m) {
  if (n < 2) throw InputError("n >= 2 required");
  // all entries >= 1: subtract the all-ones matrix, count row sums 2m - n
  const std::int64_t residual = 2 * static_cast<std::int64_t>(m) - n;
  if (residual < 0) return 0;
  return count_symmetric_with_row_sums(std::vector<std::int64_t>(n, residual));
}

BigInt involution_count(int n) {
  if (n < 0) throw InputError("n >= 0 required");
  BigInt prev = 1, cur = 1;  // I(0), I(1)
  for (int k = 2; k <= n; ++k) {
    BigInt next = cur + (k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return n == 0 ? BigInt(1) : cur;
}

std::optional<RatVec> convex_combination(const SymIntMatrix& target,
                                         const std::vector<SymIntMatrix>& candidates) {
  if (candidates.empty()) return std::nullopt;
  const IntVec t = upper_tri_coords(target);
  const std::size_t amb = t.size();
  RatMat a(amb + 1, RatVec(candidates.size()));
  RatVec b(amb + 1);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const IntVec pc = upper_tri_coords(candidates[c]);
    if (pc.size() != amb) throw InputError("candidate dimension mismatch");
    for (std::size_t r = 0; r < amb; ++r) a[r][c] = BigRat(pc[r]);
    a[amb][c] = 1;
  }
  for (std::size_t r = 0; r < amb; ++r) b[r] = BigRat(t[r]);
  b[amb] = 1;
  return lp_feasible_point(a, b);
}

PointList polytope_vertices(int n) {
  if (n < 2 || n > 4) throw InputError("polytope_vertices supports 2 <= n <= 4");
  const PointList all = enumerate_points(n, 1, Family::S);
  PointList out;
  out.n = n;
  out.family = Family::S;
  out.dilate = 1;
  for (std::size_t i = 0; i < all.points.size(); ++i) {
    std::vector<SymIntMatrix> others;
    others.reserve(all.points.size() - 1);
    for (std::size_t j = 0; j < all.points.size(); ++j)
      if (j != i) others.push_back(all.points[j]);
    if (!convex_combination(all.points[i], others)) out.points.push_back(all.points[i]);
  }
  return out;
}

int affine_dimension(const std::vector<SymIntMatrix>& points) {
  if (points.empty()) return -1;
  const IntVec p0 = upper_tri_coords(points[0]);
  RatMat diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    const IntVec pi = upper_tri_coords(points[i]);
    RatVec d(p0.size());
    for (std::size_t c = 0; c < p0.size(); ++c) d[c] = BigRat(pi[c] - p0[c]);
    diffs.push_back(std::move(d));
  }
  return rational_rank(diffs);
}

HRep v_to_h(const std::vector<SymIntMatrix>& points) {
  if (points.empty()) throw InputError("v_to_h needs at least one point");
  if (points.size() > 16) throw CapacityError("v_to_h limited to 16 points");
  const int n = points[0].side();
  const std::size_t amb = SymIntMatrix::cell_count(n);

  std::vector<IntVec> coords;
  coords.reserve(points.size());
  for (const auto& p : points) {
    if (p.side() != n) throw InputError("mixed matrix sides");
    coords.push_back(upper_tri_coords(p));
  }
  const IntVec& p0 = coords[0];

  // affine basis: greedy independent difference vectors
  IntMat diff_rows;
  for (std::size_t i = 1; i < coords.size(); ++i) {
    IntVec d(amb);
    for (std::size_t c = 0; c < amb; ++c) d[c] = coords[i][c] - p0[c];
    diff_rows.push_back(std::move(d));
  }
  std::vector<std::size_t> basis_idx;
  RatMat checker;
  for (std::size_t i = 0; i < diff_rows.size(); ++i) {
    checker.emplace_back(diff_rows[i].begin(), diff_rows[i].end());
    if (rational_rank(checker) == static_cast<int>(checker.size()))
      basis_idx.push_back(i);
    else
      checker.pop_back();
  }
  const std::size_t d = basis_idx.size();
  if (d > 10) throw CapacityError("v_to_h limited to dimension 10");

  HRep h;
  h.n = n;

  // affine-hull equalities: integer kernel of the difference rows
  if (!diff_rows.empty()) {
    for (IntVec f : integer_kernel(diff_rows)) {
      make_primitive(f, true);
      h.eqs.push_back({f, dot(f, p0)});
    }
  } else {
    // single point: every coordinate is pinned
    for (std::size_t c = 0; c < amb; ++c) {
      IntVec f(amb, 0);
      f[c] = 1;
      h.eqs.push_back({f, BigInt(p0[c])});
    }
  }
  std::sort(h.eqs.begin(), h.eqs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.coeffs, x.rhs) < std::tie(y.coeffs, y.rhs);
  });

  if (d == 0) return h;  // a point has no facets

  // B: amb x d basis matrix (columns = chosen difference vectors)
  RatMat bt(d, RatVec(amb));  // B^T
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t c = 0; c < amb; ++c) bt[k][c] = BigRat(diff_rows[basis_idx[k]][c]);

  // affine coordinates of every point: solve B y = p - p0
  RatMat bmat(amb, RatVec(d));
  for (std::size_t r = 0; r < amb; ++r)
    for (std::size_t k = 0; k < d; ++k) bmat[r][k] = bt[k][r];
  IntMat lifted;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    RatVec rhs(amb);
    for (std::size_t c = 0; c < amb; ++c) rhs[c] = BigRat(coords[i][c] - p0[c]);
    auto y = solve_rational(bmat, rhs);
    if (!y) throw InputError("point outside its own affine hull (solve failed)");
    RatVec row(d + 1);
    std::copy(y->begin(), y->end(), row.begin());
    row[d] = 1;
    lifted.push_back(scale_to_integer(row));
  }

  const IntMat rays = dd_extreme_rays(lifted);

  // L = (B^T B)^{-1} B^T maps ambient differences to affine coordinates.
  RatMat btb(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      BigRat s = 0;
      for (std::size_t c = 0; c < amb; ++c) s += bt[i][c] * bt[j][c];
      btb[i][j] = s;
    }
  RatMat lmap(d, RatVec(amb));
  for (std::size_t k = 0; k < d; ++k) {
    RatVec e(d, 0);
    e[k] = 1;
    auto u = solve_rational(btb, e);
    if (!u) throw InputError("affine basis is degenerate");
    for (std::size_t c = 0; c < amb; ++c) {
      BigRat s = 0;
      for (std::size_t j = 0; j < d; ++j) s += (*u)[j] * bt[j][c];
      lmap[k][c] = s;
    }
  }

  for (const IntVec& ray : rays) {
    bool all_zero = true;
    for (std::size_t k = 0; k < d; ++k)
      if (ray[k] != 0) all_zero = false;
    if (all_zero) continue;  // the trivial 1 >= 0 ray
    // w = L^T alpha; inequality <w, x> >= <w, p0> - c on the hull
    RatVec w(amb, 0);
    for (std::size_t c = 0; c < amb; ++c)
      for (std::size_t k = 0; k < d; ++k) w[c] += BigRat(ray[k]) * lmap[k][c];
    RatVec full(amb + 1);
    std::copy(w.begin(), w.end(), full.begin());
    BigRat rhs = -BigRat(ray[d]);
    for (std::size_t c = 0; c < amb; ++c) rhs += w[c] * BigRat(p0[c]);
    full[amb] = rhs;
    IntVec scaled = scale_to_integer(full);
    LinearCondition cond{IntVec(scaled.begin(), scaled.end() - 1), scaled.back()};
    // orientation check: every input point satisfies >=
    for (const IntVec& pc : coords)
      if (dot(cond.coeffs, pc) < cond.rhs)
        throw FalsificationError("facet inequality violated by an input point");
    h.ineqs.push_back(std::move(cond));
  }
  std::sort(h.ineqs.begin(), h.ineqs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.coeffs, x.rhs) < std::tie(y.coeffs, y.rhs);
  });
  return h;
}

PointList lattice_points_of_dilate(const HRep& h, int m, Family family,
                                   std::uint64_t max_points) {
  PointList candidates = enumerate_points(h.n, m, family, max_points);
  PointList out;
  out.n = h.n;
  out.family = family;
  out.dilate = m;
  for (const auto& p : candidates.points) {
    const IntVec x = upper_tri_coords(p);
    bool ok = true;
    for (const auto& eq : h.eqs)
      if (dot(eq.coeffs, x) != eq.rhs * m) ok = false;
    for (const auto& iq : h.ineqs)
      if (ok && dot(iq.coeffs, x) < iq.rhs * m) ok = false;
    if (ok) out.points.push_back(p);
  }
  return out;
}

HStarWithVerdict hstar_P(int n) {
  if (n < 2 || n > 4) throw InputError("hstar_P supports 2 <= n <= 4");
  const PointList pts = enumerate_points(n, 1, Family::Sigma);
  const int d = affine_dimension(pts.points);
  const HRep h = v_to_h(pts.points);
  std::vector<BigInt> counts{1};
  for (int m = 1; m <= d + 1; ++m)
    counts.push_back(lattice_points_of_dilate(h, m, Family::Sigma).points.size());
  HStarWithVerdict out;
  out.hstar = hstar_capped(counts, d);
  out.unimodal = is_unimodal(out.hstar.coeffs);
  return out;
}

}  // namespace sdsp

#include <doctest.h>

#include <map>
#include <random>

#include "sdsp/graphfactor.hpp"

using namespace sdsp;

namespace {

// Partition oracle: the factors' edge multisets must add up to the input's
// and every factor must be 2-regular under convention Two.
void check_partition(const LoopMultigraph& g, const std::vector<LoopMultigraph>& factors) {
  std::map<std::pair<int, int>, std::int64_t> edges;
  std::vector<std::int64_t> loops(g.vertex_count(), 0);
  for (const auto& f : factors) {
    REQUIRE(f.vertex_count() == g.vertex_count());
    for (int v = 0; v < f.vertex_count(); ++v) {
      CHECK(f.degree(v) == 2);
      loops[v] += f.loops(v);
    }
    for (const auto& [e, mult] : f.edges()) edges[e] += mult;
  }
  for (int v = 0; v < g.vertex_count(); ++v) CHECK(loops[v] == g.loops(v));
  std::map<std::pair<int, int>, std::int64_t> expected(g.edges().begin(), g.edges().end());
  CHECK(edges == expected);
}

void check_orientation(const LoopMultigraph& g) {
  const auto arcs = euler_orient(g);
  std::vector<std::int64_t> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
  std::map<std::pair<int, int>, std::int64_t> undirected;
  for (const Arc& a : arcs) {
    ++out[a.from];
    ++in[a.to];
    if (a.from != a.to) ++undirected[{std::min(a.from, a.to), std::max(a.from, a.to)}];
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    CHECK(in[v] == g.degree(v) / 2);
    CHECK(out[v] == g.degree(v) / 2);
  }
  std::map<std::pair<int, int>, std::int64_t> expected(g.edges().begin(), g.edges().end());
  CHECK(undirected == expected);
}

LoopMultigraph triangle(LoopConvention conv) {
  LoopMultigraph g(3, conv);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  return g;
}

}  // namespace

TEST_SUITE("graphfactor") {

TEST_CASE("matrix_to_graph translations") {
  const auto diag = SymIntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  const auto g1 = matrix_to_graph(diag, LoopConvention::One);
  for (int v = 0; v < 3; ++v) {
    CHECK(g1.loops(v) == 2);
    CHECK(g1.degree(v) == 2);
  }
  const auto tri = SymIntMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto g2 = matrix_to_graph(tri, LoopConvention::One);
  for (int v = 0; v < 3; ++v) {
    CHECK(g2.loops(v) == 0);
    CHECK(g2.degree(v) == 2);
  }
  const auto x = SymIntMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  const auto g3 = matrix_to_graph(x, LoopConvention::One);
  for (int v = 0; v < 3; ++v) {
    CHECK(g3.loops(v) == 2);
    CHECK(g3.degree(v) == 4);
  }
}

TEST_CASE("convention Two needs an even diagonal") {
  const auto odd = SymIntMatrix::from_rows({{1, 1}, {1, 1}});
  CHECK_THROWS_AS(matrix_to_graph(odd, LoopConvention::Two), InputError);
}

TEST_CASE("graph/matrix round trip on every point of S_3") {
  for (const auto& p : enumerate_points(3, 1, Family::S).points) {
    CHECK(graph_to_matrix(matrix_to_graph(p, LoopConvention::One)) == p);
    bool even_diag = true;
    for (int i = 0; i < 3; ++i)
      if (p(i, i) % 2 != 0) even_diag = false;
    if (even_diag)
      CHECK(graph_to_matrix(matrix_to_graph(p, LoopConvention::Two)) == p);
  }
}

TEST_CASE("euler orientation of a triangle is a directed 3-cycle") {
  check_orientation(triangle(LoopConvention::Two));
}

TEST_CASE("euler orientation of loops only") {
  LoopMultigraph g(1, LoopConvention::Two);
  g.add_loops(0, 3);
  const auto arcs = euler_orient(g);
  CHECK(arcs.size() == 3);
  for (const Arc& a : arcs) CHECK(a == Arc{0, 0});
}

TEST_CASE("euler orientation handles components independently") {
  LoopMultigraph g(6, LoopConvention::Two);
  for (int base : {0, 3}) {
    g.add_edge(base, base + 1);
    g.add_edge(base, base + 2);
    g.add_edge(base + 1, base + 2);
  }
  check_orientation(g);
}

TEST_CASE("euler orientation rejects odd degrees") {
  LoopMultigraph g(2, LoopConvention::Two);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(euler_orient(g), InputError);
}

TEST_CASE("2-regular graph factors into itself") {
  const auto g = triangle(LoopConvention::Two);
  const auto factors = petersen_two_factorize(g, 1);
  REQUIRE(factors.size() == 1);
  CHECK(factors[0] == g);
}

TEST_CASE("triangle plus loops splits into two 2-factors") {
  LoopMultigraph g = triangle(LoopConvention::Two);
  for (int v = 0; v < 3; ++v) g.add_loops(v);
  const auto factors = petersen_two_factorize(g, 2);
  REQUIRE(factors.size() == 2);
  check_partition(g, factors);
}

TEST_CASE("doubled 4-cycles split into 2-factors componentwise") {
  LoopMultigraph g(8, LoopConvention::Two);
  for (int base : {0, 4})
    for (int k = 0; k < 4; ++k)
      g.add_edge(base + k, base + (k + 1) % 4, 2);
  const auto factors = petersen_two_factorize(g, 2);
  REQUIRE(factors.size() == 2);
  check_partition(g, factors);
}

TEST_CASE("regularity violations are rejected") {
  LoopMultigraph g(3, LoopConvention::Two);
  g.add_edge(0, 1, 2);
  CHECK_THROWS_AS(petersen_two_factorize(g, 1), InputError);
}

TEST_CASE("decompose the even-diagonal example") {
  const auto x = SymIntMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  const auto d = decompose(x, 2);
  REQUIRE(d.summands.size() == 2);
  SymIntMatrix sum(3);
  for (const auto& s : d.summands) {
    for (int i = 0; i < 3; ++i) CHECK(s.row_sum(i) == 2);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) sum.set(i, j, sum(i, j) + s(i, j));
  }
  CHECK(sum == x);
}

TEST_CASE("decompose a doubled vertex") {
  const auto v = SymIntMatrix::from_rows({{0, 2, 0}, {2, 0, 0}, {0, 0, 2}});
  SymIntMatrix x(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) x.set(i, j, 2 * v(i, j));
  const auto d = decompose(x, 2);
  SymIntMatrix sum(3);
  for (const auto& s : d.summands)
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) sum.set(i, j, sum(i, j) + s(i, j));
  CHECK(sum == x);
}

TEST_CASE("decompose the odd-diagonal helper-vertex example") {
  const auto x = SymIntMatrix::from_rows({{1, 1, 2}, {1, 1, 2}, {2, 2, 0}});

  // oracle: exhaustive search over ordered pairs of the 11 points of S_3
  const auto pts = enumerate_points(3, 1, Family::S).points;
  bool exists = false;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      bool match = true;
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          if (a(i, j) + b(i, j) != x(i, j)) match = false;
      if (match) exists = true;
    }
  REQUIRE(exists);

  const auto d = decompose(x, 2);
  SymIntMatrix sum(3);
  for (const auto& s : d.summands) {
    for (int i = 0; i < 3; ++i) CHECK(s.row_sum(i) == 2);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) sum.set(i, j, sum(i, j) + s(i, j));
  }
  CHECK(sum == x);
}

TEST_CASE("decompose succeeds on all of 2 S_3 and a 3 S_4 sample") {
  for (const auto& x : enumerate_points(3, 2, Family::S).points) {
    const auto d = decompose(x, 2);
    REQUIRE(d.summands.size() == 2);
    SymIntMatrix sum(3);
    for (const auto& s : d.summands) {
      for (int i = 0; i < 3; ++i) REQUIRE(s.row_sum(i) == 2);
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) sum.set(i, j, sum(i, j) + s(i, j));
    }
    REQUIRE(sum == x);
  }

  const auto all = enumerate_points(4, 3, Family::S).points;
  std::mt19937 rng(1234u);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 100; ++t) {
    const auto& x = all[pick(rng)];
    const auto d = decompose(x, 3);
    REQUIRE(d.summands.size() == 3);
    SymIntMatrix sum(4);
    for (const auto& s : d.summands) {
      for (int i = 0; i < 4; ++i) REQUIRE(s.row_sum(i) == 2);
      for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) sum.set(i, j, sum(i, j) + s(i, j));
    }
    REQUIRE(sum == x);
  }
}

TEST_CASE("decompose validates its input") {
  CHECK_THROWS_AS(decompose(SymIntMatrix::from_rows({{1, 1}, {1, 1}}), 2), InputError);
}

TEST_CASE("summands come back canonically sorted") {
  const auto x = SymIntMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  const auto d = decompose(x, 2);
  CHECK(std::is_sorted(d.summands.begin(), d.summands.end()));
}

}  // TEST_SUITE

#include "sdsp/graphfactor.hpp"

#include <algorithm>
#include <string>

namespace sdsp {

LoopMultigraph::LoopMultigraph(int vertex_count, LoopConvention conv)
    : vcount_(vertex_count), conv_(conv), loops_(vertex_count, 0) {
  if (vertex_count < 1) throw InputError("graph needs at least one vertex");
}

void LoopMultigraph::add_edge(int u, int v, std::int64_t multiplicity) {
  if (u == v) throw InputError("add_edge called with a loop; use add_loops");
  if (multiplicity < 0) throw InputError("negative edge multiplicity");
  if (multiplicity == 0) return;
  if (u > v) std::swap(u, v);
  edges_[{u, v}] += multiplicity;
}

void LoopMultigraph::add_loops(int v, std::int64_t count) {
  if (count < 0) throw InputError("negative loop count");
  loops_[v] += count;
}

std::int64_t LoopMultigraph::edge_multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = edges_.find({u, v});
  return it == edges_.end() ? 0 : it->second;
}

std::int64_t LoopMultigraph::nonloop_degree(int v) const {
  std::int64_t d = 0;
  for (const auto& [e, mult] : edges_)
    if (e.first == v || e.second == v) d += mult;
  return d;
}

std::int64_t LoopMultigraph::degree(int v) const {
  return nonloop_degree(v) + loops_[v] * (conv_ == LoopConvention::One ? 1 : 2);
}

LoopMultigraph matrix_to_graph(const SymIntMatrix& x, LoopConvention conv) {
  const int n = x.side();
  LoopMultigraph g(n, conv);
  for (int i = 0; i < n; ++i) {
    const std::int64_t d = x(i, i);
    if (conv == LoopConvention::Two) {
      if (d % 2 != 0)
        throw InputError("convention Two needs an even diagonal; entry (" +
                         std::to_string(i) + "," + std::to_string(i) + ") is " +
                         std::to_string(d));
      g.add_loops(i, d / 2);
    } else {
      g.add_loops(i, d);
    }
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j, x(i, j));
  }
  return g;
}

SymIntMatrix graph_to_matrix(const LoopMultigraph& g) {
  SymIntMatrix x(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    x.set(v, v, g.loops(v) * (g.convention() == LoopConvention::One ? 1 : 2));
  for (const auto& [e, mult] : g.edges()) x.set(e.first, e.second, mult);
  return x;
}

std::vector<Arc> euler_orient(const LoopMultigraph& g) {
  if (g.convention() != LoopConvention::Two)
    throw InputError("euler_orient requires convention Two");
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) % 2 != 0)
      throw InputError("vertex " + std::to_string(v) + " has odd degree " +
                       std::to_string(g.degree(v)));

  // Mutable adjacency: remaining multiplicity per neighbor, loops separate.
  std::vector<std::map<int, std::int64_t>> adj(n);
  std::vector<std::int64_t> loops(n);
  for (const auto& [e, mult] : g.edges()) {
    adj[e.first][e.second] = mult;
    adj[e.second][e.first] = mult;
  }
  for (int v = 0; v < n; ++v) loops[v] = g.loops(v);

  std::vector<Arc> arcs;
  // Hierholzer per component, always continuing from the smallest available
  // neighbor; loops are taken first (self counts as smallest).
  for (int start = 0; start < n; ++start) {
    if (adj[start].empty() && loops[start] == 0) continue;
    std::vector<int> stack{start};
    std::vector<Arc> circuit;
    while (!stack.empty()) {
      const int v = stack.back();
      if (loops[v] > 0) {
        --loops[v];
        circuit.push_back({v, v});
        continue;
      }
      auto it = adj[v].begin();
      while (it != adj[v].end() && it->second == 0) ++it;
      if (it == adj[v].end()) {
        stack.pop_back();
        if (!stack.empty()) circuit.push_back({v, stack.back()});
        continue;
      }
      --it->second;
      --adj[it->first][v];
      stack.push_back(it->first);
    }
    // circuit holds arcs in reverse traversal order; direction is consistent.
    arcs.insert(arcs.end(), circuit.begin(), circuit.end());
  }
  return arcs;
}

namespace {

// One perfect matching of an r-regular bipartite multigraph given as
// remaining arc multiplicities (left = tails, right = heads). Kuhn's
// augmenting paths from the lowest-indexed uncovered left vertex.
std::vector<std::pair<int, int>> peel_matching(
    std::vector<std::map<int, std::int64_t>>& arcs, int n) {
  std::vector<int> match_right(n, -1);  // right vertex -> left vertex
  std::vector<int> match_left(n, -1);

  for (int u = 0; u < n; ++u) {
    std::vector<bool> visited(n, false);
    // iterative DFS with explicit path
    std::vector<int> parent(n, -1);
    std::vector<int> todo;
    bool done = false;
    auto push_neighbors = [&](int from) {
      for (const auto& [to, mult] : arcs[from])
        if (mult > 0 && !visited[to]) {
          visited[to] = true;
          parent[to] = from;
          todo.push_back(to);
        }
    };
    push_neighbors(u);
    // process in ascending head order for determinism
    std::sort(todo.begin(), todo.end(), std::greater<int>());
    while (!todo.empty() && !done) {
      const int r = todo.back();
      todo.pop_back();
      if (match_right[r] == -1) {
        // augment along parent chain
        int right = r;
        while (right != -1) {
          const int left = parent[right];
          const int prev_right = match_left[left];
          match_right[right] = left;
          match_left[left] = right;
          right = prev_right;
        }
        done = true;
      } else {
        const std::size_t before = todo.size();
        push_neighbors(match_right[r]);
        std::sort(todo.begin() + before, todo.end(), std::greater<int>());
      }
    }
    if (match_left[u] == -1 && !done) {
      // u may have been matched through augmentation started elsewhere; a
      // regular bipartite multigraph always admits a perfect matching.
      throw FalsificationError("bipartite peel failed at vertex " + std::to_string(u));
    }
  }
  std::vector<std::pair<int, int>> matched;
  matched.reserve(n);
  for (int u = 0; u < n; ++u) {
    if (match_left[u] == -1)
      throw FalsificationError("imperfect matching at vertex " + std::to_string(u));
    matched.emplace_back(u, match_left[u]);
    --arcs[u][match_left[u]];
  }
  return matched;
}

}  // namespace

std::vector<LoopMultigraph> petersen_two_factorize(const LoopMultigraph& g, int m) {
  if (g.convention() != LoopConvention::Two)
    throw InputError("petersen_two_factorize requires convention Two");
  if (m < 1) throw InputError("m must be positive");
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2 * static_cast<std::int64_t>(m))
      throw InputError("vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)) + ", expected " + std::to_string(2 * m));

  const std::vector<Arc> arcs = euler_orient(g);
  // Bipartite double cover: arc u->v becomes an edge (tail u, head v).
  std::vector<std::map<int, std::int64_t>> cover(n);
  for (const Arc& a : arcs) ++cover[a.from][a.to];

  std::vector<LoopMultigraph> factors;
  factors.reserve(m);
  for (int k = 0; k < m; ++k) {
    const auto matching = peel_matching(cover, n);
    LoopMultigraph f(n, LoopConvention::Two);
    for (const auto& [u, v] : matching) {
      if (u == v)
        f.add_loops(u);
      else
        f.add_edge(std::min(u, v), std::max(u, v));
    }
    factors.push_back(std::move(f));
  }
  return factors;
}

Decomposition decompose(const SymIntMatrix& x, int m) {
  [[maybe_unused]] DilatePoint validated(x, m, Family::S);  // row sums 2m
  const int n = x.side();

  if (m == 1) return {x, 1, {x}};

  std::vector<int> odd;
  std::int64_t loop_total = 0;
  for (int i = 0; i < n; ++i) {
    loop_total += x(i, i);
    if (x(i, i) % 2 != 0) odd.push_back(i);
  }
  if (loop_total % 2 != 0)
    throw FalsificationError("odd total loop count in a lattice point of m*S_n");

  const std::int64_t odd_count = static_cast<std::int64_t>(odd.size());
  const std::int64_t t = odd_count / (2 * m);
  const std::int64_t s = odd_count % (2 * m);
  if (s % 2 != 0) throw FalsificationError("odd remainder s in |V_odd| = 2mt + s");

  const bool helpers = !odd.empty();
  const int total = helpers ? n + static_cast<int>(t) + 1 : n;
  LoopMultigraph gy(total, LoopConvention::Two);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gy.add_edge(i, j, x(i, j));
  std::vector<std::int64_t> helper_degree(helpers ? t + 1 : 0, 0);
  for (int i = 0; i < n; ++i) {
    if (x(i, i) % 2 == 0) {
      gy.add_loops(i, x(i, i) / 2);
    } else {
      gy.add_loops(i, (x(i, i) - 1) / 2);
      // lowest-indexed helper with spare capacity
      std::size_t w = 0;
      while (helper_degree[w] >= 2 * m) ++w;
      gy.add_edge(i, n + static_cast<int>(w));
      helper_degree[w] += 1;
    }
  }
  if (helpers) gy.add_loops(n + static_cast<int>(t), (2 * m - s) / 2);

  const auto factors = petersen_two_factorize(gy, m);

  std::vector<SymIntMatrix> summands;
  summands.reserve(m);
  for (const auto& f : factors) {
    SymIntMatrix part(n);
    for (int i = 0; i < n; ++i) {
      std::int64_t diag = 2 * f.loops(i);
      for (int w = n; w < total; ++w) diag += f.edge_multiplicity(i, w);
      part.set(i, i, diag);
      for (int j = i + 1; j < n; ++j) part.set(i, j, f.edge_multiplicity(i, j));
    }
    for (int i = 0; i < n; ++i)
      if (part.row_sum(i) != 2)
        throw FalsificationError("summand row sum " + std::to_string(part.row_sum(i)) +
                                 " != 2 after helper removal");
    summands.push_back(std::move(part));
  }

  SymIntMatrix sum(n);
  for (const auto& p : summands)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) sum.set(i, j, sum(i, j) + p(i, j));
  if (!(sum == x)) throw FalsificationError("summands do not add up to the target");

  std::sort(summands.begin(), summands.end());
  return {x, m, std::move(summands)};
}

}  // namespace sdsp

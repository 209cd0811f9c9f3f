#ifndef SDSP_GRAPHFACTOR_HPP
#define SDSP_GRAPHFACTOR_HPP

#include <map>
#include <utility>
#include <vector>

#include "sdsp/symmat.hpp"

namespace sdsp {

// Loop degree convention: One counts a loop as degree 1 (the adjacency-matrix
// reading of a lattice point), Two counts it as degree 2 (the Euler/factor
// reading).
enum class LoopConvention { One, Two };

class LoopMultigraph {
 public:
  LoopMultigraph(int vertex_count, LoopConvention conv);

  int vertex_count() const { return vcount_; }
  LoopConvention convention() const { return conv_; }

  void add_edge(int u, int v, std::int64_t multiplicity = 1);  // u != v
  void add_loops(int v, std::int64_t count = 1);

  std::int64_t edge_multiplicity(int u, int v) const;
  std::int64_t loops(int v) const { return loops_[v]; }

  // Non-loop incidences only.
  std::int64_t nonloop_degree(int v) const;
  // Degree per the stored convention.
  std::int64_t degree(int v) const;

  const std::map<std::pair<int, int>, std::int64_t>& edges() const { return edges_; }

  bool operator==(const LoopMultigraph&) const = default;

 private:
  int vcount_;
  LoopConvention conv_;
  std::map<std::pair<int, int>, std::int64_t> edges_;  // key (u,v), u < v
  std::vector<std::int64_t> loops_;
};

// Off-diagonal entries become edge multiplicities; a diagonal entry becomes
// that many loops (convention One) or half as many (convention Two, even
// diagonal required).
LoopMultigraph matrix_to_graph(const SymIntMatrix& x, LoopConvention conv);
SymIntMatrix graph_to_matrix(const LoopMultigraph& g);

struct Arc {
  int from;
  int to;
  bool operator==(const Arc&) const = default;
};

// Orients every edge along a per-component Euler circuit; each loop becomes a
// self-arc. Requires convention Two; per vertex, in-degree = out-degree =
// degree/2 afterwards.
std::vector<Arc> euler_orient(const LoopMultigraph& g);

// Splits a 2m-regular convention-Two multigraph into m spanning 2-regular
// subgraphs whose edge multisets partition the input's. Euler orientation,
// then m perfect matchings peeled from the bipartite double cover.
std::vector<LoopMultigraph> petersen_two_factorize(const LoopMultigraph& g, int m);

struct Decomposition {
  SymIntMatrix target;
  int m;
  std::vector<SymIntMatrix> summands;  // canonical order
};

// Writes a lattice point of m*S_n as a sum of m lattice points of S_n,
// following the helper-vertex construction: odd-diagonal vertices donate one
// unit to a shared helper, the helper graph is 2m-regular, its 2-factors
// restrict back after undoing the helper edges.
Decomposition decompose(const SymIntMatrix& x, int m);

}  // namespace sdsp

#endif

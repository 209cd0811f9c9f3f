#ifndef SDSP_CONJECTURES_HPP
#define SDSP_CONJECTURES_HPP

#include <optional>
#include <string>

#include "sdsp/json_io.hpp"
#include "sdsp/toric.hpp"

namespace sdsp {

// Evidence, not assertions: checkers record verdicts and witnesses and never
// abort on a counterexample.
struct ConjectureReport {
  std::string conjecture;  // "3.3", "4.1a", "4.1b", "4.2", "4.3", "4.4"
  int n = 0;
  std::string convention;  // "-" when not order-dependent
  std::string verdict;     // "holds-at-this-n" | "counterexample" | "resource-limit"
  Json witnesses = Json::array();

  Json to_json() const;
};

// Conjecture 4.1(1): for every basis element of degree >= 3, the graph of the
// common image matrix is connected (loop-only vertices count as components).
ConjectureReport check_connectivity(const GroebnerBasis& basis, const PointConfig& config);

// Conjecture 4.1(2): the image matrix of every degree-k element (k >= 3)
// decomposes into k lattice points of S_n with a zero/one summand.
ConjectureReport check_zero_one_summand(const GroebnerBasis& basis,
                                        const PointConfig& config);

// Exposed for the checker's self-tests: decomposition of a into k lattice
// points of S_n with a 0/1 summand, if one exists. k = 1 reduces to "a itself
// is a 0/1 lattice point".
std::optional<std::vector<SymIntMatrix>> zero_one_decomposition(const SymIntMatrix& a,
                                                                int k);

// Connectivity subroutine (self-testable): components of the nonzero-support
// graph; loops keep a vertex in the support but connect nothing.
int support_component_count(const SymIntMatrix& a);

// Conjecture 4.2: under the Refined convention, max degree <= n-1 and every
// element of degree > 2 squarefree in both terms.
ConjectureReport check_refined_order(int n, bool allow_large = false,
                                     TwoCountMode mode = TwoCountMode::FullMatrix);

// Conjecture 4.3 helper.
bool check_unimodal(const HStarVector& v);
ConjectureReport check_hstar_P_unimodal(int n);

// Conjecture 4.4: reverse lexicographic initial ideals of the vertex-only
// toric ideal, all rankings at n = 3 (120) or a deterministic sample.
ConjectureReport check_vertex_ideal(int n, bool allow_large = false);

// Conjecture 3.3: squarefree initial terms under the given convention;
// includes the h*(S_n) unimodality verdict for even n.
ConjectureReport check_squarefree_triangulation(int n, OrderConvention conv,
                                                bool allow_large = false);

// Re-checks a report's witnesses with the relevant module.
bool reverify(const ConjectureReport& report);

}  // namespace sdsp

#endif

#ifndef SDSP_TORIC_HPP
#define SDSP_TORIC_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "sdsp/linalg.hpp"
#include "sdsp/symmat.hpp"

namespace sdsp {

// Exponent vector over the configuration's variables (one per point).
using ExpVec = std::vector<std::int32_t>;

int total_degree(const ExpVec& u);
bool monomial_divides(const ExpVec& a, const ExpVec& b);  // a | b
bool squarefree(const ExpVec& u);
int max_exponent(const ExpVec& u);

// A point configuration with homogenizing coordinate; variables are indexed
// by the canonical point order.
struct PointConfig {
  int n = 0;
  Family family = Family::S;
  std::vector<SymIntMatrix> points;  // canonical order, distinct
  IntMat columns;                    // per point: upper-tri coords + trailing 1

  std::size_t size() const { return points.size(); }
};

PointConfig make_config(int n, Family family, std::vector<SymIntMatrix> pts);
PointConfig full_config(int n);    // all lattice points of S_n
PointConfig vertex_config(int n);  // vertices of S_n only

// Weighted sum of homogenized points; the image of a monomial under pi.
IntVec monomial_image(const PointConfig& config, const ExpVec& u);

// Variable comparison direction for the graded reverse lexicographic orders:
//   LiteralDef32:    more 2s  => smaller variable (Definition 3.2 verbatim)
//   ProofConsistent: more 2s  => larger variable
//   Refined:         more 2s  => larger; among two-free matrices,
//                    more zeros => larger
// Ties always broken by the canonical row-major sequence, larger => larger.
enum class OrderConvention { LiteralDef32, ProofConsistent, Refined };

const char* convention_name(OrderConvention c);

class TermOrder {
 public:
  static TermOrder for_config(const PointConfig& config, OrderConvention conv,
                              TwoCountMode mode = TwoCountMode::FullMatrix);
  // by_rank[r] = variable of rank r+1 (rank 1 = smallest variable).
  static TermOrder from_ranking(std::vector<int> by_rank);

  // graded reverse lexicographic: higher total degree wins; on ties, at the
  // first differing exponent scanning from the lowest rank upward, the
  // monomial with the smaller exponent is larger.
  std::strong_ordering compare(const ExpVec& u, const ExpVec& v) const;

  int rank(int var) const { return rank_[var]; }  // 1-based
  const std::vector<int>& by_rank() const { return by_rank_; }
  std::size_t variable_count() const { return by_rank_.size(); }
  OrderConvention convention() const { return conv_; }
  TwoCountMode mode() const { return mode_; }
  // "explicit-ranking" for orders built from a raw permutation
  const char* label() const;

 private:
  TermOrder() = default;
  std::vector<int> rank_;
  std::vector<int> by_rank_;
  OrderConvention conv_ = OrderConvention::ProofConsistent;
  TwoCountMode mode_ = TwoCountMode::FullMatrix;
  bool explicit_ranking_ = false;
};

// lead - trail with lead the initial term; supports are disjoint in any
// reduced basis element.
struct Binomial {
  ExpVec lead;
  ExpVec trail;

  int degree() const { return total_degree(lead); }
  bool operator==(const Binomial&) const = default;
};

struct GroebnerBasis {
  std::vector<Binomial> elements;  // ascending by initial term
  TermOrder order;
  bool reduced = false;
};

// Reduced Groebner basis of the toric ideal of the configuration: lattice
// basis of the integer kernel, per-variable saturation passes (grevlex with
// the variable cheapest), then Buchberger under the target order and full
// inter-reduction.
GroebnerBasis toric_groebner(const PointConfig& config, const TermOrder& order,
                             const ResourceLimits& limits = {});

// Unique remainder: no initial term of the (reduced) basis divides the result.
ExpVec normal_form(ExpVec monomial, const GroebnerBasis& basis);

struct Theorem13Report {
  bool p1 = false;  // every element has a squarefree monomial
  bool p2 = false;  // every variable appears in a degree-2 element
  bool p3 = false;  // every degree-2 initial term is squarefree
  bool p4 = false;  // every initial term is cubefree
  std::vector<std::size_t> p1_witnesses;  // element indices violating p1
  std::vector<int> p2_missing;            // variables in no degree-2 element
  std::vector<std::size_t> p3_witnesses;
  std::vector<std::size_t> p4_witnesses;
  std::vector<int> unused_variables;      // variables in no element at all
};

Theorem13Report verify_theorem13(const GroebnerBasis& basis, const PointConfig& config);

// Degree-m standard monomials versus the lattice-point count of the dilate.
bool hilbert_check(const GroebnerBasis& basis, const PointConfig& config, int m);
BigInt standard_monomial_count(const GroebnerBasis& basis, std::size_t vars, int m);

struct SquarefreeReport {
  bool all_squarefree = false;
  std::vector<std::size_t> witnesses;  // elements with non-squarefree lead
};

SquarefreeReport squarefree_initial_report(const GroebnerBasis& basis);

// Full Buchberger-criterion check: every S-pair of the basis reduces to zero.
bool all_spairs_reduce_to_zero(const GroebnerBasis& basis);

}  // namespace sdsp

#endif

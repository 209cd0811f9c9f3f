#include "sdsp/toric.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "sdsp/geometry.hpp"

namespace sdsp {

int total_degree(const ExpVec& u) { return std::accumulate(u.begin(), u.end(), 0); }

bool monomial_divides(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool squarefree(const ExpVec& u) {
  return std::all_of(u.begin(), u.end(), [](std::int32_t e) { return e <= 1; });
}

int max_exponent(const ExpVec& u) {
  return u.empty() ? 0 : *std::max_element(u.begin(), u.end());
}

PointConfig make_config(int n, Family family, std::vector<SymIntMatrix> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) throw InputError("configuration must be nonempty");
  PointConfig config;
  config.n = n;
  config.family = family;
  for (const auto& p : pts) {
    IntVec col;
    col.reserve(SymIntMatrix::cell_count(n) + 1);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) col.push_back(p(i, j));
    col.push_back(1);
    config.columns.push_back(std::move(col));
  }
  config.points = std::move(pts);
  return config;
}

PointConfig full_config(int n) {
  return make_config(n, Family::S, enumerate_points(n, 1, Family::S).points);
}

PointConfig vertex_config(int n) {
  return make_config(n, Family::S, polytope_vertices(n).points);
}

IntVec monomial_image(const PointConfig& config, const ExpVec& u) {
  if (u.size() != config.size()) throw InputError("exponent vector size mismatch");
  IntVec img(config.columns.empty() ? 0 : config.columns[0].size(), 0);
  for (std::size_t v = 0; v < u.size(); ++v) {
    if (u[v] == 0) continue;
    for (std::size_t c = 0; c < img.size(); ++c) img[c] += u[v] * config.columns[v][c];
  }
  return img;
}

const char* TermOrder::label() const {
  return explicit_ranking_ ? "explicit-ranking" : convention_name(conv_);
}

const char* convention_name(OrderConvention c) {
  switch (c) {
    case OrderConvention::LiteralDef32: return "literal-def-3.2";
    case OrderConvention::ProofConsistent: return "proof-consistent";
    case OrderConvention::Refined: return "refined";
  }
  return "?";
}

TermOrder TermOrder::for_config(const PointConfig& config, OrderConvention conv,
                                TwoCountMode mode) {
  const std::size_t s = config.size();
  std::vector<int> idx(s);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<int> twos(s), zeros(s);
  for (std::size_t v = 0; v < s; ++v) {
    twos[v] = two_count(config.points[v], mode);
    zeros[v] = zero_count(config.points[v], mode);
  }
  // ascending: smallest variable first
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (twos[a] != twos[b]) {
      if (conv == OrderConvention::LiteralDef32) return twos[a] > twos[b];
      return twos[a] < twos[b];  // ProofConsistent and Refined
    }
    if (conv == OrderConvention::Refined && twos[a] == 0 && zeros[a] != zeros[b])
      return zeros[a] < zeros[b];
    return config.points[a] < config.points[b];  // larger sequence => larger
  });
  TermOrder t;
  t.conv_ = conv;
  t.mode_ = mode;
  t.by_rank_ = std::move(idx);
  t.rank_.assign(s, 0);
  for (std::size_t r = 0; r < s; ++r) t.rank_[t.by_rank_[r]] = static_cast<int>(r) + 1;
  return t;
}

TermOrder TermOrder::from_ranking(std::vector<int> by_rank) {
  TermOrder t;
  t.explicit_ranking_ = true;
  t.rank_.assign(by_rank.size(), 0);
  for (std::size_t r = 0; r < by_rank.size(); ++r) {
    const int v = by_rank[r];
    if (v < 0 || v >= static_cast<int>(by_rank.size()) || t.rank_[v] != 0)
      throw InputError("ranking is not a permutation");
    t.rank_[v] = static_cast<int>(r) + 1;
  }
  t.by_rank_ = std::move(by_rank);
  return t;
}

std::strong_ordering TermOrder::compare(const ExpVec& u, const ExpVec& v) const {
  const int du = total_degree(u), dv = total_degree(v);
  if (du != dv) return du <=> dv;
  for (int var : by_rank_) {
    if (u[var] == v[var]) continue;
    return u[var] > v[var] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

namespace {

ExpVec vec_add(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec vec_sub(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExpVec vec_lcm(const ExpVec& a, const ExpVec& b) {
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const ExpVec& a, const ExpVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

// Buchberger over pure-difference binomials; S-polynomials and remainders of
// pure differences stay pure differences, so no general polynomial type is
// needed. Coefficients are +-1 throughout.
class Engine {
 public:
  Engine(const TermOrder& order, const ResourceLimits& limits)
      : ord_(order), limits_(limits), start_(std::chrono::steady_clock::now()) {}

  // lead-orients (a, b); nullopt when a == b
  std::optional<Binomial> orient(ExpVec a, ExpVec b) const {
    const auto c = ord_.compare(a, b);
    if (c == std::strong_ordering::equal) return std::nullopt;
    if (c == std::strong_ordering::less) std::swap(a, b);
    return Binomial{std::move(a), std::move(b)};
  }

  // full normal form against g: lead reduced until no initial term divides,
  // then the trail likewise. nullopt when the element vanishes.
  std::optional<Binomial> reduce(Binomial h, const std::vector<Binomial>& g) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Binomial& d : g) {
        if (!monomial_divides(d.lead, h.lead)) continue;
        ExpVec t = vec_add(vec_sub(h.lead, d.lead), d.trail);
        auto reoriented = orient(std::move(t), std::move(h.trail));
        if (!reoriented) return std::nullopt;
        h = std::move(*reoriented);
        changed = true;
        break;
      }
    }
    changed = true;
    while (changed) {
      changed = false;
      for (const Binomial& d : g) {
        if (!monomial_divides(d.lead, h.trail)) continue;
        h.trail = vec_add(vec_sub(h.trail, d.lead), d.trail);
        changed = true;
        break;
      }
    }
    return h;
  }

  std::vector<Binomial> run(std::vector<Binomial> gens) {
    basis_.clear();
    pairs_.clear();
    for (Binomial& g : gens) {
      auto h = reduce(std::move(g), basis_);
      if (h) insert(std::move(*h));
    }
    while (!pairs_.empty()) {
      check_limits();
      const Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      const Binomial& a = basis_[p.i];
      const Binomial& b = basis_[p.j];
      // S-polynomial of x^A - x^A' and x^B - x^B' with L = lcm(A, B):
      // x^(L-A+A') - x^(L-B+B')
      ExpVec u = vec_add(vec_sub(p.lcm, a.lead), a.trail);
      ExpVec v = vec_add(vec_sub(p.lcm, b.lead), b.trail);
      auto s = orient(std::move(u), std::move(v));
      if (!s) continue;
      auto h = reduce(std::move(*s), basis_);
      if (h) insert(std::move(*h));
    }
    return std::move(basis_);
  }

  // minimal + fully inter-reduced + canonically sorted
  std::vector<Binomial> reduce_basis(std::vector<Binomial> g) const {
    std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) {
      return ord_.compare(a.lead, b.lead) == std::strong_ordering::less;
    });
    std::vector<Binomial> minimal;
    for (Binomial& e : g) {
      bool covered = false;
      for (const Binomial& m : minimal)
        if (monomial_divides(m.lead, e.lead)) covered = true;
      if (!covered) minimal.push_back(std::move(e));
    }
    std::vector<Binomial> out;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Binomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      auto h = reduce(minimal[i], others);
      if (!h) throw std::logic_error("minimal basis element reduced to zero");
      if (ord_.compare(h->lead, minimal[i].lead) != std::strong_ordering::equal)
        throw std::logic_error("initial term changed during inter-reduction");
      out.push_back(std::move(*h));
    }
    std::sort(out.begin(), out.end(), [&](const Binomial& a, const Binomial& b) {
      return ord_.compare(a.lead, b.lead) == std::strong_ordering::less;
    });
    return out;
  }

 private:
  struct Pair {
    ExpVec lcm;
    std::size_t i, j;
  };
  struct PairLess {
    const TermOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
      const auto c = ord->compare(a.lcm, b.lcm);
      if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };

  void insert(Binomial h) {
    const std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (coprime(basis_[i].lead, h.lead)) continue;  // Buchberger's first criterion
      pairs_.insert({vec_lcm(basis_[i].lead, h.lead), i, k});
    }
    basis_.push_back(std::move(h));
    if (basis_.size() > limits_.max_basis)
      throw CapacityError("basis size limit exceeded: " + std::to_string(basis_.size()) +
                          " elements, " + std::to_string(pairs_.size()) + " pairs queued");
  }

  void check_limits() const {
    if (pairs_.size() > limits_.max_pairs)
      throw CapacityError("S-pair queue limit exceeded: " + std::to_string(pairs_.size()) +
                          " pairs, " + std::to_string(basis_.size()) + " basis elements");
    const auto elapsed = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - start_).count();
    if (elapsed > limits_.time_budget_seconds)
      throw CapacityError("time budget exceeded: " + std::to_string(basis_.size()) +
                          " basis elements, " + std::to_string(pairs_.size()) +
                          " pairs queued");
  }

  const TermOrder& ord_;
  ResourceLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Binomial> basis_;
  std::multiset<Pair, PairLess> pairs_{PairLess{&ord_}};
};

TermOrder cheapest_variable_order(std::size_t s, int cheapest) {
  std::vector<int> by_rank;
  by_rank.reserve(s);
  by_rank.push_back(cheapest);
  for (std::size_t v = 0; v < s; ++v)
    if (static_cast<int>(v) != cheapest) by_rank.push_back(static_cast<int>(v));
  return TermOrder::from_ranking(std::move(by_rank));
}

}  // namespace

GroebnerBasis toric_groebner(const PointConfig& config, const TermOrder& order,
                             const ResourceLimits& limits) {
  const std::size_t s = config.size();
  if (order.variable_count() != s) throw InputError("order/configuration size mismatch");

  // lattice basis of the integer kernel of the homogenized point matrix
  const std::size_t rows = config.columns[0].size();
  IntMat a(rows, IntVec(s));
  for (std::size_t v = 0; v < s; ++v)
    for (std::size_t r = 0; r < rows; ++r) a[r][v] = config.columns[v][r];

  std::vector<Binomial> gens;
  for (const IntVec& u : integer_kernel(a)) {
    ExpVec plus(s, 0), minus(s, 0);
    for (std::size_t v = 0; v < s; ++v) {
      if (u[v] > 0) plus[v] = static_cast<std::int32_t>(u[v]);
      if (u[v] < 0) minus[v] = static_cast<std::int32_t>(-u[v]);
    }
    if (total_degree(plus) != total_degree(minus))
      throw std::logic_error("kernel vector is not degree-homogeneous");
    gens.push_back({std::move(plus), std::move(minus)});
  }

  // saturate by every variable: grevlex with the variable cheapest makes the
  // ideal quotient (J : t_i^inf) a per-element division
  for (std::size_t i = 0; i < s && !gens.empty(); ++i) {
    const TermOrder pass = cheapest_variable_order(s, static_cast<int>(i));
    Engine engine(pass, limits);
    std::vector<Binomial> oriented;
    for (Binomial& g : gens) {
      auto h = engine.orient(std::move(g.lead), std::move(g.trail));
      if (h) oriented.push_back(std::move(*h));
    }
    std::vector<Binomial> gb = engine.reduce_basis(engine.run(std::move(oriented)));
    for (Binomial& g : gb) {
      const std::int32_t k = std::min(g.lead[i], g.trail[i]);
      if (k > 0) {
        g.lead[i] -= k;
        g.trail[i] -= k;
      }
    }
    gens = std::move(gb);
  }

  // final basis under the target order
  Engine engine(order, limits);
  std::vector<Binomial> oriented;
  for (Binomial& g : gens) {
    auto h = engine.orient(std::move(g.lead), std::move(g.trail));
    if (h) oriented.push_back(std::move(*h));
  }
  GroebnerBasis basis{engine.reduce_basis(engine.run(std::move(oriented))), order, true};

  for (const Binomial& g : basis.elements) {
    if (!coprime(g.lead, g.trail))
      throw std::logic_error("reduced basis element has non-disjoint supports");
    if (monomial_image(config, g.lead) != monomial_image(config, g.trail))
      throw std::logic_error("basis element does not map to zero under pi");
  }
  return basis;
}

ExpVec normal_form(ExpVec monomial, const GroebnerBasis& basis) {
  if (!basis.reduced) throw InputError("normal_form needs a reduced basis");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Binomial& g : basis.elements) {
      if (!monomial_divides(g.lead, monomial)) continue;
      monomial = vec_add(vec_sub(monomial, g.lead), g.trail);
      changed = true;
      break;
    }
  }
  return monomial;
}

Theorem13Report verify_theorem13(const GroebnerBasis& basis, const PointConfig& config) {
  const std::size_t s = config.size();
  Theorem13Report rep;
  std::vector<bool> in_degree2(s, false), anywhere(s, false);
  for (std::size_t k = 0; k < basis.elements.size(); ++k) {
    const Binomial& g = basis.elements[k];
    if (!squarefree(g.lead) && !squarefree(g.trail)) rep.p1_witnesses.push_back(k);
    if (max_exponent(g.lead) > 2) rep.p4_witnesses.push_back(k);
    for (std::size_t v = 0; v < s; ++v) {
      const bool used = g.lead[v] > 0 || g.trail[v] > 0;
      if (used) anywhere[v] = true;
      if (used && g.degree() == 2) in_degree2[v] = true;
    }
    if (g.degree() == 2 && !squarefree(g.lead)) rep.p3_witnesses.push_back(k);
  }
  for (std::size_t v = 0; v < s; ++v) {
    if (!in_degree2[v]) rep.p2_missing.push_back(static_cast<int>(v));
    if (!anywhere[v]) rep.unused_variables.push_back(static_cast<int>(v));
  }
  rep.p1 = rep.p1_witnesses.empty();
  rep.p2 = rep.p2_missing.empty();
  rep.p3 = rep.p3_witnesses.empty();
  rep.p4 = rep.p4_witnesses.empty();
  return rep;
}

namespace {

void count_standard(const std::vector<Binomial>& basis, std::size_t vars, ExpVec& mono,
                    std::size_t v, int remaining, BigInt& acc) {
  if (v == vars) {
    if (remaining == 0) {
      for (const Binomial& g : basis)
        if (monomial_divides(g.lead, mono)) return;
      ++acc;
    }
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    mono[v] = e;
    count_standard(basis, vars, mono, v + 1, remaining - e, acc);
  }
  mono[v] = 0;
}

}  // namespace

BigInt standard_monomial_count(const GroebnerBasis& basis, std::size_t vars, int m) {
  ExpVec mono(vars, 0);
  BigInt acc = 0;
  count_standard(basis.elements, vars, mono, 0, m, acc);
  return acc;
}

bool hilbert_check(const GroebnerBasis& basis, const PointConfig& config, int m) {
  if (m < 0 || m > 3) throw InputError("hilbert_check supports 0 <= m <= 3");
  return standard_monomial_count(basis, config.size(), m) ==
         count_points(config.n, m, config.family);
}

SquarefreeReport squarefree_initial_report(const GroebnerBasis& basis) {
  SquarefreeReport rep;
  for (std::size_t k = 0; k < basis.elements.size(); ++k)
    if (!squarefree(basis.elements[k].lead)) rep.witnesses.push_back(k);
  rep.all_squarefree = rep.witnesses.empty();
  return rep;
}

bool all_spairs_reduce_to_zero(const GroebnerBasis& basis) {
  Engine engine(basis.order, ResourceLimits{});
  const auto& g = basis.elements;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const ExpVec l = vec_lcm(g[i].lead, g[j].lead);
      ExpVec u = vec_add(vec_sub(l, g[i].lead), g[i].trail);
      ExpVec v = vec_add(vec_sub(l, g[j].lead), g[j].trail);
      auto s = engine.orient(std::move(u), std::move(v));
      if (!s) continue;
      if (engine.reduce(std::move(*s), g)) return false;
    }
  return true;
}

}  // namespace sdsp

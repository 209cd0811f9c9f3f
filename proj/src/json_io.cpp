#include "sdsp/json_io.hpp"

#include <string>

namespace sdsp {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return BigInt(j.get<std::string>());
  throw InputError("expected an integer or a decimal string");
}

Json matrix_to_json(const SymIntMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.rows()) rows.push_back(row);
  return Json{{"n", m.side()}, {"rows", rows}};
}

SymIntMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
    throw InputError("matrix JSON needs fields \"n\" and \"rows\"");
  const int n = j.at("n").get<int>();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::vector<std::int64_t>>());
  if (static_cast<int>(rows.size()) != n) throw InputError("row count does not match n");
  return SymIntMatrix::from_rows(rows);
}

Json point_list_to_json(const PointList& list) {
  Json pts = Json::array();
  for (const auto& p : list.points) pts.push_back(matrix_to_json(p));
  return Json{{"family", family_name(list.family)},
              {"m", list.dilate},
              {"n", list.n},
              {"points", pts}};
}

PointList point_list_from_json(const Json& j) {
  PointList list;
  const std::string fam = j.at("family").get<std::string>();
  if (fam == "S")
    list.family = Family::S;
  else if (fam == "Sigma")
    list.family = Family::Sigma;
  else
    throw InputError("unknown family \"" + fam + "\"");
  list.dilate = j.at("m").get<int>();
  list.n = j.at("n").get<int>();
  for (const auto& p : j.at("points")) list.points.push_back(matrix_from_json(p));
  return list;
}

Json decomposition_to_json(const Decomposition& d) {
  Json summands = Json::array();
  for (const auto& s : d.summands) summands.push_back(matrix_to_json(s));
  return Json{{"target", matrix_to_json(d.target)}, {"m", d.m}, {"summands", summands}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d{matrix_from_json(j.at("target")), j.at("m").get<int>(), {}};
  for (const auto& s : j.at("summands")) d.summands.push_back(matrix_from_json(s));
  return d;
}

Json hstar_to_json(const HStarVector& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(big_to_json(c));
  return Json{{"d", h.d},
              {"hstar", coeffs},
              {"den", h.den},
              {"degree", h.degree()},
              {"palindromic", h.palindromic()}};
}

namespace {

Json condition_to_json(const LinearCondition& c) {
  Json row = Json::array();
  for (const auto& v : c.coeffs) row.push_back(big_to_json(v));
  row.push_back(big_to_json(c.rhs));
  return row;
}

LinearCondition condition_from_json(const Json& j) {
  LinearCondition c;
  for (std::size_t i = 0; i + 1 < j.size(); ++i) c.coeffs.push_back(big_from_json(j[i]));
  c.rhs = big_from_json(j.back());
  return c;
}

}  // namespace

Json hrep_to_json(const HRep& h) {
  Json eqs = Json::array(), ineqs = Json::array();
  for (const auto& e : h.eqs) eqs.push_back(condition_to_json(e));
  for (const auto& i : h.ineqs) ineqs.push_back(condition_to_json(i));
  return Json{{"n", h.n}, {"eqs", eqs}, {"ineqs", ineqs}};
}

HRep hrep_from_json(const Json& j) {
  HRep h;
  h.n = j.at("n").get<int>();
  for (const auto& e : j.at("eqs")) h.eqs.push_back(condition_from_json(e));
  for (const auto& i : j.at("ineqs")) h.ineqs.push_back(condition_from_json(i));
  return h;
}

namespace {

Json exponents_to_json(const ExpVec& u) {
  Json obj = Json::object();
  for (std::size_t v = 0; v < u.size(); ++v)
    if (u[v] != 0) obj[std::to_string(v)] = u[v];
  return obj;
}

}  // namespace

Json basis_to_json(const GroebnerBasis& basis) {
  Json elements = Json::array();
  for (const auto& g : basis.elements)
    elements.push_back(Json{{"lead", exponents_to_json(g.lead)},
                            {"trail", exponents_to_json(g.trail)},
                            {"degree", g.degree()}});
  return Json{{"order",
               Json{{"convention", basis.order.label()},
                    {"ranking", basis.order.by_rank()}}},
              {"reduced", basis.reduced},
              {"elements", elements}};
}

Json theorem13_to_json(const Theorem13Report& rep) {
  return Json{{"p1", rep.p1},
              {"p2", rep.p2},
              {"p3", rep.p3},
              {"p4", rep.p4},
              {"p1_witnesses", rep.p1_witnesses},
              {"p2_missing", rep.p2_missing},
              {"p3_witnesses", rep.p3_witnesses},
              {"p4_witnesses", rep.p4_witnesses},
              {"unused_variables", rep.unused_variables}};
}

Json polynomial_to_json(const Polynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) {
    if (denominator(c) == 1)
      coeffs.push_back(big_to_json(numerator(c)));
    else
      coeffs.push_back(numerator(c).str() + "/" + denominator(c).str());
  }
  return Json{{"degree", p.degree()}, {"coeffs", coeffs}};
}

Json quasi_to_json(const QuasiConstituents& q) {
  return Json{{"f", polynomial_to_json(q.f)},
              {"g", polynomial_to_json(q.g)},
              {"degree_check_applicable", q.degree_check_applicable}};
}

Json reciprocity_to_json(const ReciprocityReport& rep) {
  return Json{{"n", rep.n},
              {"first_interior_dilate", rep.first_interior_dilate},
              {"zero_below", rep.zero_below},
              {"signed_value", big_to_json(rep.signed_value)},
              {"interior", big_to_json(rep.interior)},
              {"involutions", big_to_json(rep.involutions)},
              {"match", rep.match}};
}

}  // namespace sdsp

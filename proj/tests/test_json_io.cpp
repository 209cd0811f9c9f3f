#include <doctest.h>

#include "sdsp/json_io.hpp"

using namespace sdsp;

TEST_SUITE("json_io") {

TEST_CASE("matrix round trip and validation") {
  const auto m = SymIntMatrix::from_rows({{1, 1, 2}, {1, 1, 2}, {2, 2, 0}});
  const Json j = matrix_to_json(m);
  CHECK(j.at("n") == 3);
  CHECK(matrix_from_json(j) == m);

  Json bad = j;
  bad["rows"][0][1] = 5;  // breaks symmetry
  CHECK_THROWS_AS(matrix_from_json(bad), InputError);
  CHECK_THROWS_AS(matrix_from_json(Json{{"n", 2}}), InputError);
}

TEST_CASE("point list round trip") {
  const PointList list = enumerate_points(2, 1, Family::S);
  const PointList back = point_list_from_json(point_list_to_json(list));
  CHECK(back.n == list.n);
  CHECK(back.family == list.family);
  CHECK(back.dilate == list.dilate);
  CHECK(back.points == list.points);
}

TEST_CASE("decomposition round trip") {
  const auto x = SymIntMatrix::from_rows({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}});
  const Decomposition d = decompose(x, 2);
  const Decomposition back = decomposition_from_json(decomposition_to_json(d));
  CHECK(back.m == d.m);
  CHECK(back.target == d.target);
  CHECK(back.summands == d.summands);
}

TEST_CASE("hrep round trip") {
  const HRep h = v_to_h(enumerate_points(2, 1, Family::S).points);
  const HRep back = hrep_from_json(hrep_to_json(h));
  CHECK(back.n == h.n);
  CHECK(back.eqs == h.eqs);
  CHECK(back.ineqs == h.ineqs);
}

TEST_CASE("big integers survive the string fallback") {
  const BigInt big("123456789012345678901234567890");
  CHECK(big_from_json(big_to_json(big)) == big);
  CHECK(big_to_json(BigInt(42)) == Json(42));
  CHECK(big_from_json(Json(-7)) == BigInt(-7));
}

TEST_CASE("basis serialization uses canonical variable indices") {
  const PointConfig config = full_config(2);
  const GroebnerBasis basis =
      toric_groebner(config, TermOrder::for_config(config, OrderConvention::ProofConsistent));
  const Json j = basis_to_json(basis);
  CHECK(j.at("order").at("convention") == "proof-consistent");
  CHECK(j.at("order").at("ranking").size() == 3);
  REQUIRE(j.at("elements").size() == 1);
  // lead = t_0 t_2 (antidiagonal times diagonal), trail = t_1^2
  CHECK(j.at("elements")[0].at("lead") == Json{{"0", 1}, {"2", 1}});
  CHECK(j.at("elements")[0].at("trail") == Json{{"1", 2}});
}

}  // TEST_SUITE

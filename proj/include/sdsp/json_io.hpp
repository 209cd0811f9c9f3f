#ifndef SDSP_JSON_IO_HPP
#define SDSP_JSON_IO_HPP

#include <json.hpp>

#include "sdsp/ehrhart.hpp"
#include "sdsp/geometry.hpp"
#include "sdsp/graphfactor.hpp"
#include "sdsp/symmat.hpp"
#include "sdsp/toric.hpp"

namespace sdsp {

using Json = nlohmann::ordered_json;

// Numbers that fit in int64 are emitted as JSON numbers, larger values as
// decimal strings.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);

Json matrix_to_json(const SymIntMatrix& m);        // {"n":..., "rows": [[...]]}
SymIntMatrix matrix_from_json(const Json& j);      // validates symmetry

Json point_list_to_json(const PointList& list);
PointList point_list_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json hstar_to_json(const HStarVector& h);

Json hrep_to_json(const HRep& h);
HRep hrep_from_json(const Json& j);

Json basis_to_json(const GroebnerBasis& basis);
Json theorem13_to_json(const Theorem13Report& rep);

Json quasi_to_json(const QuasiConstituents& q);
Json polynomial_to_json(const Polynomial& p);  // coefficient strings "num/den"

Json reciprocity_to_json(const ReciprocityReport& rep);

}  // namespace sdsp

#endif

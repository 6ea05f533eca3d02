#ifndef HBK_JSON_IO_HPP
#define HBK_JSON_IO_HPP

#include <json.hpp>

#include "hbk/boundary.hpp"
#include "hbk/weyl.hpp"

namespace hbk {

using json = nlohmann::json;

json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldCtx& ctx, const json& j);

// {"n": int, "basis": [[elem-string]], "context": {"rank": d, "coarse": s}}
json lattice_to_json(const LatticeClass& l);
// The context tag is optional on input; fallback gives (field, s) to use.
LatticeClass lattice_from_json(const ValCtx& fallback, const json& j);

// {"coords": [lexval-string]}
json point_to_json(const ApartmentPoint& x);
ApartmentPoint point_from_json(const json& j, int expected_dim);

// {"perm": [1-based images], "trans": [lexval-string]}
json weyl_to_json(const AffineWeylElem& w);

json bound_to_json(const HalfApartmentBound& b);

json edge_to_json(const CoarseEdge& e);

} // namespace hbk

#endif

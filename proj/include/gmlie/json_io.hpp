#pragma once

#include "gmlie/g3.hpp"
#include "gmlie/inner_auto.hpp"
#include "gmlie/lie.hpp"

#include <json.hpp>

namespace gmlie {

using Json = nlohmann::json;

/// {"vars": [...], "weights": [...], "terms": [{"exp": [...], "num": "..", "den": ".."}]}
Json to_json(const Poly& p);
/// Variables ["t","u","v"] with no weights (or weights 2,2,2) map to the
/// central variable set.
Poly poly_from_json(const Json& j);

/// {"order": N, "p0": poly, "px": poly, "py": poly, "pz": poly}
Json to_json(const WElement& e);
WElement welement_from_json(const Json& j);

/// {"order": N, "entries": 3x3 polys, "g"/"A"/"B": poly when cached}.
/// "bounds" (3x3 ints) appears when some entry is not kept through its
/// default row cap, as after quotient_reduce; "series_order" likewise for
/// the cached series.
Json to_json(const SeriesMat3& m);
Json to_json(const AutMatrix& m);
AutMatrix automatrix_from_json(const Json& j);

/// {"order": N, "alpha": "..", "beta": "..", "a": poly, "b": poly, "c": poly}
Json to_json(const LieDecomp& d);

/// [{"coeff": "..", "word": ".."}, ...]
Json to_json(const LieExpr& e);

/// {"order": N, "x": [poly, poly, poly]}
Json to_json(const G3Element& e);
/// {"order": N, "entries": 3x3 polys}
Json to_json(const G3Matrix& m);
G3Matrix g3matrix_from_json(const Json& j);

} // namespace gmlie

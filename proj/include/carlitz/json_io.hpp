#pragma once
/// @file json_io.hpp
/// @brief JSON serialization for every value the command-line tool prints,
///        plus validating parsers for round-tripping. Big integers and
///        rationals travel as decimal strings so nothing is ever rounded.

#include <json.hpp>

#include "carlitz/brion.hpp"
#include "carlitz/cones.hpp"
#include "carlitz/identities.hpp"
#include "carlitz/laurent.hpp"
#include "carlitz/ratfun.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

/// {"dim": d, "terms": [{"exp": [..], "coeff": "decimal"}, ..]} with terms in
/// lexicographic exponent order.
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {"sign": +-1, "numer": <poly>, "denom": [[..], ..]} — each denominator
/// entry is the exponent vector m of a factor (1 - z^m).
Json ratterm_to_json(const RatTerm& t);

/// {"dim": d, "terms": [<ratterm>, ..]}.
Json ratfun_to_json(const ShortRatFun& f);
ShortRatFun ratfun_from_json(const Json& j);

/// {"apex": [..], "generators": [[..], ..], "open": [bool, ..]}.
Json cone_to_json(const SimplicialCone& c);
SimplicialCone cone_from_json(const Json& j);

/// {"identity": name, "params": {..}, "holds": bool, "lhs"/"rhs"/"diff": ..}
/// with polynomial or rational payloads depending on the identity; "diff" is
/// null when the identity holds.
Json report_to_json(const IdentityReport& r);

/// {"c3": "p/q", "c2": .., "c1": .., "c0": ..}.
Json ehrhart_to_json(const EhrhartCubic& e);

}  // namespace carlitz

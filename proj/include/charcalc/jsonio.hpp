#ifndef CHARCALC_JSONIO_HPP
#define CHARCALC_JSONIO_HPP

#include <json.hpp>

#include "charcalc/poly.hpp"

namespace charcalc {

/// Schema: {"generators": [{"name", "weight", "parity"}],
///          "terms": [{"monomial": {name: exp, ...}, "num": "...", "den": "..."}]}
/// Terms are listed in canonical monomial order; rationals are decimal
/// strings so exactness survives any JSON tooling.
nlohmann::json poly_to_json(const GradedPoly& p);
GradedPoly poly_from_json(const nlohmann::json& j);

}  // namespace charcalc

#endif

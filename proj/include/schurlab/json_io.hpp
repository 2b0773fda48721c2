// JSON forms for the documented file and report schemas.
#pragma once

#include <nlohmann/json.hpp>

#include "schurlab/lambda_poly.hpp"
#include "schurlab/lambda_ring.hpp"

namespace schurlab {

using Json = nlohmann::json;

// {"[2,1]": "3", "[]": "-1"} — integer coefficients as strings.
Json symfunc_to_json(const SymFunc& f);
SymFunc symfunc_from_json(const Json& j);

// {"a1^2*b1": "3", "1": "-1"}
Json multipoly_to_json(const MultiPoly& p, const std::vector<std::string>& names);
MultiPoly multipoly_from_json(const Json& j, const std::vector<std::string>& names);

Json ring_to_json(const LambdaRing& ring);
// Accepts a presentation object; cap applies to the constructed ring.
RingPtr ring_from_json(const Json& j, int cap);
// Preset names: free | even:n | odd:n | quot:[parts] | binomial | split:n |
// table:lambda2-3 | table:i2+i11, or inline JSON starting with '{'.
RingPtr ring_from_preset(const std::string& text, int cap);

Json element_to_json(const RingElement& x);
RingElement element_from_json(const RingPtr& ring, const Json& j);

// [{"coeff": "-2", "monomial": [["x", 2, 1], ["y", 2, 1]]}, ...]
Json lambda_poly_to_json(const LambdaPolynomial& p);

} // namespace schurlab

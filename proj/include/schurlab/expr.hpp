// Expression parsers for the CLI surfaces.
#pragma once

#include <string>

#include "schurlab/lambda_ring.hpp"
#include "schurlab/symfunc.hpp"

namespace schurlab {

// Grammar: e<k>, h<k>, s[<parts>], integers, + - *, parentheses.
SymFunc parse_schur_expr(const std::string& text, int max_degree = kDefaultMaxDegree);

// Same arithmetic grammar; atoms are `gen` (or `x`), the ring's variable
// names, integers, and — in Schur-native rings — e<k>/h<k>/s[...] forms.
RingElement parse_element_expr(const std::string& text, const RingPtr& ring);

} // namespace schurlab

#pragma once

#include "cochain/boundary.hpp"
#include "cochain/forms.hpp"

#include <json.hpp>

namespace cochain::io {

using nlohmann::json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as
/// decimal strings; readers accept both.
json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

json index_set_to_json(const IndexSet& J);

/// {"n":..., "vertices":[...], "k":..., "terms":[{"dlambda":[...], "poly":[{"alpha":[...], "num":..., "den":...}]}]}
json form_to_json(const PolyForm& u);
/// Accepts symmetric monomials over all vertices; "vertices" defaults to
/// {0..n}. Throws ParseError on malformed input.
PolyForm form_from_json(const json& j);

/// {"n":..., "k":..., "facets":[{"omit":i, "form":...}, ...]}
json boundary_to_json(const BoundaryForm& b);
/// Throws ParseError on malformed input and IncompatibleTraces when the facet
/// forms disagree on shared faces.
BoundaryForm boundary_from_json(const json& j);

/// Parses text, turning JSON syntax errors into ParseError.
json parse_json(const std::string& text);

}  // namespace cochain::io

#pragma once

#include <json.hpp>

#include "montes/lifting.hpp"
#include "montes/okutsu.hpp"

namespace montes {

using Json = nlohmann::ordered_json;

Json to_json(const IntPoly& f);  // ascending decimal strings
IntPoly int_poly_from_json(const Json& j);
Json to_json(const FFElem& a);   // level 0: integer; above: coordinates over the base
FFElem ff_elem_from_json(const Json& j, const FieldHandle& K);
Json to_json(const FFPoly& f);
FFPoly ff_poly_from_json(const Json& j, const FieldHandle& K);

// {psi0, levels: [{phi, h, e, psi, f, V, m} | {phi, exact, V, m}]}
Json to_json(const OMType& t);
OMType om_type_from_json(const Json& j, const Prime& p);

Json to_json(const Side& s);
Json to_json(const Witness& w);
Json to_json(const InvariantReport& r);

}  // namespace montes

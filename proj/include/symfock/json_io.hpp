#pragma once

#include <json.hpp>

#include "symfock/finite_poly.hpp"
#include "symfock/fock.hpp"
#include "symfock/kp.hpp"
#include "symfock/symfunc.hpp"

namespace symfock {

using Json = nlohmann::json;

// Encoders emit normalized values, so decode(encode(x)) == x bit for bit.
// Decoders throw ParseError on any schema violation.

Json to_json(const TRational& r);        // {"num": ["p/q", ...], "den": [...]}, ascending in t
Json to_json(const Partition& p);        // [3,1]
Json to_json(const SymFunc& f);          // {"terms": [{"p": [...], "coeff": ...}]}
Json to_json(const FockVector& v);       // {"charge": m, "terms": [...]}
Json to_json(const TensorState& s);      // {"left_charge", "right_charge", "terms": [{"left","right","coeff"}]}
Json to_json(const FinitePoly& f);       // {"variables": n, "terms": [{"x": [...], "coeff": ...}]}

TRational trational_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SymFunc symfunc_from_json(const Json& j);
FockVector fock_vector_from_json(const Json& j);
TensorState tensor_state_from_json(const Json& j);

SymFunc parse_symfunc_json(const std::string& text);

}  // namespace symfock

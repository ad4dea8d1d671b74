#pragma once

#include "json.hpp"

#include "tsf/bases.hpp"
#include "tsf/cyclotomic.hpp"

namespace tsf {

using Json = nlohmann::ordered_json;

/// {"4":"1","3,1":"2",...} in canonical partition order; rationals as "p/q".
Json to_json(const SymFunc &f);

/// {"n":4,"source":"hd(2)","target":"m","order":[...],"entries":[[...],...]}
Json to_json(const TransitionMatrix &m);

/// {"order":3,"coeffs":["-1","-1"]}
Json to_json(const CycNum &x);

TransitionMatrix transition_from_json(const Json &j);
CycNum cycnum_from_json(const Json &j);

} // namespace tsf

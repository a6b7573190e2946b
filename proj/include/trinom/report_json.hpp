#pragma once

// JSON views of solver results.  Field order is fixed and every integer is a
// decimal string, so output is byte-stable and lossless.

#include <json.hpp>

#include "trinom/logform.hpp"
#include "trinom/solver.hpp"

namespace trinom {

using Json = nlohmann::ordered_json;

Json to_json(const Trinomial& f);
/// Accepts {"c1","c2","c3","a2","a3"} with string or integer values.
Trinomial trinomial_from_json(const Json& j);

Json to_json(const SolvedRoot& r);
Json to_json(const SolveReport& r);
Json to_json(const RootTally& t);
Json to_json(const SignResult& s);

}  // namespace trinom

#pragma once

// JSON encodings used by the command-line reports.
//
//   AmbientMonomial  {"g": <int>, "q": {"<i>": <e_i>, ...}}
//   AmbientElement   [monomial, ...]
//   FamilyMonomial   {"family": "rat", "exps": {"g": 1, "rho_1": 1}}
//   GradedCoalgebra  {"name", "degrees": [[label, ...], ...],
//                     "delta": [{"from", "split": [s, d-s], "pairs": [[l, r], ...]}]}

#include "json.hpp"

#include "f2hopf/ambient.hpp"
#include "f2hopf/coalgebra.hpp"
#include "f2hopf/families.hpp"
#include "f2hopf/f2_matrix.hpp"

namespace f2hopf {

using Json = nlohmann::json;

Json to_json(const AmbientMonomial& m);
Json to_json(const AmbientElement& e);
Json to_json(const TensorElement& t);
Json to_json(const FamilyMonomial& m);
Json to_json(const GradedCoalgebra& c);
Json to_json(const SSet& s);
Json to_json(const BitMatrix& m);  // rows as "0101" strings
Json to_json(const IsoVerdict& v);

// Throw AlgebraError on malformed input.
AmbientMonomial ambient_monomial_from_json(const Json& j);
AmbientElement ambient_element_from_json(const Json& j);
FamilyMonomial family_monomial_from_json(const Json& j);

}  // namespace f2hopf

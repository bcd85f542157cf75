#ifndef HITPROB_SERIALIZE_HPP
#define HITPROB_SERIALIZE_HPP

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "hitprob/polynomial.hpp"
#include "hitprob/weights.hpp"

namespace hitprob {

// JSON forms: monomial {"exponents":[a1,...,ak]};
// polynomial {"k":k,"degree":n,"terms":[...]}; weight vectors as arrays.
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const WeightVector& w);
Monomial monomial_from_json(const nlohmann::json& j);
Polynomial polynomial_from_json(const nlohmann::json& j);

/// One monomial per line in canonical text form; blank lines and '#'
/// comments are skipped.
std::vector<Monomial> load_monomial_list(const std::string& path, int k);
/// Whole file is one polynomial; newlines are treated as whitespace.
Polynomial load_polynomial(const std::string& path, int k);

}  // namespace hitprob

#endif

#pragma once

// JSON forms of the exact objects. Rationals travel as decimal strings so that
// arbitrary-precision values survive the round trip.

#include "rumin/envelope.hpp"
#include "rumin/group.hpp"
#include "rumin/operator_matrix.hpp"
#include "rumin/verify.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace rumin {

using Json = nlohmann::ordered_json;

// [{"multi_index": [...], "numerator": "p", "denominator": "q"}, ...]
Json env_to_json(const EnvElement& a);
EnvElement env_from_json(int n, const Json& j);

// Same layout with "exponents" for the monomial.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(int nvars, const Json& j);

// [x_1, ..., x_n, y_1, ..., y_n, t]; exact coordinates as "p/q" strings.
Json point_to_json(const RealPoint& p);
Json point_to_json(const ExactPoint& p);
RealPoint real_point_from_json(const Json& j);
ExactPoint exact_point_from_json(const Json& j);

Json operator_to_json(const OperatorMatrix& A);
Json check_to_json(const CheckResult& c);

// Rows of equal length with a header line; values are written with %.17g.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

}  // namespace rumin

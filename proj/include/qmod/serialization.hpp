#pragma once

#include "qmod/counterexample.hpp"
#include "qmod/lie.hpp"
#include "qmod/multivector.hpp"
#include "qmod/polynomial.hpp"
#include "qmod/star.hpp"

#include <json.hpp>

#include <string>

namespace qmod {

// Structured text formats. Rationals are strings ("p" or "p/q", always
// reduced); indices are 1-based in files. Writers emit a stable field and
// term order so round-trips are bit-exact.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"n_vars": n, "terms": [{"exps": [..], "coef": "p/q"}, ...]}
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"n_vars": n, "degree": p, "components": [{"indices": [i, j], "terms": [..]}]}
Json multivector_to_json(const MultiVector& m);
MultiVector multivector_from_json(const Json& j);

// {"dim": d, "brackets": [[i, j, k, "p/q"], ...]} meaning [e_i, e_j] has
// coefficient p/q on e_k.
Json lie_algebra_to_json(const LieAlgebra& g);
LieAlgebra lie_algebra_from_json(const Json& j);

// {"dim_v": m, "action": [matrix, ...]} with one dim_v x dim_v matrix per
// basis element of the algebra (validated on load).
Json lie_module_to_json(const LieModule& m);
LieModule lie_module_from_json(const Json& j, const LieAlgebra& g);

// {"w_parallel": .., "w_left": .., "w_right": .., "w_cycle": .., "wheel_sign": +-1}
Json weight_table_to_json(const WeightTable& wt);
WeightTable weight_table_from_json(const Json& j);

// {"g": <lie algebra file>, "h": <lie algebra file>, "C": [[a, b, "p/q"], ...]}
// with a, b 1-based in the h-block; paths resolved relative to base_dir.
CounterexampleData counterexample_from_json(const Json& j, const std::string& base_dir);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

} // namespace qmod

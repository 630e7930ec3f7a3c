#pragma once

// JSON encodings shared by the command line front end and its tests.
//   matrix      {"rows": r, "cols": c, "entries": [[...], ...]}
//   polynomial  ascending coefficient array
//   rational    "p/q" string ("p" when integral)

#include "smallquot/based_algebra.hpp"
#include "smallquot/coxeter.hpp"
#include "smallquot/numeric.hpp"
#include "smallquot/polynomial.hpp"

#include <json.hpp>

#include <string>

namespace smallquot {

using Json = nlohmann::json;

Json to_json(const BigInt& v);
Json to_json(const Rational& v);
Json to_json(const IntMatrix& m);
Json to_json(const RatMatrix& m);
Json to_json(const IntPolynomial& p);
Json to_json(const CellTable& table);

BigInt bigint_from_json(const Json& j);
Rational rational_from_json(const Json& j);
// Accepts the object form or a bare nested array.
IntMatrix int_matrix_from_json(const Json& j);
RatMatrix rat_matrix_from_json(const Json& j);

// {"dim": n, "gamma": [[[...]]], "identity": i}
Json to_json(const BasedAlgebra& algebra);
BasedAlgebra algebra_from_json(const Json& j);
// {"action": [matrix, ...]}
BasedModule module_from_json(const BasedAlgebra& algebra, const Json& j);

// Parse errors become Error(Errc::parse) with the byte position.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace smallquot

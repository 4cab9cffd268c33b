#pragma once

// JSON schemas. Rationals are strings "p/q" in lowest terms ("p" for
// integers); elements of K are pairs [x, y] meaning x + y sqrt(-m);
// matrices are row-major.
//
//   ExtendedMatrix: {"m": int, "f": int, "A": [[k, k], [k, k]]}
//   OrthoMap:       {"m": int, "P": [16 rationals]}
//   HermitianK:     {"s1": rational, "s2": rational, "s": k}
//
// Parsing throws std::invalid_argument with a message naming the offending field.

#include <nlohmann/json.hpp>

#include "bianchi/extended_matrix.hpp"
#include "bianchi/spin.hpp"

namespace bianchi {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const KElement& z);
Json to_json(const ExtendedMatrix& p);
Json to_json(const OrthoMap& p);
Json to_json(const HermitianK& h);

Rational rational_from_json(const Json& j);
KElement kelement_from_json(std::int64_t m, const Json& j);
// "f" may be any positive integer; the result is canonicalized.
ExtendedMatrix extended_matrix_from_json(const Json& j);
OrthoMap ortho_map_from_json(const Json& j);
HermitianK hermitian_from_json(std::int64_t m, const Json& j);

}  // namespace bianchi

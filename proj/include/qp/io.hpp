#pragma once

// Text and JSON forms of matrices, witnesses and check lists.
//
// Matrix literal: rows separated by ';', entries by ',', optionally wrapped in [ ]:
//   "[1,0,0; 1,2,0; 0,0,2]"    "[3, 2+2*x; 2+x, 2+3*x]"
// Entries use the element grammar of the ring. JSON matrices are
//   {"shape": "T3", "ring": "Z2^2", "rows": [["1","0","0"], ...]}
// with entries as strings so that fractions and series survive unchanged.

#include <string_view>

#include <json.hpp>

#include "qp/matrix.hpp"
#include "qp/witness.hpp"

namespace qp {

using Json = nlohmann::ordered_json;

/// Throws ParseError (position relative to the literal) or ShapeMismatch.
ShapedMatrix parse_matrix(const LocalRing& ring, Shape shape, std::string_view literal);

Json to_json(const ShapedMatrix& a);
ShapedMatrix matrix_from_json(const Json& j);

Json to_json(const QuasipolarWitness& w);
QuasipolarWitness quasipolar_witness_from_json(const Json& j);

Json to_json(const RadCleanWitness& w);
RadCleanWitness rad_clean_witness_from_json(const Json& j);

Json to_json(const CheckList& checks);

Comm2Evidence comm2_evidence_from_string(std::string_view name);

}  // namespace qp

#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "matmom/circle.hpp"
#include "matmom/ensembles.hpp"
#include "matmom/interval.hpp"
#include "matmom/matrix.hpp"
#include "matmom/schur.hpp"

namespace matmom {

using Json = nlohmann::ordered_json;

// Matrix encoding used repo-wide: {"p": int, "re": [[...]], "im": [[...]]},
// row-major.
Json matrix_to_json(const Mat& m);
Mat matrix_from_json(const Json& j);

Json moment_vector_to_json(const IntervalMomentVector& s);
Json canonical_vector_to_json(const IntervalCanonicalVector& u);
Json trig_vector_to_json(const TrigMomentVector& g);
Json circle_canonical_to_json(const CircleCanonicalVector& a);
Json schur_taylor_to_json(const SchurTaylorCoefficients& g);

IntervalMomentVector moment_vector_from_json(const Json& j);
IntervalCanonicalVector canonical_vector_from_json(const Json& j);
TrigMomentVector trig_vector_from_json(const Json& j);
CircleCanonicalVector circle_canonical_from_json(const Json& j);
SchurTaylorCoefficients schur_taylor_from_json(const Json& j);

/// Reads any of the vector kinds and reports which one was found.
std::string vector_kind(const Json& j);

Json batch_to_json(const SampleBatch& batch);
SampleBatch batch_from_json(const Json& j);

}  // namespace matmom

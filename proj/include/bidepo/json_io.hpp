#pragma once

// JSON layouts for reports, oracle verdicts and certificates.

#include "bidepo/analytic_classify.hpp"
#include "bidepo/numeric_oracle.hpp"
#include "bidepo/special_states.hpp"

#include "json.hpp"

namespace bidepo {

using Json = nlohmann::ordered_json;

/// {"rows", "cols", "re": [[...]], "im": [[...]]}; "im" is omitted for real matrices.
Json matrix_json(const CMatrix& m);
Json vector_json(const CVector& v);
Json vector_json(const RVector& v);

Json to_json(const PhiParams& p);
/// Verdicts plus a "slacks" object keyed "group.name".
Json to_json(const ClassificationReport& r);
Json to_json(const OracleVerdict& v);
/// Pieces carry kind, weight, cited, note and the smallest eigenvalue of each
/// PSD factor; operators are left out unless with_operators is set.
Json to_json(const SeparableCertificate& c, bool with_operators = false);

}  // namespace bidepo

#pragma once

#include <json.hpp>

#include "hesstop/census.hpp"
#include "hesstop/combinat.hpp"
#include "hesstop/foliation.hpp"

namespace hesstop {

using Json = nlohmann::json;

/// Rationals are serialized as "num/den" strings.
Json to_json(const HomoPoly& p);  ///< {degree, coeffs:[...], text}
HomoPoly homopoly_from_json(const Json& j);

/// {degree, a:[...], b:[...], c:[...]}
Json to_json(const QuadForm& w);
QuadForm quadform_from_json(const Json& j);

/// {verdict, semidefinite, method, zero_lines, witness?}
Json to_json(const SignCertificate& c);
/// {kind, hypotheses:[...], coefficients:{a0,a1,a2}, conditions:[...], legs:[...], branch, conclusion, valid}
Json to_json(const IsotopyCertificate& c);
/// {index: "p/2", numerator, residual, samples_used, refinement_depth}
Json to_json(const IndexResult& r);
Json to_json(const CensusRow& r);
Json to_json(const RowCertificate& c);
Json to_json(const SeparatrixReport& r);
Json to_json(const std::vector<IdentityRow>& rows);

}  // namespace hesstop

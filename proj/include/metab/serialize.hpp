#pragma once

#include <json.hpp>

#include "metab/canonical.hpp"

namespace metab {

nlohmann::json endo_to_json(const IAEndomorphism &phi);

// Accepts the keyword "identity" or an object mapping "y1".."ym" to
// expression strings; missing generators map identically. Images must be
// y_j plus a commutator-ideal element.
IAEndomorphism endo_from_json(const std::string &src,
                              const AlgebraConfig &cfg);

nlohmann::json matrix_to_json(const JacobianMatrix &M);
nlohmann::json trace_to_json(const ReductionTrace &trace);

} // namespace metab

#pragma once

#include <nlohmann/json.hpp>

#include "g2/liealg.hpp"
#include "g2/localize.hpp"
#include "g2/proofkit.hpp"
#include "g2/relations.hpp"

namespace g2 {

/// 14 rows of 14 entries in the ring's JSON encoding.
nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Ring& r, const nlohmann::json& j);

nlohmann::json word_to_json(const Ring& r, const GroupWord& w);
GroupWord word_from_json(const Ring& r, const nlohmann::json& j);

nlohmann::json table_to_json(const StructureTable& t);
StructureTable table_from_json(const nlohmann::json& j);

/// {"ring", "images": {"a,b": matrix}, "table": {"a,b": [matrix per element]},
///  "claimed": {"g", "g_inverse", "rho"}}; "table" and "claimed" optional.
nlohmann::json spec_to_json(const AutomorphismSpec& spec);
AutomorphismSpec spec_from_json(const nlohmann::json& j);

/// {"ring", "g", "g_inverse", "rho", "residual": "Exact" | {"FailedAt": "a,b"}, "method"}
nlohmann::json decomposition_to_json(const Ring& r, const DecompositionResult& d);

nlohmann::json to_json(const Mismatch& m);
nlohmann::json to_json(const RelationReport& r);
nlohmann::json to_json(const R2Report& r);
nlohmann::json to_json(const CalibrationResult& r);
nlohmann::json to_json(const JacobiReport& r);
nlohmann::json to_json(const MagnitudeReport& r);
nlohmann::json to_json(const IdentityCheck& c);
nlohmann::json to_json(const ResidueSquareReport& r);

}  // namespace g2

#pragma once

#include <string>

#include <json.hpp>

#include "rssep/constructions.hpp"

namespace rssep {

nlohmann::json element_to_json(const Field& field, FieldElement a);
FieldElement element_from_json(const FieldPtr& field, const nlohmann::json& j);

/// Full witness document: parameters, polynomial strings, partition, the
/// evaluation order, the encoded vectors and the forged pirate word.
/// Requires a verifiable witness (the pirate is re-derived, not stored).
nlohmann::json witness_to_json(const WitnessPair& w);

/// Inverse of witness_to_json on the declarative fields; derived fields in
/// the document are ignored here and re-checked by verify_witness.
WitnessPair witness_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerifyReport& rep);

/// Sorted keys, two-space indent, trailing newline. Identical inputs give
/// identical bytes, which is what the construct/verify round trip promises.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace rssep

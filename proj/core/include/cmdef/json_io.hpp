#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cmdef/certify.hpp"
#include "cmdef/invariants.hpp"

namespace cmdef {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "cmdef/1";

// Objects use sorted keys (nlohmann's default map), so dumps are byte-stable.
Json to_json(const Provenance& p);
Json to_json(const Representation& v);
Representation representation_from_json(const Json& j);

Json to_json(const RankEvidence& r);
RankEvidence rank_evidence_from_json(const Json& j);

Json to_json(const Certificate& c);
// Throws InvalidArgument on schema violations.
Certificate certificate_from_json(const Json& j);

Json to_json(const InvariantSlice& s);

std::string dump(const Json& j);

}  // namespace cmdef

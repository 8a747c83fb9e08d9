#pragma once

// JSON encodings shared by the atlas writer and the CLI. Field order is fixed
// so that output is byte-for-byte reproducible.

#include <json.hpp>

#include "knotepi/atlas.hpp"

namespace knotepi {

using Json = nlohmann::ordered_json;

Json certificate_to_json(const EpiCertificate& cert);
EpiCertificate certificate_from_json(const Json& j);

Json node_to_json(const AtlasNode& node);
AtlasNode node_from_json(const Json& j);

Json report_to_json(const CandidateReport& rep);
CandidateReport report_from_json(const Json& j);

Json verdict_to_json(const MinimalityVerdict& v);

Json atlas_to_json(const PosetAtlas& atlas);
PosetAtlas atlas_from_json(const Json& j);

}  // namespace knotepi

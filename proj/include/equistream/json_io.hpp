#pragma once

#include <json.hpp>

#include "equistream/domain.hpp"
#include "equistream/pairing.hpp"
#include "equistream/stream.hpp"

namespace equistream {

using Json = nlohmann::json;

Json stream_to_json(const Stream& s);
Stream stream_from_json(const Json& j);

Json domain_to_json(const UtilityDomain& y);
UtilityDomain domain_from_json(const Json& j);

Json pairing_to_json(const PairingFunction& a);
PairingFunction pairing_from_json(const Json& j);

Json report_to_json(const WitnessReport& r);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace equistream

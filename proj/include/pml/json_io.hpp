#pragma once

#include <string>

#include <json.hpp>

#include "pml/instances.hpp"

namespace pml {

// JSON ingestion. Pmf documents look like {"weights": [...]} with optional
// "alphabet" (labels) or "factors" (product structure); kernels are
// {"rows": [[...], ...]} with optional "output_factors". Numbers are parsed
// as 64-bit floats.
Pmf pmf_from_json(const nlohmann::json& j);
Kernel kernel_from_json(const nlohmann::json& j);
JointPmf joint_from_json(const nlohmann::json& j);

ChannelInstance channel_instance_from_json(const nlohmann::json& j);
GpInstance gp_instance_from_json(const nlohmann::json& j);
WzInstance wz_instance_from_json(const nlohmann::json& j);
JsccInstance jscc_instance_from_json(const nlohmann::json& j);
BcInstance bc_instance_from_json(const nlohmann::json& j);
DlscInstance dlsc_instance_from_json(const nlohmann::json& j);
MacInstance mac_instance_from_json(const nlohmann::json& j);
ResolvabilityInstance resolvability_instance_from_json(const nlohmann::json& j);
WiretapInstance wiretap_instance_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace pml

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "blowup/oracle.hpp"
#include "blowup/report.hpp"

namespace blowup {

// Registered claims, each mapping to a formula evaluation, an oracle or
// construction replay, and a comparison mode.
std::vector<std::string> registry_keys();

// Evaluate one registered claim over its default grid; `params` may override
// grid fields (n_min, n_max, t, p, s, k_max, full_host) where the claim
// supports them. Unknown keys raise ParameterError.
VerificationReport run_verification(const std::string& key,
                                    const nlohmann::json& params,
                                    const OracleOptions& options);

}  // namespace blowup

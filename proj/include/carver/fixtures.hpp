// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace carver::fixtures {

/// Names of the bundled demo models: "demonet-s", "chain-net", "diamond-net",
/// "stacked-unets-mini", "opcheck-net".
std::vector<std::string> names();

/// Model-description JSON for a bundled fixture. Throws ValidationError for
/// unknown names.
std::string model_json(const std::string& name);

}  // namespace carver::fixtures

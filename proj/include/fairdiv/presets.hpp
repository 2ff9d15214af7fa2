#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Named built-in instances; throws InputError on unknown names.
Instance preset_instance(const std::string& name);
std::vector<std::string> preset_names();

// All small presets (m <= 6, n <= 3) used as the fixture set by auditors and
// property harnesses.
std::vector<std::pair<std::string, Instance>> fixture_instances();

}  // namespace fairdiv

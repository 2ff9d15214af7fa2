#pragma once

#include <string>

#include <json.hpp>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// JSON schemas:
//   Valuation: {"kind":"partition","m":6,"parts":[{"goods":[0,1],"cap":1},...]}
//              {"kind":"uniform","m":3,"goods":[0,1,2],"cap":2}
//              {"kind":"graphic","m":3,"vertices":3,"edges":[[0,1],[1,2],[0,2]]}
//              {"kind":"explicit_rank","m":2,"table":[0,1,1,2]}
//              {"kind":"binary_xos","m":3,"family":[[0,1],[2]]}
//              {"kind":"zero","m":4}
//   Instance:   {"m":6,"n":2,"valuations":[<Valuation>,...]}
//   Allocation: {"bundles":[[0],[1,2,3]]}; omitted goods are unallocated.
// Goods are 0-indexed integers.

nlohmann::json valuation_to_json(const Valuation& v);
Valuation valuation_from_json(const nlohmann::json& j);

nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

nlohmann::json allocation_to_json(const Allocation& a);
Allocation allocation_from_json(const nlohmann::json& j);

nlohmann::json goodset_to_json(GoodSet s);

Instance load_instance_file(const std::string& path);
Allocation load_allocation_file(const std::string& path);

}  // namespace fairdiv

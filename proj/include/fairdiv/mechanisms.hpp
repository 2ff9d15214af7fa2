#pragma once

#include <functional>
#include <string>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// A named deterministic map from reported profiles to (partial) allocations.
struct Mechanism {
  std::string name;
  std::function<Allocation(const Instance&)> run;
};

// Prioritized Egalitarian: invalid reports are zeroed out, then a
// non-wasteful Lorenz-dominating allocation is grown by shortest-path
// augmentation, always favoring the agent with the smallest bundle and,
// among those, the lowest index.
Allocation pe_mechanism(const Instance& inst);

// Brute-force reference: enumerates all partial allocations, keeps the
// non-wasteful Lorenz-dominating ones, then lexicographically maximizes the
// unsorted value vector.
Allocation lorenz_dominating_oracle(const Instance& inst,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

// Wraps f so every output bundle is pruned to a greedy maximum independent
// subset; values are preserved.
Mechanism cleanup_non_wasteful(Mechanism f);

// Agents in `order` successively grab a greedy max independent subset of the
// remaining goods.
Allocation serial_dictatorship(const Instance& inst, const std::vector<int>& order);

Mechanism pe();
Mechanism oracle_mechanism();
Mechanism dictatorship_mechanism(std::vector<int> order);
Mechanism constant_empty_mechanism();

// Resolves "pe", "oracle", "empty", or "dictator:1,0,..." (0-indexed order).
Mechanism mechanism_by_name(const std::string& name);

}  // namespace fairdiv

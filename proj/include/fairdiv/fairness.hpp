#pragma once

#include <optional>
#include <string>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Audit verdict; a failing verdict always carries an independently
// checkable witness.
struct FairnessVerdict {
  std::string property;
  bool holds = false;
  std::string witness;  // empty when holds

  static FairnessVerdict pass(std::string property) { return {std::move(property), true, {}}; }
  static FairnessVerdict fail(std::string property, std::string witness) {
    return {std::move(property), false, std::move(witness)};
  }
};

struct Ef1Witness {
  int envier = -1;
  int envied = -1;
};

FairnessVerdict is_ef1(const Instance& inst, const Allocation& a);
std::optional<Ef1Witness> ef1_witness(const Instance& inst, const Allocation& a);

// Maximin share of agent i: exhaustive over complete n-partitions with
// slot-symmetry pruning (good 0 pinned to slot 0).
int mms_share(const Instance& inst, int i, std::uint64_t budget = kDefaultEnumerationBudget);

struct MmsProfile {
  std::vector<int> shares;
};

MmsProfile mms_profile(const Instance& inst, std::uint64_t budget = kDefaultEnumerationBudget);

FairnessVerdict is_mms(const Instance& inst, const Allocation& a,
                       std::uint64_t budget = kDefaultEnumerationBudget);

FairnessVerdict is_pareto_optimal_oracle(const Instance& inst, const Allocation& a,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

// Value-sum test: under binary marginals an allocation is Pareto optimal iff
// its total value reaches the maximum utilitarian welfare, computed by
// growth-mode augmentation to a fixed point.
FairnessVerdict is_pareto_optimal_fast(const Instance& inst, const Allocation& a);

FairnessVerdict is_locally_efficient(const Instance& inst, const Allocation& a);

struct WelfareClass {
  bool is_nash_optimal = false;
  bool is_leximin = false;
  bool is_lorenz_dominating = false;
};

WelfareClass classify_welfare(const Instance& inst, const Allocation& a,
                              std::uint64_t budget = kDefaultEnumerationBudget);

// Maximum total value over all allocations (utilitarian optimum).
int max_utilitarian_welfare(const Instance& inst);

}  // namespace fairdiv

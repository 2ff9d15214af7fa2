#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fairdiv/fairness.hpp"
#include "fairdiv/instance.hpp"
#include "fairdiv/mechanisms.hpp"

namespace fairdiv {

// A verified strategic deviation: every coalition member strictly gains
// under her TRUE valuation when the coalition jointly misreports.
struct DeviationWitness {
  std::vector<int> coalition;
  Instance true_profile;
  Instance misreport_profile;  // differs from true_profile only on coalition
  std::vector<int> gains;      // per coalition member, strictly positive

  nlohmann::json to_json() const;
};

// Misreport strategies: the zero valuation, restrictions, single-good
// removals, permuted valuations, random draws, and (optionally, m <= 4)
// every explicit matroid rank function. Seed-deterministic; absence of a
// witness is evidence, not proof.
struct MisreportSpace {
  std::uint64_t seed = 0;
  int trials = 1000;
  bool exhaustive_explicit = false;
};

// Every labeled matroid rank function on [m], by exhaustive family
// enumeration (hereditary + exchange). m <= 4.
std::vector<Valuation> all_matroid_valuations(int m);

std::vector<Valuation> misreport_candidates(const Valuation& v, int m,
                                            const MisreportSpace& space);

std::optional<DeviationWitness> find_profitable_deviation(const Mechanism& f,
                                                          const Instance& inst, int i,
                                                          const MisreportSpace& space);

// Coalitions scanned by ascending size then lexicographic order; joint
// misreports drawn per member, capped at space.trials combinations per
// coalition.
std::optional<DeviationWitness> find_coalition_deviation(const Mechanism& f,
                                                         const Instance& inst,
                                                         int max_coalition,
                                                         const MisreportSpace& space);

// Bundle-size stability under valuation restrictions: single-good removals
// shift sizes by at most one (C1), supersets of the own bundle leave them
// unchanged (C2), removing a set Y shifts by at most |Y| (C1*). If f is
// wasteful on this instance the auditor wraps it in the non-wasteful cleanup
// first and says so in the verdict witness.
FairnessVerdict check_gradual(const Mechanism& f, const Instance& inst,
                              std::uint64_t superset_budget = 4096);

// Runs f on v and on every relabeled profile v^pi (identity, all
// transpositions when m <= 6, then seeded random permutations up to
// `trials`) and compares per-agent values.
FairnessVerdict check_index_oblivious(const Mechanism& f, const Instance& inst, int trials,
                                      std::uint64_t seed);

struct ExecutorReport {
  nlohmann::json report;      // {"steps":[...],"violated":...,"witness":{...}}
  std::string violated;       // exactly one property name
  nlohmann::json witness;
};

// Replays the four-step impossibility argument against f: no deterministic
// mechanism can be simultaneously truthful, index-oblivious, locally
// efficient and maximin fair on the six-good, two-agent instance. Always
// reports exactly one violated property with a re-checkable witness.
ExecutorReport run_impossibility_executor(const Mechanism& f);

}  // namespace fairdiv

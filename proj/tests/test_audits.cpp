#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/audits.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/presets.hpp"

using namespace fairdiv;
using nlohmann::json;

namespace {

// Gives everything to the agent reporting the largest total value; a
// transparently manipulable baseline.
Mechanism greedy_hog() {
  return Mechanism{"hog", [](const Instance& inst) {
                     int best = 0;
                     for (int i = 1; i < inst.n(); ++i)
                       if (inst.valuations[i].rank(full_set(inst.m)) >
                           inst.valuations[best].rank(full_set(inst.m)))
                         best = i;
                     Allocation a = Allocation::empty(inst.n());
                     a.bundles[best] =
                         inst.valuations[best].max_independent_subset(full_set(inst.m));
                     return a;
                   }};
}

// Hands good 0 to agent 0 when it has value; ignores everything else. Not
// index-oblivious by construction.
Mechanism good_zero_giver() {
  return Mechanism{"good-zero", [](const Instance& inst) {
                     Allocation a = Allocation::empty(inst.n());
                     if (inst.m > 0 && inst.valuations[0].rank(bit(0)) == 1)
                       a.bundles[0] = bit(0);
                     return a;
                   }};
}

}  // namespace

TEST_CASE("exhaustive matroid enumeration counts") {
  CHECK(all_matroid_valuations(0).size() == 1);
  CHECK(all_matroid_valuations(1).size() == 2);
  CHECK(all_matroid_valuations(2).size() == 5);
  CHECK(all_matroid_valuations(3).size() == 16);
  CHECK(all_matroid_valuations(4).size() == 68);
  for (const Valuation& v : all_matroid_valuations(3)) CHECK(validate_matroid_rank(v));
  CHECK_THROWS_AS(all_matroid_valuations(5), CapabilityError);
}

TEST_CASE("misreport space is seed deterministic and budget bounded") {
  const Valuation v = Valuation::uniform(4, full_set(4), 2);
  MisreportSpace space;
  space.trials = 10;
  auto a = misreport_candidates(v, 4, space);
  auto b = misreport_candidates(v, 4, space);
  REQUIRE(a.size() == 10);
  for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].equals_pointwise(b[k]));
  space.trials = 0;
  CHECK(misreport_candidates(v, 4, space).empty());
}

TEST_CASE("pe resists unilateral deviations on fixtures") {
  MisreportSpace space;
  space.trials = 200;
  const Mechanism f = pe();
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    for (int i = 0; i < inst.n(); ++i)
      CHECK_FALSE(find_profitable_deviation(f, inst, i, space).has_value());
  }
}

TEST_CASE("greedy hog is manipulable") {
  Instance inst(3, {Valuation::uniform(3, from_vector({0}), 1),
                    Valuation::uniform(3, from_vector({0, 1}), 2)});
  MisreportSpace space;
  auto w = find_profitable_deviation(greedy_hog(), inst, 0, space);
  REQUIRE(w.has_value());
  CHECK(w->coalition == std::vector<int>{0});
  CHECK(w->gains.size() == 1);
  CHECK(w->gains[0] > 0);
  // Re-verify the recorded gain by replaying both profiles.
  const Mechanism f = greedy_hog();
  const int honest = inst.valuations[0].rank(f.run(w->true_profile).bundles[0]);
  const int gamed = inst.valuations[0].rank(f.run(w->misreport_profile).bundles[0]);
  CHECK(gamed - honest == w->gains[0]);
}

TEST_CASE("pe resists coalition deviations on fixtures") {
  MisreportSpace space;
  space.trials = 64;
  const Mechanism f = pe();
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    CHECK_FALSE(
        find_coalition_deviation(f, inst, std::min(3, inst.n()), space).has_value());
  }
}

TEST_CASE("gradualness of pe on fixtures") {
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    CHECK(check_gradual(pe(), inst).holds);
  }
}

TEST_CASE("a collapsing mechanism violates C1") {
  // Drops an agent to nothing as soon as her report loses any good.
  Mechanism fragile{"fragile", [](const Instance& inst) {
                      Allocation a = Allocation::empty(inst.n());
                      if (inst.valuations[0].rank(full_set(inst.m)) == inst.m)
                        a.bundles[0] = inst.valuations[0].max_independent_subset(full_set(inst.m));
                      return a;
                    }};
  Instance inst(3, {Valuation::uniform(3, full_set(3), 3), Valuation::zero(3)});
  const FairnessVerdict v = check_gradual(fragile, inst);
  CHECK_FALSE(v.holds);
  CHECK(json::parse(v.witness)["condition"] == "C1");
}

TEST_CASE("wasteful mechanisms are audited through cleanup") {
  Mechanism sloppy{"sloppy", [](const Instance& inst) {
                     Allocation a = Allocation::empty(inst.n());
                     a.bundles[0] = full_set(inst.m);
                     return a;
                   }};
  Instance inst(2, {Valuation::uniform(2, full_set(2), 1), Valuation::zero(2)});
  const FairnessVerdict v = check_gradual(sloppy, inst);
  CHECK(v.holds);
  CHECK(v.witness.find("cleanup") != std::string::npos);
}

TEST_CASE("index obliviousness of pe on fixtures") {
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    CHECK(check_index_oblivious(pe(), inst, 20, 5).holds);
  }
}

TEST_CASE("identity permutation never fails any deterministic mechanism") {
  for (auto& [name, inst] : fixture_instances()) {
    for (const char* mech : {"pe", "empty", "oracle"})
      CHECK(check_index_oblivious(mechanism_by_name(mech), inst, 0, 0).holds);
  }
}

TEST_CASE("good-zero giver is not index oblivious") {
  Instance inst(2, {Valuation::uniform(2, from_vector({0}), 1), Valuation::zero(2)});
  const FairnessVerdict v = check_index_oblivious(good_zero_giver(), inst, 0, 0);
  CHECK_FALSE(v.holds);
  CHECK(json::parse(v.witness)["agent"] == 0);
}

TEST_CASE("impossibility executor on pe reports an MMS breach") {
  const ExecutorReport r = run_impossibility_executor(pe());
  CHECK(r.violated == "MMS");
  // The witness is self-certifying: re-run the auditor on its profile.
  const Instance prof = instance_from_json(r.witness["profile"]);
  const Allocation a = allocation_from_json(r.witness["allocation"]);
  const FairnessVerdict again = is_mms(prof, a);
  CHECK_FALSE(again.holds);
  CHECK(r.witness["value"].get<int>() < r.witness["share"].get<int>());
}

TEST_CASE("impossibility executor on baselines") {
  const ExecutorReport empty = run_impossibility_executor(constant_empty_mechanism());
  CHECK(empty.violated == "MMS");
  CHECK(empty.report["steps"].size() == 1);
  const ExecutorReport dict = run_impossibility_executor(dictatorship_mechanism({0, 1}));
  CHECK(dict.violated == "MMS");
  const ExecutorReport deep = run_impossibility_executor(dictatorship_mechanism({1, 0}));
  CHECK(deep.violated == "MMS");
  CHECK(deep.report["steps"].size() == 5);  // survives to the misreport profile
  for (const ExecutorReport* r : {&empty, &dict, &deep}) {
    const Instance prof = instance_from_json((*r).witness["profile"]);
    const Allocation a = allocation_from_json((*r).witness["allocation"]);
    CHECK_FALSE(is_mms(prof, a).holds);
  }
}

TEST_CASE("impossibility executor catches a non index-oblivious mechanism") {
  // Allocates like a serial dictatorship for agent 1 but pins agent 0 to the
  // lowest-indexed valued good, so relabelings shift outcomes.
  Mechanism biased{"biased", [](const Instance& inst) {
                     Allocation a = Allocation::empty(inst.n());
                     a.bundles[1] = inst.valuations[1].max_independent_subset(full_set(inst.m));
                     const GoodSet rest = full_set(inst.m) & ~a.bundles[1];
                     const GoodSet wanted = inst.valuations[0].free_goods(kEmptySet) & rest;
                     if (wanted != kEmptySet) a.bundles[0] = bit(lowest_good(wanted));
                     return a;
                   }};
  const ExecutorReport r = run_impossibility_executor(biased);
  CHECK((r.violated == "index-oblivious" || r.violated == "MMS" ||
         r.violated == "truthfulness"));
}

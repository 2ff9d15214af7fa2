#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fairdiv/fairness.hpp"
#include "fairdiv/generator.hpp"
#include "fairdiv/mechanisms.hpp"
#include "fairdiv/presets.hpp"

using namespace fairdiv;

namespace {

Allocation alloc(std::vector<std::vector<Good>> bundles) {
  std::vector<GoodSet> b;
  for (auto& v : bundles) b.push_back(from_vector(v));
  return Allocation(std::move(b));
}

}  // namespace

TEST_CASE("ef1 verdicts") {
  const Instance inst = preset_instance("thm4");
  CHECK(is_ef1(inst, alloc({{0}, {1, 2, 3}})).holds);
  CHECK(is_ef1(inst, Allocation::empty(2)).holds);
  Instance pair(2, {Valuation::uniform(2, full_set(2), 2), Valuation::uniform(2, full_set(2), 2)});
  auto w = ef1_witness(pair, alloc({{}, {0, 1}}));
  REQUIRE(w.has_value());
  CHECK(w->envier == 0);
  CHECK(w->envied == 1);
}

TEST_CASE("maximin shares") {
  const Instance inst = preset_instance("thm4");
  CHECK(mms_share(inst, 0) == 1);
  CHECK(mms_share(inst, 1) == 3);
  CHECK(mms_share(preset_instance("thm4-wstar"), 0) == 2);
  Instance solo(4, {Valuation::uniform(4, full_set(4), 3)});
  CHECK(mms_share(solo, 0) == 3);
  CHECK(mms_profile(inst).shares == std::vector<int>{1, 3});
  CHECK(mms_profile(preset_instance("triangle")).shares == std::vector<int>{1, 1});
  CHECK(mms_profile(preset_instance("trio")).shares == std::vector<int>{1, 1, 1});
}

TEST_CASE("mms shares are permutation covariant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = random_instance(rng);
    Instance relabeled = inst;
    const Permutation p = Permutation::transposition(inst.m, 0, inst.m - 1);
    for (auto& v : relabeled.valuations) v = v.permute(p);
    for (int i = 0; i < inst.n(); ++i) CHECK(mms_share(inst, i) == mms_share(relabeled, i));
  }
}

TEST_CASE("mms verdicts") {
  const Instance inst = preset_instance("thm4");
  CHECK(is_mms(inst, alloc({{0}, {1, 2, 3}})).holds);
  const FairnessVerdict v = is_mms(inst, alloc({{}, {0, 2, 3}}));
  CHECK_FALSE(v.holds);
  CHECK(v.witness.find("\"agent\":0") != std::string::npos);
  Instance solo(3, {Valuation::uniform(3, full_set(3), 2)});
  CHECK(is_mms(solo, alloc({{0, 1, 2}})).holds);
}

TEST_CASE("mms budget enforcement") {
  Instance wide(10, {Valuation::zero(10), Valuation::zero(10), Valuation::zero(10)});
  CHECK_THROWS_AS(mms_share(wide, 0, 100), CapabilityError);
}

TEST_CASE("pareto optimality oracle") {
  const Instance inst = preset_instance("thm4");
  CHECK(is_pareto_optimal_oracle(inst, alloc({{0}, {1, 2, 3}})).holds);
  CHECK_FALSE(is_pareto_optimal_oracle(inst, Allocation::empty(2)).holds);
  Instance solo(3, {Valuation::uniform(3, full_set(3), 2)});
  CHECK(is_pareto_optimal_oracle(solo, alloc({{0, 1}})).holds);
}

TEST_CASE("fast pareto check matches the oracle") {
  const Instance thm4 = preset_instance("thm4");
  CHECK(max_utilitarian_welfare(thm4) == 4);
  CHECK_FALSE(is_pareto_optimal_fast(thm4, alloc({{0}, {1, 2}})).holds);
  std::mt19937_64 rng(17);
  GeneratorConfig cfg;
  cfg.allow_explicit = true;
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = random_instance(rng, cfg);
    int sampled = 0;
    enumerate_allocations(inst, false, [&](const Allocation& a) {
      CHECK(is_pareto_optimal_fast(inst, a).holds ==
            is_pareto_optimal_oracle(inst, a).holds);
      return ++sampled < 12;  // a few allocations per instance keep runtime modest
    });
  }
}

TEST_CASE("local efficiency") {
  const Instance inst = preset_instance("thm4");
  CHECK(is_locally_efficient(inst, alloc({{0}, {1, 2, 3}})).holds);
  const FairnessVerdict v = is_locally_efficient(inst, Allocation::empty(2));
  CHECK_FALSE(v.holds);
  CHECK(v.witness.find("\"good\":0") != std::string::npos);
  Instance solo(2, {Valuation::uniform(2, full_set(2), 2)});
  CHECK(is_locally_efficient(solo, alloc({{0, 1}})).holds);
}

TEST_CASE("welfare classification of pe outputs") {
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    const WelfareClass w = classify_welfare(inst, pe_mechanism(inst));
    CHECK(w.is_nash_optimal);
    CHECK(w.is_leximin);
    CHECK(w.is_lorenz_dominating);
  }
}

TEST_CASE("welfare classification of a dominated allocation") {
  const Instance inst = preset_instance("thm4");
  const WelfareClass w = classify_welfare(inst, alloc({{0}, {2, 3}}));
  CHECK_FALSE(w.is_nash_optimal);
  CHECK_FALSE(w.is_leximin);
  CHECK_FALSE(w.is_lorenz_dominating);
  CHECK_THROWS_AS(classify_welfare(inst, alloc({{}, {0, 1}})), PreconditionError);
}

TEST_CASE("pe outputs are ef1 and pareto optimal on fixtures") {
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    const Allocation a = pe_mechanism(inst);
    CHECK(is_ef1(inst, a).holds);
    CHECK(is_pareto_optimal_oracle(inst, a).holds);
  }
}

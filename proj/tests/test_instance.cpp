#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fairdiv/instance.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/presets.hpp"

using namespace fairdiv;

namespace {

Allocation alloc(std::vector<std::vector<Good>> bundles) {
  std::vector<GoodSet> b;
  for (auto& v : bundles) b.push_back(from_vector(v));
  return Allocation(std::move(b));
}

}  // namespace

TEST_CASE("values and non-wastefulness on the six-good instance") {
  const Instance inst = preset_instance("thm4");
  const Allocation a = alloc({{0}, {1, 2, 3}});
  CHECK(values(inst, a) == ValueVector{1, 3});
  CHECK(is_non_wasteful(inst, a));
  CHECK_FALSE(is_non_wasteful(inst, alloc({{}, {0, 1}})));
  CHECK(is_non_wasteful(inst, Allocation::empty(2)));
  CHECK(values(inst, Allocation::empty(2)) == ValueVector{0, 0});
}

TEST_CASE("allocation validation rejects overlap and out-of-range goods") {
  const Instance inst = preset_instance("thm4");
  CHECK_THROWS_AS(validate_allocation(inst, alloc({{0}, {0}})), InputError);
  CHECK_THROWS_AS(validate_allocation(inst, alloc({{6}, {}})), InputError);
  CHECK_THROWS_AS(validate_allocation(inst, alloc({{0}})), InputError);
}

TEST_CASE("nsw") {
  CHECK(nsw({1, 3}) == doctest::Approx(std::sqrt(3.0)));
  CHECK(nsw({0, 7}) == 0.0);
  CHECK(nsw({4, 4, 4}) == doctest::Approx(4.0));
}

TEST_CASE("nash product and zero-aware nash comparison") {
  CHECK(nash_product({2, 3, 4}) == 24);
  CHECK(nash_compare({1, 1}, {0, 2}) == std::strong_ordering::greater);
  CHECK(nash_compare({2, 3}, {3, 2}) == std::strong_ordering::equal);
  CHECK(nash_compare({0, 0}, {0, 1}) == std::strong_ordering::less);
}

TEST_CASE("sorted vector and lorenz dominance") {
  CHECK(sorted_vector({3, 1}) == ValueVector{1, 3});
  CHECK(sorted_vector({2, 2, 0}) == ValueVector{0, 2, 2});
  CHECK(lorenz_dominates({2, 2}, {1, 3}));
  CHECK_FALSE(lorenz_dominates({1, 3}, {2, 2}));
  CHECK(lorenz_dominates({1, 3}, {1, 3}));
  CHECK_THROWS_AS(lorenz_dominates({1}, {1, 2}), InputError);
}

TEST_CASE("leximin comparison") {
  CHECK(leximin_compare({1, 3}, {2, 2}) == std::strong_ordering::less);
  CHECK(leximin_compare({1, 3}, {3, 1}) == std::strong_ordering::equal);
  CHECK(leximin_compare({2, 2}, {1, 4}) == std::strong_ordering::greater);
}

TEST_CASE("pareto dominance") {
  const Instance inst = preset_instance("thm4");
  CHECK(pareto_dominates(inst, alloc({{0}, {2}}), alloc({{}, {2}})));
  CHECK_FALSE(pareto_dominates(inst, alloc({{0}, {2}}), alloc({{0}, {2}})));
  CHECK_FALSE(pareto_dominates(inst, alloc({{0}, {}}), alloc({{}, {2}})));
  CHECK_FALSE(pareto_dominates(inst, alloc({{}, {2}}), alloc({{0}, {}})));
}

TEST_CASE("enumeration counts and budget") {
  Instance two(2, {Valuation::zero(2), Valuation::zero(2)});
  int complete = 0;
  enumerate_allocations(two, true, [&](const Allocation&) { return ++complete, true; });
  CHECK(complete == 4);
  Instance three(3, {Valuation::zero(3), Valuation::zero(3)});
  int partial = 0;
  enumerate_allocations(three, false, [&](const Allocation&) { return ++partial, true; });
  CHECK(partial == 27);
  Instance none(0, {Valuation::zero(0)});
  int empty = 0;
  enumerate_allocations(none, false, [&](const Allocation& a) {
    CHECK(a.bundles == std::vector<GoodSet>{kEmptySet});
    return ++empty, true;
  });
  CHECK(empty == 1);
  CHECK_THROWS_AS(
      enumerate_allocations(three, false, [](const Allocation&) { return true; }, 5),
      CapabilityError);
}

TEST_CASE("json round trips") {
  for (auto& [name, inst] : fixture_instances()) {
    CAPTURE(name);
    const Instance back = instance_from_json(instance_to_json(inst));
    REQUIRE(back.m == inst.m);
    REQUIRE(back.n() == inst.n());
    for (int i = 0; i < inst.n(); ++i)
      CHECK(back.valuations[i].equals_pointwise(inst.valuations[i]));
  }
  const Allocation a = alloc({{0}, {1, 2, 3}});
  CHECK(allocation_from_json(allocation_to_json(a)) == a);
}

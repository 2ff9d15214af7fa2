#include "fairdiv/presets.hpp"

#include "fairdiv/errors.hpp"

namespace fairdiv {

namespace {

Instance thm4() {
  // Two agents, six goods; agent 0 wants only {0,1}, agent 1 wants one of
  // {0,1} plus two of the rest.
  return Instance(6, {Valuation::uniform(6, from_vector({0, 1}), 2),
                      Valuation::partition(6, {{from_vector({0, 1}), 1},
                                               {from_vector({2, 3, 4, 5}), 2}})});
}

Instance thm4_wstar() {
  // The same ground set with agent 0 reporting interest in four goods and
  // agent 1 in three of them.
  return Instance(6, {Valuation::uniform(6, from_vector({0, 1, 2, 3}), 4),
                      Valuation::uniform(6, from_vector({1, 2, 3}), 3)});
}

Instance triangle() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 2}};
  return Instance(3, {Valuation::graphic(3, 3, edges), Valuation::graphic(3, 3, edges)});
}

Instance uniform_pair() {
  return Instance(2, {Valuation::uniform(2, full_set(2), 2),
                      Valuation::uniform(2, full_set(2), 2)});
}

Instance partition_mixed() {
  return Instance(4, {Valuation::partition(4, {{from_vector({0, 1}), 1},
                                               {from_vector({2, 3}), 1}}),
                      Valuation::uniform(4, full_set(4), 3)});
}

Instance explicit_pair() {
  // Agent 0: free matroid on 3 goods; agent 1: rank-1 uniform matroid.
  std::vector<int> free_table{0, 1, 1, 2, 1, 2, 2, 3};
  std::vector<int> rank1{0, 1, 1, 1, 1, 1, 1, 1};
  return Instance(3, {Valuation::explicit_rank(3, free_table),
                      Valuation::explicit_rank(3, rank1)});
}

Instance trio() {
  return Instance(5, {Valuation::uniform(5, from_vector({0, 1, 2}), 2),
                      Valuation::partition(5, {{from_vector({0, 1}), 1},
                                               {from_vector({2, 3, 4}), 2}}),
                      Valuation::uniform(5, full_set(5), 3)});
}

}  // namespace

std::vector<std::pair<std::string, Instance>> fixture_instances() {
  return {{"thm4", thm4()},
          {"thm4-wstar", thm4_wstar()},
          {"triangle", triangle()},
          {"uniform-pair", uniform_pair()},
          {"partition-mixed", partition_mixed()},
          {"explicit-pair", explicit_pair()},
          {"trio", trio()}};
}

Instance preset_instance(const std::string& name) {
  for (auto& [n, inst] : fixture_instances())
    if (n == name) return inst;
  throw InputError("unknown preset: " + name);
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (auto& [n, inst] : fixture_instances()) names.push_back(n);
  return names;
}

}  // namespace fairdiv

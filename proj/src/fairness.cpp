#include "fairdiv/fairness.hpp"

#include <algorithm>

#include "fairdiv/exchange.hpp"
#include "fairdiv/json_io.hpp"

namespace fairdiv {

using nlohmann::json;

std::optional<Ef1Witness> ef1_witness(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  for (int i = 0; i < inst.n(); ++i) {
    const int own = inst.valuations[i].rank(a.bundles[i]);
    for (int j = 0; j < inst.n(); ++j) {
      if (i == j || a.bundles[j] == kEmptySet) continue;
      bool fixable = false;
      for_each_good(a.bundles[j], [&](Good g) {
        if (own >= inst.valuations[i].rank(without(a.bundles[j], g))) fixable = true;
      });
      if (!fixable) return Ef1Witness{i, j};
    }
  }
  return std::nullopt;
}

FairnessVerdict is_ef1(const Instance& inst, const Allocation& a) {
  if (auto w = ef1_witness(inst, a))
    return FairnessVerdict::fail(
        "EF1", json{{"envier", w->envier}, {"envied", w->envied}}.dump());
  return FairnessVerdict::pass("EF1");
}

int mms_share(const Instance& inst, int i, std::uint64_t budget) {
  if (i < 0 || i >= inst.n()) throw InputError("mms_share: bad agent");
  const int n = inst.n();
  const int m = inst.m;
  const auto& v = inst.valuations[i];
  if (m == 0) return 0;
  // Slots are interchangeable, so pin good 0 to slot 0; digits cover the rest.
  std::uint64_t count = 1;
  for (int g = 1; g < m; ++g) {
    if (count > budget / n)
      throw CapabilityError("mms_share: n^(m-1) exceeds budget " + std::to_string(budget));
    count *= n;
  }
  std::vector<int> digit(m, 0);
  std::vector<GoodSet> slots(n);
  int best = 0;
  while (true) {
    std::fill(slots.begin(), slots.end(), kEmptySet);
    for (int g = 0; g < m; ++g) slots[digit[g]] |= bit(g);
    int worst = v.rank(slots[0]);
    for (int s = 1; s < n && worst > best; ++s) worst = std::min(worst, v.rank(slots[s]));
    best = std::max(best, worst);
    int pos = 1;  // digit[0] stays 0
    while (pos < m && digit[pos] == n - 1) digit[pos++] = 0;
    if (pos >= m) break;
    ++digit[pos];
  }
  return best;
}

MmsProfile mms_profile(const Instance& inst, std::uint64_t budget) {
  MmsProfile profile;
  for (int i = 0; i < inst.n(); ++i) profile.shares.push_back(mms_share(inst, i, budget));
  return profile;
}

FairnessVerdict is_mms(const Instance& inst, const Allocation& a, std::uint64_t budget) {
  const ValueVector vec = values(inst, a);
  for (int i = 0; i < inst.n(); ++i) {
    int share = mms_share(inst, i, budget);
    if (vec[i] < share)
      return FairnessVerdict::fail(
          "MMS", json{{"agent", i}, {"value", vec[i]}, {"share", share}}.dump());
  }
  return FairnessVerdict::pass("MMS");
}

FairnessVerdict is_pareto_optimal_oracle(const Instance& inst, const Allocation& a,
                                         std::uint64_t budget) {
  validate_allocation(inst, a);
  std::optional<Allocation> dominating;
  enumerate_allocations(
      inst, /*complete_only=*/false,
      [&](const Allocation& b) {
        if (pareto_dominates(inst, b, a)) {
          dominating = b;
          return false;
        }
        return true;
      },
      budget);
  if (dominating)
    return FairnessVerdict::fail("PO", allocation_to_json(*dominating).dump());
  return FairnessVerdict::pass("PO");
}

int max_utilitarian_welfare(const Instance& inst) {
  for (const auto& v : inst.valuations)
    if (!v.is_matroid_kind())
      throw UnsupportedKindError("max_utilitarian_welfare: matroid kinds only");
  Allocation x = Allocation::empty(inst.n());
  // Growth-mode augmentation to a fixed point maximizes total allocated
  // size; under binary marginals that equals the utilitarian optimum.
  for (int round = 0; round < inst.m; ++round) {
    const ExchangeGraph graph = build_exchange_graph(inst, x);
    const GoodSet free = x.unallocated(inst.m);
    if (free == kEmptySet) break;
    bool grew = false;
    for (int i = 0; i < inst.n() && !grew; ++i) {
      auto path = shortest_path(graph, inst.valuations[i].free_goods(x.bundles[i]), free);
      if (path) {
        x = augment_forward(inst, x, *path, i);
        grew = true;
      }
    }
    if (!grew) break;
  }
  return set_size(x.allocated());
}

FairnessVerdict is_pareto_optimal_fast(const Instance& inst, const Allocation& a) {
  const ValueVector vec = values(inst, a);
  int total = 0;
  for (int v : vec) total += v;
  const int best = max_utilitarian_welfare(inst);
  if (total < best)
    return FairnessVerdict::fail(
        "PO", json{{"welfare", total}, {"max_welfare", best}}.dump());
  return FairnessVerdict::pass("PO");
}

FairnessVerdict is_locally_efficient(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  std::optional<std::pair<Good, int>> witness;
  for_each_good(a.unallocated(inst.m), [&](Good g) {
    if (witness) return;
    for (int i = 0; i < inst.n(); ++i) {
      if (inst.valuations[i].rank(with(a.bundles[i], g)) >
          inst.valuations[i].rank(a.bundles[i])) {
        witness = {g, i};
        return;
      }
    }
  });
  if (witness)
    return FairnessVerdict::fail(
        "local-efficiency", json{{"good", witness->first}, {"agent", witness->second}}.dump());
  return FairnessVerdict::pass("local-efficiency");
}

WelfareClass classify_welfare(const Instance& inst, const Allocation& a, std::uint64_t budget) {
  if (!is_non_wasteful(inst, a))
    throw PreconditionError("classify_welfare: allocation must be non-wasteful");
  const ValueVector vec = values(inst, a);
  const ValueVector sorted = sorted_vector(vec);
  WelfareClass out{true, true, true};
  enumerate_allocations(
      inst, /*complete_only=*/false,
      [&](const Allocation& b) {
        ValueVector bv = values(inst, b);
        if (nash_compare(bv, vec) == std::strong_ordering::greater) out.is_nash_optimal = false;
        ValueVector bs = sorted_vector(bv);
        if (bs > sorted) out.is_leximin = false;
        if (!lorenz_dominates(sorted, bs)) out.is_lorenz_dominating = false;
        return out.is_nash_optimal || out.is_leximin || out.is_lorenz_dominating;
      },
      budget);
  return out;
}

}  // namespace fairdiv

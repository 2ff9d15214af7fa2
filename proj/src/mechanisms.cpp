#include "fairdiv/mechanisms.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "fairdiv/exchange.hpp"

namespace fairdiv {

namespace {

// Mechanism step 1: any report that cannot be certified as a matroid rank
// function is replaced by the zero valuation.
Instance sanitize_reports(const Instance& inst) {
  std::vector<Valuation> vals;
  vals.reserve(inst.n());
  for (const auto& v : inst.valuations) {
    bool ok;
    try {
      ok = validate_matroid_rank(v);
    } catch (const CapabilityError&) {
      ok = false;  // cannot certify, reject
    }
    vals.push_back(ok ? v : Valuation::zero(inst.m));
  }
  return Instance(inst.m, std::move(vals));
}

}  // namespace

Allocation pe_mechanism(const Instance& inst) {
  const Instance clean = sanitize_reports(inst);
  Allocation x = Allocation::empty(clean.n());
  for (int round = 0; round < clean.m; ++round) {
    const ExchangeGraph graph = build_exchange_graph(clean, x);
    const GoodSet free = x.unallocated(clean.m);
    if (free == kEmptySet) break;
    std::optional<int> chosen;
    std::optional<AugPath> chosen_path;
    for (int i = 0; i < clean.n(); ++i) {
      auto path = shortest_path(graph, clean.valuations[i].free_goods(x.bundles[i]), free);
      if (!path) continue;
      if (!chosen || set_size(x.bundles[i]) < set_size(x.bundles[*chosen])) {
        chosen = i;
        chosen_path = std::move(path);
      }
    }
    if (!chosen) break;
    x = augment_forward(clean, x, *chosen_path, *chosen);
  }
  return x;
}

Allocation lorenz_dominating_oracle(const Instance& inst, std::uint64_t budget) {
  std::set<ValueVector> sorted_seen;
  std::optional<Allocation> best;
  ValueVector best_vec, best_sorted;
  enumerate_allocations(
      inst, /*complete_only=*/false,
      [&](const Allocation& a) {
        if (!is_non_wasteful(inst, a)) return true;
        ValueVector vec = values(inst, a);
        ValueVector sorted = sorted_vector(vec);
        sorted_seen.insert(sorted);
        if (!best) {
          best = a;
          best_vec = std::move(vec);
          best_sorted = std::move(sorted);
          return true;
        }
        auto cmp = sorted <=> best_sorted;
        if (cmp == std::strong_ordering::greater ||
            (cmp == std::strong_ordering::equal && vec > best_vec)) {
          best = a;
          best_vec = std::move(vec);
          best_sorted = std::move(sorted);
        }
        return true;
      },
      budget);
  for (const auto& s : sorted_seen)
    if (!lorenz_dominates(best_sorted, s))
      throw InternalInvariantError(
          "lorenz_dominating_oracle: no Lorenz dominating allocation exists for this profile");
  return *best;
}

Mechanism cleanup_non_wasteful(Mechanism f) {
  auto inner = std::move(f.run);
  return Mechanism{
      "cleanup(" + f.name + ")",
      [inner = std::move(inner)](const Instance& inst) {
        for (const auto& v : inst.valuations)
          if (!v.is_matroid_kind())
            throw UnsupportedKindError("cleanup_non_wasteful: matroid kinds only");
        Allocation a = inner(inst);
        validate_allocation(inst, a);
        for (int i = 0; i < inst.n(); ++i)
          a.bundles[i] = inst.valuations[i].max_independent_subset(a.bundles[i]);
        return a;
      }};
}

Allocation serial_dictatorship(const Instance& inst, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != inst.n())
    throw InputError("serial_dictatorship: order must list every agent once");
  std::vector<bool> seen(inst.n(), false);
  for (int i : order) {
    if (i < 0 || i >= inst.n() || seen[i])
      throw InputError("serial_dictatorship: order is not an agent permutation");
    seen[i] = true;
  }
  Allocation a = Allocation::empty(inst.n());
  GoodSet remaining = full_set(inst.m);
  for (int i : order) {
    a.bundles[i] = inst.valuations[i].max_independent_subset(remaining);
    remaining &= ~a.bundles[i];
  }
  return a;
}

Mechanism pe() { return Mechanism{"pe", [](const Instance& inst) { return pe_mechanism(inst); }}; }

Mechanism oracle_mechanism() {
  return Mechanism{"oracle",
                   [](const Instance& inst) { return lorenz_dominating_oracle(inst); }};
}

Mechanism dictatorship_mechanism(std::vector<int> order) {
  std::ostringstream name;
  name << "dictator:";
  for (size_t k = 0; k < order.size(); ++k) name << (k ? "," : "") << order[k];
  return Mechanism{name.str(), [order = std::move(order)](const Instance& inst) {
                     return serial_dictatorship(inst, order);
                   }};
}

Mechanism constant_empty_mechanism() {
  return Mechanism{"empty", [](const Instance& inst) { return Allocation::empty(inst.n()); }};
}

Mechanism mechanism_by_name(const std::string& name) {
  if (name == "pe") return pe();
  if (name == "oracle") return oracle_mechanism();
  if (name == "empty") return constant_empty_mechanism();
  if (name.rfind("dictator:", 0) == 0) {
    std::vector<int> order;
    std::stringstream ss(name.substr(9));
    std::string tok;
    while (std::getline(ss, tok, ','))
      order.push_back(std::stoi(tok));
    return dictatorship_mechanism(std::move(order));
  }
  throw InputError("unknown mechanism: " + name);
}

}  // namespace fairdiv

#include "fairdiv/generator.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

GoodSet random_subset(std::mt19937_64& rng, int m) { return rng() & full_set(m); }

Valuation random_structured(int m, std::mt19937_64& rng) {
  switch (pick(rng, 0, 2)) {
    case 0: {
      GoodSet ground = random_subset(rng, m);
      return Valuation::uniform(m, ground, pick(rng, 0, set_size(ground)));
    }
    case 1: {
      std::vector<int> part_of(m);
      const int parts = pick(rng, 1, std::max(1, m));
      for (int g = 0; g < m; ++g) part_of[g] = pick(rng, 0, parts);  // parts = drop the good
      std::vector<std::pair<GoodSet, int>> spec(parts, {kEmptySet, 0});
      for (int g = 0; g < m; ++g)
        if (part_of[g] < parts) spec[part_of[g]].first = with(spec[part_of[g]].first, g);
      std::vector<std::pair<GoodSet, int>> kept;
      for (auto& [goods, cap] : spec)
        if (goods != kEmptySet) kept.emplace_back(goods, pick(rng, 0, set_size(goods)));
      return Valuation::partition(m, std::move(kept));
    }
    default: {
      const int vertices = pick(rng, 2, m + 1);
      std::vector<std::pair<int, int>> edges;
      edges.reserve(m);
      for (int g = 0; g < m; ++g) {
        int u = pick(rng, 0, vertices - 1);
        int w = pick(rng, 0, vertices - 2);
        if (w >= u) ++w;
        edges.emplace_back(u, w);
      }
      return Valuation::graphic(m, vertices, std::move(edges));
    }
  }
}

}  // namespace

Valuation random_valuation(int m, std::mt19937_64& rng, bool allow_explicit) {
  Valuation v = random_structured(m, rng);
  if (allow_explicit && m <= Valuation::kExplicitMaxGoods && pick(rng, 0, 3) == 0) {
    std::vector<int> table(std::size_t{1} << m);
    for (GoodSet s = 0; s < static_cast<GoodSet>(table.size()); ++s)
      table[s] = v.rank(s);
    return Valuation::explicit_rank(m, std::move(table));
  }
  return v;
}

Instance random_instance(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  const int m = pick(rng, cfg.min_goods, cfg.max_goods);
  const int n = pick(rng, cfg.min_agents, cfg.max_agents);
  std::vector<Valuation> vals;
  vals.reserve(n);
  for (int i = 0; i < n; ++i) vals.push_back(random_valuation(m, rng, cfg.allow_explicit));
  return Instance(m, std::move(vals));
}

Instance random_instance(std::uint64_t seed, const GeneratorConfig& cfg) {
  std::mt19937_64 rng(seed);
  return random_instance(rng, cfg);
}

}  // namespace fairdiv

#pragma once

#include <random>

#include "fairdiv/instance.hpp"

namespace fairdiv {

struct GeneratorConfig {
  int min_goods = 1;
  int max_goods = 6;
  int min_agents = 1;
  int max_agents = 3;
  bool allow_explicit = true;
};

// Seed-deterministic random draws mixing uniform, partition, graphic and
// explicit-table kinds. Explicit tables are sampled from structured matroids
// so they are always valid rank functions.
Valuation random_valuation(int m, std::mt19937_64& rng, bool allow_explicit = true);
Instance random_instance(std::mt19937_64& rng, const GeneratorConfig& cfg = {});
Instance random_instance(std::uint64_t seed, const GeneratorConfig& cfg = {});

}  // namespace fairdiv

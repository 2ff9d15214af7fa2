#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairdiv/instance.hpp"

namespace fairdiv {

// Directed graph on goods for a non-wasteful allocation: edge (g, g') iff
// the owner of g can swap g out for g' keeping her bundle independent.
struct ExchangeGraph {
  int m = 0;
  std::vector<GoodSet> out_edges;  // out_edges[g] = bitmask of swap targets
  std::vector<int> owner;          // agent index, -1 if unallocated

  bool has_edge(Good g, Good h) const { return contains(out_edges[g], h); }
};

enum class PathDirection { Forward, Reverse };

struct AugPath {
  std::vector<Good> vertices;  // distinct; consecutive pairs are graph edges
  PathDirection direction = PathDirection::Forward;

  int length() const { return static_cast<int>(vertices.size()); }
};

ExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& a);

// BFS shortest path between vertex sets, lowest-good-id frontier expansion.
// A source that is also a sink yields a single-vertex path.
std::optional<AugPath> shortest_path(const ExchangeGraph& g, GoodSet sources, GoodSet sinks);

// Applies the symmetric-difference swap along q and gives its head vertex to
// `gainer`. If `loser` is set, q must end in that agent's bundle and the good
// count transfers from loser to gainer; otherwise q must end on an
// unallocated good (growth mode) and total allocated size grows by one.
// Shortestness of q is re-verified; the post-state is checked independent.
Allocation augment_forward(const Instance& inst, const Allocation& a, const AugPath& q,
                           int gainer, std::optional<int> loser = std::nullopt);

// Witness search by ascending good-id scan; existence is verified by rank
// queries rather than assumed.
Good strong_basis_exchange(const Valuation& v, GoodSet a_set, GoodSet b_set, Good a);

struct ExchangeMatching {
  std::vector<Good> domain;  // S, subset of A \ X
  std::vector<Good> image;   // mu(domain[k]) = image[k], into X \ A
};

// Finds mu' in X \ (mu(S) + A) with X - mu' + g' and A - (S+g') + (mu(S)+mu')
// both independent. y_mode switches the size precondition to |X| < |A| and
// additionally requires g' outside F(X).
Good extend_exchange_matching(const Valuation& v, GoodSet a_set, GoodSet x_set,
                              const ExchangeMatching& mu, Good g_prime, bool y_mode);

struct ReversePathResult {
  AugPath path;  // vertices stored sink-first: (g_1, g_2, ..., g_k)
  int low_agent = -1;  // the agent l whose bundle the source augments
};

// Inductive reverse-path construction between a non-wasteful allocation x and
// a Pareto-efficient non-wasteful allocation a, seeded in X_h ∩ F_h(A_h).
// Throws PreconditionError naming the improving good if a turns out not to
// be Pareto-efficient.
ReversePathResult find_reverse_path(const Instance& inst, const Allocation& x,
                                    const Allocation& a, int h);

// Bundles induced by a reverse path per its defining swap rule: every agent
// swaps along edges ending in her bundle; h additionally gains the sink g_1
// and low_agent loses the source g_k.
Allocation apply_reverse_path(const Instance& inst, const Allocation& a,
                              const ReversePathResult& rp, int h);

std::string to_dot(const ExchangeGraph& g);

}  // namespace fairdiv

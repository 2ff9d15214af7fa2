#include "fairdiv/exchange.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace fairdiv {

namespace {

void require_matroid_agents(const Instance& inst, const char* op) {
  for (const auto& v : inst.valuations)
    if (!v.is_matroid_kind())
      throw UnsupportedKindError(std::string(op) + ": binary_xos agents are not supported");
}

void require_non_wasteful(const Instance& inst, const Allocation& a, const char* op) {
  if (!is_non_wasteful(inst, a))
    throw PreconditionError(std::string(op) + ": allocation is wasteful");
}

std::vector<int> owner_map(const Instance& inst, const Allocation& a) {
  std::vector<int> owner(inst.m, -1);
  for (int i = 0; i < a.n(); ++i)
    for_each_good(a.bundles[i], [&](Good g) { owner[g] = i; });
  return owner;
}

}  // namespace

ExchangeGraph build_exchange_graph(const Instance& inst, const Allocation& a) {
  require_matroid_agents(inst, "build_exchange_graph");
  require_non_wasteful(inst, a, "build_exchange_graph");
  ExchangeGraph g;
  g.m = inst.m;
  g.out_edges.assign(inst.m, kEmptySet);
  g.owner = owner_map(inst, a);
  for (int i = 0; i < inst.n(); ++i) {
    const GoodSet bundle = a.bundles[i];
    const int size = set_size(bundle);
    for_each_good(bundle, [&](Good out) {
      const GoodSet swapped_out = without(bundle, out);
      for_each_good(full_set(inst.m) & ~bundle, [&](Good in) {
        if (inst.valuations[i].rank(with(swapped_out, in)) == size)
          g.out_edges[out] |= bit(in);
      });
    });
  }
  return g;
}

std::optional<AugPath> shortest_path(const ExchangeGraph& g, GoodSet sources, GoodSet sinks) {
  if ((sources | sinks) & ~full_set(g.m)) throw InputError("shortest_path: good id >= m");
  if (GoodSet both = sources & sinks; both != kEmptySet)
    return AugPath{{lowest_good(both)}, PathDirection::Forward};
  std::vector<Good> parent(g.m, -1);
  std::vector<bool> seen(g.m, false);
  std::deque<Good> queue;
  for_each_good(sources, [&](Good s) {
    seen[s] = true;
    queue.push_back(s);
  });
  while (!queue.empty()) {
    Good cur = queue.front();
    queue.pop_front();
    std::optional<Good> hit;
    for_each_good(g.out_edges[cur], [&](Good next) {
      if (seen[next]) return;
      seen[next] = true;
      parent[next] = cur;
      if (contains(sinks, next) && !hit) hit = next;
      queue.push_back(next);
    });
    if (hit) {
      std::vector<Good> path;
      for (Good v = *hit; v != -1; v = parent[v]) path.push_back(v);
      std::reverse(path.begin(), path.end());
      return AugPath{std::move(path), PathDirection::Forward};
    }
  }
  return std::nullopt;
}

Allocation augment_forward(const Instance& inst, const Allocation& a, const AugPath& q,
                           int gainer, std::optional<int> loser) {
  require_matroid_agents(inst, "augment_forward");
  require_non_wasteful(inst, a, "augment_forward");
  if (gainer < 0 || gainer >= inst.n()) throw InputError("augment_forward: bad gainer");
  if (q.vertices.empty()) throw PreconditionError("augment_forward: empty path");

  const ExchangeGraph graph = build_exchange_graph(inst, a);
  const GoodSet sources = inst.valuations[gainer].free_goods(a.bundles[gainer]);
  const GoodSet sinks = loser ? a.bundles[*loser] : a.unallocated(inst.m);

  if (!contains(sources, q.vertices.front()))
    throw PreconditionError("augment_forward: path does not start in F_gainer");
  if (!contains(sinks, q.vertices.back()))
    throw PreconditionError("augment_forward: path does not end in the sink set");
  GoodSet on_path = 0;
  for (size_t j = 0; j < q.vertices.size(); ++j) {
    Good v = q.vertices[j];
    if (contains(on_path, v)) throw PreconditionError("augment_forward: path is not simple");
    on_path |= bit(v);
    if (j + 1 < q.vertices.size() && !graph.has_edge(v, q.vertices[j + 1]))
      throw PreconditionError("augment_forward: missing edge along path");
  }
  // Independence after the swap chain is only guaranteed for shortest paths.
  auto recomputed = shortest_path(graph, sources, sinks);
  if (!recomputed || recomputed->length() != q.length())
    throw PreconditionError("augment_forward: path is not a shortest path between the sets");

  Allocation result = a;
  for (size_t j = 0; j + 1 < q.vertices.size(); ++j) {
    const int k = graph.owner[q.vertices[j]];
    if (k < 0) throw PreconditionError("augment_forward: interior vertex unallocated");
    result.bundles[k] = with(without(result.bundles[k], q.vertices[j]), q.vertices[j + 1]);
  }
  result.bundles[gainer] = with(result.bundles[gainer], q.vertices.front());
  if (loser) result.bundles[*loser] = without(result.bundles[*loser], q.vertices.back());

  validate_allocation(inst, result);
  if (!is_non_wasteful(inst, result))
    throw InternalInvariantError("augment_forward: post-state bundle lost independence");
  for (int i = 0; i < inst.n(); ++i) {
    int expected = set_size(a.bundles[i]) + (i == gainer ? 1 : 0) -
                   (loser && i == *loser ? 1 : 0);
    if (set_size(result.bundles[i]) != expected)
      throw InternalInvariantError("augment_forward: unexpected bundle size delta");
  }
  return result;
}

Good strong_basis_exchange(const Valuation& v, GoodSet a_set, GoodSet b_set, Good a) {
  if (!v.is_matroid_kind()) throw UnsupportedKindError("strong_basis_exchange: matroid kinds only");
  if (!v.is_independent(a_set) || !v.is_independent(b_set))
    throw PreconditionError("strong_basis_exchange: sets must be independent");
  if (set_size(a_set) != set_size(b_set))
    throw PreconditionError("strong_basis_exchange: |A| != |B|");
  if (!contains(a_set & ~b_set, a))
    throw PreconditionError("strong_basis_exchange: a must lie in A \\ B");
  const int size = set_size(a_set);
  std::optional<Good> witness;
  for_each_good(b_set & ~a_set, [&](Good b) {
    if (witness) return;
    if (v.rank(with(without(a_set, a), b)) == size &&
        v.rank(with(without(b_set, b), a)) == size)
      witness = b;
  });
  if (!witness)
    throw InternalInvariantError("strong_basis_exchange: no witness; matroid oracle is broken");
  return *witness;
}

Good extend_exchange_matching(const Valuation& v, GoodSet a_set, GoodSet x_set,
                              const ExchangeMatching& mu, Good g_prime, bool y_mode) {
  if (!v.is_matroid_kind())
    throw UnsupportedKindError("extend_exchange_matching: matroid kinds only");
  if (!v.is_independent(a_set) || !v.is_independent(x_set))
    throw PreconditionError("extend_exchange_matching: A and X must be independent");
  if (mu.domain.size() != mu.image.size())
    throw PreconditionError("extend_exchange_matching: matching arity mismatch");

  const GoodSet s_set = from_vector(mu.domain);
  const GoodSet mu_s = from_vector(mu.image);
  if (set_size(s_set) != static_cast<int>(mu.domain.size()) ||
      set_size(mu_s) != static_cast<int>(mu.image.size()))
    throw PreconditionError("extend_exchange_matching: mu is not injective");
  if (s_set & ~(a_set & ~x_set))
    throw PreconditionError("extend_exchange_matching: S must lie in A \\ X");
  if (mu_s & ~(x_set & ~a_set))
    throw PreconditionError("extend_exchange_matching: mu(S) must lie in X \\ A");
  const int x_size = set_size(x_set);
  for (size_t k = 0; k < mu.domain.size(); ++k)
    if (v.rank(with(without(x_set, mu.image[k]), mu.domain[k])) != x_size)
      throw PreconditionError("extend_exchange_matching: element-wise swap breaks X");
  const GoodSet a_swapped = (a_set & ~s_set) | mu_s;
  if (!v.is_independent(a_swapped))
    throw PreconditionError("extend_exchange_matching: subset swap breaks A");
  if (y_mode) {
    if (x_size >= set_size(a_set))
      throw PreconditionError("extend_exchange_matching: y_mode needs |X| < |A|");
    if (contains(v.free_goods(x_set), g_prime))
      throw PreconditionError("extend_exchange_matching: y_mode needs g' outside F(X)");
  } else if (x_size < set_size(a_set)) {
    throw PreconditionError("extend_exchange_matching: needs |X| >= |A|");
  }
  if (!contains(a_set & ~(s_set | x_set), g_prime))
    throw PreconditionError("extend_exchange_matching: g' must lie in A \\ (S + X)");

  const int a_size = set_size(a_set);
  std::optional<Good> witness;
  for_each_good(x_set & ~(mu_s | a_set), [&](Good cand) {
    if (witness) return;
    if (v.rank(with(without(x_set, cand), g_prime)) != x_size) return;
    const GoodSet a_new = (a_set & ~(s_set | bit(g_prime))) | mu_s | bit(cand);
    if (v.rank(a_new) == a_size) witness = cand;
  });
  if (!witness)
    throw InternalInvariantError("extend_exchange_matching: no witness; matroid oracle is broken");
  return *witness;
}

ReversePathResult find_reverse_path(const Instance& inst, const Allocation& x,
                                    const Allocation& a, int h) {
  require_matroid_agents(inst, "find_reverse_path");
  require_non_wasteful(inst, x, "find_reverse_path");
  require_non_wasteful(inst, a, "find_reverse_path");
  if (h < 0 || h >= inst.n()) throw InputError("find_reverse_path: bad agent h");
  if (set_size(x.bundles[h]) <= set_size(a.bundles[h]))
    throw PreconditionError("find_reverse_path: h must satisfy |X_h| > |A_h|");

  const std::vector<int> a_owner = owner_map(inst, a);
  auto in_low_set = [&](int i) {
    return set_size(x.bundles[i]) < set_size(a.bundles[i]);
  };

  const GoodSet seed_set = x.bundles[h] & inst.valuations[h].free_goods(a.bundles[h]);
  if (seed_set == kEmptySet)
    throw InternalInvariantError("find_reverse_path: augmentation property gave no seed");
  std::vector<Good> path = {lowest_good(seed_set)};  // sink-first: (g_1, ..., g_t)

  int low_agent = -1;
  for (int step = 0; step <= inst.m; ++step) {
    const Good tail = path.back();
    const int next = a_owner[tail];
    if (next < 0) {
      // The swapped bundles absorb `tail` and improve A, contradicting the
      // stated Pareto-efficiency of A.
      throw PreconditionError("find_reverse_path: A is not Pareto-efficient; improving good g" +
                              std::to_string(tail));
    }
    if (in_low_set(next) &&
        contains(inst.valuations[next].free_goods(x.bundles[next]), tail)) {
      low_agent = next;
      break;
    }

    ExchangeMatching mu;
    for (size_t s = 0; s + 1 < path.size(); ++s) {
      if (a_owner[path[s]] == next) {
        mu.domain.push_back(path[s]);
        mu.image.push_back(path[s + 1]);
      }
    }
    GoodSet a_set = a.bundles[next];
    if (next == h) a_set = with(a_set, path.front());  // keeps the path off g_1
    const bool y_mode = in_low_set(next) &&
                        !contains(inst.valuations[next].free_goods(x.bundles[next]), tail);
    Good grown = extend_exchange_matching(inst.valuations[next], a_set, x.bundles[next],
                                          mu, tail, y_mode);
    if (std::find(path.begin(), path.end(), grown) != path.end())
      throw InternalInvariantError("find_reverse_path: revisited a path vertex");
    path.push_back(grown);
  }
  if (low_agent < 0)
    throw InternalInvariantError("find_reverse_path: did not terminate within m steps");

  ReversePathResult result{AugPath{std::move(path), PathDirection::Reverse}, low_agent};

  // Post-hoc checks: every consecutive pair is an edge of G(X) and the
  // swapped bundles are disjoint and independent.
  const ExchangeGraph graph = build_exchange_graph(inst, x);
  const auto& vs = result.path.vertices;
  for (size_t j = 0; j + 1 < vs.size(); ++j)
    if (!graph.has_edge(vs[j + 1], vs[j]))
      throw InternalInvariantError("find_reverse_path: missing exchange edge");
  Allocation swapped = apply_reverse_path(inst, a, result, h);
  if (!is_non_wasteful(inst, swapped))
    throw InternalInvariantError("find_reverse_path: swapped bundles lost independence");
  return result;
}

Allocation apply_reverse_path(const Instance& inst, const Allocation& a,
                              const ReversePathResult& rp, int h) {
  const std::vector<int> a_owner = owner_map(inst, a);
  const auto& vs = rp.path.vertices;  // (g_1, ..., g_k), edges (g_{j+1}, g_j)
  Allocation result = a;
  for (size_t j = 0; j + 1 < vs.size(); ++j) {
    const int i = a_owner[vs[j]];
    if (i < 0) throw PreconditionError("apply_reverse_path: path vertex unallocated in A");
    result.bundles[i] = with(without(result.bundles[i], vs[j]), vs[j + 1]);
  }
  result.bundles[h] = with(result.bundles[h], vs.front());
  result.bundles[rp.low_agent] = without(result.bundles[rp.low_agent], vs.back());
  validate_allocation(inst, result);
  return result;
}

std::string to_dot(const ExchangeGraph& g) {
  std::ostringstream out;
  out << "digraph exchange {\n";
  for (Good v = 0; v < g.m; ++v) {
    out << "  g" << v << " [label=\"g" << v << '/';
    if (g.owner[v] >= 0)
      out << "agent" << g.owner[v];
    else
      out << "free";
    out << "\"];\n";
  }
  for (Good v = 0; v < g.m; ++v)
    for_each_good(g.out_edges[v], [&](Good w) { out << "  g" << v << " -> g" << w << ";\n"; });
  out << "}\n";
  return out.str();
}

}  // namespace fairdiv

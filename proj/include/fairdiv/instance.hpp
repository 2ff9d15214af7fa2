#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <vector>

#include "fairdiv/valuation.hpp"

namespace fairdiv {

// A fair division instance: m goods, n agents, one valuation per agent.
struct Instance {
  int m = 0;
  std::vector<Valuation> valuations;

  Instance() = default;
  Instance(int m_, std::vector<Valuation> vals);
  int n() const { return static_cast<int>(valuations.size()); }
};

// Possibly partial allocation: pairwise-disjoint bundles over [m].
struct Allocation {
  std::vector<GoodSet> bundles;

  Allocation() = default;
  explicit Allocation(std::vector<GoodSet> b) : bundles(std::move(b)) {}
  static Allocation empty(int n) { return Allocation(std::vector<GoodSet>(n, kEmptySet)); }

  int n() const { return static_cast<int>(bundles.size()); }
  GoodSet allocated() const;
  GoodSet unallocated(int m) const { return full_set(m) & ~allocated(); }
  bool operator==(const Allocation&) const = default;
};

// Throws InputError if bundles overlap, ids exceed m, or n mismatches.
void validate_allocation(const Instance& inst, const Allocation& a);

using ValueVector = std::vector<int>;

ValueVector values(const Instance& inst, const Allocation& a);

// Every bundle independent under its owner's valuation (rank == size).
bool is_non_wasteful(const Instance& inst, const Allocation& a);

double nsw(const ValueVector& vec);

// Exact product of entries; the float-free comparison key for Nash ranking.
unsigned __int128 nash_product(const ValueVector& vec);

// Nash objective ordering: more agents with positive value first, then the
// exact product of the positive values. The positive-count tier is the
// standard convention when zero values are unavoidable.
std::strong_ordering nash_compare(const ValueVector& u, const ValueVector& w);

ValueVector sorted_vector(ValueVector vec);

// Prefix sums of sorted(u) all >= prefix sums of sorted(w).
bool lorenz_dominates(const ValueVector& u, const ValueVector& w);

// Lexicographic comparison of ascending-sorted vectors.
std::strong_ordering leximin_compare(const ValueVector& u, const ValueVector& w);

bool pareto_dominates(const Instance& inst, const Allocation& a, const Allocation& b);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Streams every assignment of goods to agents in mixed-radix counter order.
// complete_only=false adds an extra "unallocated" slot per good. The visitor
// may return false to stop early.
void enumerate_allocations(const Instance& inst, bool complete_only,
                           const std::function<bool(const Allocation&)>& visit,
                           std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace fairdiv

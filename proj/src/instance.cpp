#include "fairdiv/instance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fairdiv {

Instance::Instance(int m_, std::vector<Valuation> vals) : m(m_), valuations(std::move(vals)) {
  if (valuations.empty()) throw InputError("instance needs at least one agent");
  for (const auto& v : valuations)
    if (v.m() != m) throw InputError("all valuations must share the instance's m");
}

GoodSet Allocation::allocated() const {
  GoodSet all = 0;
  for (GoodSet b : bundles) all |= b;
  return all;
}

void validate_allocation(const Instance& inst, const Allocation& a) {
  if (a.n() != inst.n()) throw InputError("allocation has wrong number of bundles");
  GoodSet seen = 0;
  for (GoodSet b : a.bundles) {
    if (b & ~full_set(inst.m)) throw InputError("bundle contains good id >= m");
    if (b & seen) throw InputError("bundles are not pairwise disjoint");
    seen |= b;
  }
}

ValueVector values(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  ValueVector out(inst.n());
  for (int i = 0; i < inst.n(); ++i) out[i] = inst.valuations[i].rank(a.bundles[i]);
  return out;
}

bool is_non_wasteful(const Instance& inst, const Allocation& a) {
  validate_allocation(inst, a);
  for (int i = 0; i < inst.n(); ++i)
    if (inst.valuations[i].rank(a.bundles[i]) != set_size(a.bundles[i])) return false;
  return true;
}

double nsw(const ValueVector& vec) {
  if (vec.empty()) return 0.0;
  double log_sum = 0.0;
  for (int v : vec) {
    if (v == 0) return 0.0;
    log_sum += std::log(static_cast<double>(v));
  }
  return std::exp(log_sum / static_cast<double>(vec.size()));
}

unsigned __int128 nash_product(const ValueVector& vec) {
  unsigned __int128 p = 1;
  for (int v : vec) p *= static_cast<unsigned __int128>(v);
  return p;
}

std::strong_ordering nash_compare(const ValueVector& u, const ValueVector& w) {
  auto key = [](const ValueVector& vec) {
    int positives = 0;
    unsigned __int128 product = 1;
    for (int v : vec)
      if (v > 0) {
        ++positives;
        product *= static_cast<unsigned __int128>(v);
      }
    return std::pair<int, unsigned __int128>(positives, product);
  };
  const auto [pu, qu] = key(u);
  const auto [pw, qw] = key(w);
  if (pu != pw) return pu <=> pw;
  if (qu != qw) return qu < qw ? std::strong_ordering::less : std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ValueVector sorted_vector(ValueVector vec) {
  std::stable_sort(vec.begin(), vec.end());
  return vec;
}

bool lorenz_dominates(const ValueVector& u, const ValueVector& w) {
  if (u.size() != w.size()) throw InputError("lorenz_dominates: length mismatch");
  ValueVector su = sorted_vector(u), sw = sorted_vector(w);
  long long pu = 0, pw = 0;
  for (size_t j = 0; j < su.size(); ++j) {
    pu += su[j];
    pw += sw[j];
    if (pu < pw) return false;
  }
  return true;
}

std::strong_ordering leximin_compare(const ValueVector& u, const ValueVector& w) {
  if (u.size() != w.size()) throw InputError("leximin_compare: length mismatch");
  ValueVector su = sorted_vector(u), sw = sorted_vector(w);
  return su <=> sw;
}

bool pareto_dominates(const Instance& inst, const Allocation& a, const Allocation& b) {
  ValueVector va = values(inst, a), vb = values(inst, b);
  bool strict = false;
  for (int i = 0; i < inst.n(); ++i) {
    if (va[i] < vb[i]) return false;
    if (va[i] > vb[i]) strict = true;
  }
  return strict;
}

void enumerate_allocations(const Instance& inst, bool complete_only,
                           const std::function<bool(const Allocation&)>& visit,
                           std::uint64_t budget) {
  const int m = inst.m;
  const int n = inst.n();
  const std::uint64_t base = static_cast<std::uint64_t>(n) + (complete_only ? 0 : 1);
  std::uint64_t count = 1;
  for (int g = 0; g < m; ++g) {
    if (count > budget / base)
      throw CapabilityError("enumerate_allocations: " + std::to_string(base) + "^" +
                            std::to_string(m) + " exceeds budget " + std::to_string(budget));
    count *= base;
  }
  // digit[g] in [0, base): agent index, with digit == n meaning unallocated.
  std::vector<int> digit(m, 0);
  Allocation a = Allocation::empty(n);
  while (true) {
    for (int i = 0; i < n; ++i) a.bundles[i] = 0;
    for (int g = 0; g < m; ++g)
      if (digit[g] < n) a.bundles[digit[g]] |= bit(g);
    if (!visit(a)) return;
    int pos = 0;
    while (pos < m && digit[pos] == static_cast<int>(base) - 1) digit[pos++] = 0;
    if (pos == m) return;
    ++digit[pos];
  }
}

}  // namespace fairdiv

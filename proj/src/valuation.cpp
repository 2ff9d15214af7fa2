#include "fairdiv/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace fairdiv {

std::string kind_name(ValuationKind k) {
  switch (k) {
    case ValuationKind::Zero: return "zero";
    case ValuationKind::Uniform: return "uniform";
    case ValuationKind::Partition: return "partition";
    case ValuationKind::Graphic: return "graphic";
    case ValuationKind::ExplicitRank: return "explicit_rank";
    case ValuationKind::BinaryXos: return "binary_xos";
  }
  return "?";
}

Permutation::Permutation(std::vector<Good> forward) : forward_(std::move(forward)) {
  const int m = static_cast<int>(forward_.size());
  inverse_.assign(m, -1);
  for (Good g = 0; g < m; ++g) {
    Good t = forward_[g];
    if (t < 0 || t >= m || inverse_[t] != -1)
      throw InputError("permutation is not a bijection on [m]");
    inverse_[t] = g;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<Good> f(m);
  std::iota(f.begin(), f.end(), 0);
  return Permutation(std::move(f));
}

Permutation Permutation::transposition(int m, Good a, Good b) {
  auto p = identity(m);
  std::swap(p.forward_[a], p.forward_[b]);
  std::swap(p.inverse_[a], p.inverse_[b]);
  return p;
}

GoodSet Permutation::apply(GoodSet s) const {
  GoodSet out = 0;
  for_each_good(s, [&](Good g) { out |= bit(forward_[g]); });
  return out;
}

GoodSet Permutation::invert(GoodSet s) const {
  GoodSet out = 0;
  for_each_good(s, [&](Good g) { out |= bit(inverse_[g]); });
  return out;
}

Permutation Permutation::compose(const Permutation& p) const {
  if (p.m() != m()) throw InputError("permutation size mismatch");
  std::vector<Good> f(forward_.size());
  for (Good g = 0; g < m(); ++g) f[g] = forward_[p.forward_[g]];
  return Permutation(std::move(f));
}

Valuation::Valuation(int m, ValuationKind kind,
                     std::variant<Zero, Uniform, Partition, Graphic, ExplicitRank, BinaryXos> payload)
    : m_(m), kind_(kind), payload_(std::move(payload)) {
  if (m < 0 || m > 63) throw InputError("ground set size out of range");
}

Valuation Valuation::zero(int m) { return Valuation(m, ValuationKind::Zero, Zero{}); }

Valuation Valuation::uniform(int m, GoodSet ground, int cap) {
  if (ground & ~full_set(m)) throw InputError("uniform: ground set exceeds [m]");
  if (cap < 0) throw InputError("uniform: negative cap");
  return Valuation(m, ValuationKind::Uniform, Uniform{ground, cap});
}

Valuation Valuation::partition(int m, std::vector<std::pair<GoodSet, int>> parts) {
  GoodSet seen = 0;
  for (const auto& [goods, cap] : parts) {
    if (goods & ~full_set(m)) throw InputError("partition: part exceeds [m]");
    if (goods & seen) throw InputError("partition: parts overlap");
    if (cap < 0) throw InputError("partition: negative cap");
    seen |= goods;
  }
  return Valuation(m, ValuationKind::Partition, Partition{std::move(parts)});
}

Valuation Valuation::graphic(int m, int vertex_count,
                             std::vector<std::pair<int, int>> edge_of_good) {
  if (static_cast<int>(edge_of_good.size()) != m)
    throw InputError("graphic: need one edge per good");
  Graphic g;
  g.vertex_count = vertex_count;
  g.edge_of_good.reserve(m);
  for (auto [u, v] : edge_of_good) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw InputError("graphic: edge endpoint out of range");
    g.edge_of_good.emplace_back(std::make_pair(u, v));
  }
  return Valuation(m, ValuationKind::Graphic, std::move(g));
}

Valuation Valuation::explicit_rank(int m, std::vector<int> table) {
  if (m > kExplicitMaxGoods) throw InputError("explicit_rank: m exceeds table cap");
  if (table.size() != (size_t{1} << m)) throw InputError("explicit_rank: table size != 2^m");
  return Valuation(m, ValuationKind::ExplicitRank, ExplicitRank{std::move(table)});
}

Valuation Valuation::binary_xos(int m, std::vector<GoodSet> family) {
  for (GoodSet f : family)
    if (f & ~full_set(m)) throw InputError("binary_xos: family member exceeds [m]");
  return Valuation(m, ValuationKind::BinaryXos, BinaryXos{std::move(family)});
}

GoodSet Valuation::check(GoodSet s) const {
  if (s & ~full_set(m_)) throw InputError("good set exceeds [m]");
  return s;
}

namespace {

// Rank of an edge set in a graphic matroid: touched vertices minus connected
// components, via union-find.
int graphic_rank(const Valuation::Graphic& g, GoodSet s) {
  std::vector<int> parent(g.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int rank = 0;
  for_each_good(s, [&](Good good) {
    const auto& e = g.edge_of_good[good];
    if (!e) return;
    int ru = find(e->first), rv = find(e->second);
    if (ru != rv) {
      parent[ru] = rv;
      ++rank;
    }
  });
  return rank;
}

}  // namespace

int Valuation::rank(GoodSet s) const {
  check(s);
  switch (kind_) {
    case ValuationKind::Zero:
      return 0;
    case ValuationKind::Uniform: {
      const auto& u = std::get<Uniform>(payload_);
      return std::min(set_size(s & u.ground), u.cap);
    }
    case ValuationKind::Partition: {
      int total = 0;
      for (const auto& [goods, cap] : std::get<Partition>(payload_).parts)
        total += std::min(set_size(s & goods), cap);
      return total;
    }
    case ValuationKind::Graphic:
      return graphic_rank(std::get<Graphic>(payload_), s);
    case ValuationKind::ExplicitRank:
      return std::get<ExplicitRank>(payload_).table[s];
    case ValuationKind::BinaryXos: {
      int best = 0;
      for (GoodSet f : std::get<BinaryXos>(payload_).family)
        best = std::max(best, set_size(f & s));
      return best;
    }
  }
  return 0;
}

GoodSet Valuation::free_goods(GoodSet x) const {
  check(x);
  if (!is_matroid_kind()) throw UnsupportedKindError("free_goods: binary_xos has no augmentation guarantee");
  if (!is_independent(x)) throw PreconditionError("free_goods: X is not independent");
  const int base = set_size(x);
  GoodSet out = 0;
  for_each_good(full_set(m_) & ~x, [&](Good g) {
    if (rank(with(x, g)) == base + 1) out |= bit(g);
  });
  return out;
}

GoodSet Valuation::max_independent_subset(GoodSet s) const {
  check(s);
  if (!is_matroid_kind())
    throw UnsupportedKindError("max_independent_subset: greedy needs a matroid kind");
  GoodSet picked = 0;
  int r = 0;
  for_each_good(s, [&](Good g) {
    if (rank(with(picked, g)) == r + 1) {
      picked = with(picked, g);
      ++r;
    }
  });
  return picked;
}

Valuation Valuation::restrict(GoodSet x) const {
  check(x);
  switch (kind_) {
    case ValuationKind::Zero:
      return *this;
    case ValuationKind::Uniform: {
      const auto& u = std::get<Uniform>(payload_);
      return uniform(m_, u.ground & x, u.cap);
    }
    case ValuationKind::Partition: {
      std::vector<std::pair<GoodSet, int>> parts;
      for (const auto& [goods, cap] : std::get<Partition>(payload_).parts)
        parts.emplace_back(goods & x, cap);
      return partition(m_, std::move(parts));
    }
    case ValuationKind::Graphic: {
      Graphic g = std::get<Graphic>(payload_);
      for (Good good = 0; good < m_; ++good)
        if (!contains(x, good)) g.edge_of_good[good].reset();
      return Valuation(m_, ValuationKind::Graphic, std::move(g));
    }
    case ValuationKind::ExplicitRank: {
      const auto& table = std::get<ExplicitRank>(payload_).table;
      std::vector<int> restricted(table.size());
      for (GoodSet s = 0; s < table.size(); ++s) restricted[s] = table[s & x];
      return Valuation(m_, ValuationKind::ExplicitRank, ExplicitRank{std::move(restricted)});
    }
    case ValuationKind::BinaryXos: {
      std::vector<GoodSet> family;
      for (GoodSet f : std::get<BinaryXos>(payload_).family) family.push_back(f & x);
      return Valuation(m_, ValuationKind::BinaryXos, BinaryXos{std::move(family)});
    }
  }
  throw InternalInvariantError("restrict: unreachable");
}

Valuation Valuation::permute(const Permutation& p) const {
  if (p.m() != m_) throw InputError("permute: permutation size mismatch");
  switch (kind_) {
    case ValuationKind::Zero:
      return *this;
    case ValuationKind::Uniform: {
      const auto& u = std::get<Uniform>(payload_);
      return uniform(m_, p.apply(u.ground), u.cap);
    }
    case ValuationKind::Partition: {
      std::vector<std::pair<GoodSet, int>> parts;
      for (const auto& [goods, cap] : std::get<Partition>(payload_).parts)
        parts.emplace_back(p.apply(goods), cap);
      return partition(m_, std::move(parts));
    }
    case ValuationKind::Graphic: {
      const auto& old = std::get<Graphic>(payload_);
      Graphic g;
      g.vertex_count = old.vertex_count;
      g.edge_of_good.resize(m_);
      for (Good good = 0; good < m_; ++good)
        g.edge_of_good[p.apply(good)] = old.edge_of_good[good];
      return Valuation(m_, ValuationKind::Graphic, std::move(g));
    }
    case ValuationKind::ExplicitRank: {
      const auto& table = std::get<ExplicitRank>(payload_).table;
      std::vector<int> permuted(table.size());
      for (GoodSet s = 0; s < table.size(); ++s) permuted[s] = table[p.invert(s)];
      return Valuation(m_, ValuationKind::ExplicitRank, ExplicitRank{std::move(permuted)});
    }
    case ValuationKind::BinaryXos: {
      std::vector<GoodSet> family;
      for (GoodSet f : std::get<BinaryXos>(payload_).family) family.push_back(p.apply(f));
      return Valuation(m_, ValuationKind::BinaryXos, BinaryXos{std::move(family)});
    }
  }
  throw InternalInvariantError("permute: unreachable");
}

bool Valuation::equals_pointwise(const Valuation& other) const {
  if (other.m() != m_) return false;
  for (GoodSet s = 0; s <= full_set(m_); ++s)
    if (rank(s) != other.rank(s)) return false;
  return true;
}

bool validate_matroid_rank(const Valuation& v, int exhaustive_limit) {
  switch (v.kind()) {
    case ValuationKind::Zero:
    case ValuationKind::Uniform:
    case ValuationKind::Partition:
    case ValuationKind::Graphic:
      return true;  // structured kinds are matroid ranks by construction
    case ValuationKind::BinaryXos:
      return false;
    case ValuationKind::ExplicitRank:
      break;
  }
  const int m = v.m();
  if (m > exhaustive_limit)
    throw CapabilityError("validate_matroid_rank: cannot certify explicit table with m=" +
                          std::to_string(m) + " > limit " + std::to_string(exhaustive_limit));
  if (v.rank(kEmptySet) != 0) return false;
  const GoodSet all = full_set(m);
  for (GoodSet s = 0; s <= all; ++s) {
    int rs = v.rank(s);
    if (rs < 0 || rs > set_size(s)) return false;
    for (Good g = 0; g < m; ++g) {
      if (contains(s, g)) continue;
      int marginal_g = v.rank(with(s, g)) - rs;
      if (marginal_g < 0 || marginal_g > 1) return false;
      // Pairwise diminishing returns; equivalent to full submodularity for
      // set functions.
      for (Good h = 0; h < m; ++h) {
        if (h == g || contains(s, h)) continue;
        int marginal_g_after_h = v.rank(with(with(s, h), g)) - v.rank(with(s, h));
        if (marginal_g_after_h > marginal_g) return false;
      }
    }
  }
  return true;
}

}  // namespace fairdiv

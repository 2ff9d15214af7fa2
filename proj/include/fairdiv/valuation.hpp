#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fairdiv/errors.hpp"
#include "fairdiv/set_ops.hpp"

namespace fairdiv {

enum class ValuationKind { Zero, Uniform, Partition, Graphic, ExplicitRank, BinaryXos };

std::string kind_name(ValuationKind k);

// A bijection on [m]. forward(g) is the new id of good g.
class Permutation {
 public:
  explicit Permutation(std::vector<Good> forward);
  static Permutation identity(int m);
  static Permutation transposition(int m, Good a, Good b);

  int m() const { return static_cast<int>(forward_.size()); }
  Good apply(Good g) const { return forward_[g]; }
  Good invert(Good g) const { return inverse_[g]; }
  GoodSet apply(GoodSet s) const;
  GoodSet invert(GoodSet s) const;

  // q.compose(p) is q after p: (q o p)(g) = q(p(g)).
  Permutation compose(const Permutation& p) const;

  const std::vector<Good>& forward() const { return forward_; }

 private:
  std::vector<Good> forward_;
  std::vector<Good> inverse_;
};

// Valuation oracle over the ground set [m]. All kinds except BinaryXos are
// matroid rank functions by construction (ExplicitRank only after validation).
// Immutable after construction; all queries are pure.
class Valuation {
 public:
  struct Zero {};
  struct Uniform {
    GoodSet ground;
    int cap;
  };
  struct Partition {
    std::vector<std::pair<GoodSet, int>> parts;  // pairwise disjoint good sets
  };
  struct Graphic {
    int vertex_count;
    // edge_of_good[g] = endpoints, or nullopt if g carries no edge (arises
    // from restriction).
    std::vector<std::optional<std::pair<int, int>>> edge_of_good;
  };
  struct ExplicitRank {
    std::vector<int> table;  // indexed by subset bitmask, size 2^m
  };
  struct BinaryXos {
    std::vector<GoodSet> family;
  };

  static Valuation zero(int m);
  static Valuation uniform(int m, GoodSet ground, int cap);
  static Valuation partition(int m, std::vector<std::pair<GoodSet, int>> parts);
  static Valuation graphic(int m, int vertex_count,
                           std::vector<std::pair<int, int>> edge_of_good);
  static Valuation explicit_rank(int m, std::vector<int> table);
  static Valuation binary_xos(int m, std::vector<GoodSet> family);

  int m() const { return m_; }
  ValuationKind kind() const { return kind_; }
  bool is_matroid_kind() const { return kind_ != ValuationKind::BinaryXos; }

  int rank(GoodSet s) const;
  bool is_independent(GoodSet s) const { return rank(check(s)) == set_size(s); }

  // F(X): goods addable to the independent set X without breaking
  // independence. Matroid kinds only.
  GoodSet free_goods(GoodSet x) const;

  // Greedy (ascending good id) maximum independent subset of S. Matroid
  // kinds only; the exchange property makes the greedy result maximum.
  GoodSet max_independent_subset(GoodSet s) const;

  // w(S) = v(S & X). Kind-preserving.
  Valuation restrict(GoodSet x) const;
  Valuation remove_good(Good g) const { return restrict(without(full_set(m_), g)); }

  // w(S) = v(p^-1(S)): relabels good ids through p.
  Valuation permute(const Permutation& p) const;

  // Pointwise equality over all 2^m subsets (m small).
  bool equals_pointwise(const Valuation& other) const;

  template <typename T>
  const T& payload() const {
    return std::get<T>(payload_);
  }

  static constexpr int kExplicitMaxGoods = 16;

 private:
  Valuation(int m, ValuationKind kind,
            std::variant<Zero, Uniform, Partition, Graphic, ExplicitRank, BinaryXos> payload);
  GoodSet check(GoodSet s) const;

  int m_;
  ValuationKind kind_;
  std::variant<Zero, Uniform, Partition, Graphic, ExplicitRank, BinaryXos> payload_;
};

// Structured kinds certify by construction; explicit tables are checked
// exhaustively (monotone, binary marginals, pairwise submodular) when
// m <= exhaustive_limit. BinaryXos reports false.
bool validate_matroid_rank(const Valuation& v, int exhaustive_limit = Valuation::kExplicitMaxGoods);

}  // namespace fairdiv

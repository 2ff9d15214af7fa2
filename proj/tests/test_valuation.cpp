#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fairdiv/valuation.hpp"

using namespace fairdiv;

TEST_CASE("uniform rank caps at both ground and cap") {
  Valuation v = Valuation::uniform(6, from_vector({0, 1}), 2);
  CHECK(v.rank(from_vector({0, 1, 2, 3})) == 2);
  CHECK(v.rank(from_vector({0})) == 1);
  CHECK(v.rank(from_vector({2, 3, 4})) == 0);
  CHECK(v.is_independent(from_vector({0, 1})));
  CHECK_FALSE(v.is_independent(from_vector({0, 2})));
}

TEST_CASE("partition rank sums per-part minima") {
  Valuation v = Valuation::partition(6, {{from_vector({0, 1}), 1}, {from_vector({2, 3, 4, 5}), 2}});
  CHECK(v.rank(full_set(6)) == 3);
  CHECK(v.rank(from_vector({0, 1})) == 1);
  CHECK(v.rank(from_vector({2, 3, 4})) == 2);
  CHECK(v.rank(from_vector({1, 2})) == 2);
}

TEST_CASE("graphic rank is forest size") {
  Valuation v = Valuation::graphic(3, 3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(v.rank(full_set(3)) == 2);
  CHECK(v.is_independent(from_vector({0, 1})));
  CHECK_FALSE(v.is_independent(full_set(3)));
  Valuation parallel = Valuation::graphic(2, 2, {{0, 1}, {0, 1}});
  CHECK(parallel.rank(full_set(2)) == 1);
}

TEST_CASE("explicit table is queried directly") {
  Valuation v = Valuation::explicit_rank(2, {0, 1, 1, 2});
  CHECK(v.rank(0) == 0);
  CHECK(v.rank(from_vector({0, 1})) == 2);
}

TEST_CASE("binary xos takes the best family overlap") {
  Valuation v = Valuation::binary_xos(3, {from_vector({0, 1}), from_vector({2})});
  CHECK(v.rank(from_vector({0, 1, 2})) == 2);
  CHECK(v.rank(from_vector({2})) == 1);
  CHECK(v.rank(from_vector({0, 2})) == 1);
  CHECK_FALSE(v.is_matroid_kind());
}

TEST_CASE("free goods and greedy maximum independent subset") {
  Valuation v = Valuation::partition(4, {{from_vector({0, 1}), 1}, {from_vector({2, 3}), 1}});
  CHECK(v.free_goods(kEmptySet) == full_set(4));
  CHECK(v.free_goods(from_vector({0})) == from_vector({2, 3}));
  CHECK(v.max_independent_subset(full_set(4)) == from_vector({0, 2}));
}

TEST_CASE("restriction and removal are pointwise v(S & X)") {
  Valuation v = Valuation::uniform(4, full_set(4), 3);
  Valuation r = v.restrict(from_vector({0, 1}));
  CHECK(r.rank(full_set(4)) == 2);
  CHECK(r.rank(from_vector({2, 3})) == 0);
  Valuation d = v.remove_good(0);
  CHECK(d.rank(full_set(4)) == 3);
  CHECK(d.rank(from_vector({0})) == 0);
}

TEST_CASE("permutation relabels good ids") {
  Permutation p = Permutation::transposition(3, 0, 2);
  CHECK(p.apply(0) == 2);
  CHECK(p.invert(2) == 0);
  CHECK(p.apply(from_vector({0, 1})) == from_vector({1, 2}));
  Valuation v = Valuation::uniform(3, from_vector({0}), 1);
  Valuation w = v.permute(p);
  CHECK(w.rank(from_vector({2})) == 1);
  CHECK(w.rank(from_vector({0, 1})) == 0);
  CHECK(w.permute(p).equals_pointwise(v));
}

TEST_CASE("permutation composition") {
  Permutation p = Permutation::transposition(3, 0, 1);
  Permutation q = Permutation::transposition(3, 1, 2);
  Permutation qp = q.compose(p);
  CHECK(qp.apply(0) == 2);
  CHECK(qp.apply(1) == 0);
  CHECK(qp.apply(2) == 1);
}

TEST_CASE("matroid validation accepts rank tables and rejects impostors") {
  CHECK(validate_matroid_rank(Valuation::uniform(5, full_set(5), 2)));
  CHECK(validate_matroid_rank(Valuation::explicit_rank(2, {0, 1, 1, 2})));
  // Non-submodular: both marginals stay 1 after taking the other good.
  CHECK_FALSE(validate_matroid_rank(Valuation::explicit_rank(2, {0, 0, 0, 2})));
  // Non-monotone.
  CHECK_FALSE(validate_matroid_rank(Valuation::explicit_rank(2, {0, 1, 1, 0})));
  CHECK_FALSE(validate_matroid_rank(
      Valuation::binary_xos(3, {from_vector({0, 1}), from_vector({2})})));
}

TEST_CASE("restriction and permutation preserve the matroid property") {
  Valuation v = Valuation::graphic(4, 3, {{0, 1}, {1, 2}, {0, 2}, {0, 1}});
  CHECK(validate_matroid_rank(v.restrict(from_vector({0, 3}))));
  CHECK(validate_matroid_rank(v.permute(Permutation::transposition(4, 1, 3))));
}

#include "fairdiv/audits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "fairdiv/generator.hpp"
#include "fairdiv/json_io.hpp"

namespace fairdiv {

using nlohmann::json;

json DeviationWitness::to_json() const {
  return json{{"coalition", coalition},
              {"true_profile", instance_to_json(true_profile)},
              {"misreport_profile", instance_to_json(misreport_profile)},
              {"gains", gains}};
}

std::vector<Valuation> all_matroid_valuations(int m) {
  if (m < 0 || m > 4)
    throw CapabilityError("all_matroid_valuations: exhaustive enumeration only up to m=4");
  const int subsets = 1 << m;
  std::vector<Valuation> out;
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subsets); fam += 2) {
    auto member = [&](GoodSet s) { return (fam >> s) & 1; };
    bool ok = true;
    for (GoodSet s = 1; ok && s < static_cast<GoodSet>(subsets); ++s) {
      if (!member(s)) continue;
      for_each_good(s, [&](Good g) {
        if (!member(without(s, g))) ok = false;
      });
    }
    for (GoodSet s = 0; ok && s < static_cast<GoodSet>(subsets); ++s) {
      if (!member(s)) continue;
      for (GoodSet t = 0; ok && t < static_cast<GoodSet>(subsets); ++t) {
        if (!member(t) || set_size(s) >= set_size(t)) continue;
        bool extends = false;
        for_each_good(t & ~s, [&](Good g) {
          if (member(with(s, g))) extends = true;
        });
        if (!extends) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> table(subsets, 0);
    for (GoodSet s = 1; s < static_cast<GoodSet>(subsets); ++s) {
      if (member(s)) {
        table[s] = set_size(s);
      } else {
        int best = 0;
        for_each_good(s, [&](Good g) { best = std::max(best, table[without(s, g)]); });
        table[s] = best;
      }
    }
    out.push_back(Valuation::explicit_rank(m, std::move(table)));
  }
  return out;
}

namespace {

Permutation random_permutation(int m, std::mt19937_64& rng) {
  std::vector<Good> forward(m);
  std::iota(forward.begin(), forward.end(), 0);
  std::shuffle(forward.begin(), forward.end(), rng);
  return Permutation(std::move(forward));
}

Allocation run_checked(const Mechanism& f, const Instance& inst) {
  Allocation a = f.run(inst);
  validate_allocation(inst, a);
  return a;
}

}  // namespace

std::vector<Valuation> misreport_candidates(const Valuation& v, int m,
                                            const MisreportSpace& space) {
  std::vector<Valuation> out;
  out.push_back(Valuation::zero(m));
  std::mt19937_64 rng(space.seed);
  if (m <= 6) {
    for (GoodSet x = 0; x < full_set(m); ++x) out.push_back(v.restrict(x));
  } else {
    for (int k = 0; k < 32; ++k) out.push_back(v.restrict(rng() & full_set(m)));
    for (Good g = 0; g < m; ++g) out.push_back(v.remove_good(g));
  }
  if (m <= 6)
    for (Good a = 0; a < m; ++a)
      for (Good b = a + 1; b < m; ++b)
        out.push_back(v.permute(Permutation::transposition(m, a, b)));
  for (int k = 0; k < 8; ++k) {
    out.push_back(v.permute(random_permutation(m, rng)));
    out.push_back(random_valuation(m, rng));
  }
  if (space.exhaustive_explicit && m <= 4) {
    auto all = all_matroid_valuations(m);
    out.insert(out.end(), all.begin(), all.end());
  }
  if (static_cast<int>(out.size()) > space.trials)
    out.erase(out.begin() + std::max(space.trials, 0), out.end());
  return out;
}

std::optional<DeviationWitness> find_profitable_deviation(const Mechanism& f,
                                                          const Instance& inst, int i,
                                                          const MisreportSpace& space) {
  const Allocation a = run_checked(f, inst);
  const int base = inst.valuations[i].rank(a.bundles[i]);
  for (Valuation& cand : misreport_candidates(inst.valuations[i], inst.m, space)) {
    Instance misr = inst;
    misr.valuations[i] = std::move(cand);
    const Allocation b = run_checked(f, misr);
    const int got = inst.valuations[i].rank(b.bundles[i]);
    if (got > base) return DeviationWitness{{i}, inst, std::move(misr), {got - base}};
  }
  return std::nullopt;
}

std::optional<DeviationWitness> find_coalition_deviation(const Mechanism& f,
                                                         const Instance& inst,
                                                         int max_coalition,
                                                         const MisreportSpace& space) {
  const int n = inst.n();
  if (max_coalition > n) throw InputError("find_coalition_deviation: coalition larger than n");
  const Allocation a = run_checked(f, inst);
  for (int size = 1; size <= max_coalition; ++size) {
    std::vector<int> coalition(size);
    std::iota(coalition.begin(), coalition.end(), 0);
    while (true) {
      // Per-member candidate lists, trimmed so the joint product stays
      // within the trial budget.
      int per = std::max<int>(1, static_cast<int>(
          std::pow(static_cast<double>(std::max(space.trials, 1)), 1.0 / size)));
      std::vector<std::vector<Valuation>> lists;
      for (int j : coalition) {
        MisreportSpace member = space;
        member.trials = std::min(space.trials, per);
        lists.push_back(misreport_candidates(inst.valuations[j], inst.m, member));
      }
      std::vector<std::size_t> idx(size, 0);
      bool exhausted = false;
      for (auto& l : lists)
        if (l.empty()) exhausted = true;
      while (!exhausted) {
        Instance misr = inst;
        for (int k = 0; k < size; ++k) misr.valuations[coalition[k]] = lists[k][idx[k]];
        const Allocation b = run_checked(f, misr);
        std::vector<int> gains;
        bool all_gain = true;
        for (int j : coalition) {
          int d = inst.valuations[j].rank(b.bundles[j]) - inst.valuations[j].rank(a.bundles[j]);
          if (d <= 0) {
            all_gain = false;
            break;
          }
          gains.push_back(d);
        }
        if (all_gain) return DeviationWitness{coalition, inst, std::move(misr), std::move(gains)};
        int pos = 0;
        while (pos < size && ++idx[pos] == lists[pos].size()) idx[pos++] = 0;
        if (pos >= size) exhausted = true;
      }
      // Next lexicographic combination.
      int pos = size - 1;
      while (pos >= 0 && coalition[pos] == n - size + pos) --pos;
      if (pos < 0) break;
      ++coalition[pos];
      for (int k = pos + 1; k < size; ++k) coalition[k] = coalition[k - 1] + 1;
    }
  }
  return std::nullopt;
}

FairnessVerdict check_gradual(const Mechanism& f, const Instance& inst,
                              std::uint64_t superset_budget) {
  Mechanism g = f;
  std::string note;
  {
    const Allocation raw = run_checked(f, inst);
    if (!is_non_wasteful(inst, raw)) {
      g = cleanup_non_wasteful(f);
      note = "audited the non-wasteful cleanup of " + f.name;
    }
  }
  const Allocation a = run_checked(g, inst);
  auto fail = [&](const char* cond, int agent, json detail, int a_size, int b_size) {
    detail["condition"] = cond;
    detail["agent"] = agent;
    detail["a_size"] = a_size;
    detail["b_size"] = b_size;
    if (!note.empty()) detail["note"] = note;
    return FairnessVerdict::fail("gradual", detail.dump());
  };
  std::mt19937_64 rng(0);
  for (int i = 0; i < inst.n(); ++i) {
    const int a_size = set_size(a.bundles[i]);
    auto rerun = [&](const Valuation& v) {
      Instance prof = inst;
      prof.valuations[i] = v;
      return set_size(run_checked(g, prof).bundles[i]);
    };
    for (Good gd = 0; gd < inst.m; ++gd) {
      const int b_size = rerun(inst.valuations[i].remove_good(gd));
      if (a_size - b_size < 0 || a_size - b_size > 1)
        return fail("C1", i, json{{"good", gd}}, a_size, b_size);
    }
    const GoodSet comp = full_set(inst.m) & ~a.bundles[i];
    if ((std::uint64_t{1} << set_size(comp)) <= superset_budget) {
      for (GoodSet t = comp;; t = (t - 1) & comp) {
        const GoodSet x = a.bundles[i] | t;
        const int b_size = rerun(inst.valuations[i].restrict(x));
        if (b_size != a_size)
          return fail("C2", i, json{{"superset", goodset_to_json(x)}}, a_size, b_size);
        if (t == 0) break;
      }
    } else {
      for (int k = 0; k < 64; ++k) {
        const GoodSet x = a.bundles[i] | (rng() & comp);
        const int b_size = rerun(inst.valuations[i].restrict(x));
        if (b_size != a_size)
          return fail("C2", i, json{{"superset", goodset_to_json(x)}}, a_size, b_size);
      }
    }
    for (int k = 0; k < 20; ++k) {
      const GoodSet y = rng() & full_set(inst.m);
      const int b_size = rerun(inst.valuations[i].restrict(full_set(inst.m) & ~y));
      if (a_size - b_size < 0 || a_size - b_size > set_size(y))
        return fail("C1*", i, json{{"removed", goodset_to_json(y)}}, a_size, b_size);
    }
  }
  FairnessVerdict ok = FairnessVerdict::pass("gradual");
  ok.witness = note;
  return ok;
}

FairnessVerdict check_index_oblivious(const Mechanism& f, const Instance& inst, int trials,
                                      std::uint64_t seed) {
  const Allocation a = run_checked(f, inst);
  const ValueVector base = values(inst, a);
  std::vector<Permutation> perms;
  perms.push_back(Permutation::identity(inst.m));
  if (inst.m <= 6)
    for (Good x = 0; x < inst.m; ++x)
      for (Good y = x + 1; y < inst.m; ++y)
        perms.push_back(Permutation::transposition(inst.m, x, y));
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trials; ++k) perms.push_back(random_permutation(inst.m, rng));
  for (const Permutation& p : perms) {
    Instance relabeled = inst;
    for (auto& v : relabeled.valuations) v = v.permute(p);
    const Allocation b = run_checked(f, relabeled);
    for (int i = 0; i < inst.n(); ++i) {
      const int permuted = relabeled.valuations[i].rank(b.bundles[i]);
      if (base[i] != permuted)
        return FairnessVerdict::fail(
            "index-oblivious", json{{"permutation", p.forward()},
                                    {"agent", i},
                                    {"value", base[i]},
                                    {"permuted_value", permuted}}.dump());
    }
  }
  return FairnessVerdict::pass("index-oblivious");
}

namespace {

// The six-good, two-agent profile driving the impossibility replay.
Instance base_profile() {
  return Instance(6, {Valuation::uniform(6, from_vector({0, 1}), 2),
                      Valuation::partition(6, {{from_vector({0, 1}), 1},
                                               {from_vector({2, 3, 4, 5}), 2}})});
}

struct Executor {
  Mechanism g;
  json steps = json::array();

  json& step(const std::string& name, const Instance& prof, const Allocation& a) {
    steps.push_back(json{{"name", name},
                         {"profile", instance_to_json(prof)},
                         {"allocation", allocation_to_json(a)},
                         {"values", values(prof, a)},
                         {"checks", json::array()}});
    return steps.back();
  }

  ExecutorReport done(const std::string& violated, json witness) {
    json report{{"steps", steps}, {"violated", violated}, {"witness", witness}};
    return ExecutorReport{std::move(report), violated, std::move(witness)};
  }

  ExecutorReport mms_breach(const Instance& prof, const Allocation& a, int agent, int share) {
    return done("MMS", json{{"profile", instance_to_json(prof)},
                            {"allocation", allocation_to_json(a)},
                            {"agent", agent},
                            {"value", prof.valuations[agent].rank(a.bundles[agent])},
                            {"share", share}});
  }
};

}  // namespace

ExecutorReport run_impossibility_executor(const Mechanism& f) {
  Executor ex;
  // Proposition: every mechanism has a value-equivalent non-wasteful
  // counterpart, so the replay audits the cleanup wrapper throughout.
  ex.g = cleanup_non_wasteful(f);

  // Step 1: the base profile forces bundles ({a}, {b,c,d}) on any
  // maximin-fair non-wasteful mechanism.
  const Instance v = base_profile();
  const GoodSet g_pair = from_vector({0, 1});
  Allocation a1;
  try {
    a1 = run_checked(ex.g, v);
  } catch (const InternalInvariantError& e) {
    throw InputError(std::string("mechanism output malformed: ") + e.what());
  }
  json& s1 = ex.step("base-profile", v, a1);
  const ValueVector vals1 = values(v, a1);
  s1["checks"].push_back("maximin shares are (1, 3)");
  if (vals1[0] < 1) return ex.mms_breach(v, a1, 0, 1);
  if (vals1[1] < 3) return ex.mms_breach(v, a1, 1, 3);
  const GoodSet b1 = a1.bundles[0];
  const GoodSet b2 = a1.bundles[1];
  if (set_size(b1) != 1 || (b1 & ~g_pair) != kEmptySet || set_size(b2) != 3 ||
      set_size(b2 & g_pair) != 1)
    return ex.done("precondition-chain-broken",
                   json{{"allocation", allocation_to_json(a1)},
                        {"reason", "bundles do not take the forced shape ({a}, {b,c,d})"}});
  const Good good_a = lowest_good(b1);
  const Good good_b = lowest_good(b2 & g_pair);
  const GoodSet rest = b2 & ~g_pair;
  const Good good_c = lowest_good(rest);
  const Good good_d = lowest_good(without(rest, good_c));
  s1["checks"].push_back("bundle shape ({a}, {b,c,d}) confirmed");

  // Step 2: on the three reduced profiles the same bundles must persist,
  // by gradualness (x = b) and index-obliviousness (x = c, d).
  const Valuation w2 = Valuation::uniform(6, from_vector({good_b, good_c, good_d}), 3);
  const Instance wb(6, {Valuation::uniform(6, from_vector({good_a, good_b}), 2), w2});
  for (Good x : {good_b, good_c, good_d}) {
    const Instance wx(6, {Valuation::uniform(6, from_vector({good_a, x}), 2), w2});
    const Allocation ax = run_checked(ex.g, wx);
    json& s2 = ex.step("reduced-profile-" + std::to_string(x), wx, ax);
    if (ax.bundles[0] == b1 && ax.bundles[1] == b2) {
      s2["checks"].push_back("bundles unchanged");
      continue;
    }
    if (x == good_b) {
      if (set_size(ax.bundles[1]) != 3)
        return ex.done(
            "truthfulness",
            json{{"reason", "bundle-size stability under restriction to the own bundle fails, "
                            "so the mechanism cannot be truthful"},
                 {"base_profile", instance_to_json(v)},
                 {"restricted_profile", instance_to_json(wx)},
                 {"agent", 1},
                 {"a_size", 3},
                 {"b_size", set_size(ax.bundles[1])}});
      if (!is_non_wasteful(wx, ax))
        return ex.done("non-wasteful-equivalence",
                       json{{"profile", instance_to_json(wx)},
                            {"allocation", allocation_to_json(ax)}});
      return ex.mms_breach(wx, ax, 0, 1);
    }
    return ex.done("index-oblivious",
                   json{{"base_profile", instance_to_json(wb)},
                        {"permutation_swaps", json::array({good_b, x})},
                        {"expected_values", json::array({1, 3})},
                        {"actual_values", values(wx, ax)}});
  }

  // Step 3: against the four-good misreport the mechanism owes agent 0 a
  // value of 2 and, by local efficiency, good a.
  const Valuation wstar =
      Valuation::uniform(6, from_vector({good_a, good_b, good_c, good_d}), 4);
  const Instance star(6, {wstar, w2});
  const Allocation astar = run_checked(ex.g, star);
  json& s3 = ex.step("misreport-profile", star, astar);
  const int share1 = mms_share(star, 0);
  s3["checks"].push_back("agent 0 maximin share is " + std::to_string(share1));
  if (wstar.rank(astar.bundles[0]) < share1) return ex.mms_breach(star, astar, 0, share1);
  if (!contains(astar.bundles[0], good_a))
    return ex.done("locally-efficient",
                   json{{"profile", instance_to_json(star)},
                        {"allocation", allocation_to_json(astar)},
                        {"good", good_a},
                        {"agent", 0}});
  const GoodSet y_pool =
      astar.bundles[0] & from_vector({good_b, good_c, good_d});
  if (y_pool == kEmptySet)
    return ex.done("precondition-chain-broken",
                   json{{"allocation", allocation_to_json(astar)},
                        {"reason", "agent 0 holds no good from {b,c,d}"}});
  const Good good_y = lowest_good(y_pool);
  s3["checks"].push_back("good y = " + std::to_string(good_y));

  // Step 4: with true valuation w^y the agent got value 1, yet misreporting
  // the four-good valuation yields both a and y.
  const Instance truth(6, {Valuation::uniform(6, from_vector({good_a, good_y}), 2), w2});
  DeviationWitness w{{0}, truth, star, {truth.valuations[0].rank(astar.bundles[0]) - 1}};
  return ex.done("truthfulness", w.to_json());
}

}  // namespace fairdiv

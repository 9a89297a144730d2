#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "isg/analyzer.hpp"
#include "isg/error.hpp"
#include "isg/fuzzy.hpp"

using namespace isg;
using namespace isg::testing;

namespace {

// Brute-force subset oracles: every check below walks all 2^|S| subsets with
// plain loops, independent of the analyzer's search strategy.

bool brute_is_ideal(const FiniteSemigroup& s, const std::vector<int>& t) {
  for (int a = 0; a < static_cast<int>(s.size()); ++a)
    for (int x : t) {
      if (!std::binary_search(t.begin(), t.end(), s.op(a, x))) return false;
      if (!std::binary_search(t.begin(), t.end(), s.op(x, a))) return false;
    }
  return true;
}

bool brute_is_group(const FiniteSemigroup& s, const std::vector<int>& t) {
  for (int a : t)
    for (int b : t)
      if (!std::binary_search(t.begin(), t.end(), s.op(a, b))) return false;
  for (int e : t) {
    bool ident = true;
    for (int a : t)
      if (s.op(e, a) != a || s.op(a, e) != a) ident = false;
    if (!ident) continue;
    for (int a : t) {
      bool inv = false;
      for (int b : t)
        if (s.op(a, b) == e && s.op(b, a) == e) inv = true;
      if (!inv) return false;
    }
    return true;
  }
  return false;
}

std::vector<std::vector<int>> all_subsets_passing(const FiniteSemigroup& s,
                                                  bool (*pred)(const FiniteSemigroup&,
                                                               const std::vector<int>&)) {
  int n = static_cast<int>(s.size());
  std::vector<std::vector<int>> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < n; ++b)
      if (mask & (1 << b)) subset.push_back(b);
    if (pred(s, subset)) out.push_back(subset);
  }
  return out;
}

std::vector<SemigroupSpec> sample_specs(int want, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<SemigroupSpec> out;
  std::uniform_int_distribution<int> mod_pick(2, 12), small_mod(2, 3), kind_pick(0, 9),
      k_pick(1, 3);
  auto add_or_mul = [&]() { return rng() % 2 ? OpKind::add : OpKind::mul; };
  while (static_cast<int>(out.size()) < want) {
    SemigroupSpec spec;
    switch (kind_pick(rng)) {
      case 0: spec = interval_spec(CoefficientDomain::mod(mod_pick(rng)), add_or_mul()); break;
      case 1:
        spec = interval_spec(CoefficientDomain::pure_neutro_mod(mod_pick(rng)), add_or_mul());
        break;
      case 2:
        spec = interval_spec(CoefficientDomain::neutro_mod(small_mod(rng)), add_or_mul());
        break;
      case 3: spec = row_spec(CoefficientDomain::mod(small_mod(rng)), 2, add_or_mul()); break;
      case 4:
        spec = monomial_spec(CoefficientDomain::pure_neutro_mod(small_mod(rng)), k_pick(rng),
                             UnitKind::I);
        break;
      case 5:
        spec = monomial_spec(CoefficientDomain::neutro_mod(2), k_pick(rng), UnitKind::one);
        break;
      case 6: spec = tmap_spec(2, rng() % 2 == 0); break;
      case 7: spec = poly_cyclic_spec(CoefficientDomain::mod(2), k_pick(rng), add_or_mul()); break;
      case 8: {
        spec = interval_spec(CoefficientDomain::mod(rng() % 2 ? 5 : 7), OpKind::mul,
                             /*exclude_zero=*/true);
        break;
      }
      default: {
        SemigroupSpec f;
        f.domain = CoefficientDomain::fuzzy_unit();
        f.carrier.kind = CarrierKind::fuzzy_family;
        f.carrier.ratio = mpq_class(1, 2 + static_cast<int>(rng() % 3));
        f.carrier.n_max = static_cast<int>(rng() % 11);
        f.op = rng() % 2 ? OpKind::min : OpKind::max;
        spec = f;
        break;
      }
    }
    try {
      auto s = FiniteSemigroup::build(spec);
      if (s.size() >= 2 && s.size() <= 12) out.push_back(spec);
    } catch (const error&) {
      // non-finite or non-closed draw; resample
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ideal enumeration and subgroup discovery agree with brute force on 50 random specs") {
  auto specs = sample_specs(50, 20240817);
  for (const auto& spec : specs) {
    auto s = FiniteSemigroup::build(spec);
    CAPTURE(s.spec().domain.name());
    CAPTURE(s.size());

    // (a) Ideals: brute-force subset search vs unions of principal ideals.
    auto brute_ideals = all_subsets_passing(s, brute_is_ideal);
    auto lattice = enumerate_ideals(s, s.spec().limits);
    std::set<std::vector<int>> from_analyzer(lattice.principal.begin(), lattice.principal.end());
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<std::vector<int>> current(from_analyzer.begin(), from_analyzer.end());
      for (const auto& a : current)
        for (const auto& b : lattice.principal) {
          std::vector<int> u;
          std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
          if (from_analyzer.insert(u).second) grew = true;
        }
    }
    std::set<std::vector<int>> from_brute(brute_ideals.begin(), brute_ideals.end());
    CHECK(from_analyzer == from_brute);
    REQUIRE(lattice.all_ideal_count);
    CHECK(*lattice.all_ideal_count == from_brute.size());
    bool brute_proper = false;
    for (const auto& t : brute_ideals)
      if (t.size() < s.size()) brute_proper = true;
    CHECK(lattice.has_proper_ideal == brute_proper);

    // (b) Subgroups: every brute-force subgroup lies in the maximal subgroup
    // at its idempotent, and the order sets match exactly.
    auto brute_groups = all_subsets_passing(s, brute_is_group);
    auto orders = subgroup_order_set(s, s.spec().limits.subgroup_exact_cap);
    CHECK(orders.exact);
    std::set<long> brute_orders;
    for (const auto& g : brute_groups) {
      brute_orders.insert(static_cast<long>(g.size()));
      int e = -1;
      for (int cand : g) {
        bool ident = true;
        for (int a : g)
          if (s.op(cand, a) != a || s.op(a, cand) != a) ident = false;
        if (ident) e = cand;
      }
      REQUIRE(e >= 0);
      auto h = maximal_subgroup_at(s, e);
      CHECK(std::includes(h.begin(), h.end(), g.begin(), g.end()));
    }
    CHECK(orders.orders == brute_orders);
  }
}

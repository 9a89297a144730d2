#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg {

struct MonogenicProfile {
  int index = 0;   // least i >= 1 with x^(i+p) = x^i
  int period = 0;  // least such p >= 1
  std::optional<long> order_rel_identity;  // least t >= 1 with x^t = identity
};

MonogenicProfile monogenic_profile(const FiniteSemigroup& s, int x);

struct SpecialElements {
  std::vector<int> idempotents;
  std::vector<int> nilpotents;              // empty-with-note when no zero
  std::vector<int> units;                   // empty-with-note when no identity
  std::vector<std::pair<int, int>> zero_divisor_pairs;  // capped listing
  std::size_t zero_divisor_total = 0;       // exact count of ordered pairs
  std::vector<std::string> notes;
};

SpecialElements special_elements(const FiniteSemigroup& s, const AnalyzerLimits& limits);

/// Least superset of seed closed under the operation, sorted.
std::vector<int> closure_of(const FiniteSemigroup& s, const std::vector<int>& seed);

/// Subsemigroup test for an explicit subset (sorted or not).
bool is_subsemigroup(const FiniteSemigroup& s, const std::vector<int>& subset);

enum class Side { left, right, two_sided };

struct IdealCheck {
  bool ok = false;
  std::optional<std::pair<int, int>> witness;  // (s, t) with the product outside T
};

IdealCheck is_ideal(const FiniteSemigroup& s, const std::vector<int>& subset, Side side);

struct IdealLattice {
  std::vector<std::vector<int>> principal;  // distinct principal ideals, sorted sets
  std::vector<int> principal_generator;     // canonical generator per ideal
  std::vector<std::size_t> minimal;         // indices into principal
  bool has_proper_ideal = false;
  std::optional<std::size_t> all_ideal_count;  // unions of principal ideals
  std::vector<std::string> notes;
};

IdealLattice enumerate_ideals(const FiniteSemigroup& s, const AnalyzerLimits& limits);

/// Largest subgroup with identity e (e idempotent); group axioms verified.
std::vector<int> maximal_subgroup_at(const FiniteSemigroup& s, int e);

/// True when subset forms a group under the induced operation.
bool is_subgroup(const FiniteSemigroup& s, const std::vector<int>& subset);

struct MaximalSubgroup {
  int idempotent = 0;
  std::vector<int> elements;
};

struct SubgroupOrders {
  std::set<long> orders;
  bool exact = false;
  std::vector<MaximalSubgroup> maximal;
  std::vector<std::string> notes;
};

SubgroupOrders subgroup_order_set(const FiniteSemigroup& s, std::size_t exact_cap);

struct SylowClass {
  long order = 0;  // the prime power p^a
  long prime = 0;
  std::string cls;  // "sylow", "non_sylow" or "undetermined"
};

struct SmarandacheFlags {
  bool is_s_semigroup = false;
  bool is_s_lagrange = false;
  bool is_s_weakly_lagrange = false;
  std::vector<SylowClass> s_p_sylow;
  std::vector<int> s_cauchy_elements;
  bool has_s_hyper_subsemigroup = false;
  std::optional<std::vector<int>> hyper_witness;
  bool is_simple = false;
  bool is_doubly_simple = false;
  std::vector<std::string> notes;
};

SmarandacheFlags smarandache_report(const FiniteSemigroup& s, const AnalyzerLimits& limits,
                                    const SubgroupOrders& subgroups, const IdealLattice& ideals);

struct CosetResult {
  std::vector<int> coset;        // xH or Hx, sorted
  std::vector<int> stable;       // all x in S with xH = Hx = H
  std::vector<int> exceptional;  // the rest
};

CosetResult cosets(const FiniteSemigroup& s, const std::vector<int>& subgroup, int x, Side side);

struct StructureReport {
  std::size_t order = 0;
  bool is_commutative = false;
  std::optional<int> identity;
  std::optional<int> zero;
  SpecialElements special;
  SubgroupOrders subgroups;
  IdealLattice ideals;
  SmarandacheFlags smarandache;
  std::vector<std::string> method_notes;
};

StructureReport analyze(const FiniteSemigroup& s);

}  // namespace isg

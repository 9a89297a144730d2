#pragma once

#include <map>
#include <string>
#include <vector>

#include "isg/analyzer.hpp"
#include "isg/semigroup.hpp"

namespace isg {

/// Geometric family {[0, r^n] : 0 <= n <= n_max} of fuzzy intervals.
struct FuzzyFamilySpec {
  mpq_class ratio;  // in (0, 1]
  int n_max = 0;
};

/// Builds the family as a finite min- or max-semigroup ready for the
/// structure analyzer.
FiniteSemigroup fuzzy_family_build(const FuzzyFamilySpec& spec, OpKind op,
                                   const AnalyzerLimits& limits = {});

/// Ideal test on a min/max semigroup (one- and two-sided coincide).
IdealCheck fuzzy_ideal_check(const FiniteSemigroup& s, const std::vector<int>& subset);

/// Explicit table form: element label -> value in [0, 1].
using SpecialFuzzyMapTable = std::map<std::string, mpq_class>;

/// Membership map mu : S -> [0,1], stored per element index.
struct SpecialFuzzyMap {
  std::vector<mpq_class> values;

  /// mu([0,x]) = 1/x for x != 0, 1 for x = 0. Defined on interval carriers
  /// whose nonzero endpoints are >= 1.
  static SpecialFuzzyMap reciprocal_or_one(const FiniteSemigroup& s);
  static SpecialFuzzyMap from_table(const FiniteSemigroup& s, const SpecialFuzzyMapTable& table);
};

enum class FuzzyLawMode { eq, ge, le };

struct FuzzyLawReport {
  bool eq_holds = true;
  bool ge_holds = true;
  bool le_holds = true;
  FuzzyLawMode mode = FuzzyLawMode::eq;
  std::vector<std::pair<int, int>> violations;  // for the requested mode, capped
  std::size_t violation_total = 0;
};

/// Checks mu(op(x,y)) <mode> min(mu(x), mu(y)) over every ordered pair.
FuzzyLawReport special_fuzzy_map_check(const FiniteSemigroup& s, const SpecialFuzzyMap& mu,
                                       FuzzyLawMode mode, std::size_t list_cap = 256);

}  // namespace isg

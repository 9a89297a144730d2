#include "isg/fuzzy.hpp"

#include "isg/error.hpp"

namespace isg {

FiniteSemigroup fuzzy_family_build(const FuzzyFamilySpec& fspec, OpKind op,
                                   const AnalyzerLimits& limits) {
  SemigroupSpec spec;
  spec.domain = CoefficientDomain::fuzzy_unit();
  spec.carrier.kind = CarrierKind::fuzzy_family;
  spec.carrier.ratio = fspec.ratio;
  spec.carrier.n_max = fspec.n_max;
  spec.op = op;
  spec.limits = limits;
  return FiniteSemigroup::build(spec);
}

IdealCheck fuzzy_ideal_check(const FiniteSemigroup& s, const std::vector<int>& subset) {
  return is_ideal(s, subset, Side::two_sided);
}

SpecialFuzzyMap SpecialFuzzyMap::reciprocal_or_one(const FiniteSemigroup& s) {
  SpecialFuzzyMap mu;
  mu.values.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    const auto* iv = std::get_if<Interval>(&s.element(static_cast<int>(i)));
    if (!iv) raise(errc::invalid_input, "reciprocal map needs an interval carrier");
    if (iv->upper.neutro != 0)
      raise(errc::invalid_input, "reciprocal map needs neutrosophic-free endpoints");
    const mpq_class& x = iv->upper.real;
    if (x == 0) {
      mu.values.emplace_back(1);
    } else {
      if (x < 1)
        raise(errc::invalid_input, "reciprocal of " + render_rational(x) + " leaves [0, 1]");
      mu.values.emplace_back(1 / x);
    }
  }
  return mu;
}

SpecialFuzzyMap SpecialFuzzyMap::from_table(const FiniteSemigroup& s,
                                            const SpecialFuzzyMapTable& by_label) {
  SpecialFuzzyMap mu;
  mu.values.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    auto it = by_label.find(s.label(static_cast<int>(i)));
    if (it == by_label.end())
      raise(errc::invalid_input, "fuzzy map is not total: no value for " +
                                     s.label(static_cast<int>(i)));
    if (it->second < 0 || it->second > 1)
      raise(errc::invalid_input, "fuzzy map value " + render_rational(it->second) +
                                     " outside [0, 1]");
    mu.values.push_back(it->second);
  }
  return mu;
}

FuzzyLawReport special_fuzzy_map_check(const FiniteSemigroup& s, const SpecialFuzzyMap& mu,
                                       FuzzyLawMode mode, std::size_t list_cap) {
  if (mu.values.size() != s.size())
    raise(errc::invalid_input, "fuzzy map is not total on the semigroup");
  FuzzyLawReport out;
  out.mode = mode;
  int n = static_cast<int>(s.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const mpq_class& lhs = mu.values[static_cast<size_t>(s.op(x, y))];
      const mpq_class& rhs = std::min(mu.values[static_cast<size_t>(x)],
                                      mu.values[static_cast<size_t>(y)]);
      bool eq = lhs == rhs;
      bool ge = lhs >= rhs;
      bool le = lhs <= rhs;
      out.eq_holds &= eq;
      out.ge_holds &= ge;
      out.le_holds &= le;
      bool violated = (mode == FuzzyLawMode::eq && !eq) || (mode == FuzzyLawMode::ge && !ge) ||
                      (mode == FuzzyLawMode::le && !le);
      if (violated) {
        ++out.violation_total;
        if (out.violations.size() < list_cap) out.violations.emplace_back(x, y);
      }
    }
  return out;
}

}  // namespace isg

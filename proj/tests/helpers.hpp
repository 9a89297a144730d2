#pragma once

#include <string>
#include <vector>

#include "isg/semigroup.hpp"

namespace isg::testing {

inline SemigroupSpec interval_spec(const CoefficientDomain& d, OpKind op,
                                   bool exclude_zero = false) {
  SemigroupSpec spec;
  spec.domain = d;
  spec.carrier.kind = CarrierKind::interval;
  spec.op = op;
  spec.exclude_zero = exclude_zero;
  return spec;
}

inline SemigroupSpec row_spec(const CoefficientDomain& d, int len, OpKind op,
                              bool constant = false, bool exclude_zero = false) {
  SemigroupSpec spec;
  spec.domain = d;
  spec.carrier.kind = CarrierKind::row_matrix;
  spec.carrier.len = len;
  spec.carrier.constant = constant;
  spec.op = op;
  spec.exclude_zero = exclude_zero;
  return spec;
}

inline SemigroupSpec monomial_spec(const CoefficientDomain& d, long k, UnitKind unit) {
  SemigroupSpec spec;
  spec.domain = d;
  spec.carrier.kind = CarrierKind::monomial;
  spec.carrier.k = k;
  spec.carrier.unit = unit;
  spec.op = OpKind::mul;
  return spec;
}

inline SemigroupSpec poly_cyclic_spec(const CoefficientDomain& d, long k, OpKind op,
                                      UnitKind unit = UnitKind::one) {
  SemigroupSpec spec;
  spec.domain = d;
  spec.carrier.kind = CarrierKind::polynomial_cyclic;
  spec.carrier.k = k;
  spec.carrier.unit = unit;
  spec.op = op;
  return spec;
}

inline SemigroupSpec tmap_spec(int n, bool bijections_only = false) {
  SemigroupSpec spec;
  spec.domain = CoefficientDomain::nonneg_int();
  spec.carrier.kind = bijections_only ? CarrierKind::permutations : CarrierKind::full_transformation;
  spec.carrier.n = n;
  spec.op = OpKind::mul;
  return spec;
}

inline int must_index(const FiniteSemigroup& s, const std::string& label) {
  for (size_t i = 0; i < s.size(); ++i)
    if (s.label(static_cast<int>(i)) == label) return static_cast<int>(i);
  throw std::runtime_error("label not found: " + label);
}

inline std::vector<int> indices_of(const FiniteSemigroup& s,
                                   const std::vector<std::string>& labels) {
  std::vector<int> out;
  for (const auto& l : labels) out.push_back(must_index(s, l));
  return out;
}

inline std::vector<std::string> labels_of(const FiniteSemigroup& s, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(s.label(i));
  return out;
}

}  // namespace isg::testing

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isg/interval.hpp"

namespace isg {

enum class UnitKind { one, I };

/// Quotient identification x^k = 1 (or x^k = I on pure-neutrosophic
/// domains). Exponents reduce mod k.
struct CyclicRule {
  long k = 0;
  UnitKind unit = UnitKind::one;
};

/// Polynomial with interval coefficients; zero coefficients are never
/// stored, the zero polynomial has an empty map.
struct IntervalPolynomial {
  CoefficientDomain domain;
  std::map<long, DomainElement> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }

  bool operator==(const IntervalPolynomial& o) const {
    return domain == o.domain && coeffs == o.coeffs;
  }
};

IntervalPolynomial make_polynomial(const CoefficientDomain& d,
                                   const std::map<long, DomainElement>& coeffs);
IntervalPolynomial make_polynomial(const CoefficientDomain& d,
                                   const std::map<long, std::string>& coeff_texts);

void validate_rule(const CoefficientDomain& d, const CyclicRule& rule);

IntervalPolynomial poly_add(const IntervalPolynomial& p, const IntervalPolynomial& q);
IntervalPolynomial poly_mul(const IntervalPolynomial& p, const IntervalPolynomial& q,
                            const std::optional<CyclicRule>& rule = std::nullopt);

/// {0} u {[0,c] x^i : c nonzero, 0 <= i < k}, closed under poly_mul with the
/// rule; order (|d|-1)*k + 1. Listed zero first, then exponent-major.
std::vector<IntervalPolynomial> monomial_semigroup(const CoefficientDomain& d,
                                                   const CyclicRule& rule, size_t cap);

/// All |d|^k polynomials of degree < k, closed under poly_mul with x^k = 1.
std::vector<IntervalPolynomial> full_cyclic_poly_semigroup(const CoefficientDomain& d, long k,
                                                           size_t cap);

std::string render_polynomial(const IntervalPolynomial& p);

}  // namespace isg

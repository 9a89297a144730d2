#pragma once

#include <string>

#include "isg/domain.hpp"

namespace isg {

/// The basic object [0, a]: a wrapper around one endpoint from a coefficient
/// domain. All arithmetic acts on the endpoint.
struct Interval {
  CoefficientDomain domain;
  DomainElement upper;

  bool operator==(const Interval& o) const { return domain == o.domain && upper == o.upper; }
};

Interval make_interval(const CoefficientDomain& d, const DomainElement& upper);
Interval make_interval(const CoefficientDomain& d, const std::string& upper_text);

Interval interval_add(const Interval& x, const Interval& y);
Interval interval_mul(const Interval& x, const Interval& y);
/// Exponentiation by squaring; equals the k-fold interval_mul fold.
Interval interval_pow(const Interval& x, unsigned long k);

enum class LatticeOp { min, max };
Interval interval_lattice(LatticeOp op, const Interval& x, const Interval& y);

/// Rendered exactly as `[0, a]`.
std::string render_interval(const Interval& x);

}  // namespace isg

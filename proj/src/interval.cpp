#include "isg/interval.hpp"

#include "isg/error.hpp"

namespace isg {

namespace {
void require_same_domain(const Interval& x, const Interval& y) {
  if (!(x.domain == y.domain))
    raise(errc::invalid_input,
          "domain mismatch: " + x.domain.name() + " vs " + y.domain.name());
}
}  // namespace

Interval make_interval(const CoefficientDomain& d, const DomainElement& upper) {
  dom_require(d, upper);
  return {d, upper};
}

Interval make_interval(const CoefficientDomain& d, const std::string& upper_text) {
  return {d, parse_element(d, upper_text)};
}

Interval interval_add(const Interval& x, const Interval& y) {
  require_same_domain(x, y);
  return {x.domain, dom_add(x.domain, x.upper, y.upper)};
}

Interval interval_mul(const Interval& x, const Interval& y) {
  require_same_domain(x, y);
  return {x.domain, dom_mul(x.domain, x.upper, y.upper)};
}

Interval interval_pow(const Interval& x, unsigned long k) {
  if (k == 0) return {x.domain, dom_one(x.domain)};  // raises when there is no unit
  Interval acc = x;
  Interval base = x;
  --k;
  while (k > 0) {
    if (k & 1) acc = interval_mul(acc, base);
    k >>= 1;
    if (k > 0) base = interval_mul(base, base);
  }
  return acc;
}

Interval interval_lattice(LatticeOp op, const Interval& x, const Interval& y) {
  require_same_domain(x, y);
  DomainElement r = op == LatticeOp::min ? dom_min(x.domain, x.upper, y.upper)
                                         : dom_max(x.domain, x.upper, y.upper);
  return {x.domain, r};
}

std::string render_interval(const Interval& x) {
  return "[0, " + render_element(x.domain, x.upper) + "]";
}

}  // namespace isg

#include "isg/polynomial.hpp"

#include "isg/error.hpp"

namespace isg {

namespace {
void require_same_domain(const IntervalPolynomial& p, const IntervalPolynomial& q) {
  if (!(p.domain == q.domain))
    raise(errc::invalid_input, "domain mismatch: " + p.domain.name() + " vs " + q.domain.name());
}

void set_coeff(IntervalPolynomial& p, long e, const DomainElement& v) {
  if (v == dom_zero(p.domain))
    p.coeffs.erase(e);
  else
    p.coeffs[e] = v;
}

void add_coeff(IntervalPolynomial& p, long e, const DomainElement& v) {
  auto it = p.coeffs.find(e);
  if (it == p.coeffs.end()) {
    set_coeff(p, e, v);
  } else {
    set_coeff(p, e, dom_add(p.domain, it->second, v));
  }
}
}  // namespace

IntervalPolynomial make_polynomial(const CoefficientDomain& d,
                                   const std::map<long, DomainElement>& coeffs) {
  IntervalPolynomial p{d, {}};
  for (const auto& [e, v] : coeffs) {
    if (e < 0) raise(errc::invalid_input, "negative exponent " + std::to_string(e));
    dom_require(d, v);
    set_coeff(p, e, v);
  }
  return p;
}

IntervalPolynomial make_polynomial(const CoefficientDomain& d,
                                   const std::map<long, std::string>& coeff_texts) {
  std::map<long, DomainElement> coeffs;
  for (const auto& [e, t] : coeff_texts) coeffs[e] = parse_element(d, t);
  return make_polynomial(d, coeffs);
}

void validate_rule(const CoefficientDomain& d, const CyclicRule& rule) {
  if (rule.k < 1) raise(errc::invalid_input, "cyclic rule requires k >= 1");
  if (rule.unit == UnitKind::I && !d.is_pure_neutrosophic())
    raise(errc::invalid_input, "x^k = I requires a pure-neutrosophic domain, not " + d.name());
}

IntervalPolynomial poly_add(const IntervalPolynomial& p, const IntervalPolynomial& q) {
  require_same_domain(p, q);
  IntervalPolynomial r = p;
  for (const auto& [e, v] : q.coeffs) add_coeff(r, e, v);
  return r;
}

IntervalPolynomial poly_mul(const IntervalPolynomial& p, const IntervalPolynomial& q,
                            const std::optional<CyclicRule>& rule) {
  require_same_domain(p, q);
  if (!p.domain.has_mul()) raise(errc::unsupported, p.domain.name() + " has no multiplication");
  if (rule) validate_rule(p.domain, *rule);
  IntervalPolynomial r{p.domain, {}};
  for (const auto& [ep, vp] : p.coeffs)
    for (const auto& [eq, vq] : q.coeffs) {
      long e = ep + eq;
      if (rule) e %= rule->k;
      // With x^k = I the wrapped term carries a factor I, which is the
      // multiplicative unit of pure-neutrosophic coefficients.
      add_coeff(r, e, dom_mul(p.domain, vp, vq));
    }
  return r;
}

std::vector<IntervalPolynomial> monomial_semigroup(const CoefficientDomain& d,
                                                   const CyclicRule& rule, size_t cap) {
  if (!d.is_finite()) raise(errc::unsupported, "monomial semigroup needs a finite domain");
  validate_rule(d, rule);
  size_t required = (d.size() - 1) * static_cast<size_t>(rule.k) + 1;
  if (required > cap)
    raise(errc::resource_cap, "monomial semigroup requires " + std::to_string(required) +
                                  " elements, cap is " + std::to_string(cap));
  std::vector<IntervalPolynomial> out;
  out.reserve(required);
  out.push_back(IntervalPolynomial{d, {}});
  auto elems = dom_enumerate(d);
  for (long i = 0; i < rule.k; ++i)
    for (const auto& c : elems) {
      if (c == dom_zero(d)) continue;
      IntervalPolynomial p{d, {}};
      p.coeffs[i] = c;
      out.push_back(std::move(p));
    }
  return out;
}

std::vector<IntervalPolynomial> full_cyclic_poly_semigroup(const CoefficientDomain& d, long k,
                                                           size_t cap) {
  if (!d.is_finite()) raise(errc::unsupported, "cyclic polynomial semigroup needs a finite domain");
  if (k < 1) raise(errc::invalid_input, "cyclic polynomial semigroup requires k >= 1");
  mpz_class required_z;
  mpz_ui_pow_ui(required_z.get_mpz_t(), d.size(), static_cast<unsigned long>(k));
  if (required_z > cap)
    raise(errc::resource_cap, "cyclic polynomial semigroup requires " + required_z.get_str() +
                                  " elements, cap is " + std::to_string(cap));
  size_t required = required_z.get_ui();
  auto elems = dom_enumerate(d);
  std::vector<IntervalPolynomial> out;
  out.reserve(required);
  std::vector<size_t> digits(static_cast<size_t>(k), 0);
  for (size_t count = 0; count < required; ++count) {
    IntervalPolynomial p{d, {}};
    for (long e = 0; e < k; ++e) {
      const DomainElement& c = elems[digits[static_cast<size_t>(e)]];
      if (!(c == dom_zero(d))) p.coeffs[e] = c;
    }
    out.push_back(std::move(p));
    for (size_t pos = 0; pos < digits.size(); ++pos) {
      if (++digits[pos] < elems.size()) break;
      digits[pos] = 0;
    }
  }
  return out;
}

std::string render_polynomial(const IntervalPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [e, v] : p.coeffs) {
    if (!s.empty()) s += " + ";
    s += render_interval(Interval{p.domain, v});
    if (e == 1)
      s += "x";
    else if (e > 1)
      s += "x^" + std::to_string(e);
  }
  return s;
}

}  // namespace isg

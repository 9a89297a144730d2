#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace isg {

/// Coefficient domains for interval endpoints. Continuous domains (Z+, Q+,
/// R+, C+) are carried by exact non-negative rationals; there is no floating
/// point anywhere. C+ supports addition only.
enum class DomainKind {
  mod_int,                  // Z_m
  nonneg_int,               // Z+ u {0}
  nonneg_rational,          // Q+ u {0} (also stands in for R+: exact rationals only)
  nonneg_complex,           // C+ u {0} as pairs of nonneg rationals, addition-only
  pure_neutrosophic_mod,    // Z_m I
  neutrosophic_mod,         // N(Z_m) = { x + yI }
  pure_neutrosophic_nonneg, // Z+ I u {0} (rational coefficients allowed)
  neutrosophic_nonneg,      // N(Z+ u {0}) / N(Q+ u {0})
  fuzzy_unit,               // exact rationals in [0, 1]
};

struct CoefficientDomain {
  DomainKind kind = DomainKind::mod_int;
  unsigned modulus = 0;  // m >= 2 for the three mod kinds, 0 otherwise

  static CoefficientDomain mod(unsigned m);
  static CoefficientDomain nonneg_int();
  static CoefficientDomain nonneg_rational();
  static CoefficientDomain nonneg_complex();
  static CoefficientDomain pure_neutro_mod(unsigned m);
  static CoefficientDomain neutro_mod(unsigned m);
  static CoefficientDomain pure_neutro_nonneg();
  static CoefficientDomain neutro_nonneg();
  static CoefficientDomain fuzzy_unit();

  bool has_mul() const { return kind != DomainKind::nonneg_complex; }
  bool is_finite() const;
  bool is_ordered() const;
  bool is_mod() const;
  bool is_neutrosophic() const;
  bool is_pure_neutrosophic() const;
  /// Number of elements of a finite domain (m, m or m^2).
  std::uint64_t size() const;
  /// Short display name: Z12, Z15I, N(Z5), Z+, Q+, C+, Z+I, N(Z+), [0,1].
  std::string name() const;

  bool operator==(const CoefficientDomain&) const = default;
};

/// A scalar from one coefficient domain. `real` + `neutro`*I for neutrosophic
/// kinds; for nonneg_complex the second slot holds the imaginary part. Mod
/// kinds keep both parts reduced into [0, m).
struct DomainElement {
  mpq_class real = 0;
  mpq_class neutro = 0;

  bool operator==(const DomainElement& o) const { return real == o.real && neutro == o.neutro; }
};

/// Canonical order used everywhere elements are enumerated or listed:
/// real part major, neutro part minor, ascending.
bool element_less(const DomainElement& a, const DomainElement& b);

DomainElement dom_zero(const CoefficientDomain& d);
/// Multiplicative unit: 1 for real kinds, I for pure-neutrosophic kinds.
DomainElement dom_one(const CoefficientDomain& d);

bool dom_contains(const CoefficientDomain& d, const DomainElement& a);
void dom_require(const CoefficientDomain& d, const DomainElement& a);

DomainElement dom_add(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b);
/// (a+bI)(c+dI) = ac + (ad+bc+bd)I, reduced mod m for mod kinds.
DomainElement dom_mul(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b);
std::strong_ordering dom_compare(const CoefficientDomain& d, const DomainElement& a,
                                 const DomainElement& b);
DomainElement dom_min(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b);
DomainElement dom_max(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b);

/// All elements of a finite domain, exactly once, in canonical order.
std::vector<DomainElement> dom_enumerate(const CoefficientDomain& d);

/// Text grammar: `a`, `bI`, `a+bI`, rationals as `p/q` (complex uses `i`).
std::string render_element(const DomainElement& a);
std::string render_element(const CoefficientDomain& d, const DomainElement& a);
DomainElement parse_element(const CoefficientDomain& d, const std::string& text);

std::string render_rational(const mpq_class& q);
mpq_class parse_rational(const std::string& text);

}  // namespace isg

#include "isg/domain.hpp"

#include <cctype>

#include "isg/error.hpp"

namespace isg {

namespace {

mpq_class mod_reduce(const mpq_class& v, unsigned m) {
  mpz_class r = v.get_num() % m;
  if (r < 0) r += m;
  return mpq_class(r);
}

bool is_nonneg_integer(const mpq_class& v) { return v >= 0 && v.get_den() == 1; }

}  // namespace

CoefficientDomain CoefficientDomain::mod(unsigned m) {
  if (m < 2) raise(errc::invalid_input, "modulus must be >= 2");
  return {DomainKind::mod_int, m};
}
CoefficientDomain CoefficientDomain::nonneg_int() { return {DomainKind::nonneg_int, 0}; }
CoefficientDomain CoefficientDomain::nonneg_rational() { return {DomainKind::nonneg_rational, 0}; }
CoefficientDomain CoefficientDomain::nonneg_complex() { return {DomainKind::nonneg_complex, 0}; }
CoefficientDomain CoefficientDomain::pure_neutro_mod(unsigned m) {
  if (m < 2) raise(errc::invalid_input, "modulus must be >= 2");
  return {DomainKind::pure_neutrosophic_mod, m};
}
CoefficientDomain CoefficientDomain::neutro_mod(unsigned m) {
  if (m < 2) raise(errc::invalid_input, "modulus must be >= 2");
  return {DomainKind::neutrosophic_mod, m};
}
CoefficientDomain CoefficientDomain::pure_neutro_nonneg() {
  return {DomainKind::pure_neutrosophic_nonneg, 0};
}
CoefficientDomain CoefficientDomain::neutro_nonneg() { return {DomainKind::neutrosophic_nonneg, 0}; }
CoefficientDomain CoefficientDomain::fuzzy_unit() { return {DomainKind::fuzzy_unit, 0}; }

bool CoefficientDomain::is_finite() const {
  return kind == DomainKind::mod_int || kind == DomainKind::pure_neutrosophic_mod ||
         kind == DomainKind::neutrosophic_mod;
}

bool CoefficientDomain::is_ordered() const {
  return kind == DomainKind::nonneg_int || kind == DomainKind::nonneg_rational ||
         kind == DomainKind::fuzzy_unit;
}

bool CoefficientDomain::is_mod() const {
  return kind == DomainKind::mod_int || kind == DomainKind::pure_neutrosophic_mod ||
         kind == DomainKind::neutrosophic_mod;
}

bool CoefficientDomain::is_neutrosophic() const {
  return kind == DomainKind::pure_neutrosophic_mod || kind == DomainKind::neutrosophic_mod ||
         kind == DomainKind::pure_neutrosophic_nonneg || kind == DomainKind::neutrosophic_nonneg;
}

bool CoefficientDomain::is_pure_neutrosophic() const {
  return kind == DomainKind::pure_neutrosophic_mod ||
         kind == DomainKind::pure_neutrosophic_nonneg;
}

std::uint64_t CoefficientDomain::size() const {
  if (!is_finite()) raise(errc::unsupported, "size of infinite domain " + name());
  std::uint64_t m = modulus;
  return kind == DomainKind::neutrosophic_mod ? m * m : m;
}

std::string CoefficientDomain::name() const {
  switch (kind) {
    case DomainKind::mod_int: return "Z" + std::to_string(modulus);
    case DomainKind::nonneg_int: return "Z+";
    case DomainKind::nonneg_rational: return "Q+";
    case DomainKind::nonneg_complex: return "C+";
    case DomainKind::pure_neutrosophic_mod: return "Z" + std::to_string(modulus) + "I";
    case DomainKind::neutrosophic_mod: return "N(Z" + std::to_string(modulus) + ")";
    case DomainKind::pure_neutrosophic_nonneg: return "Z+I";
    case DomainKind::neutrosophic_nonneg: return "N(Z+)";
    case DomainKind::fuzzy_unit: return "[0,1]";
  }
  return "?";
}

bool element_less(const DomainElement& a, const DomainElement& b) {
  if (a.real != b.real) return a.real < b.real;
  return a.neutro < b.neutro;
}

DomainElement dom_zero(const CoefficientDomain&) { return {}; }

DomainElement dom_one(const CoefficientDomain& d) {
  if (!d.has_mul()) raise(errc::unsupported, d.name() + " has no multiplication");
  if (d.is_pure_neutrosophic()) return {0, 1};
  return {1, 0};
}

bool dom_contains(const CoefficientDomain& d, const DomainElement& a) {
  switch (d.kind) {
    case DomainKind::mod_int:
      return a.neutro == 0 && a.real.get_den() == 1 && a.real >= 0 && a.real < d.modulus;
    case DomainKind::pure_neutrosophic_mod:
      return a.real == 0 && a.neutro.get_den() == 1 && a.neutro >= 0 && a.neutro < d.modulus;
    case DomainKind::neutrosophic_mod:
      return a.real.get_den() == 1 && a.real >= 0 && a.real < d.modulus &&
             a.neutro.get_den() == 1 && a.neutro >= 0 && a.neutro < d.modulus;
    case DomainKind::nonneg_int: return a.neutro == 0 && is_nonneg_integer(a.real);
    case DomainKind::nonneg_rational: return a.neutro == 0 && a.real >= 0;
    case DomainKind::nonneg_complex: return a.real >= 0 && a.neutro >= 0;
    case DomainKind::pure_neutrosophic_nonneg: return a.real == 0 && a.neutro >= 0;
    case DomainKind::neutrosophic_nonneg: return a.real >= 0 && a.neutro >= 0;
    case DomainKind::fuzzy_unit: return a.neutro == 0 && a.real >= 0 && a.real <= 1;
  }
  return false;
}

void dom_require(const CoefficientDomain& d, const DomainElement& a) {
  if (!dom_contains(d, a))
    raise(errc::invalid_input, "element " + render_element(a) + " not in domain " + d.name());
}

DomainElement dom_add(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b) {
  dom_require(d, a);
  dom_require(d, b);
  DomainElement r{a.real + b.real, a.neutro + b.neutro};
  if (d.is_mod()) {
    r.real = mod_reduce(r.real, d.modulus);
    r.neutro = mod_reduce(r.neutro, d.modulus);
  }
  if (d.kind == DomainKind::fuzzy_unit && r.real > 1)
    raise(errc::unsupported, "fuzzy values are not closed under addition");
  return r;
}

DomainElement dom_mul(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b) {
  if (!d.has_mul()) raise(errc::unsupported, d.name() + " has no multiplication");
  dom_require(d, a);
  dom_require(d, b);
  // (x1 + y1 I)(x2 + y2 I) = x1 x2 + (x1 y2 + y1 x2 + y1 y2) I  since I^2 = I.
  DomainElement r{a.real * b.real, a.real * b.neutro + a.neutro * b.real + a.neutro * b.neutro};
  if (d.is_mod()) {
    r.real = mod_reduce(r.real, d.modulus);
    r.neutro = mod_reduce(r.neutro, d.modulus);
  }
  return r;
}

std::strong_ordering dom_compare(const CoefficientDomain& d, const DomainElement& a,
                                 const DomainElement& b) {
  if (!d.is_ordered()) raise(errc::unsupported, d.name() + " has no total order");
  dom_require(d, a);
  dom_require(d, b);
  int c = cmp(a.real, b.real);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

DomainElement dom_min(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b) {
  return dom_compare(d, a, b) == std::strong_ordering::greater ? b : a;
}

DomainElement dom_max(const CoefficientDomain& d, const DomainElement& a, const DomainElement& b) {
  return dom_compare(d, a, b) == std::strong_ordering::less ? b : a;
}

std::vector<DomainElement> dom_enumerate(const CoefficientDomain& d) {
  if (!d.is_finite()) raise(errc::unsupported, "cannot enumerate infinite domain " + d.name());
  std::vector<DomainElement> out;
  unsigned m = d.modulus;
  switch (d.kind) {
    case DomainKind::mod_int:
      for (unsigned i = 0; i < m; ++i) out.push_back({mpq_class(i), 0});
      break;
    case DomainKind::pure_neutrosophic_mod:
      for (unsigned i = 0; i < m; ++i) out.push_back({0, mpq_class(i)});
      break;
    case DomainKind::neutrosophic_mod:
      for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) out.push_back({mpq_class(x), mpq_class(y)});
      break;
    default: break;
  }
  return out;
}

std::string render_rational(const mpq_class& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

mpq_class parse_rational(const std::string& text) {
  if (text.empty()) raise(errc::invalid_input, "empty rational literal");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/')
      raise(errc::invalid_input, "bad rational literal '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0 || text.front() == '/' || text.back() == '/')
    raise(errc::invalid_input, "bad rational literal '" + text + "'");
  if (q.get_den() == 0) raise(errc::invalid_input, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {
std::string render_with_marker(const DomainElement& a, char marker) {
  if (a.neutro == 0) return render_rational(a.real);
  std::string ipart = render_rational(a.neutro) + marker;
  if (a.neutro == 1) ipart = std::string(1, marker);
  if (a.real == 0) return ipart;
  return render_rational(a.real) + "+" + ipart;
}
}  // namespace

std::string render_element(const DomainElement& a) { return render_with_marker(a, 'I'); }

std::string render_element(const CoefficientDomain& d, const DomainElement& a) {
  return render_with_marker(a, d.kind == DomainKind::nonneg_complex ? 'i' : 'I');
}

DomainElement parse_element(const CoefficientDomain& d, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) raise(errc::invalid_input, "empty element literal");

  // Grammar: `a`, `bI`, or `a+bI` (complex uses `i`); nothing else.
  char marker = d.kind == DomainKind::nonneg_complex ? 'i' : 'I';
  DomainElement e;
  auto imaginary_part = [&](const std::string& part) {
    std::string coeff = part.substr(0, part.size() - 1);
    return coeff.empty() ? mpq_class(1) : parse_rational(coeff);
  };
  size_t plus = text.find('+');
  if (plus == std::string::npos) {
    if (!text.empty() && text.back() == marker)
      e.neutro = imaginary_part(text);
    else
      e.real = parse_rational(text);
  } else {
    std::string first = text.substr(0, plus);
    std::string second = text.substr(plus + 1);
    if (first.empty() || second.empty() || first.back() == marker || second.back() != marker)
      raise(errc::invalid_input, "bad element literal '" + raw + "' (expected a+b" +
                                     std::string(1, marker) + ")");
    e.real = parse_rational(first);
    e.neutro = imaginary_part(second);
  }
  if (d.is_mod()) {
    if (e.real.get_den() != 1 || e.neutro.get_den() != 1)
      raise(errc::invalid_input, "non-integer literal '" + raw + "' for " + d.name());
    e.real = mod_reduce(e.real, d.modulus);
    e.neutro = mod_reduce(e.neutro, d.modulus);
  }
  dom_require(d, e);
  return e;
}

}  // namespace isg

#include "isg/semigroup.hpp"

#include <algorithm>

#include "isg/error.hpp"

namespace isg {

namespace {

bool elements_equal(const SemigroupElement& a, const SemigroupElement& b) {
  return canonical_key(a) == canonical_key(b);
}

mpz_class pow_z(std::uint64_t base, unsigned long exp) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

void validate_spec(const SemigroupSpec& spec) {
  const CoefficientDomain& d = spec.domain;
  const Carrier& c = spec.carrier;
  switch (c.kind) {
    case CarrierKind::interval: break;
    case CarrierKind::row_matrix:
      if (c.len < 1) raise(errc::invalid_input, "row_matrix carrier needs len >= 1");
      break;
    case CarrierKind::matrix:
      if (c.rows < 1 || c.cols < 1) raise(errc::invalid_input, "matrix carrier needs positive shape");
      if (spec.op == OpKind::mul && c.rows != c.cols)
        raise(errc::invalid_input, "matrix product carrier must be square");
      break;
    case CarrierKind::polynomial_cyclic:
      validate_rule(d, CyclicRule{c.k, c.unit});
      break;
    case CarrierKind::monomial:
      validate_rule(d, CyclicRule{c.k, c.unit});
      if (spec.op != OpKind::mul)
        raise(errc::invalid_input, "monomial semigroups are multiplication-only carriers");
      break;
    case CarrierKind::full_transformation:
    case CarrierKind::permutations:
      if (c.n < 1) raise(errc::invalid_input, "transformation carrier needs n >= 1");
      if (spec.op != OpKind::mul)
        raise(errc::invalid_input, "transformation carriers compose; use op mul");
      break;
    case CarrierKind::fuzzy_family:
      if (d.kind != DomainKind::fuzzy_unit)
        raise(errc::invalid_input, "fuzzy_family carrier needs the fuzzy_unit domain");
      if (c.ratio <= 0 || c.ratio > 1)
        raise(errc::invalid_input, "fuzzy_family ratio must lie in (0, 1]");
      if (c.n_max < 0) raise(errc::invalid_input, "fuzzy_family needs n_max >= 0");
      if (spec.op != OpKind::min && spec.op != OpKind::max)
        raise(errc::invalid_input, "fuzzy_family carriers use op min or max");
      break;
  }

  bool carrier_is_tmap =
      c.kind == CarrierKind::full_transformation || c.kind == CarrierKind::permutations;
  if (!carrier_is_tmap) {
    if (spec.op == OpKind::mul && !d.has_mul())
      raise(errc::invalid_input, d.name() + " has no multiplication");
    if ((spec.op == OpKind::min || spec.op == OpKind::max) && !d.is_ordered())
      raise(errc::invalid_input, "op min/max needs an ordered domain, not " + d.name());
    if (c.kind != CarrierKind::fuzzy_family && !d.is_finite())
      raise(errc::invalid_input, "carrier over infinite domain " + d.name() + " is not finite");
    if (spec.op == OpKind::add && d.kind == DomainKind::fuzzy_unit)
      raise(errc::invalid_input, "fuzzy values are not closed under addition");
  }
}

std::vector<SemigroupElement> enumerate_carrier(const SemigroupSpec& spec) {
  const CoefficientDomain& d = spec.domain;
  const Carrier& c = spec.carrier;
  std::vector<SemigroupElement> out;
  switch (c.kind) {
    case CarrierKind::interval: {
      for (const auto& e : dom_enumerate(d)) out.push_back(Interval{d, e});
      break;
    }
    case CarrierKind::row_matrix: {
      auto elems = dom_enumerate(d);
      if (c.constant) {
        for (const auto& e : elems) {
          IntervalMatrix m{d, 1, c.len, std::vector<DomainElement>(static_cast<size_t>(c.len), e)};
          out.push_back(std::move(m));
        }
        break;
      }
      std::vector<size_t> digits(static_cast<size_t>(c.len), 0);
      for (;;) {
        IntervalMatrix m{d, 1, c.len, {}};
        m.entries.reserve(static_cast<size_t>(c.len));
        for (size_t p = 0; p < digits.size(); ++p) m.entries.push_back(elems[digits[p]]);
        out.push_back(std::move(m));
        size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == elems.size() - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      break;
    }
    case CarrierKind::matrix: {
      auto elems = dom_enumerate(d);
      size_t cells = static_cast<size_t>(c.rows) * c.cols;
      std::vector<size_t> digits(cells, 0);
      for (;;) {
        IntervalMatrix m{d, c.rows, c.cols, {}};
        m.entries.reserve(cells);
        for (size_t p = 0; p < cells; ++p) m.entries.push_back(elems[digits[p]]);
        out.push_back(std::move(m));
        size_t pos = cells;
        while (pos > 0 && digits[pos - 1] == elems.size() - 1) digits[--pos] = 0;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      break;
    }
    case CarrierKind::polynomial_cyclic: {
      for (auto& p :
           full_cyclic_poly_semigroup(d, c.k, spec.limits.element_cap))
        out.push_back(std::move(p));
      break;
    }
    case CarrierKind::monomial: {
      for (auto& p : monomial_semigroup(d, CyclicRule{c.k, c.unit}, spec.limits.element_cap))
        out.push_back(std::move(p));
      break;
    }
    case CarrierKind::full_transformation: {
      for (auto& t : enumerate_transformations(c.n, TmapKind::all, spec.limits.element_cap))
        out.push_back(std::move(t));
      break;
    }
    case CarrierKind::permutations: {
      for (auto& t : enumerate_transformations(c.n, TmapKind::bijections, spec.limits.element_cap))
        out.push_back(std::move(t));
      break;
    }
    case CarrierKind::fuzzy_family: {
      std::vector<DomainElement> vals;
      mpq_class v = 1;
      for (int i = 0; i <= c.n_max; ++i) {
        DomainElement e{v, 0};
        if (std::find_if(vals.begin(), vals.end(), [&](const DomainElement& x) {
              return x == e;
            }) == vals.end())
          vals.push_back(e);
        v *= c.ratio;
      }
      std::sort(vals.begin(), vals.end(), element_less);
      for (const auto& e : vals) out.push_back(Interval{d, e});
      break;
    }
  }
  return out;
}

SemigroupElement carrier_zero(const SemigroupSpec& spec) {
  const CoefficientDomain& d = spec.domain;
  const Carrier& c = spec.carrier;
  switch (c.kind) {
    case CarrierKind::interval:
    case CarrierKind::fuzzy_family: return Interval{d, dom_zero(d)};
    case CarrierKind::row_matrix:
      return IntervalMatrix{d, 1, c.len,
                            std::vector<DomainElement>(static_cast<size_t>(c.len), dom_zero(d))};
    case CarrierKind::matrix:
      return IntervalMatrix{
          d, c.rows, c.cols,
          std::vector<DomainElement>(static_cast<size_t>(c.rows) * c.cols, dom_zero(d))};
    case CarrierKind::polynomial_cyclic:
    case CarrierKind::monomial: return IntervalPolynomial{d, {}};
    case CarrierKind::full_transformation:
    case CarrierKind::permutations:
      raise(errc::invalid_input, "transformation carriers have no zero element to exclude");
  }
  raise(errc::invalid_input, "unreachable carrier kind");
}

}  // namespace

std::string render_semigroup_element(const SemigroupElement& e) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Interval>) return render_interval(v);
        if constexpr (std::is_same_v<T, IntervalMatrix>) return render_matrix(v);
        if constexpr (std::is_same_v<T, IntervalPolynomial>) return render_polynomial(v);
        if constexpr (std::is_same_v<T, TransformationMap>) return render_tmap(v);
      },
      e);
}

std::string canonical_key(const SemigroupElement& e) {
  if (const auto* t = std::get_if<TransformationMap>(&e)) {
    std::string key;
    key.reserve(t->images.size());
    for (int im : t->images) key.push_back(static_cast<char>(im));
    return key;
  }
  return render_semigroup_element(e);
}

mpz_class carrier_size(const SemigroupSpec& spec) {
  const CoefficientDomain& d = spec.domain;
  const Carrier& c = spec.carrier;
  switch (c.kind) {
    case CarrierKind::interval: return mpz_class(static_cast<unsigned long>(d.size()));
    case CarrierKind::row_matrix:
      if (c.constant) return mpz_class(static_cast<unsigned long>(d.size()));
      return pow_z(d.size(), static_cast<unsigned long>(c.len));
    case CarrierKind::matrix:
      return pow_z(d.size(), static_cast<unsigned long>(c.rows) * c.cols);
    case CarrierKind::polynomial_cyclic: return pow_z(d.size(), static_cast<unsigned long>(c.k));
    case CarrierKind::monomial:
      return mpz_class(static_cast<unsigned long>(d.size() - 1)) * c.k + 1;
    case CarrierKind::full_transformation: return full_transformation_order(c.n);
    case CarrierKind::permutations: return symmetric_group_order(c.n);
    case CarrierKind::fuzzy_family: return mpz_class(c.n_max + 1);
  }
  return 0;
}

SemigroupElement apply_op(const SemigroupSpec& spec, const SemigroupElement& a,
                          const SemigroupElement& b) {
  switch (spec.carrier.kind) {
    case CarrierKind::interval:
    case CarrierKind::fuzzy_family: {
      const auto& x = std::get<Interval>(a);
      const auto& y = std::get<Interval>(b);
      switch (spec.op) {
        case OpKind::add: return interval_add(x, y);
        case OpKind::mul: return interval_mul(x, y);
        case OpKind::min: return interval_lattice(LatticeOp::min, x, y);
        case OpKind::max: return interval_lattice(LatticeOp::max, x, y);
      }
      break;
    }
    case CarrierKind::row_matrix:
    case CarrierKind::matrix: {
      const auto& x = std::get<IntervalMatrix>(a);
      const auto& y = std::get<IntervalMatrix>(b);
      switch (spec.op) {
        case OpKind::add: return mat_elementwise(MatElemOp::add, x, y);
        case OpKind::mul:
          // Row matrices multiply componentwise; square matrices take the
          // true matrix product.
          if (spec.carrier.kind == CarrierKind::row_matrix)
            return mat_elementwise(MatElemOp::mul, x, y);
          return mat_product(x, y);
        case OpKind::min: return mat_elementwise(MatElemOp::min, x, y);
        case OpKind::max: return mat_elementwise(MatElemOp::max, x, y);
      }
      break;
    }
    case CarrierKind::polynomial_cyclic:
    case CarrierKind::monomial: {
      const auto& x = std::get<IntervalPolynomial>(a);
      const auto& y = std::get<IntervalPolynomial>(b);
      if (spec.op == OpKind::add) return poly_add(x, y);
      if (spec.op == OpKind::mul)
        return poly_mul(x, y, CyclicRule{spec.carrier.k, spec.carrier.unit});
      raise(errc::invalid_input, "polynomial carriers support add and mul only");
    }
    case CarrierKind::full_transformation:
    case CarrierKind::permutations:
      return tmap_compose(std::get<TransformationMap>(a), std::get<TransformationMap>(b));
  }
  raise(errc::invalid_input, "unsupported carrier/op combination");
}

FiniteSemigroup FiniteSemigroup::build(const SemigroupSpec& spec) {
  validate_spec(spec);
  mpz_class required = carrier_size(spec);
  if (required > spec.limits.element_cap)
    raise(errc::resource_cap, "carrier requires " + required.get_str() +
                                  " elements, element cap is " +
                                  std::to_string(spec.limits.element_cap));

  FiniteSemigroup s;
  s.spec_ = spec;
  s.elements_ = enumerate_carrier(spec);
  if (spec.exclude_zero) {
    SemigroupElement z = carrier_zero(spec);
    auto it = std::find_if(s.elements_.begin(), s.elements_.end(),
                           [&](const SemigroupElement& e) { return elements_equal(e, z); });
    if (it == s.elements_.end())
      raise(errc::invalid_input, "exclude_zero: carrier has no zero element");
    s.elements_.erase(it);
  }
  if (s.elements_.empty()) raise(errc::construction, "empty carrier");

  size_t n = s.elements_.size();
  s.labels_.reserve(n);
  s.index_.reserve(n * 2);
  for (size_t i = 0; i < n; ++i) {
    s.labels_.push_back(render_semigroup_element(s.elements_[i]));
    auto [it, inserted] = s.index_.emplace(canonical_key(s.elements_[i]), static_cast<int>(i));
    if (!inserted)
      raise(errc::construction, "duplicate carrier element " + s.labels_.back());
  }

  bool materialize = n <= spec.limits.table_cap;
  if (materialize) s.table_.assign(n * n, -1);
  if (!materialize) s.lazy_ = std::make_unique<LazyOps>();

  // Closure verification over every ordered pair; fills the table when it
  // is materialized.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      SemigroupElement prod =
          apply_op(spec, s.elements_[i], s.elements_[j]);
      auto it = s.index_.find(canonical_key(prod));
      if (it == s.index_.end())
        raise(errc::construction, "not closed: " + s.labels_[i] + " * " + s.labels_[j] + " = " +
                                      render_semigroup_element(prod) + " is outside the carrier");
      if (materialize) s.table_[i * n + j] = it->second;
    }

  // Identity, zero, commutativity.
  for (size_t i = 0; i < n && (s.commutative_); ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (s.op(static_cast<int>(i), static_cast<int>(j)) !=
          s.op(static_cast<int>(j), static_cast<int>(i))) {
        s.commutative_ = false;
        break;
      }
  for (size_t e = 0; e < n; ++e) {
    bool ident = true, zero = true;
    for (size_t x = 0; x < n && (ident || zero); ++x) {
      int ex = s.op(static_cast<int>(e), static_cast<int>(x));
      int xe = s.op(static_cast<int>(x), static_cast<int>(e));
      if (ex != static_cast<int>(x) || xe != static_cast<int>(x)) ident = false;
      if (ex != static_cast<int>(e) || xe != static_cast<int>(e)) zero = false;
    }
    if (ident && !s.identity_) s.identity_ = static_cast<int>(e);
    if (zero && !s.zero_) s.zero_ = static_cast<int>(e);
  }
  return s;
}

int FiniteSemigroup::compute_op(int i, int j) const {
  SemigroupElement prod = apply_op(spec_, elements_[static_cast<size_t>(i)],
                                   elements_[static_cast<size_t>(j)]);
  auto it = index_.find(canonical_key(prod));
  if (it == index_.end())
    raise(errc::construction, "not closed: " + labels_[static_cast<size_t>(i)] + " * " +
                                  labels_[static_cast<size_t>(j)]);
  return it->second;
}

int FiniteSemigroup::op(int i, int j) const {
  size_t n = elements_.size();
  if (!table_.empty()) return table_[static_cast<size_t>(i) * n + static_cast<size_t>(j)];
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
                      static_cast<std::uint32_t>(j);
  {
    std::lock_guard<std::mutex> lock(lazy_->mu);
    auto it = lazy_->memo.find(key);
    if (it != lazy_->memo.end()) return it->second;
  }
  int r = compute_op(i, j);
  std::lock_guard<std::mutex> lock(lazy_->mu);
  lazy_->memo.emplace(key, r);
  return r;
}

std::optional<int> FiniteSemigroup::index_of(const SemigroupElement& e) const {
  return index_of_key(canonical_key(e));
}

std::optional<int> FiniteSemigroup::index_of_key(const std::string& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int element_power(const FiniteSemigroup& s, int x, unsigned long k) {
  if (k == 0) raise(errc::invalid_input, "element_power requires k >= 1");
  int acc = x;
  for (unsigned long i = 1; i < k; ++i) acc = s.op(acc, x);
  return acc;
}

}  // namespace isg

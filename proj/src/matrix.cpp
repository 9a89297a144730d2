#include "isg/matrix.hpp"

#include "isg/error.hpp"

namespace isg {

namespace {

void require_shape(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (!(a.domain == b.domain))
    raise(errc::invalid_input, "domain mismatch: " + a.domain.name() + " vs " + b.domain.name());
  if (a.rows != b.rows || a.cols != b.cols)
    raise(errc::invalid_input, "shape mismatch: " + std::to_string(a.rows) + "x" +
                                   std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                                   std::to_string(b.cols));
}

mpq_class mod_diff(const mpq_class& u, const mpq_class& v, unsigned m) {
  mpz_class r = (u.get_num() - v.get_num()) % m;
  if (r < 0) r += m;
  return mpq_class(r);
}

/// u - v under the determinant convention: componentwise |u - v| on
/// non-modular domains, componentwise (u - v) mod m on modular ones.
DomainElement det_sub(const CoefficientDomain& d, const DomainElement& u, const DomainElement& v) {
  if (d.is_mod())
    return {mod_diff(u.real, v.real, d.modulus), mod_diff(u.neutro, v.neutro, d.modulus)};
  return {abs(u.real - v.real), abs(u.neutro - v.neutro)};
}

DomainElement det_rec(const IntervalMatrix& a, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
  const CoefficientDomain& d = a.domain;
  size_t n = rows.size();
  if (n == 1) return a.at(rows[0], cols[0]);
  DomainElement pos = dom_zero(d);
  DomainElement neg = dom_zero(d);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    sub_cols.reserve(n - 1);
    for (size_t c = 0; c < n; ++c)
      if (c != j) sub_cols.push_back(cols[c]);
    DomainElement term = dom_mul(d, a.at(rows[0], cols[j]), det_rec(a, sub_rows, sub_cols));
    if (j % 2 == 0)
      pos = dom_add(d, pos, term);
    else
      neg = dom_add(d, neg, term);
  }
  return det_sub(d, pos, neg);
}

}  // namespace

IntervalMatrix make_matrix(const CoefficientDomain& d, int rows, int cols,
                           const std::vector<DomainElement>& entries) {
  if (rows < 1 || cols < 1) raise(errc::invalid_input, "matrix dimensions must be positive");
  if (entries.size() != static_cast<size_t>(rows) * cols)
    raise(errc::invalid_input, "matrix entry count " + std::to_string(entries.size()) +
                                   " does not match " + std::to_string(rows) + "x" +
                                   std::to_string(cols));
  for (const auto& e : entries) dom_require(d, e);
  return {d, rows, cols, entries};
}

IntervalMatrix make_matrix(const CoefficientDomain& d, int rows, int cols,
                           const std::vector<std::string>& entry_texts) {
  std::vector<DomainElement> entries;
  entries.reserve(entry_texts.size());
  for (const auto& t : entry_texts) entries.push_back(parse_element(d, t));
  return make_matrix(d, rows, cols, entries);
}

IntervalMatrix identity_matrix(const CoefficientDomain& d, int n) {
  IntervalMatrix m{d, n, n, std::vector<DomainElement>(static_cast<size_t>(n) * n, dom_zero(d))};
  for (int i = 0; i < n; ++i) m.at(i, i) = dom_one(d);
  return m;
}

IntervalMatrix mat_elementwise(MatElemOp op, const IntervalMatrix& a, const IntervalMatrix& b) {
  require_shape(a, b);
  const CoefficientDomain& d = a.domain;
  IntervalMatrix r{d, a.rows, a.cols, {}};
  r.entries.reserve(a.entries.size());
  for (size_t i = 0; i < a.entries.size(); ++i) {
    switch (op) {
      case MatElemOp::add: r.entries.push_back(dom_add(d, a.entries[i], b.entries[i])); break;
      case MatElemOp::mul: r.entries.push_back(dom_mul(d, a.entries[i], b.entries[i])); break;
      case MatElemOp::min: r.entries.push_back(dom_min(d, a.entries[i], b.entries[i])); break;
      case MatElemOp::max: r.entries.push_back(dom_max(d, a.entries[i], b.entries[i])); break;
    }
  }
  return r;
}

IntervalMatrix mat_product(const IntervalMatrix& a, const IntervalMatrix& b) {
  if (!(a.domain == b.domain))
    raise(errc::invalid_input, "domain mismatch: " + a.domain.name() + " vs " + b.domain.name());
  if (a.cols != b.rows)
    raise(errc::invalid_input, "dimension mismatch: " + std::to_string(a.rows) + "x" +
                                   std::to_string(a.cols) + " * " + std::to_string(b.rows) + "x" +
                                   std::to_string(b.cols));
  const CoefficientDomain& d = a.domain;
  IntervalMatrix r{d, a.rows, b.cols,
                   std::vector<DomainElement>(static_cast<size_t>(a.rows) * b.cols, dom_zero(d))};
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      DomainElement acc = dom_zero(d);
      for (int k = 0; k < a.cols; ++k)
        acc = dom_add(d, acc, dom_mul(d, a.at(i, k), b.at(k, j)));
      r.at(i, j) = acc;
    }
  return r;
}

DeterminantResult mat_determinant(const IntervalMatrix& a) {
  if (a.rows != a.cols)
    raise(errc::invalid_input, "determinant of non-square " + std::to_string(a.rows) + "x" +
                                   std::to_string(a.cols) + " matrix");
  if (!a.domain.has_mul()) raise(errc::unsupported, a.domain.name() + " has no multiplication");
  std::vector<int> idx(a.rows);
  for (int i = 0; i < a.rows; ++i) idx[i] = i;
  DomainElement det = det_rec(a, idx, idx);
  return {Interval{a.domain, det}, !(det == dom_zero(a.domain))};
}

std::string render_matrix(const IntervalMatrix& a) {
  std::string s = "(";
  for (int i = 0; i < a.rows; ++i) {
    if (i) s += "; ";
    for (int j = 0; j < a.cols; ++j) {
      if (j) s += ", ";
      s += render_interval(a.interval_at(i, j));
    }
  }
  return s + ")";
}

}  // namespace isg

#include "isg/transformation.hpp"

#include <algorithm>

#include "isg/domain.hpp"
#include "isg/error.hpp"

namespace isg {

bool TransformationMap::is_bijection() const {
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int im : images) {
    if (seen[static_cast<size_t>(im)]) return false;
    seen[static_cast<size_t>(im)] = true;
  }
  return true;
}

TransformationMap make_tmap(int n, const std::vector<int>& images) {
  if (n < 1) raise(errc::invalid_input, "transformation needs n >= 1");
  if (images.size() != static_cast<size_t>(n))
    raise(errc::invalid_input, "transformation image list has length " +
                                   std::to_string(images.size()) + ", expected " +
                                   std::to_string(n));
  for (int im : images)
    if (im < 0 || im >= n)
      raise(errc::invalid_input, "transformation image " + std::to_string(im) + " out of range");
  return {n, images};
}

TransformationMap tmap_identity(int n) {
  std::vector<int> im(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
  return {n, im};
}

TransformationMap tmap_compose(const TransformationMap& f, const TransformationMap& g) {
  if (f.n != g.n)
    raise(errc::invalid_input, "size mismatch: " + std::to_string(f.n) + " vs " +
                                   std::to_string(g.n));
  TransformationMap r{f.n, std::vector<int>(static_cast<size_t>(f.n))};
  for (int i = 0; i < f.n; ++i)
    r.images[static_cast<size_t>(i)] =
        f.images[static_cast<size_t>(g.images[static_cast<size_t>(i)])];
  return r;
}

mpz_class full_transformation_order(int n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n));
  return r;
}

mpz_class symmetric_group_order(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

std::vector<TransformationMap> enumerate_transformations(int n, TmapKind kind, size_t cap) {
  if (n < 1) raise(errc::invalid_input, "transformation enumeration needs n >= 1");
  mpz_class required =
      kind == TmapKind::all ? full_transformation_order(n) : symmetric_group_order(n);
  if (required > cap)
    raise(errc::resource_cap, "enumeration requires " + required.get_str() +
                                  " elements, cap is " + std::to_string(cap));
  std::vector<TransformationMap> out;
  out.reserve(required.get_ui());
  if (kind == TmapKind::bijections) {
    std::vector<int> im(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) im[static_cast<size_t>(i)] = i;
    do {
      out.push_back({n, im});
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
  }
  std::vector<int> im(static_cast<size_t>(n), 0);
  for (;;) {
    out.push_back({n, im});
    int pos = n - 1;
    while (pos >= 0 && im[static_cast<size_t>(pos)] == n - 1) {
      im[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++im[static_cast<size_t>(pos)];
  }
  return out;
}

std::string render_tmap(const TransformationMap& f) {
  std::string s = "(";
  for (int i = 0; i < f.n; ++i) {
    if (i) s += " ";
    s += std::to_string(f.images[static_cast<size_t>(i)]);
  }
  return s + ")";
}

IntervalSetX make_interval_set(const std::vector<IntervalLabel>& labels) {
  if (labels.empty()) raise(errc::invalid_input, "interval set must be nonempty");
  for (const auto& l : labels) {
    if (l.lower < 0 || l.upper < 0)
      raise(errc::invalid_input, "interval label endpoints must be non-negative");
    if (!(l.lower < l.upper))
      raise(errc::invalid_input, "interval label [" + render_rational(l.lower) + ", " +
                                     render_rational(l.upper) + "] needs lower < upper");
  }
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j])
        raise(errc::invalid_input, "duplicate interval label " + render_label(labels[i]));
  IntervalSetX x{labels, true};
  for (const auto& a : labels)
    for (const auto& b : labels)
      if (!(a.lower < b.upper)) x.special = false;
  return x;
}

IntervalSetX span_special_intervals(const IntervalSetX& x) {
  if (!x.special) {
    for (const auto& a : x.labels)
      for (const auto& b : x.labels)
        if (!(a.lower < b.upper))
          raise(errc::invalid_input, "not a special interval set: lower " +
                                         render_rational(a.lower) + " is not below upper " +
                                         render_rational(b.upper));
    raise(errc::invalid_input, "not a special interval set");
  }
  std::vector<IntervalLabel> spanned;
  for (const auto& a : x.labels)
    for (const auto& b : x.labels) {
      IntervalLabel l{a.lower, b.upper};
      if (std::find(spanned.begin(), spanned.end(), l) == spanned.end()) spanned.push_back(l);
    }
  return IntervalSetX{spanned, true};
}

std::string render_label(const IntervalLabel& l) {
  return "[" + render_rational(l.lower) + ", " + render_rational(l.upper) + "]";
}

}  // namespace isg

#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace isg {

/// Self-map of an n-element interval set, acting on indices 0..n-1. The
/// interval labels themselves are metadata; the isomorphism with the plain
/// transformation semigroup S(n) justifies working on indices.
struct TransformationMap {
  int n = 0;
  std::vector<int> images;  // images[i] in [0, n)

  bool is_bijection() const;
  bool operator==(const TransformationMap& o) const { return n == o.n && images == o.images; }
};

TransformationMap make_tmap(int n, const std::vector<int>& images);
TransformationMap tmap_identity(int n);

/// (f o g)(i) = f(g(i)) -- g applied first. This fixes the Cayley table
/// orientation in every report.
TransformationMap tmap_compose(const TransformationMap& f, const TransformationMap& g);

enum class TmapKind { all, bijections };

/// All n^n maps or all n! permutations in lexicographic image order.
std::vector<TransformationMap> enumerate_transformations(int n, TmapKind kind, size_t cap);

/// n^n and n! as exact big integers (S(<X>) is never fully enumerated;
/// its order is computed arithmetically).
mpz_class full_transformation_order(int n);
mpz_class symmetric_group_order(int n);

std::string render_tmap(const TransformationMap& f);

/// Two-endpoint interval label [lower, upper]; lower = 0 allowed for plain
/// sets, special sets need 0 < lower < upper.
struct IntervalLabel {
  mpq_class lower = 0;
  mpq_class upper = 0;

  bool operator==(const IntervalLabel& o) const { return lower == o.lower && upper == o.upper; }
};

struct IntervalSetX {
  std::vector<IntervalLabel> labels;  // pairwise distinct
  bool special = false;               // max lower < min upper across the set
};

/// Validates distinctness and lower < upper per label; computes the special
/// flag (every lower endpoint below every upper endpoint).
IntervalSetX make_interval_set(const std::vector<IntervalLabel>& labels);

/// <X> = all [a_i, b_j], deduplicated, in (i, j) lexicographic order; size
/// n^2 when all endpoints are distinct. Requires X special.
IntervalSetX span_special_intervals(const IntervalSetX& x);

std::string render_label(const IntervalLabel& l);

}  // namespace isg

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "isg/interval.hpp"
#include "isg/matrix.hpp"
#include "isg/polynomial.hpp"
#include "isg/transformation.hpp"

namespace isg {

using SemigroupElement =
    std::variant<Interval, IntervalMatrix, IntervalPolynomial, TransformationMap>;

std::string render_semigroup_element(const SemigroupElement& e);
/// Deterministic lookup key; compact bytes for transformations, the exact
/// rendering for everything else.
std::string canonical_key(const SemigroupElement& e);

enum class CarrierKind {
  interval,
  row_matrix,
  matrix,
  polynomial_cyclic,
  monomial,
  full_transformation,
  permutations,
  fuzzy_family,
};

struct Carrier {
  CarrierKind kind = CarrierKind::interval;
  int len = 0;            // row_matrix
  bool constant = false;  // row_matrix: restrict to constant tuples
  int rows = 0, cols = 0; // matrix
  long k = 0;             // polynomial_cyclic / monomial
  UnitKind unit = UnitKind::one;
  int n = 0;              // transformations
  mpq_class ratio = 0;    // fuzzy_family
  int n_max = 0;          // fuzzy_family
};

enum class OpKind { add, mul, min, max };

struct AnalyzerLimits {
  std::size_t element_cap = 10000;
  std::size_t table_cap = 4096;          // materialize Cayley table when |S| <= this
  std::size_t subgroup_exact_cap = 48;   // full subgroup lattice per maximal subgroup
  std::size_t subset_exhaustive_cap = 16;// exhaustive subset searches when |S| <= this
  std::size_t zero_divisor_list_cap = 256;
  std::size_t ideal_union_bound = 100000;
  std::size_t ideal_enum_cap = 1024;     // principal-ideal enumeration when |S| <= this
  // Smarandache predicates normally ignore singleton idempotent subgroups;
  // set for sensitivity analysis.
  bool count_trivial_subgroups = false;
};

struct SemigroupSpec {
  CoefficientDomain domain;
  Carrier carrier;
  OpKind op = OpKind::mul;
  bool exclude_zero = false;
  AnalyzerLimits limits;
};

/// Exact number of carrier elements before exclude_zero is applied.
mpz_class carrier_size(const SemigroupSpec& spec);

/// Value-level operation of the spec (closure not assumed).
SemigroupElement apply_op(const SemigroupSpec& spec, const SemigroupElement& a,
                          const SemigroupElement& b);

/// Enumerated finite semigroup: canonical element list plus the operation on
/// indices. Immutable after build; safe to analyze from multiple threads.
class FiniteSemigroup {
 public:
  static FiniteSemigroup build(const SemigroupSpec& spec);

  std::size_t size() const { return elements_.size(); }
  const SemigroupElement& element(int i) const { return elements_[static_cast<size_t>(i)]; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const SemigroupSpec& spec() const { return spec_; }

  int op(int i, int j) const;
  std::optional<int> index_of(const SemigroupElement& e) const;
  std::optional<int> index_of_key(const std::string& key) const;

  std::optional<int> identity() const { return identity_; }
  std::optional<int> zero() const { return zero_; }
  bool is_commutative() const { return commutative_; }
  bool has_table() const { return !table_.empty(); }

 private:
  FiniteSemigroup() = default;

  SemigroupSpec spec_;
  std::vector<SemigroupElement> elements_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::int32_t> table_;  // empty when |S| > table_cap
  std::optional<int> identity_;
  std::optional<int> zero_;
  bool commutative_ = true;

  struct LazyOps {
    mutable std::mutex mu;
    mutable std::unordered_map<std::uint64_t, std::int32_t> memo;
  };
  std::unique_ptr<LazyOps> lazy_;

  int compute_op(int i, int j) const;
};

/// x^k under the semigroup operation, k >= 1, by index.
int element_power(const FiniteSemigroup& s, int x, unsigned long k);

}  // namespace isg

#pragma once

#include <string>
#include <vector>

#include "isg/interval.hpp"

namespace isg {

/// Row-major matrix of intervals over one coefficient domain. Row matrices
/// are 1 x n, column matrices n x 1.
struct IntervalMatrix {
  CoefficientDomain domain;
  int rows = 0;
  int cols = 0;
  std::vector<DomainElement> entries;  // rows*cols endpoints, row-major

  const DomainElement& at(int r, int c) const { return entries[r * cols + c]; }
  DomainElement& at(int r, int c) { return entries[r * cols + c]; }
  Interval interval_at(int r, int c) const { return {domain, at(r, c)}; }

  bool operator==(const IntervalMatrix& o) const {
    return domain == o.domain && rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

IntervalMatrix make_matrix(const CoefficientDomain& d, int rows, int cols,
                           const std::vector<DomainElement>& entries);
IntervalMatrix make_matrix(const CoefficientDomain& d, int rows, int cols,
                           const std::vector<std::string>& entry_texts);
IntervalMatrix identity_matrix(const CoefficientDomain& d, int n);

enum class MatElemOp { add, mul, min, max };

/// Entrywise add/mul/min/max; the `mul` case is the componentwise (Hadamard)
/// product used for row matrices.
IntervalMatrix mat_elementwise(MatElemOp op, const IntervalMatrix& a, const IntervalMatrix& b);

/// Standard matrix product built from interval_mul / interval_add.
IntervalMatrix mat_product(const IntervalMatrix& a, const IntervalMatrix& b);

struct DeterminantResult {
  Interval det;
  bool nonsingular = false;
};

/// Laplace expansion with every subtraction u - v taken as |u - v| on ordered
/// domains and (u - v) mod m on modular ones.
DeterminantResult mat_determinant(const IntervalMatrix& a);

std::string render_matrix(const IntervalMatrix& a);

}  // namespace isg

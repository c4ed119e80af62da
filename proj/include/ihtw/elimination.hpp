#pragma once

#include "ihtw/sparse.hpp"

#include <optional>

namespace ihtw {

struct Pivot {
  Index row;
  Index col;
  Integer value;
};

struct EliminationOptions {
  bool column_transform = false;  // track V and V^-1
  bool row_transform = false;     // track U and U^-1
};

/// Result of reducing M to a Smith-type form U M V = D, where D is zero except for
/// D(row, col) = value at each pivot. Unit pivots come first, then non-unit pivots
/// forming a divisibility chain d1 | d2 | ...
struct Elimination {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Pivot> pivots;
  std::optional<SparseMatrix> U, U_inverse, V, V_inverse;

  std::size_t rank() const { return pivots.size(); }
  /// Columns without a pivot, ascending.
  std::vector<Index> free_columns() const;
  std::vector<Index> free_rows() const;
};

Elimination eliminate(const SparseMatrix& m, const EngineRing& ring, EliminationOptions options = {});

/// U M V = D with D diagonal (d1 | d2 | ... then zeros), U and V invertible over the ring.
struct SmithForm {
  SparseMatrix U, D, V;
  std::vector<Integer> diagonal;  // nonzero invariant factors, in order
};

SmithForm smith_normal_form(const SparseMatrix& m, const CoefficientRing& ring);

}  // namespace ihtw

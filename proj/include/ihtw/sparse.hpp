#pragma once

#include "ihtw/ring.hpp"

#include <cstdint>
#include <vector>

namespace ihtw {

using Index = std::uint32_t;

struct Entry {
  Index index;
  Integer value;
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector with strictly increasing indices and no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  /// Entries may come in any order; duplicates are summed and zeros dropped.
  static SparseVector from_entries(std::vector<Entry> entries, const EngineRing& ring);
  static SparseVector unit(Index i, Integer value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  Integer at(Index i) const;

  /// this += q * x
  void axpy(const Integer& q, const SparseVector& x, const EngineRing& ring);
  SparseVector scaled(const Integer& q, const EngineRing& ring) const;
  /// Sum of this[i] * x[i].
  Integer dot(const SparseVector& x, const EngineRing& ring) const;
  /// Appends an entry whose index exceeds all present ones.
  void push_back(Index i, Integer value);

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

SparseVector operator-(const SparseVector& a, const SparseVector& b);

/// Column-major sparse matrix.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static SparseMatrix identity(std::size_t n);
  /// Test helper: dense row-major integer data.
  static SparseMatrix from_dense(const std::vector<std::vector<long>>& rows, const EngineRing& ring);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const SparseVector& column(std::size_t j) const { return columns_[j]; }
  SparseVector& column(std::size_t j) { return columns_[j]; }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Integer at(std::size_t i, std::size_t j) const { return columns_[j].at(static_cast<Index>(i)); }

  SparseVector apply(const SparseVector& x, const EngineRing& ring) const;
  SparseMatrix multiply(const SparseMatrix& other, const EngineRing& ring) const;
  SparseMatrix transpose() const;
  SparseMatrix negated(const EngineRing& ring) const;
  bool is_zero() const;
  std::size_t nnz() const;
  std::vector<std::vector<Integer>> to_dense() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

}  // namespace ihtw

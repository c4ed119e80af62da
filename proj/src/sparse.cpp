#include "ihtw/sparse.hpp"

#include <algorithm>

namespace ihtw {

SparseVector SparseVector::from_entries(std::vector<Entry> entries, const EngineRing& ring) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector out;
  for (auto& e : entries) {
    if (!out.entries_.empty() && out.entries_.back().index == e.index) {
      out.entries_.back().value += e.value;
    } else {
      out.entries_.push_back(std::move(e));
    }
  }
  std::erase_if(out.entries_, [&](Entry& e) {
    e.value = ring.reduce(std::move(e.value));
    return e.value.is_zero();
  });
  return out;
}

SparseVector SparseVector::unit(Index i, Integer value) {
  SparseVector v;
  if (!value.is_zero()) v.entries_.push_back({i, std::move(value)});
  return v;
}

Integer SparseVector::at(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.index < k; });
  if (it != entries_.end() && it->index == i) return it->value;
  return 0;
}

void SparseVector::axpy(const Integer& q, const SparseVector& x, const EngineRing& ring) {
  if (q.is_zero() || x.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + x.entries_.size());
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  while (a != entries_.end() || b != x.entries_.end()) {
    if (b == x.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      Integer v = ring.reduce(q * b->value);
      if (!v.is_zero()) merged.push_back({b->index, std::move(v)});
      ++b;
    } else {
      Integer v = ring.reduce(a->value + q * b->value);
      if (!v.is_zero()) merged.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Integer& q, const EngineRing& ring) const {
  SparseVector out;
  out.axpy(q, *this, ring);
  return out;
}

Integer SparseVector::dot(const SparseVector& x, const EngineRing& ring) const {
  Integer sum = 0;
  auto a = entries_.begin();
  auto b = x.entries_.begin();
  while (a != entries_.end() && b != x.entries_.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      sum += a->value * b->value;
      ++a;
      ++b;
    }
  }
  return ring.reduce(sum);
}

void SparseVector::push_back(Index i, Integer value) {
  if (!value.is_zero()) entries_.push_back({i, std::move(value)});
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  // Plain integer difference; callers working mod m reduce afterwards.
  SparseVector out = a;
  out.axpy(-1, b, EngineRing(CoefficientRing::integers()));
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i] = SparseVector::unit(static_cast<Index>(i));
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<long>>& rows,
                                      const EngineRing& ring) {
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  SparseMatrix m(rows.size(), ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<Entry> entries;
    for (std::size_t i = 0; i < rows.size(); ++i)
      entries.push_back({static_cast<Index>(i), Integer(rows[i][j])});
    m.columns_[j] = SparseVector::from_entries(std::move(entries), ring);
  }
  return m;
}

SparseVector SparseMatrix::apply(const SparseVector& x, const EngineRing& ring) const {
  std::vector<Entry> acc;
  for (const auto& e : x.entries()) {
    for (const auto& c : columns_[e.index].entries()) acc.push_back({c.index, c.value * e.value});
  }
  return SparseVector::from_entries(std::move(acc), ring);
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other, const EngineRing& ring) const {
  SparseMatrix out(rows_, other.cols());
  for (std::size_t j = 0; j < other.cols(); ++j) out.columns_[j] = apply(other.columns_[j], ring);
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j].entries())
      out.columns_[e.index].push_back(static_cast<Index>(j), e.value);
  }
  return out;
}

SparseMatrix SparseMatrix::negated(const EngineRing& ring) const {
  SparseMatrix out(rows_, cols());
  for (std::size_t j = 0; j < cols(); ++j) out.columns_[j] = columns_[j].scaled(-1, ring);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

std::vector<std::vector<Integer>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Integer>> out(rows_, std::vector<Integer>(cols(), 0));
  for (std::size_t j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j].entries()) out[e.index][j] = e.value;
  return out;
}

}  // namespace ihtw

#include "ihtw/elimination.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ihtw {

namespace {

using Line = std::map<Index, Integer>;

Integer value_in(const Line& line, Index k) {
  auto it = line.find(k);
  return it == line.end() ? Integer(0) : it->second;
}

void store(Line& line, Index k, Integer v) {
  if (v.is_zero()) {
    line.erase(k);
  } else {
    line[k] = std::move(v);
  }
}

// Sparse lines (rows or columns of a transform) under elementary operations.
class LineStore {
 public:
  LineStore() = default;
  explicit LineStore(std::size_t n) : enabled_(true), lines_(n) {
    for (std::size_t i = 0; i < n; ++i) lines_[i][static_cast<Index>(i)] = 1;
  }

  bool active() const { return enabled_; }

  // L_i <- a L_i + b L_j ; L_j <- c L_i + d L_j
  void combine(Index i, Index j, const Integer& a, const Integer& b, const Integer& c,
               const Integer& d, const EngineRing& ring) {
    if (!active()) return;
    Line ni, nj;
    std::set<Index> keys;
    for (const auto& [k, v] : lines_[i]) keys.insert(k);
    for (const auto& [k, v] : lines_[j]) keys.insert(k);
    for (Index k : keys) {
      Integer vi = value_in(lines_[i], k), vj = value_in(lines_[j], k);
      store(ni, k, ring.reduce(a * vi + b * vj));
      store(nj, k, ring.reduce(c * vi + d * vj));
    }
    lines_[i] = std::move(ni);
    lines_[j] = std::move(nj);
  }

  // L_dst += q L_src
  void axpy(Index dst, const Integer& q, Index src, const EngineRing& ring) {
    if (!active() || q.is_zero()) return;
    Line& target = lines_[dst];
    for (const auto& [k, v] : lines_[src]) store(target, k, ring.reduce(value_in(target, k) + q * v));
  }

  void scale(Index i, const Integer& w, const EngineRing& ring) {
    if (!active()) return;
    Line scaled;
    for (const auto& [k, v] : lines_[i]) store(scaled, k, ring.reduce(v * w));
    lines_[i] = std::move(scaled);
  }

  SparseMatrix as_columns(std::size_t other_dim) const {
    SparseMatrix m(other_dim, lines_.size());
    for (std::size_t j = 0; j < lines_.size(); ++j)
      for (const auto& [k, v] : lines_[j]) m.column(j).push_back(k, v);
    return m;
  }

  SparseMatrix as_rows(std::size_t other_dim) const { return as_columns(other_dim).transpose(); }

 private:
  bool enabled_ = false;
  std::vector<Line> lines_;
};

// Working copy of the matrix indexed both by row and by column.
class WorkMatrix {
 public:
  WorkMatrix(const SparseMatrix& m, const EngineRing& ring)
      : ring_(ring), rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      for (const auto& e : m.column(j).entries()) {
        Integer v = ring.reduce(e.value);
        if (v.is_zero()) continue;
        rows_[e.index][static_cast<Index>(j)] = v;
        cols_[j].insert(e.index);
      }
    }
  }

  const Line& row(Index i) const { return rows_[i]; }
  const std::set<Index>& col(Index j) const { return cols_[j]; }
  std::size_t row_count() const { return rows_.size(); }
  Integer get(Index i, Index j) const { return value_in(rows_[i], j); }

  void set(Index i, Index j, Integer v) {
    v = ring_.reduce(std::move(v));
    if (v.is_zero()) {
      rows_[i].erase(j);
      cols_[j].erase(i);
    } else {
      rows_[i][j] = std::move(v);
      cols_[j].insert(i);
    }
  }

  void row_combine(Index i, Index j, const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d) {
    std::set<Index> keys;
    for (const auto& [k, v] : rows_[i]) keys.insert(k);
    for (const auto& [k, v] : rows_[j]) keys.insert(k);
    for (Index k : keys) {
      Integer vi = get(i, k), vj = get(j, k);
      set(i, k, a * vi + b * vj);
      set(j, k, c * vi + d * vj);
    }
  }

  void col_combine(Index i, Index j, const Integer& a, const Integer& b, const Integer& c,
                   const Integer& d) {
    std::set<Index> keys = cols_[i];
    keys.insert(cols_[j].begin(), cols_[j].end());
    for (Index r : keys) {
      Integer vi = get(r, i), vj = get(r, j);
      set(r, i, a * vi + b * vj);
      set(r, j, c * vi + d * vj);
    }
  }

  void row_axpy(Index dst, const Integer& q, Index src) {
    Line source = rows_[src];
    for (const auto& [k, v] : source) set(dst, k, get(dst, k) + q * v);
  }

  void col_axpy(Index dst, const Integer& q, Index src) {
    std::set<Index> source = cols_[src];
    for (Index r : source) set(r, dst, get(r, dst) + q * get(r, src));
  }

  void row_scale(Index i, const Integer& w) {
    Line source = rows_[i];
    for (const auto& [k, v] : source) set(i, k, v * w);
  }

 private:
  const EngineRing& ring_;
  std::vector<Line> rows_;
  std::vector<std::set<Index>> cols_;
};

class Eliminator {
 public:
  Eliminator(const SparseMatrix& m, const EngineRing& ring, EliminationOptions options)
      : ring_(ring), work_(m, ring), rows_(m.rows()), cols_(m.cols()) {
    if (options.row_transform) {
      U_ = LineStore(m.rows());
      U_inv_ = LineStore(m.rows());
    }
    if (options.column_transform) {
      V_ = LineStore(m.cols());
      V_inv_ = LineStore(m.cols());
    }
  }

  Elimination run() {
    while (auto p = find_unit_pivot()) eliminate_unit(p->first, p->second);
    while (auto p = find_smallest_entry()) eliminate_general(p->first, p->second);

    Elimination out;
    out.rows = rows_;
    out.cols = cols_;
    out.pivots = std::move(pivots_);
    if (U_.active()) {
      out.U = U_.as_rows(rows_);
      out.U_inverse = U_inv_.as_columns(rows_);
    }
    if (V_.active()) {
      out.V = V_.as_columns(cols_);
      out.V_inverse = V_inv_.as_rows(cols_);
    }
    return out;
  }

 private:
  // Markowitz choice among unit entries; ties go to the first in (row, col) order.
  std::optional<std::pair<Index, Index>> find_unit_pivot() const {
    std::optional<std::pair<Index, Index>> best;
    std::size_t best_cost = 0;
    for (Index i = 0; i < work_.row_count(); ++i) {
      const Line& row = work_.row(i);
      if (row.empty()) continue;
      for (const auto& [j, v] : row) {
        if (!ring_.is_unit(v)) continue;
        std::size_t cost = (row.size() - 1) * (work_.col(j).size() - 1);
        if (!best || cost < best_cost) {
          best = {i, j};
          best_cost = cost;
          if (cost == 0) return best;
        }
      }
    }
    return best;
  }

  std::optional<std::pair<Index, Index>> find_smallest_entry() const {
    std::optional<std::pair<Index, Index>> best;
    Integer best_norm;
    for (Index i = 0; i < work_.row_count(); ++i) {
      for (const auto& [j, v] : work_.row(i)) {
        Integer n = ring_.norm(v);
        if (!best || n < best_norm) {
          best = {i, j};
          best_norm = n;
        }
      }
    }
    return best;
  }

  void row_axpy(Index dst, const Integer& q, Index src) {
    Integer qq = ring_.reduce(q);
    if (qq.is_zero()) return;
    work_.row_axpy(dst, qq, src);
    U_.axpy(dst, qq, src, ring_);
    U_inv_.axpy(src, ring_.reduce(-qq), dst, ring_);
  }

  void col_axpy(Index dst, const Integer& q, Index src) {
    Integer qq = ring_.reduce(q);
    if (qq.is_zero()) return;
    work_.col_axpy(dst, qq, src);
    V_.axpy(dst, qq, src, ring_);
    V_inv_.axpy(src, ring_.reduce(-qq), dst, ring_);
  }

  void row_combine(Index i, Index j, const GcdStep& g) {
    work_.row_combine(i, j, g.s, g.t, g.u, g.v);
    U_.combine(i, j, g.s, g.t, g.u, g.v, ring_);
    U_inv_.combine(i, j, g.v, ring_.reduce(-g.u), ring_.reduce(-g.t), g.s, ring_);
  }

  void col_combine(Index i, Index j, const GcdStep& g) {
    work_.col_combine(i, j, g.s, g.t, g.u, g.v);
    V_.combine(i, j, g.s, g.t, g.u, g.v, ring_);
    V_inv_.combine(i, j, g.v, ring_.reduce(-g.u), ring_.reduce(-g.t), g.s, ring_);
  }

  void row_scale(Index i, const Integer& unit) {
    work_.row_scale(i, unit);
    U_.scale(i, unit, ring_);
    U_inv_.scale(i, ring_.inverse(unit), ring_);
  }

  void record(Index r, Index c) {
    Integer p = work_.get(r, c);
    if (!ring_.modular() && p < 0) {
      row_scale(r, -1);
      p = -p;
    }
    work_.set(r, c, 0);
    pivots_.push_back({r, c, p});
  }

  void eliminate_unit(Index r, Index c) {
    Integer inv = ring_.inverse(work_.get(r, c));
    std::vector<Index> others(work_.col(c).begin(), work_.col(c).end());
    for (Index i : others)
      if (i != r) row_axpy(i, -work_.get(i, c) * inv, r);
    std::vector<Index> targets;
    for (const auto& [j, v] : work_.row(r))
      if (j != c) targets.push_back(j);
    for (Index j : targets) col_axpy(j, -work_.get(r, j) * inv, c);
    record(r, c);
  }

  void eliminate_general(Index r, Index c) {
    for (;;) {
      // Clear column c below/above the pivot with row operations.
      std::vector<Index> others(work_.col(c).begin(), work_.col(c).end());
      for (Index i : others) {
        if (i == r) continue;
        Integer a = work_.get(i, c);
        if (a.is_zero()) continue;
        row_combine(r, i, ring_.gcd_step(work_.get(r, c), a));
      }
      // Clear row r; a non-divisible entry refills column c, so loop again.
      bool refilled = false;
      std::vector<Index> targets;
      for (const auto& [j, v] : work_.row(r))
        if (j != c) targets.push_back(j);
      for (Index j : targets) {
        Integer a = work_.get(r, j);
        if (a.is_zero()) continue;
        Integer p = work_.get(r, c);
        if (ring_.divides(p, a)) {
          col_axpy(j, -ring_.quotient(p, a), c);
        } else {
          col_combine(c, j, ring_.gcd_step(p, a));
          refilled = true;
        }
      }
      if (refilled) continue;
      // Every remaining entry must be a multiple of the pivot.
      Integer p = work_.get(r, c);
      std::optional<Index> offending;
      for (Index i = 0; i < work_.row_count() && !offending; ++i) {
        if (i == r) continue;
        for (const auto& [j, v] : work_.row(i)) {
          if (!ring_.divides(p, v)) {
            offending = i;
            break;
          }
        }
      }
      if (!offending) break;
      row_axpy(r, 1, *offending);
    }
    record(r, c);
  }

  const EngineRing& ring_;
  WorkMatrix work_;
  std::size_t rows_, cols_;
  LineStore U_, U_inv_, V_, V_inv_;
  std::vector<Pivot> pivots_;
};

}  // namespace

std::vector<Index> Elimination::free_columns() const {
  std::vector<bool> used(cols, false);
  for (const auto& p : pivots) used[p.col] = true;
  std::vector<Index> out;
  for (std::size_t j = 0; j < cols; ++j)
    if (!used[j]) out.push_back(static_cast<Index>(j));
  return out;
}

std::vector<Index> Elimination::free_rows() const {
  std::vector<bool> used(rows, false);
  for (const auto& p : pivots) used[p.row] = true;
  std::vector<Index> out;
  for (std::size_t i = 0; i < rows; ++i)
    if (!used[i]) out.push_back(static_cast<Index>(i));
  return out;
}

Elimination eliminate(const SparseMatrix& m, const EngineRing& ring, EliminationOptions options) {
  return Eliminator(m, ring, options).run();
}

SmithForm smith_normal_form(const SparseMatrix& m, const CoefficientRing& coefficients) {
  EngineRing ring(coefficients);
  Elimination e = eliminate(m, ring, {.column_transform = true, .row_transform = true});
  // Permute so that pivot k sits at (k, k).
  std::vector<Index> row_order, col_order;
  for (const auto& p : e.pivots) {
    row_order.push_back(p.row);
    col_order.push_back(p.col);
  }
  for (Index i : e.free_rows()) row_order.push_back(i);
  for (Index j : e.free_columns()) col_order.push_back(j);

  SmithForm out;
  SparseMatrix Ut = e.U->transpose();  // columns of Ut are rows of U
  SparseMatrix U(m.rows(), m.rows());
  for (std::size_t k = 0; k < row_order.size(); ++k) U.column(k) = Ut.column(row_order[k]);
  out.U = U.transpose();
  out.V = SparseMatrix(m.cols(), m.cols());
  for (std::size_t k = 0; k < col_order.size(); ++k) out.V.column(k) = e.V->column(col_order[k]);
  out.D = SparseMatrix(m.rows(), m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    out.D.column(k) = SparseVector::unit(static_cast<Index>(k), e.pivots[k].value);
    out.diagonal.push_back(e.pivots[k].value);
  }
  return out;
}

}  // namespace ihtw

#include "ihtw/homology.hpp"

#include "ihtw/elimination.hpp"

#include <limits>
#include <sstream>

namespace ihtw {

namespace detail {

struct ClassLocator {
  EngineRing ring{CoefficientRing::integers()};
  SparseMatrix outgoing;                  // boundary(k), for the cycle test
  std::vector<SparseVector> kernel_rows;  // y_i = row_i . x / scale_i
  std::vector<Integer> kernel_scale;
  std::vector<SparseVector> class_rows;   // over kernel coordinates
  std::vector<Integer> class_orders;      // 0 for free generators
};

}  // namespace detail

namespace {

constexpr Index kAbsent = std::numeric_limits<Index>::max();

Integer reduce_mod(const Integer& z, const Integer& d) {
  Integer r = z % d;
  if (r < 0) r += d;
  return r;
}

SparseVector row_of(const SparseMatrix& transposed, Index r) { return transposed.column(r); }

}  // namespace

std::vector<Integer> HomologyGroup::coordinates(const SparseVector& cycle) const {
  const auto& loc = *locator_;
  if (!loc.outgoing.apply(cycle, loc.ring).empty())
    throw std::invalid_argument("vector is not a cycle in degree " + std::to_string(degree_));
  std::vector<Entry> kc;
  for (std::size_t i = 0; i < loc.kernel_rows.size(); ++i) {
    Integer y = loc.kernel_rows[i].dot(cycle, loc.ring);
    if (y.is_zero()) continue;
    if (loc.kernel_scale[i] != 1) y = loc.ring.quotient(loc.kernel_scale[i], y);
    kc.push_back({static_cast<Index>(i), std::move(y)});
  }
  SparseVector k = SparseVector::from_entries(std::move(kc), loc.ring);
  std::vector<Integer> out;
  for (std::size_t g = 0; g < loc.class_rows.size(); ++g) {
    Integer z = loc.class_rows[g].dot(k, loc.ring);
    if (!loc.class_orders[g].is_zero()) z = reduce_mod(z, loc.class_orders[g]);
    out.push_back(std::move(z));
  }
  return out;
}

bool HomologyGroup::is_boundary(const SparseVector& cycle) const {
  for (const auto& z : coordinates(cycle))
    if (!z.is_zero()) return false;
  return true;
}

std::string HomologyGroup::to_string() const {
  std::vector<std::string> parts;
  if (rank_ > 0) {
    std::string base = ring_.symbol();
    if (rank_ == 1) {
      parts.push_back(base);
    } else {
      if (ring_.kind() == RingKind::Modular) base = "(" + base + ")";
      parts.push_back(base + "^" + std::to_string(rank_));
    }
  }
  for (const auto& d : torsion_) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

HomologyGroup homology(const PresentedComplex& c, int k) {
  HomologyGroup h(c.ring(), k);
  auto loc = std::make_shared<detail::ClassLocator>();
  loc->ring = c.engine();
  const EngineRing& ring = loc->ring;
  const bool rational = c.ring().kind() == RingKind::Rationals;
  const SparseMatrix a = c.boundary(k);
  const SparseMatrix b = c.boundary(k + 1);
  loc->outgoing = a;

  // Kernel of the outgoing boundary.
  Elimination ea = eliminate(a, ring, {.column_transform = true});
  const SparseMatrix v_rows = ea.V_inverse->transpose();
  std::vector<SparseVector> kernel;
  std::vector<Integer> kernel_order;
  for (Index col : ea.free_columns()) {
    kernel.push_back(ea.V->column(col));
    loc->kernel_rows.push_back(row_of(v_rows, col));
    loc->kernel_scale.push_back(1);
    kernel_order.push_back(0);
  }
  if (ring.modular()) {
    // Over Z/m a non-unit pivot a leaves the cyclic summand generated by (m/g) e, g = gcd(a, m).
    for (const auto& p : ea.pivots) {
      Integer g = ring.norm(p.value);
      if (g == 1) continue;
      Integer t = ring.modulus() / g;
      kernel.push_back(ea.V->column(p.col).scaled(t, ring));
      loc->kernel_rows.push_back(row_of(v_rows, p.col));
      loc->kernel_scale.push_back(t);
      kernel_order.push_back(g);
    }
  }

  // Relations: the image of the incoming boundary in kernel coordinates.
  const std::size_t n = kernel.size();
  std::vector<SparseVector> relation_columns;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    const SparseVector& x = b.column(j);
    std::vector<Entry> coords;
    for (std::size_t i = 0; i < n; ++i) {
      Integer y = loc->kernel_rows[i].dot(x, ring);
      if (y.is_zero()) continue;
      if (loc->kernel_scale[i] != 1) y = ring.quotient(loc->kernel_scale[i], y);
      coords.push_back({static_cast<Index>(i), std::move(y)});
    }
    relation_columns.push_back(SparseVector::from_entries(std::move(coords), ring));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!kernel_order[i].is_zero()) relation_columns.push_back(SparseVector::unit(static_cast<Index>(i), kernel_order[i]));
  SparseMatrix rel(n, relation_columns.size());
  for (std::size_t j = 0; j < relation_columns.size(); ++j) rel.column(j) = std::move(relation_columns[j]);

  Elimination er = eliminate(rel, ring, {.row_transform = true});
  const SparseMatrix u_rows = er.U->transpose();
  auto add_generator = [&](Index r, Integer order) {
    SparseVector rep;
    for (const auto& e : er.U_inverse->column(r).entries()) rep.axpy(e.value, kernel[e.index], ring);
    h.representatives_.push_back(std::move(rep));
    loc->class_rows.push_back(row_of(u_rows, r));
    loc->class_orders.push_back(std::move(order));
  };
  if (!rational) {
    for (const auto& p : er.pivots) {
      if (ring.is_unit(p.value)) continue;
      Integer d = ring.ideal_generator(p.value);
      h.torsion_.push_back(d);
      add_generator(p.row, d);
    }
  }
  for (Index r : er.free_rows()) {
    add_generator(r, 0);
    ++h.rank_;
  }
  h.locator_ = std::move(loc);
  return h;
}

bool class_equal(const SparseVector& a, const SparseVector& b, const HomologyGroup& h) {
  EngineRing ring(h.ring());
  SparseVector diff = a;
  diff.axpy(-1, b, ring);
  return h.is_boundary(diff);
}

bool class_equal(const SparseVector& a, const SparseVector& b, const PresentedComplex& c, int k) {
  return class_equal(a, b, homology(c, k));
}

bool InducedMap::is_zero() const {
  for (const auto& row : matrix)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

bool InducedMap::is_surjective() const {
  EngineRing ring(target.ring());
  const std::size_t rows = target.generator_count();
  const std::size_t cols = source.generator_count();
  SparseMatrix m(rows, cols + target.torsion().size());
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Entry> e;
    for (std::size_t i = 0; i < rows; ++i) e.push_back({static_cast<Index>(i), matrix[i][j]});
    m.column(j) = SparseVector::from_entries(std::move(e), ring);
  }
  for (std::size_t t = 0; t < target.torsion().size(); ++t)
    m.column(cols + t) = SparseVector::unit(static_cast<Index>(t), target.torsion()[t]);
  Elimination e = eliminate(m, ring);
  if (e.rank() != rows) return false;
  if (target.ring().kind() == RingKind::Rationals) return true;
  for (const auto& p : e.pivots)
    if (!ring.is_unit(p.value)) return false;
  return true;
}

bool InducedMap::is_isomorphism() const {
  // A surjection between isomorphic finitely generated modules is bijective.
  return isomorphic(source, target) && is_surjective();
}

InducedMap induced_map(const ChainMap& f, int k, const HomologyGroup& source, const HomologyGroup& target) {
  EngineRing ring(f.source->ring());
  InducedMap out{source, target, {}};
  out.matrix.assign(target.generator_count(), std::vector<Integer>(source.generator_count()));
  const SparseMatrix fk = f.component(k);
  for (std::size_t j = 0; j < source.generator_count(); ++j) {
    auto coords = target.coordinates(fk.apply(source.representatives()[j], ring));
    for (std::size_t i = 0; i < coords.size(); ++i) out.matrix[i][j] = std::move(coords[i]);
  }
  return out;
}

InducedMap induced_map(const ChainMap& f, int k) {
  f.verify();
  return induced_map(f, k, homology(*f.source, k), homology(*f.target, k + f.shift));
}

std::optional<SparseVector> FreeSubmodule::coordinates(const SparseVector& x) const {
  EngineRing ring(ring_);
  SparseVector local;
  std::vector<Entry> entries;
  for (const auto& e : x.entries()) {
    if (e.index >= local_of_.size() || local_of_[e.index] == kAbsent) return std::nullopt;
    entries.push_back({local_of_[e.index], e.value});
  }
  local = SparseVector::from_entries(std::move(entries), ring);
  if (!constraint_.apply(local, ring).empty()) return std::nullopt;
  std::vector<Entry> coords;
  for (std::size_t i = 0; i < inverse_rows_.size(); ++i) {
    Integer y = inverse_rows_[i].dot(local, ring);
    if (!y.is_zero()) coords.push_back({static_cast<Index>(i), std::move(y)});
  }
  return SparseVector::from_entries(std::move(coords), ring);
}

FreeSubmodule restricted_kernel(const SparseMatrix& m, const std::vector<Index>& columns,
                                const std::vector<Index>& rows, const CoefficientRing& coefficients) {
  EngineRing ring(coefficients);
  FreeSubmodule out;
  out.ring_ = coefficients;
  out.ambient_dimension_ = m.cols();
  out.local_of_.assign(m.cols(), kAbsent);
  for (std::size_t j = 0; j < columns.size(); ++j) out.local_of_[columns[j]] = static_cast<Index>(j);
  std::vector<Index> row_local(m.rows(), kAbsent);
  for (std::size_t i = 0; i < rows.size(); ++i) row_local[rows[i]] = static_cast<Index>(i);

  out.constraint_ = SparseMatrix(rows.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    std::vector<Entry> col;
    for (const auto& e : m.column(columns[j]).entries())
      if (row_local[e.index] != kAbsent) col.push_back({row_local[e.index], e.value});
    out.constraint_.column(j) = SparseVector::from_entries(std::move(col), ring);
  }

  Elimination e = eliminate(out.constraint_, ring, {.column_transform = true});
  if (ring.modular()) {
    for (const auto& p : e.pivots)
      if (!ring.is_unit(p.value))
        throw NonFreeModuleError("kernel is not free over " + coefficients.symbol());
  }
  const SparseMatrix v_rows = e.V_inverse->transpose();
  for (Index c : e.free_columns()) {
    std::vector<Entry> ambient;
    for (const auto& x : e.V->column(c).entries()) ambient.push_back({columns[x.index], x.value});
    out.basis_.push_back(SparseVector::from_entries(std::move(ambient), ring));
    out.inverse_rows_.push_back(v_rows.column(c));
  }
  return out;
}

const FreeSubmodule& Subcomplex::module(int k) const {
  return modules.at(static_cast<std::size_t>(k - ambient->min_degree()));
}

std::optional<SparseVector> Subcomplex::coordinates(int k, const SparseVector& ambient_chain) const {
  if (k < ambient->min_degree() || k > ambient->max_degree()) {
    if (ambient_chain.empty()) return SparseVector{};
    return std::nullopt;
  }
  return module(k).coordinates(ambient_chain);
}

Subcomplex allowable_subcomplex(const ComplexPtr& ambient, const std::function<bool(int, Index)>& allowed) {
  Subcomplex out;
  out.ambient = ambient;
  const CoefficientRing& coefficients = ambient->ring();
  EngineRing ring(coefficients);
  std::vector<std::size_t> ranks;
  for (int k = ambient->min_degree(); k <= ambient->max_degree(); ++k) {
    std::vector<Index> columns, rows;
    for (Index i = 0; i < ambient->rank(k); ++i)
      if (allowed(k, i)) columns.push_back(i);
    if (k > ambient->min_degree())
      for (Index j = 0; j < ambient->rank(k - 1); ++j)
        if (!allowed(k - 1, j)) rows.push_back(j);
    out.modules.push_back(restricted_kernel(ambient->boundary(k), columns, rows, coefficients));
    ranks.push_back(out.modules.back().rank());
  }
  auto complex = std::make_shared<PresentedComplex>(coefficients, ambient->min_degree(), ranks);
  for (int k = ambient->min_degree() + 1; k <= ambient->max_degree(); ++k) {
    const SparseMatrix d = ambient->boundary(k);
    const auto& below = out.module(k - 1);
    SparseMatrix m(below.rank(), out.module(k).rank());
    for (std::size_t j = 0; j < out.module(k).rank(); ++j) {
      auto coords = below.coordinates(d.apply(out.module(k).basis()[j], ring));
      if (!coords) throw std::logic_error("subcomplex is not closed under the boundary");
      m.column(j) = std::move(*coords);
    }
    complex->set_boundary(k, std::move(m));
  }
  out.complex = complex;
  out.inclusion = ChainMap{complex, ambient, 0, {}};
  for (int k = ambient->min_degree(); k <= ambient->max_degree(); ++k) {
    SparseMatrix incl(ambient->rank(k), out.module(k).rank());
    for (std::size_t j = 0; j < out.module(k).rank(); ++j) incl.column(j) = out.module(k).basis()[j];
    out.inclusion.components.push_back(std::move(incl));
  }
  return out;
}

}  // namespace ihtw

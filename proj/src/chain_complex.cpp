#include "ihtw/chain_complex.hpp"

namespace ihtw {

PresentedComplex::PresentedComplex(CoefficientRing ring, int min_degree, std::vector<std::size_t> ranks)
    : ring_(std::move(ring)), min_degree_(min_degree), ranks_(std::move(ranks)) {
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    std::size_t below = i == 0 ? 0 : ranks_[i - 1];
    boundaries_.emplace_back(below, ranks_[i]);
  }
}

std::size_t PresentedComplex::rank(int k) const {
  if (k < min_degree_ || k > max_degree()) return 0;
  return ranks_[k - min_degree_];
}

SparseMatrix PresentedComplex::boundary(int k) const {
  if (k < min_degree_ || k > max_degree()) return SparseMatrix(rank(k - 1), rank(k));
  return boundaries_[k - min_degree_];
}

void PresentedComplex::set_boundary(int k, SparseMatrix m) {
  if (k < min_degree_ || k > max_degree())
    throw std::out_of_range("boundary degree outside complex");
  if (m.rows() != rank(k - 1) || m.cols() != rank(k))
    throw std::invalid_argument("boundary matrix has wrong shape in degree " + std::to_string(k));
  boundaries_[k - min_degree_] = std::move(m);
}

std::optional<int> PresentedComplex::square_zero_violation() const {
  EngineRing ring(ring_);
  for (int k = min_degree_ + 1; k <= max_degree(); ++k) {
    if (!boundary(k - 1).multiply(boundary(k), ring).is_zero()) return k;
  }
  return std::nullopt;
}

PresentedComplex dual_complex(const PresentedComplex& c, bool graded) {
  std::vector<std::size_t> ranks;
  for (int k = c.max_degree(); k >= c.min_degree(); --k) ranks.push_back(c.rank(k));
  PresentedComplex out(c.ring(), -c.max_degree(), ranks);
  // d: C^k -> C^{k+1} is the transpose of boundary(k+1), placed in degree -k.
  EngineRing ring(c.ring());
  for (int k = c.min_degree(); k < c.max_degree(); ++k) {
    SparseMatrix d = c.boundary(k + 1).transpose();
    if (graded && k % 2 == 0) d = d.negated(ring);
    out.set_boundary(-k, std::move(d));
  }
  return out;
}

SparseMatrix ChainMap::component(int k) const {
  if (k < source->min_degree() || k > source->max_degree())
    return SparseMatrix(target->rank(k + shift), source->rank(k));
  return components[k - source->min_degree()];
}

void ChainMap::verify() const {
  EngineRing ring(source->ring());
  for (int k = source->min_degree(); k <= source->max_degree(); ++k) {
    const SparseMatrix f = component(k);
    if (f.rows() != target->rank(k + shift) || f.cols() != source->rank(k))
      throw ChainMapError(k, "chain map component has wrong shape in degree " + std::to_string(k));
    SparseMatrix lhs = target->boundary(k + shift).multiply(f, ring);
    SparseMatrix rhs = component(k - 1).multiply(source->boundary(k), ring);
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      SparseVector diff = lhs.column(j);
      diff.axpy(-1, rhs.column(j), ring);
      if (!diff.empty())
        throw ChainMapError(k, "map does not commute with boundaries in degree " + std::to_string(k));
    }
  }
}

ChainMap identity_map(const ComplexPtr& c) {
  ChainMap f{c, c, 0, {}};
  for (int k = c->min_degree(); k <= c->max_degree(); ++k) f.components.push_back(SparseMatrix::identity(c->rank(k)));
  return f;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  EngineRing ring(f.source->ring());
  ChainMap out{f.source, g.target, f.shift + g.shift, {}};
  for (int k = f.source->min_degree(); k <= f.source->max_degree(); ++k)
    out.components.push_back(g.component(k + f.shift).multiply(f.component(k), ring));
  return out;
}

}  // namespace ihtw

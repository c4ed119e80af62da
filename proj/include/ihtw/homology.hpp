#pragma once

#include "ihtw/chain_complex.hpp"

#include <functional>
#include <string>

namespace ihtw {

namespace detail {
struct ClassLocator;
}

/// H_k of a presented complex: rank, invariant factors and one cycle per generator.
///
/// Generators are ordered torsion first (d1 | d2 | ...), then free. Over Z/m a free
/// generator spans a copy of Z/m; over Q torsion never appears.
class HomologyGroup {
 public:
  const CoefficientRing& ring() const { return ring_; }
  int degree() const { return degree_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  const std::vector<SparseVector>& representatives() const { return representatives_; }
  std::size_t generator_count() const { return representatives_.size(); }
  /// Torsion order of generator i, or 0 when the generator is free.
  Integer order(std::size_t i) const { return i < torsion_.size() ? torsion_[i] : Integer(0); }
  bool is_zero() const { return rank_ == 0 && torsion_.empty(); }

  /// Class of a cycle on the generators. Torsion coordinates are reduced modulo their
  /// order (free ones modulo m over Z/m). Throws std::invalid_argument for non-cycles.
  std::vector<Integer> coordinates(const SparseVector& cycle) const;
  bool is_boundary(const SparseVector& cycle) const;

  /// `Z^2 + Z/2`, `Q`, `(Z/3)^2`, `0`, ...
  std::string to_string() const;

  friend bool isomorphic(const HomologyGroup& a, const HomologyGroup& b) {
    return a.ring_ == b.ring_ && a.rank_ == b.rank_ && a.torsion_ == b.torsion_;
  }

 private:
  friend HomologyGroup homology(const PresentedComplex& c, int k);
  HomologyGroup(CoefficientRing ring, int degree) : ring_(std::move(ring)), degree_(degree) {}

  CoefficientRing ring_;
  int degree_;
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
  std::vector<SparseVector> representatives_;
  std::shared_ptr<const detail::ClassLocator> locator_;
};

/// Isomorphism type of ker d_k / im d_{k+1} with explicit representatives. Degrees
/// outside the complex give the zero group.
HomologyGroup homology(const PresentedComplex& c, int k);

/// True iff a - b is a boundary; both must be cycles of degree k.
bool class_equal(const SparseVector& a, const SparseVector& b, const PresentedComplex& c, int k);
bool class_equal(const SparseVector& a, const SparseVector& b, const HomologyGroup& h);

/// Map on homology expressed on the chosen generators (rows: target, columns: source).
struct InducedMap {
  HomologyGroup source;
  HomologyGroup target;
  std::vector<std::vector<Integer>> matrix;

  bool is_zero() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
};

/// Verifies f is a chain map (throws ChainMapError otherwise) and computes H_k(f).
InducedMap induced_map(const ChainMap& f, int k);
/// Same, reusing already computed groups for the source and target degrees.
InducedMap induced_map(const ChainMap& f, int k, const HomologyGroup& source, const HomologyGroup& target);

class NonFreeModuleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Free submodule of R^n given as a kernel; carries an exact coordinate map.
class FreeSubmodule {
 public:
  std::size_t ambient_dimension() const { return ambient_dimension_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }
  /// Coordinates on basis(), or nullopt if x is not in the submodule.
  std::optional<SparseVector> coordinates(const SparseVector& x) const;
  bool contains(const SparseVector& x) const { return coordinates(x).has_value(); }

 private:
  friend FreeSubmodule restricted_kernel(const SparseMatrix&, const std::vector<Index>&,
                                         const std::vector<Index>&, const CoefficientRing&);
  CoefficientRing ring_ = CoefficientRing::integers();
  std::size_t ambient_dimension_ = 0;
  std::vector<SparseVector> basis_;
  std::vector<Index> local_of_;          // ambient index -> local column, or npos
  SparseMatrix constraint_;              // restricted matrix on local columns
  std::vector<SparseVector> inverse_rows_;
};

/// {x supported on `columns` : (m x)_r = 0 for every r in `rows`}. The basis is read
/// off a deterministic elimination, so repeated runs produce identical bases. Throws
/// NonFreeModuleError over Z/m (m composite) when the kernel is not free.
FreeSubmodule restricted_kernel(const SparseMatrix& m, const std::vector<Index>& columns,
                                const std::vector<Index>& rows, const CoefficientRing& ring);

/// The subcomplex {x allowable : d x allowable} of an ambient complex, where
/// allowability is a predicate on basis elements per degree.
struct Subcomplex {
  ComplexPtr ambient;
  ComplexPtr complex;
  std::vector<FreeSubmodule> modules;  // indexed by k - ambient->min_degree()
  ChainMap inclusion;

  const FreeSubmodule& module(int k) const;
  std::optional<SparseVector> coordinates(int k, const SparseVector& ambient_chain) const;
};

Subcomplex allowable_subcomplex(const ComplexPtr& ambient, const std::function<bool(int, Index)>& allowed);

}  // namespace ihtw

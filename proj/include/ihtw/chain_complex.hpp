#pragma once

#include "ihtw/sparse.hpp"

#include <memory>
#include <stdexcept>

namespace ihtw {

/// Finite chain complex of free modules with boundaries of degree -1. Cochain complexes
/// are stored in negative degrees: cochain degree k lives in chain degree -k, so the
/// coboundary d: C^k -> C^{k+1} is the chain boundary from degree -k to -k-1.
class PresentedComplex {
 public:
  PresentedComplex(CoefficientRing ring, int min_degree, std::vector<std::size_t> ranks);

  const CoefficientRing& ring() const { return ring_; }
  EngineRing engine() const { return EngineRing(ring_); }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t rank(int k) const;

  /// Boundary C_k -> C_{k-1}; the zero map outside the stored range.
  SparseMatrix boundary(int k) const;
  void set_boundary(int k, SparseMatrix m);

  /// First degree k with boundary(k-1) * boundary(k) != 0, if any.
  std::optional<int> square_zero_violation() const;

 private:
  CoefficientRing ring_;
  int min_degree_;
  std::vector<std::size_t> ranks_;
  std::vector<SparseMatrix> boundaries_;
};

using ComplexPtr = std::shared_ptr<const PresentedComplex>;

/// Hom(C, R): degree k of C becomes degree -k, boundaries are transposed. With
/// `graded` the coboundary is d f = -(-1)^|f| f o d, the sign that makes tensor
/// products of cochain complexes pair with tensor products of chains.
PresentedComplex dual_complex(const PresentedComplex& c, bool graded = false);

class ChainMapError : public std::runtime_error {
 public:
  ChainMapError(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

/// f_k: source_k -> target_{k+shift}.
struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  int shift = 0;
  std::vector<SparseMatrix> components;  // indexed by k - source->min_degree()

  SparseMatrix component(int k) const;
  /// Throws ChainMapError naming the first degree where f d != d f.
  void verify() const;
};

ChainMap identity_map(const ComplexPtr& c);
ChainMap compose(const ChainMap& g, const ChainMap& f);

}  // namespace ihtw

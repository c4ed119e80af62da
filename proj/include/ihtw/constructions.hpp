#pragma once

#include "ihtw/filtered_complex.hpp"

namespace ihtw {

/// Apex in stratum 0, the vertices of K shifted up one stratum; dimension n + 1.
FilteredComplex cone(const FilteredComplex& k);
/// Two apexes `north` and `south` in stratum 0, K shifted as for the cone.
FilteredComplex suspension(const FilteredComplex& k);

struct Subdivision {
  FilteredComplex complex;
  std::vector<Simplex> carrier;  // carrier simplex of K for each new vertex
};

/// Vertices are the simplices of K, placed in the deepest stratum of their carrier;
/// simplices are chains of faces.
Subdivision barycentric_subdivision(const FilteredComplex& k);

/// A vertex involution of K transported to its subdivision.
std::vector<Index> subdivide_involution(const FilteredComplex& k, const Subdivision& sd,
                                        const std::vector<Index>& involution);

class QuotientError : public InputError {
 public:
  QuotientError(const std::string& what, std::vector<Simplex> witness)
      : InputError(what), witness_(std::move(witness)) {}
  const std::vector<Simplex>& witness() const { return witness_; }

 private:
  std::vector<Simplex> witness_;
};

/// K / (Z/2) for a free simplicial involution such that no simplex meets its image.
/// Each orbit keeps the name and stratum of its first vertex.
FilteredComplex antipodal_quotient(const FilteredComplex& k, const std::vector<Index>& involution);

struct SymmetricComplex {
  FilteredComplex complex;
  std::vector<Index> involution;
};

/// Boundary of the (d+1)-dimensional cross-polytope, a d-sphere, with x -> -x.
SymmetricComplex cross_polytope_boundary(int d);
/// The join of two hexagons, a 3-sphere, with the antipodal map on both factors.
SymmetricComplex hexagon_join();
/// sd^levels(K) / involution.
FilteredComplex symmetric_quotient(const SymmetricComplex& k, int levels);

/// Boundary of the (n+1)-simplex with the trivial filtration.
FilteredComplex boundary_simplex(int n);
/// sd(boundary of the (d+1)-cross-polytope) / antipode.
FilteredComplex real_projective_space(int d);

/// `s<n>`, `rp2`, `rp3`, `rp3-hex`, `sigma-rp3`, `cone:<name>`, `susp:<name>`.
FilteredComplex builtin_complex(std::string_view name);

}  // namespace ihtw

#pragma once

#include "ihtw/filtered_complex.hpp"
#include "ihtw/homology.hpp"
#include "ihtw/perversity.hpp"

namespace ihtw {

/// ||s||_i <= dim s - i + p(i) for i = 1..n; an empty join satisfies every bound.
bool is_allowable(const FilteredSimplex& s, const Perversity& p);
/// The bound at i only when s meets stratum n - i itself. Same answer as is_allowable
/// for GM perversities; differs for sums such as p + q.
bool is_allowable_by_strata(const FilteredSimplex& s, const Perversity& p);

/// C_*^p: chains that are p-allowable with p-allowable boundary, as a subcomplex of
/// the simplicial chains.
struct IntersectionComplex {
  const FilteredComplex* space = nullptr;
  Perversity perversity;
  ComplexPtr chains;  // C_*(K)
  Subcomplex sub;

  const PresentedComplex& complex() const { return *sub.complex; }
  /// Inclusion C_*^p -> C_*(K).
  const ChainMap& inclusion() const { return sub.inclusion; }
};

/// The referenced FilteredComplex must outlive the result.
IntersectionComplex intersection_complex(const FilteredComplex& k, const Perversity& p,
                                         const CoefficientRing& ring);
/// Reuses an already built C_*(K) over the same ring.
IntersectionComplex intersection_complex(const FilteredComplex& k, const Perversity& p, ComplexPtr chains);

HomologyGroup intersection_homology(const FilteredComplex& k, const Perversity& p,
                                    const CoefficientRing& ring, int degree);

class PerversityOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inclusion C_*^p -> C_*^q for p <= q; throws PerversityOrderError otherwise.
ChainMap beta_map(const IntersectionComplex& from, const IntersectionComplex& to);

/// Hom(C_*^p, R) in negative degrees: cochain degree k sits in degree -k.
PresentedComplex gm_cochain_complex(const IntersectionComplex& ic);
/// H^k of Hom(C_*^p, R).
HomologyGroup gm_cohomology(const FilteredComplex& k, const Perversity& p, const CoefficientRing& ring,
                            int degree);

}  // namespace ihtw

#pragma once

#include "ihtw/cap.hpp"

#include <cstdint>

namespace ihtw {

/// For every regular simplex s: the local blown complex is acyclic, mu^* is a chain map,
/// and mu^* onto the 0-perversity subcomplex is invertible over Z in every degree.
Report check_local_comparison(const FilteredComplex& k);

/// Squares of differentials on the chains, simplicial cochains, blown cochains and
/// every GM intersection, Thom-Whitney and GM cochain complex of k.
Report check_square_zero(const FilteredComplex& k, const CoefficientRing& ring);

/// C^p contained in C^q and closed under the boundary, for p <= q in the GM lattice.
Report check_monotonicity(const FilteredComplex& k, const CoefficientRing& ring);

/// Random pairs (w, xi), w in a Thom-Whitney complex and xi in an intersection complex
/// of GM perversities, drawn until `count` pairs with at least `nonzero` nonzero caps.
/// Checks the Leibniz rule with kLeibnizSigns and that w cap xi and its boundary are
/// allowable for the sum perversity, read stratum-wise. The count of pairs that fail
/// the closed-skeleton reading is reported but does not fail the check.
struct PairCheck {
  Report report;
  std::size_t pairs = 0;
  std::size_t nonzero = 0;
  std::size_t leibniz_failures = 0;
  std::size_t bookkeeping_failures = 0;
  std::size_t closed_skeleton_failures = 0;
};
PairCheck check_cap_pairs(const FilteredComplex& k, std::size_t count, std::size_t nonzero, std::uint32_t seed);

}  // namespace ihtw

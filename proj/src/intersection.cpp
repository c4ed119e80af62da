#include "ihtw/intersection.hpp"

namespace ihtw {

bool is_allowable(const FilteredSimplex& s, const Perversity& p) {
  const int n = s.formal_dimension();
  if (p.n() != n) throw std::invalid_argument("perversity length does not match the filtration");
  for (int i = 1; i <= n; ++i) {
    const int deg = s.perverse_degree(i);
    if (deg != kMinusInfinity && deg > s.dimension() - i + p(i)) return false;
  }
  return true;
}

bool is_allowable_by_strata(const FilteredSimplex& s, const Perversity& p) {
  const int n = s.formal_dimension();
  if (p.n() != n) throw std::invalid_argument("perversity length does not match the filtration");
  for (int i = 1; i <= n; ++i)
    if (!s.parts[n - i].empty() && s.perverse_degree(i) > s.dimension() - i + p(i)) return false;
  return true;
}

IntersectionComplex intersection_complex(const FilteredComplex& k, const Perversity& p, ComplexPtr chains) {
  std::vector<std::vector<char>> allowed(k.top_dimension() + 1);
  for (int d = 0; d <= k.top_dimension(); ++d) {
    allowed[d].resize(k.count(d));
    for (Index i = 0; i < k.count(d); ++i)
      allowed[d][i] = is_allowable(k.decompose(k.simplex(d, i)), p);
  }
  Subcomplex sub = allowable_subcomplex(chains, [&](int d, Index i) { return allowed[d][i] != 0; });
  return IntersectionComplex{&k, p, std::move(chains), std::move(sub)};
}

IntersectionComplex intersection_complex(const FilteredComplex& k, const Perversity& p,
                                         const CoefficientRing& ring) {
  return intersection_complex(k, p, std::make_shared<const PresentedComplex>(k.chain_complex(ring)));
}

HomologyGroup intersection_homology(const FilteredComplex& k, const Perversity& p,
                                    const CoefficientRing& ring, int degree) {
  return homology(intersection_complex(k, p, ring).complex(), degree);
}

ChainMap beta_map(const IntersectionComplex& from, const IntersectionComplex& to) {
  if (!leq(from.perversity, to.perversity))
    throw PerversityOrderError("no inclusion from " + from.perversity.to_string() + " to " +
                               to.perversity.to_string());
  if (from.chains != to.chains && from.space != to.space)
    throw std::invalid_argument("intersection complexes over different spaces");
  ChainMap f;
  f.source = from.sub.complex;
  f.target = to.sub.complex;
  const PresentedComplex& src = *f.source;
  for (int k = src.min_degree(); k <= src.max_degree(); ++k) {
    const FreeSubmodule& small = from.sub.module(k);
    SparseMatrix m(to.sub.module(k).rank(), small.rank());
    for (std::size_t j = 0; j < small.rank(); ++j) {
      auto c = to.sub.coordinates(k, small.basis()[j]);
      if (!c) throw std::logic_error("intersection chain missing from the larger perversity");
      m.column(j) = std::move(*c);
    }
    f.components.push_back(std::move(m));
  }
  return f;
}

PresentedComplex gm_cochain_complex(const IntersectionComplex& ic) { return dual_complex(ic.complex()); }

HomologyGroup gm_cohomology(const FilteredComplex& k, const Perversity& p, const CoefficientRing& ring,
                            int degree) {
  return homology(gm_cochain_complex(intersection_complex(k, p, ring)), -degree);
}

}  // namespace ihtw

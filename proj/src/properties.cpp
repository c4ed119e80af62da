#include "ihtw/properties.hpp"

#include "ihtw/elimination.hpp"

#include <random>

namespace ihtw {

namespace {

const CoefficientRing kIntegers = CoefficientRing::integers();

std::string complex_name(const std::string& what, const Perversity& p) { return what + " " + p.to_string(); }

// Every failure is reported; one summary line on success.
void square_zero(Report& report, const PresentedComplex& c, const std::string& what, std::size_t& checked) {
  ++checked;
  if (auto d = c.square_zero_violation()) report.add(false, what + ": d^2 != 0 at degree " + std::to_string(*d));
}

bool invertible_over_z(const SparseMatrix& m) {
  if (m.rows() != m.cols()) return false;
  if (m.cols() == 0) return true;
  auto snf = smith_normal_form(m, kIntegers);
  if (snf.diagonal.size() != m.cols()) return false;
  for (const auto& x : snf.diagonal)
    if (abs(x) != 1) return false;
  return true;
}

bool chain_allowable(const FilteredComplex& k, int d, const SparseVector& x, const Perversity& p, bool by_strata) {
  for (const Entry& e : x.entries()) {
    FilteredSimplex s = k.decompose(k.simplex(d, e.index));
    if (!(by_strata ? is_allowable_by_strata(s, p) : is_allowable(s, p))) return false;
  }
  return true;
}

SparseVector random_combination(const std::vector<SparseVector>& basis, std::mt19937& rng, const EngineRing& er) {
  SparseVector out;
  if (basis.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> coefficient(-3, 3);
  for (int t = 0; t < 3; ++t) out.axpy(Integer(coefficient(rng)), basis[pick(rng)], er);
  return out;
}

}  // namespace

Report check_local_comparison(const FilteredComplex& k) {
  Report report;
  std::size_t simplices = 0, failures = 0;
  for (int d = 0; d <= k.top_dimension(); ++d)
    for (const Simplex& simplex : k.simplices(d)) {
      if (!k.is_regular(simplex)) continue;
      ++simplices;
      const FilteredSimplex s = k.decompose(simplex);
      const FilteredComplex closure = simplex_closure(s);
      auto blown = std::make_shared<const BlownComplex>(closure, kIntegers);
      bool ok = !blown->complex()->square_zero_violation();
      for (int e = 1; ok && e <= blown->top_degree(); ++e) ok = homology(*blown->complex(), -e).is_zero();
      ok = ok && homology(*blown->complex(), 0).to_string() == "Z";
      if (ok) {
        auto cochains = simplicial_cochains(closure, kIntegers);
        ChainMap mu = m_zero(closure, cochains, *blown);
        try {
          mu.verify();
          TWComplex tw0 = tw_complex(blown, Perversity::zero(s.formal_dimension()));
          ChainMap into = m_perversity(mu, tw0);
          for (int e = 0; ok && e <= s.dimension(); ++e) ok = invertible_over_z(into.component(-e));
        } catch (const std::logic_error&) {
          ok = false;
        }
      }
      if (!ok) {
        ++failures;
        report.add(false, "mu^* fails on " + k.describe(simplex));
      }
    }
  if (failures == 0)
    report.add(true, "mu^* is injective with image the 0-subcomplex on " + std::to_string(simplices) +
                         " regular simplices");
  return report;
}

Report check_square_zero(const FilteredComplex& k, const CoefficientRing& ring) {
  Report report;
  std::size_t checked = 0;
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(ring));
  square_zero(report, *chains, "chains", checked);
  square_zero(report, *simplicial_cochains(k, ring), "cochains", checked);
  auto blown = std::make_shared<const BlownComplex>(k, ring);
  square_zero(report, *blown->complex(), "blown cochains", checked);
  for (const auto& p : gm_perversities(k.dimension())) {
    auto ic = intersection_complex(k, p, chains);
    square_zero(report, ic.complex(), complex_name("intersection chains", p), checked);
    square_zero(report, gm_cochain_complex(ic), complex_name("GM cochains", p), checked);
    square_zero(report, tw_complex(blown, p).complex(), complex_name("Thom-Whitney cochains", p), checked);
  }
  if (report.passed) report.add(true, "d^2 = 0 on " + std::to_string(checked) + " complexes");
  return report;
}

Report check_monotonicity(const FilteredComplex& k, const CoefficientRing& ring) {
  Report report;
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(ring));
  std::vector<IntersectionComplex> lattice;
  for (const auto& p : gm_perversities(k.dimension())) lattice.push_back(intersection_complex(k, p, chains));
  std::size_t pairs = 0;
  for (const auto& a : lattice)
    for (const auto& b : lattice) {
      if (!leq(a.perversity, b.perversity)) continue;
      ++pairs;
      bool ok = true;
      for (int d = 0; d <= k.top_dimension(); ++d)
        for (const auto& x : a.sub.module(d).basis()) {
          ok = ok && b.sub.module(d).contains(x);
          if (d > 0) ok = ok && a.sub.module(d - 1).contains(chains->boundary(d).apply(x, chains->engine()));
        }
      if (!ok) report.add(false, a.perversity.to_string() + " <= " + b.perversity.to_string() + " not respected");
    }
  if (report.passed)
    report.add(true, "C^p in C^q for " + std::to_string(pairs) + " ordered pairs of " +
                         std::to_string(lattice.size()) + " perversities");
  return report;
}

PairCheck check_cap_pairs(const FilteredComplex& k, std::size_t count, std::size_t nonzero, std::uint32_t seed) {
  PairCheck out;
  const int n = k.dimension();
  const auto lattice = gm_perversities(n);
  auto blown = std::make_shared<const BlownComplex>(k, kIntegers);
  CapEngine cap(k, *blown);
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(kIntegers));
  const PresentedComplex& cochains = *blown->complex();
  std::vector<TWComplex> tw;
  std::vector<IntersectionComplex> ic;
  for (const auto& p : lattice) {
    tw.push_back(tw_complex(blown, p));
    ic.push_back(intersection_complex(k, p, chains));
  }
  const EngineRing er(kIntegers);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, lattice.size() - 1);
  while (out.pairs < count || out.nonzero < nonzero) {
    const std::size_t a = pick(rng), b = pick(rng);
    const int p = std::uniform_int_distribution<int>(0, n)(rng);
    const int q = std::uniform_int_distribution<int>(p, k.top_dimension())(rng);
    SparseVector w = random_combination(tw[a].basis(p), rng, er);
    SparseVector xi = random_combination(ic[b].sub.module(q).basis(), rng, er);
    if (w.empty() || xi.empty()) continue;
    ++out.pairs;
    SparseVector product = cap.intersection(p, w, q, xi);
    if (!product.empty()) ++out.nonzero;

    SparseVector lhs = q > p ? chains->boundary(q - p).apply(product, er) : SparseVector{};
    SparseVector rhs = cap.intersection(p + 1, cochains.boundary(-p).apply(w, er), q, xi)
                           .scaled(Integer(kLeibnizSigns.coboundary), er);
    SparseVector tail = q > 0 ? cap.intersection(p, w, q - 1, chains->boundary(q).apply(xi, er)) : SparseVector{};
    rhs.axpy(Integer(p % 2 ? -kLeibnizSigns.boundary : kLeibnizSigns.boundary), tail, er);
    if (!(lhs == rhs)) ++out.leibniz_failures;

    const Perversity total = sum(lattice[a], lattice[b]);
    if (!chain_allowable(k, q - p, product, total, true) || !chain_allowable(k, q - p - 1, lhs, total, true))
      ++out.bookkeeping_failures;
    if (!chain_allowable(k, q - p, product, total, false) || !chain_allowable(k, q - p - 1, lhs, total, false))
      ++out.closed_skeleton_failures;
  }
  const std::string tally = " on " + std::to_string(out.pairs) + " pairs (" + std::to_string(out.nonzero) + " nonzero)";
  out.report.add(out.leibniz_failures == 0,
                 "Leibniz rule" + tally + ", failures: " + std::to_string(out.leibniz_failures));
  out.report.add(out.bookkeeping_failures == 0,
                 "cap lands in the sum perversity" + tally + ", failures: " + std::to_string(out.bookkeeping_failures));
  out.report.add(true, "pairs failing the closed-skeleton reading: " + std::to_string(out.closed_skeleton_failures));
  return out;
}

}  // namespace ihtw

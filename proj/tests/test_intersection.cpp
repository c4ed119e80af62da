#include <doctest.h>

#include "ihtw/constructions.hpp"
#include "ihtw/intersection.hpp"

using namespace ihtw;

namespace {

const FilteredComplex& sigma_rp3() {
  static const FilteredComplex k = builtin_complex("sigma-rp3");
  return k;
}

const FilteredComplex& sphere4() {
  static const FilteredComplex k = builtin_complex("s4");
  return k;
}

// Some simplex of dimension d containing `north`.
Simplex with_north(const FilteredComplex& k, int d) {
  const Index north = *k.vertex_index("north");
  for (const Simplex& s : k.simplices(d))
    if (std::find(s.begin(), s.end(), north) != s.end()) return s;
  FAIL("no such simplex");
  return {};
}

}  // namespace

TEST_CASE("allowability") {
  const auto& k = sigma_rp3();
  const auto zero = Perversity::zero(4), top = Perversity::top(4);
  for (int d = 1; d <= 4; ++d) {
    FilteredSimplex s = k.decompose(with_north(k, d));
    CHECK(s.perverse_degree(4) == 0);
    CHECK(is_allowable(s, zero) == (d >= 4));
  }
  CHECK(is_allowable(k.decompose(with_north(k, 3)), top));
  CHECK(is_allowable(k.decompose(with_north(k, 2)), top));
  CHECK_FALSE(is_allowable(k.decompose(with_north(k, 1)), top));
  for (const Simplex& s : sphere4().simplices(2))
    for (const auto& p : gm_perversities(4)) CHECK(is_allowable(sphere4().decompose(s), p));
}

TEST_CASE("intersection homology of the suspended projective space") {
  const auto& k = sigma_rp3();
  const auto z = CoefficientRing::integers();
  auto ic0 = intersection_complex(k, Perversity::zero(4), z);
  auto ic1 = intersection_complex(k, Perversity::clip(1, 4), z);
  auto ict = intersection_complex(k, Perversity::top(4), z);
  CHECK(homology(ic0.complex(), 1).to_string() == "Z/2");
  CHECK(homology(ic1.complex(), 1).to_string() == "Z/2");
  CHECK_FALSE(ic0.complex().square_zero_violation());

  auto b01 = induced_map(beta_map(ic0, ic1), 1);
  CHECK(b01.is_isomorphism());
  CHECK(b01.source.to_string() == "Z/2");

  for (int d = 0; d <= 4; ++d) {
    auto b = induced_map(ict.inclusion(), d);
    CHECK_MESSAGE(b.is_isomorphism(), "degree ", d);
  }
  CHECK_THROWS_AS(beta_map(ict, ic0), PerversityOrderError);
  auto id = induced_map(beta_map(ic1, ic1), 1);
  CHECK(id.matrix == std::vector<std::vector<Integer>>{{Integer(1)}});
}

TEST_CASE("GM cohomology") {
  const auto& k = sigma_rp3();
  const auto z = CoefficientRing::integers();
  CHECK(gm_cohomology(k, Perversity::top(4), z, 3).to_string() == "Z/2");
  CHECK(gm_cohomology(k, Perversity::clip(1, 4), z, 3).to_string() == "0");
  for (const auto& p : gm_perversities(4)) CHECK(gm_cohomology(k, p, z, 0).to_string() == "Z");
  // Over a field the dual has the same dimensions.
  const auto f = CoefficientRing::parse("Zmod:2");
  for (const auto& p : gm_perversities(4)) {
    auto ic = intersection_complex(k, p, f);
    auto dual = gm_cochain_complex(ic);
    for (int d = 0; d <= 4; ++d)
      CHECK(homology(dual, -d).rank() == homology(ic.complex(), d).rank());
  }
}

TEST_CASE("trivial filtration and monotonicity") {
  const auto z = CoefficientRing::integers();
  for (const char* name : {"s2", "s3", "s4", "rp2"}) {
    FilteredComplex k = builtin_complex(name);
    PresentedComplex c = k.chain_complex(z);
    for (const auto& p : gm_perversities(k.dimension())) {
      auto ic = intersection_complex(k, p, z);
      for (int d = 0; d <= k.top_dimension(); ++d)
        CHECK(isomorphic(homology(ic.complex(), d), homology(c, d)));
    }
  }
  const auto& k = sigma_rp3();
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(z));
  std::vector<IntersectionComplex> lattice;
  for (const auto& p : gm_perversities(4)) lattice.push_back(intersection_complex(k, p, chains));
  for (const auto& a : lattice) {
    // Closure under the boundary.
    for (int d = 1; d <= 4; ++d)
      for (const auto& x : a.sub.module(d).basis())
        CHECK(a.sub.module(d - 1).contains(chains->boundary(d).apply(x, chains->engine())));
    for (const auto& b : lattice) {
      if (!leq(a.perversity, b.perversity)) {
        CHECK_THROWS_AS(beta_map(a, b), PerversityOrderError);
        continue;
      }
      auto f = beta_map(a, b);
      CHECK_NOTHROW(f.verify());
      for (int d = 0; d <= 4; ++d)
        for (const auto& x : a.sub.module(d).basis()) CHECK(b.sub.module(d).contains(x));
    }
  }
}

TEST_CASE("closed-skeleton and stratum readings of allowability") {
  const auto& k = sigma_rp3();
  for (int d = 0; d <= 4; ++d)
    for (const Simplex& s : k.simplices(d)) {
      FilteredSimplex fs = k.decompose(s);
      for (const auto& p : gm_perversities(4)) CHECK(is_allowable(fs, p) == is_allowable_by_strata(fs, p));
    }
  // A sum of GM perversities bounds the empty codimension-2 stratum through X_0.
  const Perversity total = sum(Perversity::clip(1, 4), Perversity::top(4));
  FilteredSimplex edge = k.decompose(with_north(k, 1));
  CHECK_FALSE(is_allowable(edge, total));
  CHECK(is_allowable_by_strata(edge, total));
}

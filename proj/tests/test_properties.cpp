#include <doctest.h>

#include "ihtw/constructions.hpp"
#include "ihtw/properties.hpp"

using namespace ihtw;

TEST_CASE("property reports on small complexes") {
  const auto z = CoefficientRing::integers();
  for (const char* name : {"s2", "cone:s2", "susp:rp2"}) {
    FilteredComplex k = builtin_complex(name);
    Report local = check_local_comparison(k);
    CHECK_MESSAGE(local.passed, local.text());
    CHECK(check_square_zero(k, z).passed);
    CHECK(check_square_zero(k, CoefficientRing::modular(2)).passed);
    CHECK(check_monotonicity(k, z).passed);
  }
  PairCheck pairs = check_cap_pairs(builtin_complex("susp:rp2"), 40, 20, 7);
  CHECK(pairs.report.passed);
  CHECK(pairs.pairs >= 40);
  CHECK(pairs.nonzero >= 20);
  CHECK(pairs.leibniz_failures == 0);
  // Same seed, same draw.
  PairCheck again = check_cap_pairs(builtin_complex("susp:rp2"), 40, 20, 7);
  CHECK(again.pairs == pairs.pairs);
  CHECK(again.nonzero == pairs.nonzero);
}

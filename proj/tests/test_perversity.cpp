#include <doctest.h>

#include "ihtw/perversity.hpp"

using namespace ihtw;

TEST_CASE("named perversities") {
  CHECK(Perversity::top(4).values() == std::vector<int>{0, 0, 0, 1, 2});
  CHECK(Perversity::clip(1, 4).values() == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(Perversity::zero(4).values() == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(Perversity::top(4).is_gm());
  CHECK(Perversity::clip(1, 4).is_gm());
  CHECK(Perversity::top(1).values() == std::vector<int>{0, 0});
}

TEST_CASE("duality") {
  CHECK(Perversity::zero(4).dual() == Perversity::top(4));
  CHECK(Perversity::top(4).dual() == Perversity::zero(4));
  CHECK(Perversity::clip(1, 4).dual().values() == std::vector<int>{0, 0, 0, 0, 1});
  for (const auto& p : gm_perversities(6)) {
    CHECK(p.dual().is_gm());
    CHECK(p.dual().dual() == p);
  }
  CHECK_THROWS_AS(Perversity({0, 0, 0, 2, 4}).dual(), std::domain_error);
}

TEST_CASE("sum and order") {
  const auto z = Perversity::zero(4);
  const auto t = Perversity::top(4);
  for (const auto& p : gm_perversities(4)) {
    CHECK(sum(z, p) == p);
    CHECK(leq(z, p));
    CHECK(leq(p, t));
  }
  CHECK(leq(z, t));
  CHECK_FALSE(leq(t, z));
  auto tt = sum(t, t);
  CHECK(tt.values() == std::vector<int>{0, 0, 0, 2, 4});
  CHECK_FALSE(tt.is_gm());
  // Partial order axioms on the lattice.
  auto all = gm_perversities(5);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (leq(a, b) && leq(b, a)) CHECK(a == b);
      for (const auto& c : all)
        if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    }
}

TEST_CASE("lattice size and parsing") {
  CHECK(gm_perversities(4).size() == 4);
  CHECK(gm_perversities(2).size() == 1);
  CHECK(Perversity::parse("zero", 4) == Perversity::zero(4));
  CHECK(Perversity::parse("top", 4) == Perversity::top(4));
  CHECK(Perversity::parse("clip:1", 4) == Perversity::clip(1, 4));
  CHECK(Perversity::parse("list:0,0,0,1,1", 4) == Perversity::clip(1, 4));
  CHECK(Perversity::parse(Perversity::top(4).spec(), 4) == Perversity::top(4));
  CHECK_THROWS_AS(Perversity::parse("list:0,0,0", 4), InputError);
  CHECK_THROWS_AS(Perversity::parse("middle", 4), InputError);
  CHECK_THROWS_AS(Perversity::parse("clip:x", 4), InputError);
}

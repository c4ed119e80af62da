#include <doctest.h>

#include "ihtw/elimination.hpp"
#include "ihtw/homology.hpp"

#include <algorithm>
#include <map>
#include <random>

using namespace ihtw;

namespace {

// Chain complex of the closure of a list of facets, vertices in numeric order.
ComplexPtr closure_complex(const std::vector<std::vector<int>>& facets, const CoefficientRing& ring) {
  std::vector<std::map<std::vector<int>, Index>> faces;
  for (const auto& f : facets) {
    const int n = static_cast<int>(f.size());
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(f[i]);
      if (faces.size() < s.size()) faces.resize(s.size());
      faces[s.size() - 1].emplace(s, 0);
    }
  }
  std::vector<std::size_t> ranks;
  for (auto& level : faces) {
    Index i = 0;
    for (auto& [s, idx] : level) idx = i++;
    ranks.push_back(level.size());
  }
  auto c = std::make_shared<PresentedComplex>(ring, 0, ranks);
  EngineRing er(ring);
  for (std::size_t d = 1; d < faces.size(); ++d) {
    SparseMatrix m(faces[d - 1].size(), faces[d].size());
    for (const auto& [s, idx] : faces[d]) {
      std::vector<Entry> e;
      for (std::size_t j = 0; j < s.size(); ++j) {
        auto t = s;
        t.erase(t.begin() + static_cast<long>(j));
        e.push_back({faces[d - 1].at(t), j % 2 ? -1 : 1});
      }
      m.column(idx) = SparseVector::from_entries(std::move(e), er);
    }
    c->set_boundary(static_cast<int>(d), std::move(m));
  }
  return c;
}

std::vector<std::vector<int>> sphere_facets(int n) {
  std::vector<std::vector<int>> out;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    out.push_back(f);
  }
  return out;
}

// Minimal 6-vertex RP^2.
std::vector<std::vector<int>> rp2_facets() {
  return {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
          {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}};
}

SparseMatrix dense(const std::vector<std::vector<long>>& rows, const CoefficientRing& ring = CoefficientRing::integers()) {
  return SparseMatrix::from_dense(rows, EngineRing(ring));
}

bool is_invertible(const SparseMatrix& m, const CoefficientRing& ring) {
  if (m.rows() != m.cols()) return false;
  EngineRing er(ring);
  Elimination e = eliminate(m, er);
  if (e.rank() != m.rows()) return false;
  return std::all_of(e.pivots.begin(), e.pivots.end(), [&](const Pivot& p) { return er.is_unit(p.value); });
}

void check_smith(const SparseMatrix& m, const CoefficientRing& ring) {
  EngineRing er(ring);
  SmithForm s = smith_normal_form(m, ring);
  CHECK(s.U.multiply(m, er).multiply(s.V, er) == s.D);
  CHECK(is_invertible(s.U, ring));
  CHECK(is_invertible(s.V, ring));
  for (std::size_t j = 0; j < s.D.cols(); ++j)
    for (const auto& e : s.D.column(j).entries()) CHECK(e.index == j);
  for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(er.divides(s.diagonal[i - 1], s.diagonal[i]));
}

}  // namespace

TEST_CASE("smith normal form of small integer matrices") {
  auto z = CoefficientRing::integers();
  SmithForm id = smith_normal_form(dense({{1, 0}, {0, 1}}), z);
  CHECK(id.D == SparseMatrix::identity(2));
  CHECK(id.U == SparseMatrix::identity(2));
  CHECK(id.V == SparseMatrix::identity(2));

  SmithForm zero = smith_normal_form(SparseMatrix(3, 2), z);
  CHECK(zero.D.is_zero());
  CHECK(zero.U == SparseMatrix::identity(3));
  CHECK(zero.V == SparseMatrix::identity(2));

  SmithForm s = smith_normal_form(dense({{2, 4}, {6, 8}}), z);
  REQUIRE(s.diagonal.size() == 2);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 4);
  check_smith(dense({{2, 4}, {6, 8}}), z);
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> entry(-6, 6);
  std::uniform_int_distribution<int> size(1, 7);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<long>> rows(size(rng), std::vector<long>(size(rng)));
    for (auto& r : rows)
      for (auto& x : r) x = (rng() % 3 == 0) ? 0 : entry(rng);
    for (const auto& ring : {CoefficientRing::integers(), CoefficientRing::modular(12), CoefficientRing::modular(7)})
      check_smith(dense(rows, ring), ring);
  }
}

TEST_CASE("homology of spheres and the circle") {
  auto z = CoefficientRing::integers();
  auto s4 = closure_complex(sphere_facets(4), z);
  CHECK_FALSE(s4->square_zero_violation());
  for (int k = -1; k <= 5; ++k) {
    auto h = homology(*s4, k);
    CHECK(h.to_string() == ((k == 0 || k == 4) ? "Z" : "0"));
  }
  auto circle = closure_complex({{0, 1}, {1, 2}, {0, 2}}, z);
  CHECK(homology(*circle, 1).to_string() == "Z");
  CHECK(homology(*circle, 0).to_string() == "Z");
}

TEST_CASE("torsion and coefficient rings on RP2") {
  auto rp2z = closure_complex(rp2_facets(), CoefficientRing::integers());
  CHECK(homology(*rp2z, 0).to_string() == "Z");
  CHECK(homology(*rp2z, 1).to_string() == "Z/2");
  CHECK(homology(*rp2z, 2).to_string() == "0");
  auto rp2q = closure_complex(rp2_facets(), CoefficientRing::rationals());
  CHECK(homology(*rp2q, 1).to_string() == "0");
  CHECK(homology(*rp2q, 0).to_string() == "Q");
  auto rp2f2 = closure_complex(rp2_facets(), CoefficientRing::modular(2));
  CHECK(homology(*rp2f2, 1).to_string() == "Z/2");
  CHECK(homology(*rp2f2, 2).to_string() == "Z/2");
  auto rp2z4 = closure_complex(rp2_facets(), CoefficientRing::modular(4));
  // H_1(RP2; Z/4) = Z/2 (Tor term vanishes in degree 1, H_1 tensor Z/4 = Z/2); H_2 = Tor(Z/2, Z/4) = Z/2.
  CHECK(homology(*rp2z4, 1).to_string() == "Z/2");
  CHECK(homology(*rp2z4, 2).to_string() == "Z/2");
  CHECK(homology(*rp2z4, 0).to_string() == "Z/4");
}

TEST_CASE("class equality") {
  auto z = CoefficientRing::integers();
  EngineRing er(z);
  auto circle = closure_complex({{0, 1}, {1, 2}, {0, 2}}, z);
  auto h = homology(*circle, 1);
  REQUIRE(h.generator_count() == 1);
  const auto& g = h.representatives()[0];
  CHECK(class_equal(g, g, *circle, 1));
  CHECK_FALSE(class_equal(g, SparseVector{}, *circle, 1));
  CHECK_THROWS_AS(class_equal(SparseVector::unit(0), SparseVector{}, *circle, 1), std::invalid_argument);

  // Two coherent orientations of the 2-sphere differ by the boundary of twice the solid simplex.
  auto sphere = closure_complex(sphere_facets(2), z);
  auto solid = closure_complex({{0, 1, 2, 3}}, z);
  SparseVector fundamental = solid->boundary(3).column(0);
  SparseVector twice = fundamental.scaled(-1, er);
  CHECK(class_equal(fundamental, fundamental.scaled(1, er), *sphere, 2));
  CHECK_FALSE(class_equal(fundamental, twice, *sphere, 2));
  CHECK(class_equal(fundamental, SparseVector{}, *solid, 2));
}

TEST_CASE("homology is independent of basis order") {
  auto z = CoefficientRing::integers();
  auto base = closure_complex(rp2_facets(), z);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::vector<Index>> perm;
    for (int k = 0; k <= 2; ++k) {
      std::vector<Index> p(base->rank(k));
      for (Index i = 0; i < p.size(); ++i) p[i] = i;
      std::shuffle(p.begin(), p.end(), rng);
      perm.push_back(p);
    }
    auto c = std::make_shared<PresentedComplex>(z, 0, std::vector<std::size_t>{base->rank(0), base->rank(1), base->rank(2)});
    EngineRing er(z);
    for (int k = 1; k <= 2; ++k) {
      SparseMatrix b = base->boundary(k);
      SparseMatrix m(b.rows(), b.cols());
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::vector<Entry> e;
        for (const auto& x : b.column(j).entries()) e.push_back({perm[k - 1][x.index], x.value});
        m.column(perm[k][j]) = SparseVector::from_entries(std::move(e), er);
      }
      c->set_boundary(k, std::move(m));
    }
    for (int k = 0; k <= 2; ++k) CHECK(isomorphic(homology(*c, k), homology(*base, k)));
  }
}

TEST_CASE("induced maps") {
  auto z = CoefficientRing::integers();
  auto rp2 = closure_complex(rp2_facets(), z);
  ChainMap id = identity_map(rp2);
  for (int k = 0; k <= 2; ++k) {
    auto f = induced_map(id, k);
    CHECK(f.is_isomorphism());
    for (std::size_t i = 0; i < f.matrix.size(); ++i)
      for (std::size_t j = 0; j < f.matrix[i].size(); ++j) CHECK(f.matrix[i][j] == (i == j ? 1 : 0));
  }
  // Multiplication by 2 on the circle is injective but not onto.
  auto circle = closure_complex({{0, 1}, {1, 2}, {0, 2}}, z);
  ChainMap twice = identity_map(circle);
  EngineRing er(z);
  for (auto& m : twice.components) m = m.multiply(SparseMatrix::identity(m.cols()), er), m = [&] {
      SparseMatrix out(m.rows(), m.cols());
      for (std::size_t j = 0; j < m.cols(); ++j) out.column(j) = m.column(j).scaled(2, er);
      return out;
    }();
  auto f = induced_map(twice, 1);
  CHECK_FALSE(f.is_isomorphism());
  CHECK_FALSE(f.is_zero());

  ChainMap broken = identity_map(circle);
  broken.components[1] = SparseMatrix(3, 3);
  try {
    induced_map(broken, 1);
    FAIL("expected a chain map error");
  } catch (const ChainMapError& e) {
    CHECK(e.degree() == 1);
  }
}

TEST_CASE("restricted kernels and subcomplexes") {
  auto z = CoefficientRing::integers();
  auto s2 = closure_complex(sphere_facets(2), z);
  // Forbid vertex 0: chains avoid it, boundaries must avoid it too.
  auto sub = allowable_subcomplex(s2, [](int k, Index i) { return !(k == 0 && i == 0); });
  CHECK_FALSE(sub.complex->square_zero_violation());
  sub.inclusion.verify();
  CHECK(sub.module(0).rank() == 3);
  CHECK(homology(*sub.complex, 2).to_string() == "Z");

  // Over Z/6, diag(2, 3) has kernel Z/2 + Z/3 = Z/6, which is free; over Z/4 the kernel of 2 is not.
  auto z6 = CoefficientRing::modular(6);
  CHECK(restricted_kernel(dense({{2, 0}, {0, 3}}, z6), {0, 1}, {0, 1}, z6).rank() == 1);
  auto z4 = CoefficientRing::modular(4);
  CHECK_THROWS_AS(restricted_kernel(dense({{2}}, z4), {0}, {0}, z4), NonFreeModuleError);
}

#include <doctest.h>

#include "ihtw/blowup.hpp"
#include "ihtw/constructions.hpp"
#include "ihtw/elimination.hpp"

#include <algorithm>

using namespace ihtw;

namespace {

const CoefficientRing Z = CoefficientRing::integers();

const FilteredComplex& sigma_rp3() {
  static const FilteredComplex k = builtin_complex("sigma-rp3");
  return k;
}

std::vector<std::string> cohomology_strings(const TWComplex& tw, int top) {
  std::vector<std::string> out;
  for (int d = 0; d <= top; ++d) out.push_back(tw.cohomology(d).to_string());
  return out;
}

FilteredSimplex make_simplex(std::vector<Simplex> parts) {
  FilteredSimplex s;
  for (const auto& p : parts) s.vertices.insert(s.vertices.end(), p.begin(), p.end());
  std::sort(s.vertices.begin(), s.vertices.end());
  s.regular = !parts.back().empty();
  s.parts = std::move(parts);
  return s;
}

// Per-simplex checks on mu^*: chain map, injective, image the 0-subcomplex.
void check_local(const FilteredSimplex& s) {
  FilteredComplex closure = simplex_closure(s);
  auto blown = std::make_shared<const BlownComplex>(closure, Z);
  REQUIRE_FALSE(blown->complex()->square_zero_violation());
  for (int d = 1; d <= blown->top_degree(); ++d) CHECK(homology(*blown->complex(), -d).is_zero());
  CHECK(homology(*blown->complex(), 0).to_string() == "Z");

  auto cochains = simplicial_cochains(closure, Z);
  ChainMap mu = m_zero(closure, cochains, *blown);
  CHECK_NOTHROW(mu.verify());
  TWComplex tw0 = tw_complex(blown, Perversity::zero(s.formal_dimension()));
  ChainMap into = m_perversity(mu, tw0);
  std::size_t total = 0;
  for (int d = 0; d <= s.dimension(); ++d) {
    const SparseMatrix m = into.component(-d);
    CHECK(tw0.basis(d).size() == m.cols());
    // Square and invertible over Z: injective with image exactly the 0-subcomplex.
    auto snf = smith_normal_form(m, Z);
    CHECK(snf.diagonal.size() == m.cols());
    for (const auto& x : snf.diagonal) CHECK(abs(x) == 1);
    total += m.cols();
  }
  CHECK(total == (std::size_t{1} << s.vertices.size()) - 1);
}

}  // namespace

TEST_CASE("blown faces") {
  BlownFace f{{{0}, {}, {}, {}, {5, 6}}, {0, 1, 1, 1}};
  CHECK(f.degree() == 1);
  CHECK(f.perverse_degree(4) == 1);
  CHECK(f.perverse_degree(3) == kMinusInfinity);
  BlownFace g{{{0}, {}, {}, {}, {5, 6}}, {1, 1, 1, 1}};
  CHECK(g.perverse_degree(4) == kMinusInfinity);
  CHECK(g.degree() == 2);
  CHECK(g.support() == Simplex{0, 5, 6});
  CHECK(mu_lower(g) == Simplex{0, 5, 6});
  CHECK(mu_lower(f) == std::nullopt);
  BlownFace h{{{0}, {}, {}, {}, {5}}, {0, 1, 1, 1}};
  CHECK(mu_lower(h) == Simplex{0});
}

TEST_CASE("projection on a one-step filtration") {
  BlownFace a{{{0}, {1}}, {1}};
  CHECK(mu_lower(a) == Simplex{0, 1});
  BlownFace b{{{0}, {1}}, {0}};
  CHECK(mu_lower(b) == Simplex{0});
  BlownFace c{{{0}, {1, 2}}, {0}};
  CHECK(mu_lower(c) == std::nullopt);
  BlownFace d{{{}, {1, 2}}, {1}};
  CHECK(mu_lower(d) == Simplex{1, 2});
}

TEST_CASE("local complexes") {
  SUBCASE("trivial filtration") {
    auto s = make_simplex({{}, {}, {0, 1, 2}});
    check_local(s);
    FilteredComplex closure = simplex_closure(s);
    auto blown = std::make_shared<const BlownComplex>(closure, Z);
    ChainMap mu = m_zero(closure, simplicial_cochains(closure, Z), *blown);
    for (int d = 0; d <= 2; ++d) CHECK(mu.component(-d) == SparseMatrix::identity(closure.count(d)));
  }
  SUBCASE("cone on a point times a simplex") {
    auto s = make_simplex({{0}, {}, {}, {}, {1, 2, 3, 4}});
    BlownComplex b = local_complex(s, Z);
    std::size_t total = 0;
    for (int d = 0; d <= b.top_degree(); ++d) total += b.count(d);
    CHECK(total == 3 * 15);
    check_local(s);
  }
  SUBCASE("every stratum occupied") {
    check_local(make_simplex({{0}, {1}, {2}}));
    check_local(make_simplex({{0, 1}, {2}, {3, 4}}));
    check_local(make_simplex({{0}, {1, 2}, {}, {3}}));
  }
  CHECK_THROWS_AS(local_complex(make_simplex({{0}, {}}), Z), std::invalid_argument);
}

TEST_CASE("every regular simplex of the test complexes") {
  for (const char* name : {"s4", "sigma-rp3"}) {
    FilteredComplex k = builtin_complex(name);
    for (int d = 0; d <= k.top_dimension(); ++d)
      for (const Simplex& s : k.simplices(d))
        if (k.is_regular(s)) check_local(k.decompose(s));
  }
}

TEST_CASE("Thom-Whitney cohomology") {
  const auto& k = sigma_rp3();
  auto blown = std::make_shared<const BlownComplex>(k, Z);
  CHECK_FALSE(blown->complex()->square_zero_violation());
  auto tw0 = tw_complex(blown, Perversity::zero(4));
  CHECK(cohomology_strings(tw0, 4) == std::vector<std::string>{"Z", "0", "0", "Z/2", "Z"});
  for (const auto& p : gm_perversities(4)) {
    auto tw = tw_complex(blown, p);
    CHECK(tw.cohomology(0).to_string() == "Z");
    // Membership re-verified on the computed basis.
    for (int d = 0; d <= 4; ++d)
      for (const auto& w : tw.basis(d)) {
        CHECK(blown->allowable(d, w, p));
        CHECK(blown->allowable(d + 1, blown->complex()->boundary(-d).apply(w, blown->complex()->engine()), p));
      }
  }
  FilteredComplex s4 = builtin_complex("s4");
  auto sphere = std::make_shared<const BlownComplex>(s4, Z);
  for (const auto& p : gm_perversities(4))
    CHECK(cohomology_strings(tw_complex(sphere, p), 4) == std::vector<std::string>{"Z", "0", "0", "0", "Z"});
  CHECK(tw_cohomology(builtin_complex("cone:s2"), Perversity::zero(3), Z, 0).to_string() == "Z");
}

TEST_CASE("perverse degree of cochains") {
  const auto& k = sigma_rp3();
  BlownComplex b(k, Z);
  CHECK(b.perverse_degree(1, SparseVector{}, 4) == kMinusInfinity);
  const Index north = *k.vertex_index("north");
  for (Index i = 0; i < b.count(1); ++i) {
    const BlownFace& f = b.cells(1)[i];
    if (f.parts[0] == Simplex{north} && !f.coned[0] && f.parts[4].size() == 2) {
      CHECK(b.perverse_degree(1, SparseVector::unit(i), 4) == 1);
      CHECK(b.perverse_degree(1, SparseVector::unit(i), 1) == kMinusInfinity);
    }
  }
}

TEST_CASE("comparison map M_0") {
  for (const char* name : {"s2", "rp2", "sigma-rp3", "cone:s2"}) {
    FilteredComplex k = builtin_complex(name);
    auto blown = std::make_shared<const BlownComplex>(k, Z);
    auto cochains = simplicial_cochains(k, Z);
    ChainMap m0 = m_zero(k, cochains, *blown);
    CHECK_NOTHROW(m0.verify());
    ChainMap m = m_perversity(m0, tw_complex(blown, Perversity::zero(k.dimension())));
    for (int d = 0; d <= k.top_dimension(); ++d) CHECK_MESSAGE(induced_map(m, -d).is_isomorphism(), name, " ", d);

    // Restricting to a regular simplex gives the local map of that simplex.
    for (int d = 0; d <= k.top_dimension(); ++d)
      for (const Simplex& s : k.simplices(d)) {
        if (!k.is_regular(s)) continue;
        FilteredComplex closure = simplex_closure(k.decompose(s));
        BlownComplex local(closure, Z);
        ChainMap mu = m_zero(closure, simplicial_cochains(closure, Z), local);
        for (int e = 0; e <= d; ++e) {
          const SparseMatrix lm = mu.component(-e);
          for (Index c = 0; c < closure.count(e); ++c) {
            Simplex face;
            for (Index v : closure.simplex(e, c)) face.push_back(s[v]);
            const SparseVector global = m0.component(-e).column(k.index_of(face));
            for (const Entry& x : lm.column(c).entries()) {
              BlownFace f = local.cells(e)[x.index];
              for (auto& part : f.parts)
                for (Index& v : part) v = s[v];
              CHECK(global.at(*blown->find(f)) == x.value);
            }
          }
        }
      }
  }
}

TEST_CASE("compatible families are determined on top simplices") {
  // Local blocks on the n-simplices, glued wherever two of them share a label.
  for (const char* name : {"cone:s1", "susp:s1", "rp2"}) {
    FilteredComplex k = builtin_complex(name);
    BlownComplex global(k, Z);
    const int n = k.top_dimension();
    for (int deg = 0; deg <= global.top_degree(); ++deg) {
      std::vector<std::pair<Index, Index>> vars;  // (top simplex, global cell)
      for (Index t = 0; t < k.count(n); ++t) {
        const Simplex& top = k.simplex(n, t);
        for (Index c = 0; c < global.count(deg); ++c) {
          Simplex supp = global.cells(deg)[c].support();
          if (std::includes(top.begin(), top.end(), supp.begin(), supp.end())) vars.push_back({t, c});
        }
      }
      std::vector<std::vector<Entry>> cols(vars.size());
      Index rows = 0;
      for (std::size_t a = 0; a < vars.size(); ++a)
        for (std::size_t b = a + 1; b < vars.size(); ++b)
          if (vars[a].second == vars[b].second) {
            cols[a].push_back({rows, Integer(1)});
            cols[b].push_back({rows, Integer(-1)});
            ++rows;
          }
      SparseMatrix m(rows, vars.size());
      EngineRing er(Z);
      for (std::size_t j = 0; j < vars.size(); ++j) m.column(j) = SparseVector::from_entries(cols[j], er);
      std::vector<Index> all_cols(vars.size()), all_rows(rows);
      for (Index i = 0; i < all_cols.size(); ++i) all_cols[i] = i;
      for (Index i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
      CHECK(restricted_kernel(m, all_cols, all_rows, Z).rank() == global.count(deg));
    }
  }
}

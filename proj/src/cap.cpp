#include "ihtw/cap.hpp"

#include <algorithm>
#include <map>

namespace ihtw {

namespace {

int parity_sign(long x) { return x % 2 == 0 ? 1 : -1; }

bool is_prefix(const Simplex& f, const Simplex& delta) {
  return !f.empty() && f.size() <= delta.size() && std::equal(f.begin(), f.end(), delta.begin());
}

// Boundary of a simplex of k as index/sign pairs in dimension d - 1.
std::vector<Entry> simplex_boundary(const FilteredComplex& k, const Simplex& s) {
  std::vector<Entry> out;
  if (s.size() < 2) return out;
  for (std::size_t j = 0; j < s.size(); ++j) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<long>(j));
    out.push_back({k.index_of(face), Integer(parity_sign(static_cast<long>(j)))});
  }
  return out;
}

}  // namespace

std::optional<Simplex> classical_cap_local(const Simplex& f, const Simplex& delta) {
  if (!is_prefix(f, delta)) return std::nullopt;
  return Simplex(delta.begin() + static_cast<long>(f.size()) - 1, delta.end());
}

std::vector<std::pair<BlownFace, int>> blown_chain_boundary(const BlownFace& f) {
  const int n = f.n();
  std::vector<std::pair<BlownFace, int>> out;
  int before = 0;
  for (int i = 0; i <= n; ++i) {
    const auto& part = f.parts[i];
    const bool coned = i < n && f.coned[i];
    const std::size_t min_size = coned ? 1 : 2;
    if (part.size() >= min_size) {
      for (std::size_t j = 0; j < part.size(); ++j) {
        BlownFace g = f;
        g.parts[i].erase(g.parts[i].begin() + static_cast<long>(j));
        out.emplace_back(std::move(g), parity_sign(before + static_cast<long>(j)));
      }
    }
    if (coned && !part.empty()) {
      BlownFace g = f;
      g.coned[i] = 0;
      out.emplace_back(std::move(g), parity_sign(before + static_cast<long>(part.size())));
    }
    before += f.factor_degree(i);
  }
  return out;
}

std::optional<std::pair<BlownFace, int>> blown_cap(const BlownFace& w, const FilteredSimplex& s) {
  const int n = w.n();
  if (s.formal_dimension() != n || !s.regular) return std::nullopt;
  BlownFace out{std::vector<Simplex>(n + 1), std::vector<char>(n, 1)};
  for (int i = 0; i < n; ++i) {
    const Simplex& delta = s.parts[i];
    const Simplex& f = w.parts[i];
    if (delta.empty()) {
      if (!f.empty()) return std::nullopt;
    } else if (!w.coned[i]) {
      if (!is_prefix(f, delta)) return std::nullopt;
      out.parts[i] = *classical_cap_local(f, delta);
    } else if (f != delta) {
      return std::nullopt;
    }
  }
  auto last = classical_cap_local(w.parts[n], s.parts[n]);
  if (!last) return std::nullopt;
  out.parts[n] = std::move(*last);

  long nu = 0, tail = 0;
  for (int j = n - 1; j >= 0; --j) {
    tail += w.factor_degree(j + 1);
    nu += static_cast<long>(s.parts[j].size()) * tail;
  }
  return std::make_pair(std::move(out), parity_sign(nu));
}

std::optional<std::pair<Simplex, int>> intersection_cap_local(const BlownFace& w, const FilteredSimplex& s) {
  auto cap = blown_cap(w, s);
  if (!cap) return std::nullopt;
  auto image = mu_lower(cap->first);
  if (!image) return std::nullopt;
  return std::make_pair(std::move(*image), cap->second);
}

CapEngine::CapEngine(const FilteredComplex& k, const BlownComplex& blown) : k_(&k), blown_(&blown) {
  const int n = k.dimension();
  blown_terms_.resize(k.top_dimension() + 1);
  classical_terms_.resize(k.top_dimension() + 1);
  for (int d = 0; d <= k.top_dimension(); ++d) {
    blown_terms_[d].resize(k.count(d));
    classical_terms_[d].resize(k.count(d));
    for (Index i = 0; i < k.count(d); ++i) {
      const Simplex& s = k.simplex(d, i);
      for (int r = 0; r <= d; ++r) {
        Simplex front(s.begin(), s.begin() + r + 1), back(s.begin() + r, s.end());
        classical_terms_[d][i].push_back({r, k.index_of(front), 1, k.index_of(back)});
      }
      FilteredSimplex fs = k.decompose(s);
      if (!fs.regular) continue;
      // Factor choices with a nonzero cap: front faces uncone, or the whole part coned.
      std::vector<std::vector<std::pair<Simplex, char>>> options(n + 1);
      for (int j = 0; j <= n; ++j) {
        const Simplex& delta = fs.parts[j];
        if (delta.empty()) {
          options[j].push_back({{}, 1});
          continue;
        }
        for (std::size_t len = 1; len <= delta.size(); ++len)
          options[j].push_back({Simplex(delta.begin(), delta.begin() + static_cast<long>(len)), 0});
        if (j < n) options[j].push_back({delta, 1});
      }
      std::vector<std::size_t> choice(n + 1, 0);
      for (;;) {
        BlownFace w{std::vector<Simplex>(n + 1), std::vector<char>(n)};
        for (int j = 0; j <= n; ++j) {
          w.parts[j] = options[j][choice[j]].first;
          if (j < n) w.coned[j] = options[j][choice[j]].second;
        }
        if (auto cap = intersection_cap_local(w, fs)) {
          const int deg = w.degree();
          auto cell = blown.find(w);
          if (!cell) throw std::logic_error("cap table refers to a missing blown cell");
          blown_terms_[d][i].push_back({deg, *cell, cap->second, k.index_of(cap->first)});
        }
        int j = 0;
        while (j <= n && ++choice[j] == options[j].size()) choice[j++] = 0;
        if (j > n) break;
      }
    }
  }
}

namespace {

SparseVector apply_terms(const std::vector<std::vector<std::vector<CapEngine::Term>>>& table, int p,
                         const SparseVector& w, int q, const SparseVector& xi, const EngineRing& ring) {
  std::vector<Entry> out;
  if (q < 0 || q >= static_cast<int>(table.size())) return {};
  for (const Entry& x : xi.entries())
    for (const auto& t : table[q][x.index]) {
      if (t.cochain_degree != p) continue;
      Integer c = w.at(t.cochain);
      if (c == 0) continue;
      out.push_back({t.result, c * x.value * t.sign});
    }
  return SparseVector::from_entries(std::move(out), ring);
}

}  // namespace

SparseVector CapEngine::intersection(int p, const SparseVector& w, int q, const SparseVector& xi) const {
  return apply_terms(blown_terms_, p, w, q, xi, EngineRing(blown_->ring()));
}

SparseVector CapEngine::classical(int p, const SparseVector& c, int q, const SparseVector& xi) const {
  return apply_terms(classical_terms_, p, c, q, xi, EngineRing(blown_->ring()));
}

std::optional<LeibnizSigns> fit_leibniz_signs(const CapEngine& cap, const std::vector<CapSample>& samples) {
  const PresentedComplex chains = cap.space().chain_complex(cap.blown().ring());
  const PresentedComplex& cochains = *cap.blown().complex();
  const EngineRing ring(cap.blown().ring());
  std::vector<LeibnizSigns> candidates{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& s : samples) {
    SparseVector lhs = chains.boundary(s.q - s.p).apply(cap.intersection(s.p, s.w, s.q, s.xi), ring);
    SparseVector a = cap.intersection(s.p + 1, cochains.boundary(-s.p).apply(s.w, ring), s.q, s.xi);
    SparseVector b = cap.intersection(s.p, s.w, s.q - 1, chains.boundary(s.q).apply(s.xi, ring));
    if (s.p % 2) b = b.scaled(Integer(-1), ring);
    std::erase_if(candidates, [&](const LeibnizSigns& c) {
      SparseVector rhs = a.scaled(Integer(c.coboundary), ring);
      rhs.axpy(Integer(c.boundary), b, ring);
      return !(rhs == lhs);
    });
  }
  if (candidates.size() != 1) return std::nullopt;
  return candidates.front();
}

ChainMap tw_duality_map(const CapEngine& cap, const TWComplex& tw, const IntersectionComplex& ic,
                        const SparseVector& fundamental) {
  const int n = cap.space().dimension();
  ChainMap f{tw.sub.complex, ic.sub.complex, n, {}};
  const EngineRing ring(cap.blown().ring());
  for (int deg = f.source->min_degree(); deg <= f.source->max_degree(); ++deg) {
    const int k = -deg;
    const auto& basis = tw.basis(k);
    SparseMatrix m(f.target->rank(n - k), basis.size());
    const Integer sign(k % 2 ? kLeibnizSigns.coboundary : 1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      SparseVector chain = cap.intersection(k, basis[j], n, fundamental).scaled(sign, ring);
      auto coords = ic.sub.coordinates(n - k, chain);
      if (!coords)
        throw std::logic_error("cap with the fundamental class leaves the " + ic.perversity.to_string() +
                               "-intersection chains in degree " + std::to_string(n - k));
      m.column(j) = std::move(*coords);
    }
    f.components.push_back(std::move(m));
  }
  return f;
}

ChainMap classical_duality_map(const CapEngine& cap, const ComplexPtr& cochains, const ComplexPtr& chains,
                               const SparseVector& fundamental) {
  const int n = cap.space().dimension();
  ChainMap f{cochains, chains, n, {}};
  const EngineRing ring(cochains->ring());
  for (int deg = cochains->min_degree(); deg <= cochains->max_degree(); ++deg) {
    const int k = -deg;
    SparseMatrix m(chains->rank(n - k), cochains->rank(deg));
    const Integer sign(k % 2 ? kLeibnizSigns.coboundary : 1);
    for (Index j = 0; j < m.cols(); ++j)
      m.column(j) = cap.classical(k, SparseVector::unit(j), n, fundamental).scaled(sign, ring);
    f.components.push_back(std::move(m));
  }
  return f;
}

void Report::add(bool ok, const std::string& line) {
  passed = passed && ok;
  lines.push_back(line);
}

void Report::merge(const Report& other) {
  passed = passed && other.passed;
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

std::string Report::text() const {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

Report check_chain_level_identity(const FilteredComplex& k, const CoefficientRing& ring) {
  BlownComplex blown(k, ring);
  CapEngine cap(k, blown);
  const EngineRing er(ring);
  Report report;
  std::size_t simplices = 0, mismatches = 0;
  std::string first;
  for (int d = 0; d <= k.top_dimension(); ++d)
    for (Index i = 0; i < k.count(d); ++i) {
      if (!k.is_regular(k.simplex(d, i))) continue;
      ++simplices;
      // (degree of c, c) -> c cap s, on both sides.
      std::map<std::pair<int, Index>, std::vector<Entry>> lhs, rhs;
      for (const auto& t : cap.intersection_terms(d, i)) {
        const BlownFace& b = blown.cells(t.cochain_degree)[t.cochain];
        auto f = mu_lower(b);
        if (!f) continue;
        lhs[{t.cochain_degree, k.index_of(*f)}].push_back({t.result, Integer(t.sign * koszul_sign(b))});
      }
      for (const auto& t : cap.classical_terms(d, i))
        rhs[{t.cochain_degree, t.cochain}].push_back({t.result, Integer(t.sign)});
      auto normalize = [&](auto& m) {
        std::map<std::pair<int, Index>, SparseVector> out;
        for (auto& [key, e] : m) {
          SparseVector v = SparseVector::from_entries(std::move(e), er);
          if (!v.empty()) out.emplace(key, std::move(v));
        }
        return out;
      };
      if (normalize(lhs) != normalize(rhs)) {
        if (mismatches++ == 0) first = k.describe(k.simplex(d, i));
      }
    }
  report.add(mismatches == 0, "M_0(c) cap s = c cap s on " + std::to_string(simplices) + " regular simplices" +
                                  (mismatches ? ", " + std::to_string(mismatches) + " failures, first " + first : ""));
  std::size_t allowable_singular = 0;
  const auto lattice = gm_perversities(k.dimension());
  for (int d = 0; d <= k.top_dimension(); ++d)
    for (const Simplex& s : k.simplices(d))
      if (!k.is_regular(s))
        for (const auto& p : lattice)
          if (is_allowable(k.decompose(s), p)) ++allowable_singular;
  report.add(allowable_singular == 0,
             "non-regular simplices allowable for some GM perversity: " + std::to_string(allowable_singular));
  return report;
}

Report check_local_cap_identity(const FilteredComplex& k, const CoefficientRing& ring) {
  const EngineRing er(ring);
  Report report;
  std::size_t simplices = 0, cap_failures = 0, chain_failures = 0;
  for (int d = 0; d <= k.top_dimension(); ++d)
    for (const Simplex& s : k.simplices(d)) {
      if (!k.is_regular(s)) continue;
      ++simplices;
      FilteredComplex closure = simplex_closure(k.decompose(s));
      const FilteredSimplex top = closure.decompose(closure.simplex(d, 0));
      BlownComplex local(closure, ring);
      // mu^*(1_F) cap~ [s] against 1_F cap [s].
      std::vector<std::vector<std::vector<Entry>>> lhs(d + 1);
      for (int e = 0; e <= d; ++e) lhs[e].resize(closure.count(e));
      for (int e = 0; e <= local.top_degree(); ++e)
        for (const BlownFace& b : local.cells(e)) {
          auto f = mu_lower(b);
          if (!f) continue;
          auto c = intersection_cap_local(b, top);
          if (!c) continue;
          lhs[e][closure.index_of(*f)].push_back(
              {closure.index_of(c->first), Integer(c->second * koszul_sign(b))});
        }
      for (int e = 0; e <= d; ++e)
        for (Index f = 0; f < closure.count(e); ++f) {
          SparseVector got = SparseVector::from_entries(std::move(lhs[e][f]), er);
          auto want = classical_cap_local(closure.simplex(e, f), top.vertices);
          SparseVector expected = want ? SparseVector::unit(closure.index_of(*want)) : SparseVector{};
          if (!(got == expected)) ++cap_failures;
        }
      // mu_* commutes with the boundaries.
      for (int e = 1; e <= local.top_degree(); ++e)
        for (const BlownFace& b : local.cells(e)) {
          std::vector<Entry> via_blown;
          for (const auto& [g, sign] : blown_chain_boundary(b))
            if (auto f = mu_lower(g)) via_blown.push_back({closure.index_of(*f), Integer(sign)});
          std::vector<Entry> via_simplex;
          if (auto f = mu_lower(b)) via_simplex = simplex_boundary(closure, *f);
          if (!(SparseVector::from_entries(std::move(via_blown), er) ==
                SparseVector::from_entries(std::move(via_simplex), er)))
            ++chain_failures;
        }
    }
  report.add(cap_failures == 0, "mu^*(c) cap~ [s] = c cap [s] on " + std::to_string(simplices) +
                                    " regular simplices, failures: " + std::to_string(cap_failures));
  report.add(chain_failures == 0, "mu_* is a chain map on " + std::to_string(simplices) +
                                      " regular simplices, failures: " + std::to_string(chain_failures));
  return report;
}

namespace {

struct PerversityData {
  TWComplex tw;
  IntersectionComplex ic;
  ChainMap alpha;  // cochains -> C^p_{n-*}
};

}  // namespace

Report verify_factorization(const FilteredComplex& k, const std::vector<Perversity>& perversities,
                            const CoefficientRing& ring) {
  const int n = k.dimension();
  const SparseVector fundamental = fundamental_class(k, ring);
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(ring));
  auto cochains = simplicial_cochains(k, ring);
  auto blown = std::make_shared<const BlownComplex>(k, ring);
  CapEngine cap(k, *blown);
  const EngineRing er(ring);
  const ChainMap m0 = m_zero(k, cochains, *blown);
  const ChainMap classical = classical_duality_map(cap, cochains, chains, fundamental);
  Report report;
  try {
    classical.verify();
  } catch (const ChainMapError& e) {
    report.add(false, std::string("cap with [X] is not a chain map: ") + e.what());
    return report;
  }

  std::vector<HomologyGroup> cohomology;
  for (int d = 0; d <= n; ++d) cohomology.push_back(homology(*cochains, -d));

  std::vector<PerversityData> data;
  for (const auto& p : perversities) {
    TWComplex tw = tw_complex(blown, p);
    IntersectionComplex ic = intersection_complex(k, p, chains);
    ChainMap mp = m_perversity(m0, tw);
    ChainMap dual = tw_duality_map(cap, tw, ic, fundamental);
    const std::string name = p.to_string();
    try {
      dual.verify();
      mp.verify();
    } catch (const ChainMapError& e) {
      report.add(false, name + ": " + e.what());
      continue;
    }
    for (int d = 0; d <= n; ++d) {
      HomologyGroup source = tw.cohomology(d);
      HomologyGroup target = homology(ic.complex(), n - d);
      InducedMap bottom = induced_map(dual, -d, source, target);
      report.add(bottom.is_isomorphism(), name + " k=" + std::to_string(d) + ": cap [X]: " + source.to_string() +
                                              " -> " + target.to_string() +
                                              (bottom.is_isomorphism() ? " iso" : " NOT iso"));
      std::size_t failures = 0;
      for (const auto& c : cohomology[d].representatives()) {
        SparseVector via = ic.inclusion().component(n - d).apply(
            dual.component(-d).apply(mp.component(-d).apply(c, er), er), er);
        SparseVector direct = classical.component(-d).apply(c, er);
        if (!class_equal(via, direct, *chains, n - d)) ++failures;
      }
      report.add(failures == 0, name + " k=" + std::to_string(d) + ": square commutes on " +
                                    std::to_string(cohomology[d].generator_count()) + " generators" +
                                    (failures ? ", failures: " + std::to_string(failures) : ""));
    }
    data.push_back({std::move(tw), std::move(ic), compose(dual, mp)});
  }

  for (const auto& a : data)
    for (const auto& b : data) {
      if (&a == &b || !leq(a.ic.perversity, b.ic.perversity)) continue;
      ChainMap beta = beta_map(a.ic, b.ic);
      std::size_t failures = 0, checked = 0;
      for (int d = 0; d <= n; ++d)
        for (const auto& c : cohomology[d].representatives()) {
          ++checked;
          SparseVector direct = b.alpha.component(-d).apply(c, er);
          SparseVector via = beta.component(n - d).apply(a.alpha.component(-d).apply(c, er), er);
          if (!class_equal(via, direct, b.ic.complex(), n - d)) ++failures;
        }
      report.add(failures == 0, "alpha" + b.ic.perversity.to_string() + " = beta alpha" +
                                    a.ic.perversity.to_string() + " on " + std::to_string(checked) + " generators" +
                                    (failures ? ", failures: " + std::to_string(failures) : ""));
    }
  return report;
}

Report check_zero_top(const FilteredComplex& k, const CoefficientRing& ring) {
  const int n = k.dimension();
  const SparseVector fundamental = fundamental_class(k, ring);
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(ring));
  auto cochains = simplicial_cochains(k, ring);
  BlownComplex blown(k, ring);
  CapEngine cap(k, blown);
  const ChainMap classical = classical_duality_map(cap, cochains, chains, fundamental);
  classical.verify();
  IntersectionComplex zero = intersection_complex(k, Perversity::zero(n), chains);
  IntersectionComplex top = intersection_complex(k, Perversity::top(n), chains);
  const ChainMap beta = beta_map(zero, top);
  beta.verify();

  Report report;
  bool all_i = true, all_ii = true;
  for (int d = 0; d <= n; ++d) {
    HomologyGroup hk = homology(*cochains, -d), hn = homology(*chains, n - d);
    const bool i = induced_map(classical, -d, hk, hn).is_isomorphism();
    HomologyGroup h0 = homology(zero.complex(), n - d), ht = homology(top.complex(), n - d);
    const bool ii = induced_map(beta, n - d, h0, ht).is_isomorphism();
    all_i = all_i && i;
    all_ii = all_ii && ii;
    report.lines.push_back("k=" + std::to_string(d) + ": (i) " + hk.to_string() + " -> " + hn.to_string() +
                           (i ? " iso" : " not iso") + "; (ii) " + h0.to_string() + " -> " + ht.to_string() +
                           (ii ? " iso" : " not iso"));
  }
  const bool equivalent = all_i == all_ii;
  report.add(equivalent, std::string(equivalent ? "PASS" : "FAIL") + ": (i) " + (all_i ? "holds" : "fails") +
                             ", (ii) " + (all_ii ? "holds" : "fails") + ", equivalence " +
                             (equivalent ? "OK" : "broken"));
  return report;
}

Report gm_nonfactorization_demo(const FilteredComplex& k) {
  const CoefficientRing z = CoefficientRing::integers();
  Report report;
  if (k.dimension() != 4) {
    report.add(false, "expected a 4-dimensional filtration, got " + std::to_string(k.dimension()));
    return report;
  }
  auto chains = std::make_shared<const PresentedComplex>(k.chain_complex(z));
  auto expect = [&](const std::string& what, const HomologyGroup& h, const std::string& want) {
    const std::string got = h.to_string();
    report.add(got == want, what + " = " + got + (got == want ? "" : " (expected " + want + ")"));
  };
  expect("H^3(X)", homology(dual_complex(*chains), -3), "Z/2");
  IntersectionComplex zero = intersection_complex(k, Perversity::zero(4), chains);
  IntersectionComplex one = intersection_complex(k, Perversity::clip(1, 4), chains);
  IntersectionComplex two = intersection_complex(k, Perversity::clip(2, 4), chains);
  expect("H^3_GM,2(X)", homology(gm_cochain_complex(two), -3), "Z/2");
  expect("H^3_GM,1(X)", homology(gm_cochain_complex(one), -3), "0");
  HomologyGroup h0 = homology(zero.complex(), 1), h1 = homology(one.complex(), 1);
  expect("H^0_1(X)", h0, "Z/2");
  expect("H^1_1(X)", h1, "Z/2");
  const ChainMap beta = beta_map(zero, one);
  beta.verify();
  const bool iso = induced_map(beta, 1, h0, h1).is_isomorphism();
  report.add(iso, std::string("beta^{0,1}: H^0_1 -> H^1_1 ") + (iso ? "iso" : "NOT iso"));
  if (report.passed)
    report.lines.push_back("the isomorphism Z/2 -> Z/2 cannot factor through H^3_GM,1(X) = 0");
  return report;
}

}  // namespace ihtw

#include "ihtw/blowup.hpp"

#include <algorithm>

namespace ihtw {

namespace {

int parity_sign(long x) { return x % 2 == 0 ? 1 : -1; }

}  // namespace

int BlownFace::factor_degree(int i) const {
  const int dim = static_cast<int>(parts[i].size()) - 1;
  return i < n() ? dim + coned[i] : dim;
}

int BlownFace::degree() const {
  int d = 0;
  for (int i = 0; i <= n(); ++i) d += factor_degree(i);
  return d;
}

int BlownFace::perverse_degree(int l) const {
  const int first = n() - l;
  if (coned[first]) return kMinusInfinity;
  int d = 0;
  for (int i = first + 1; i <= n(); ++i) d += factor_degree(i);
  return d;
}

Simplex BlownFace::support() const {
  Simplex s;
  for (const auto& p : parts) s.insert(s.end(), p.begin(), p.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::size_t BlownFaceHash::operator()(const BlownFace& f) const noexcept {
  SimplexHash h;
  std::size_t seed = f.coned.size();
  for (const auto& p : f.parts) seed ^= h(p) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  for (char c : f.coned) seed = seed * 3 + static_cast<std::size_t>(c);
  return seed;
}

std::vector<std::pair<BlownFace, int>> blown_coboundary(const BlownFace& f,
                                                        const std::vector<std::pair<Index, int>>& extensions) {
  const int n = f.n();
  std::vector<int> before(n + 2, 0);
  for (int i = 0; i <= n; ++i) before[i + 1] = before[i] + f.factor_degree(i);
  auto factor_sign = [&](int i) { return parity_sign(before[i]) * parity_sign(f.factor_degree(i) + 1); };

  std::vector<std::pair<BlownFace, int>> out;
  for (int i = 0; i < n; ++i) {
    if (f.parts[i].empty() || f.coned[i]) continue;
    BlownFace g = f;
    g.coned[i] = 1;
    out.emplace_back(std::move(g), factor_sign(i) * parity_sign(static_cast<long>(f.parts[i].size())));
  }
  for (auto [v, i] : extensions) {
    BlownFace g = f;
    auto& part = g.parts[i];
    auto it = std::lower_bound(part.begin(), part.end(), v);
    const long position = it - part.begin();
    part.insert(it, v);
    out.emplace_back(std::move(g), factor_sign(i) * parity_sign(position));
  }
  return out;
}

BlownComplex::BlownComplex(const FilteredComplex& k, const CoefficientRing& ring) : n_(k.dimension()) {
  struct Origin {
    int dim;
    Index index;
  };
  std::vector<std::vector<Origin>> origins;
  for (int d = 0; d <= k.top_dimension(); ++d) {
    for (Index s = 0; s < k.count(d); ++s) {
      FilteredSimplex fs = k.decompose(k.simplex(d, s));
      if (!fs.regular) continue;
      std::vector<int> singular;
      for (int i = 0; i < n_; ++i)
        if (!fs.parts[i].empty()) singular.push_back(i);
      for (unsigned mask = 0; mask < (1u << singular.size()); ++mask) {
        BlownFace f{fs.parts, std::vector<char>(n_, 1)};
        for (std::size_t j = 0; j < singular.size(); ++j) f.coned[singular[j]] = (mask >> j) & 1u;
        const int deg = f.degree();
        if (deg >= static_cast<int>(cells_.size())) {
          cells_.resize(deg + 1);
          origins.resize(deg + 1);
        }
        cells_[deg].push_back(std::move(f));
        origins[deg].push_back({d, s});
      }
    }
  }
  for (int deg = 0; deg <= top_degree(); ++deg)
    for (Index i = 0; i < cells_[deg].size(); ++i) lookup_.emplace(cells_[deg][i], i);

  std::vector<std::size_t> ranks;
  for (int deg = top_degree(); deg >= 0; --deg) ranks.push_back(cells_[deg].size());
  auto complex = std::make_shared<PresentedComplex>(ring, -top_degree(), std::move(ranks));
  const EngineRing er(ring);
  for (int deg = 0; deg < top_degree(); ++deg) {
    SparseMatrix m(cells_[deg + 1].size(), cells_[deg].size());
    for (Index c = 0; c < cells_[deg].size(); ++c) {
      const Origin o = origins[deg][c];
      const Simplex& s = k.simplex(o.dim, o.index);
      std::vector<std::pair<Index, int>> extensions;
      for (Index t : k.cofaces(o.dim, o.index)) {
        const Simplex& big = k.simplex(o.dim + 1, t);
        Simplex extra;
        std::set_difference(big.begin(), big.end(), s.begin(), s.end(), std::back_inserter(extra));
        extensions.emplace_back(extra.front(), k.stratum(extra.front()));
      }
      std::vector<Entry> entries;
      for (auto& [g, sign] : blown_coboundary(cells_[deg][c], extensions)) {
        auto row = lookup_.find(g);
        if (row == lookup_.end()) throw std::logic_error("coboundary leaves the blown-up basis");
        entries.push_back({row->second, Integer(sign)});
      }
      m.column(c) = SparseVector::from_entries(std::move(entries), er);
    }
    complex->set_boundary(-deg, std::move(m));
  }
  complex_ = std::move(complex);
}

std::size_t BlownComplex::count(int k) const {
  return k < 0 || k > top_degree() ? 0 : cells_[k].size();
}

const std::vector<BlownFace>& BlownComplex::cells(int k) const {
  static const std::vector<BlownFace> none;
  return k < 0 || k > top_degree() ? none : cells_[k];
}

std::optional<Index> BlownComplex::find(const BlownFace& f) const {
  auto it = lookup_.find(f);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int BlownComplex::perverse_degree(int k, const SparseVector& w, int l) const {
  int d = kMinusInfinity;
  for (const Entry& e : w.entries()) d = std::max(d, cells(k)[e.index].perverse_degree(l));
  return d;
}

bool BlownComplex::allowable(int k, const SparseVector& w, const Perversity& p) const {
  for (int l = 1; l <= n_; ++l)
    if (perverse_degree(k, w, l) > p(l)) return false;
  return true;
}

FilteredComplex simplex_closure(const FilteredSimplex& s) {
  std::vector<Vertex> vertices;
  Simplex facet;
  for (std::size_t j = 0; j < s.vertices.size(); ++j) {
    int stratum = 0;
    for (int i = 0; i <= s.formal_dimension(); ++i)
      if (std::binary_search(s.parts[i].begin(), s.parts[i].end(), s.vertices[j])) stratum = i;
    vertices.push_back({"v" + std::to_string(j), stratum});
    facet.push_back(static_cast<Index>(j));
  }
  return FilteredComplex(s.formal_dimension(), std::move(vertices), {facet});
}

BlownComplex local_complex(const FilteredSimplex& s, const CoefficientRing& ring) {
  if (!s.regular) throw std::invalid_argument("blow-up of a simplex missing the regular stratum");
  return BlownComplex(simplex_closure(s), ring);
}

TWComplex tw_complex(std::shared_ptr<const BlownComplex> blown, const Perversity& p) {
  if (p.n() != blown->n()) throw std::invalid_argument("perversity length does not match the filtration");
  const BlownComplex& b = *blown;
  Subcomplex sub = allowable_subcomplex(b.complex(), [&](int deg, Index i) {
    const BlownFace& f = b.cells(-deg)[i];
    for (int l = 1; l <= b.n(); ++l)
      if (f.perverse_degree(l) > p(l)) return false;
    return true;
  });
  return TWComplex{std::move(blown), p, std::move(sub)};
}

HomologyGroup tw_cohomology(const FilteredComplex& k, const Perversity& p, const CoefficientRing& ring,
                            int degree) {
  return tw_complex(std::make_shared<const BlownComplex>(k, ring), p).cohomology(degree);
}

ComplexPtr simplicial_cochains(const FilteredComplex& k, const CoefficientRing& ring) {
  return std::make_shared<const PresentedComplex>(dual_complex(k.chain_complex(ring), true));
}

std::optional<Simplex> mu_lower(const BlownFace& f) {
  const int n = f.n();
  int l = 0;
  while (l < n && f.coned[l]) ++l;
  for (int i = l + 1; i <= n; ++i)
    if (f.factor_degree(i) != 0) return std::nullopt;
  Simplex s;
  for (int i = 0; i <= l; ++i) s.insert(s.end(), f.parts[i].begin(), f.parts[i].end());
  std::sort(s.begin(), s.end());
  return s;
}

int koszul_sign(const BlownFace& f) {
  long total = 0, before = 0;
  for (int i = 0; i <= f.n(); ++i) {
    total += before * f.factor_degree(i);
    before += f.factor_degree(i);
  }
  return parity_sign(total);
}

ChainMap m_zero(const FilteredComplex& k, const ComplexPtr& cochains, const BlownComplex& blown) {
  ChainMap f{cochains, blown.complex(), 0, {}};
  const EngineRing er(blown.ring());
  for (int deg = cochains->min_degree(); deg <= cochains->max_degree(); ++deg) {
    const int d = -deg;
    std::vector<std::vector<Entry>> columns(k.count(d));
    const auto& cells = blown.cells(d);
    for (Index b = 0; b < cells.size(); ++b) {
      auto s = mu_lower(cells[b]);
      if (!s) continue;
      if (static_cast<int>(s->size()) - 1 != d) throw std::logic_error("projection changes the degree");
      columns[k.index_of(*s)].push_back({b, Integer(koszul_sign(cells[b]))});
    }
    SparseMatrix m(blown.complex()->rank(deg), k.count(d));
    for (Index c = 0; c < columns.size(); ++c) m.column(c) = SparseVector::from_entries(std::move(columns[c]), er);
    f.components.push_back(std::move(m));
  }
  return f;
}

ChainMap m_perversity(const ChainMap& m0, const TWComplex& tw) {
  ChainMap f{m0.source, tw.sub.complex, 0, {}};
  for (int deg = m0.source->min_degree(); deg <= m0.source->max_degree(); ++deg) {
    const SparseMatrix m = m0.component(deg);
    SparseMatrix out(tw.sub.complex->rank(deg), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      auto coords = tw.sub.coordinates(deg, m.column(c));
      if (!coords) throw std::logic_error("image of M_0 is not " + tw.perversity.to_string() + "-allowable");
      out.column(c) = std::move(*coords);
    }
    f.components.push_back(std::move(out));
  }
  return f;
}

}  // namespace ihtw

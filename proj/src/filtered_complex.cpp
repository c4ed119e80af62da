#include "ihtw/filtered_complex.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace ihtw {

int FilteredSimplex::perverse_degree(int i) const {
  const int n = formal_dimension();
  std::size_t count = 0;
  for (int j = 0; j <= n - i; ++j) count += parts[j].size();
  return count == 0 ? kMinusInfinity : static_cast<int>(count) - 1;
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = s.size();
  for (Index v : s) h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

FilteredComplex::FilteredComplex(int n, std::vector<Vertex> vertices, std::vector<Simplex> facets)
    : n_(n), vertices_(std::move(vertices)) {
  if (n < 0) throw InputError("formal dimension must be non-negative");
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].stratum < 0 || vertices_[v].stratum > n)
      throw InputError("vertex " + vertices_[v].name + " has stratum outside [0, " + std::to_string(n) + "]");
    if (v > 0 && vertices_[v].stratum < vertices_[v - 1].stratum)
      throw InputError("vertex order does not refine the stratum order at vertex " + vertices_[v].name);
  }
  std::vector<std::set<Simplex>> faces;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw InputError("empty facet");
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("facet repeats a vertex");
    if (f.back() >= vertices_.size()) throw InputError("facet refers to an unknown vertex");
    if (f.size() > 24) throw InputError("facet dimension too large");
    const std::size_t m = f.size();
    if (faces.size() < m) faces.resize(m);
    if (faces[m - 1].count(f)) continue;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      faces[s.size() - 1].insert(std::move(s));
    }
  }
  for (auto& level : faces) by_dim_.emplace_back(level.begin(), level.end());
  lookup_.resize(by_dim_.size());
  for (std::size_t d = 0; d < by_dim_.size(); ++d)
    for (Index i = 0; i < by_dim_[d].size(); ++i) lookup_[d].emplace(by_dim_[d][i], i);
  cofaces_.resize(by_dim_.size());
  for (std::size_t d = 0; d < by_dim_.size(); ++d) cofaces_[d].resize(by_dim_[d].size());
  for (std::size_t d = 1; d < by_dim_.size(); ++d) {
    for (Index i = 0; i < by_dim_[d].size(); ++i) {
      const Simplex& s = by_dim_[d][i];
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(j));
        cofaces_[d - 1][lookup_[d - 1].at(face)].push_back(i);
      }
    }
  }
}

std::size_t FilteredComplex::count(int d) const {
  if (d < 0 || d > top_dimension()) return 0;
  return by_dim_[d].size();
}

const std::vector<Simplex>& FilteredComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d > top_dimension()) return none;
  return by_dim_[d];
}

std::optional<Index> FilteredComplex::find(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > top_dimension()) return std::nullopt;
  auto it = lookup_[d].find(s);
  if (it == lookup_[d].end()) return std::nullopt;
  return it->second;
}

Index FilteredComplex::index_of(const Simplex& s) const {
  auto i = find(s);
  if (!i) throw std::out_of_range("simplex " + describe(s) + " is not in the complex");
  return *i;
}

std::vector<std::pair<int, Index>> FilteredComplex::maximal_simplices() const {
  std::vector<std::pair<int, Index>> out;
  for (int d = 0; d <= top_dimension(); ++d)
    for (Index i = 0; i < count(d); ++i)
      if (cofaces_[d][i].empty()) out.emplace_back(d, i);
  return out;
}

FilteredSimplex FilteredComplex::decompose(const Simplex& s) const {
  FilteredSimplex out;
  out.vertices = s;
  out.parts.resize(n_ + 1);
  for (Index v : s) out.parts[stratum(v)].push_back(v);
  out.regular = !out.parts[n_].empty();
  return out;
}

bool FilteredComplex::is_regular(const Simplex& s) const {
  return std::any_of(s.begin(), s.end(), [&](Index v) { return stratum(v) == n_; });
}

int FilteredComplex::depth(const Simplex& s) const {
  int d = 0;
  for (Index v : s) d = std::max(d, stratum(v));
  return d;
}

PresentedComplex FilteredComplex::chain_complex(const CoefficientRing& ring) const {
  std::vector<std::size_t> ranks;
  for (int d = 0; d <= top_dimension(); ++d) ranks.push_back(count(d));
  PresentedComplex c(ring, 0, ranks);
  EngineRing er(ring);
  for (int d = 1; d <= top_dimension(); ++d) {
    SparseMatrix m(count(d - 1), count(d));
    for (Index i = 0; i < count(d); ++i) {
      const Simplex& s = by_dim_[d][i];
      std::vector<Entry> e;
      for (std::size_t j = 0; j < s.size(); ++j) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(j));
        e.push_back({lookup_[d - 1].at(face), j % 2 ? Integer(-1) : Integer(1)});
      }
      m.column(i) = SparseVector::from_entries(std::move(e), er);
    }
    c.set_boundary(d, std::move(m));
  }
  return c;
}

std::string FilteredComplex::describe(const Simplex& s) const {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i] < vertices_.size() ? vertices_[s[i]].name : "?";
  }
  return out + "]";
}

std::optional<Index> FilteredComplex::vertex_index(std::string_view name) const {
  for (Index v = 0; v < vertices_.size(); ++v)
    if (vertices_[v].name == name) return v;
  return std::nullopt;
}

bool ValidationReport::valid() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

std::string ValidationReport::text() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "ok   " : "FAIL ") << c.condition;
    if (!c.passed) out << ": " << c.witness;
    out << "\n";
  }
  out << (normal ? "ok   normal" : "FAIL normal") << "\n";
  return out.str();
}

namespace {

bool link_connected(const FilteredComplex& k, const Simplex& tau) {
  // Vertices of the link and the edges joining them.
  const int d = static_cast<int>(tau.size()) - 1;
  std::vector<Index> link;
  for (Index c : k.cofaces(d, k.index_of(tau))) {
    for (Index v : k.simplex(d + 1, c))
      if (!std::binary_search(tau.begin(), tau.end(), v)) link.push_back(v);
  }
  if (link.empty()) return false;
  std::sort(link.begin(), link.end());
  std::vector<std::size_t> parent(link.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto pos = [&](Index v) { return static_cast<std::size_t>(std::lower_bound(link.begin(), link.end(), v) - link.begin()); };
  for (Index c : k.cofaces(d, k.index_of(tau))) {
    for (Index e : k.cofaces(d + 1, c)) {
      std::vector<Index> pair;
      for (Index v : k.simplex(d + 2, e))
        if (!std::binary_search(tau.begin(), tau.end(), v)) pair.push_back(v);
      parent[root(pos(pair[0]))] = root(pos(pair[1]));
    }
  }
  const std::size_t r = root(0);
  for (std::size_t i = 1; i < link.size(); ++i)
    if (root(i) != r) return false;
  return true;
}

}  // namespace

ValidationReport validate(const FilteredComplex& k) {
  ValidationReport report;
  const int n = k.dimension();

  ValidationCheck order{"vertex order refines strata", true, ""};
  report.checks.push_back(order);  // enforced on construction

  ValidationCheck full{"strata are full subcomplexes", true, ""};
  for (int d = 0; d <= k.top_dimension() && full.passed; ++d) {
    for (const auto& s : k.simplices(d)) {
      // Every face spanned by the vertices of s lying in X_i must itself be present.
      for (int i = 0; i <= n; ++i) {
        Simplex part;
        for (Index v : s)
          if (k.stratum(v) <= i) part.push_back(v);
        if (!part.empty() && !k.find(part)) {
          full.passed = false;
          full.witness = k.describe(s);
          break;
        }
      }
      if (!full.passed) break;
    }
  }
  report.checks.push_back(full);

  ValidationCheck codim{"no codimension-one stratum", true, ""};
  if (n >= 1) {
    for (Index v = 0; v < k.vertex_count(); ++v) {
      if (k.stratum(v) == n - 1) {
        codim.passed = false;
        codim.witness = k.describe({v});
        break;
      }
    }
  }
  report.checks.push_back(codim);

  ValidationCheck pure{"pure of dimension " + std::to_string(n), true, ""};
  for (auto [d, i] : k.maximal_simplices()) {
    if (d != n) {
      pure.passed = false;
      pure.witness = k.describe(k.simplex(d, i));
      break;
    }
  }
  report.checks.push_back(pure);

  ValidationCheck manifold{"regular (n-1)-simplices have exactly two cofaces", true, ""};
  if (n >= 1) {
    for (Index i = 0; i < k.count(n - 1); ++i) {
      const Simplex& s = k.simplex(n - 1, i);
      if (k.depth(s) < n) continue;
      if (k.cofaces(n - 1, i).size() != 2) {
        manifold.passed = false;
        manifold.witness = k.describe(s) + " has " + std::to_string(k.cofaces(n - 1, i).size()) + " cofaces";
        break;
      }
    }
  }
  report.checks.push_back(manifold);

  for (int d = 0; d <= k.top_dimension() && report.normal; ++d) {
    for (const auto& s : k.simplices(d)) {
      if (k.depth(s) > n - 2) continue;
      if (!link_connected(k, s)) {
        report.normal = false;
        report.checks.push_back({"normal", false, "link of " + k.describe(s) + " is not connected"});
        break;
      }
    }
  }
  return report;
}

SparseVector fundamental_class(const FilteredComplex& k, const CoefficientRing& ring) {
  const int n = k.dimension();
  if (k.top_dimension() != n) throw OrientationError("complex has no " + std::to_string(n) + "-simplices", {});
  EngineRing er(ring);
  const bool sign_free = ring.kind() == RingKind::Modular && ring.modulus() == 2;
  const std::size_t m = k.count(n);
  std::vector<int> sign(m, 0);
  std::vector<Index> parent(m, 0);

  auto incidence = [&](Index top, Index face) {
    const Simplex& s = k.simplex(n, top);
    const Simplex& f = k.simplex(n - 1, face);
    for (std::size_t j = 0; j < s.size(); ++j)
      if (j == f.size() || s[j] != f[j]) return j % 2 ? -1 : 1;
    return 1;
  };
  auto path_to_root = [&](Index x) {
    std::vector<Simplex> path;
    for (;;) {
      path.push_back(k.simplex(n, x));
      if (parent[x] == x) break;
      x = parent[x];
    }
    return path;
  };

  // Faces of each top simplex, for adjacency.
  std::vector<std::vector<Index>> faces(m);
  for (Index f = 0; f < k.count(n - 1); ++f)
    for (Index t : k.cofaces(n - 1, f)) faces[t].push_back(f);

  for (Index start = 0; start < m; ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    parent[start] = start;
    std::deque<Index> queue{start};
    while (!queue.empty()) {
      Index s = queue.front();
      queue.pop_front();
      for (Index f : faces[s]) {
        const auto& co = k.cofaces(n - 1, f);
        if (co.size() != 2) continue;
        Index t = co[0] == s ? co[1] : co[0];
        int want = sign_free ? 1 : -sign[s] * incidence(s, f) * incidence(t, f);
        if (sign[t] == 0) {
          sign[t] = want;
          parent[t] = s;
          queue.push_back(t);
        } else if (sign[t] != want) {
          auto a = path_to_root(s);
          auto b = path_to_root(t);
          std::reverse(b.begin(), b.end());
          a.insert(a.end(), b.begin(), b.end());
          throw OrientationError("not orientable over " + ring.symbol() + ": inconsistent adjacency cycle", a);
        }
      }
    }
  }
  SparseVector chain;
  for (Index i = 0; i < m; ++i) chain.push_back(i, er.reduce(sign[i]));
  SparseVector boundary = k.chain_complex(ring).boundary(n).apply(chain, er);
  if (!boundary.empty())
    throw OrientationError("fundamental chain is not a cycle over " + ring.symbol(),
                           {k.simplex(n - 1, boundary.entries().front().index)});
  return chain;
}

FilteredComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<Vertex> vertices;
  std::unordered_map<std::string, Index> names;
  std::vector<Simplex> facets;
  int lineno = 0;
  auto fail = [&](const std::string& msg) { throw InputError("line " + std::to_string(lineno) + ": " + msg); };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "dim") {
      if (n >= 0) fail("repeated dim");
      if (!(words >> n) || n < 0) fail("expected a non-negative dimension");
    } else if (keyword == "vertex") {
      std::string name, tag;
      int s = 0;
      if (!(words >> name >> tag >> s) || tag != "stratum") fail("expected `vertex <name> stratum <i>`");
      if (names.count(name)) fail("duplicate vertex " + name);
      names.emplace(name, static_cast<Index>(vertices.size()));
      vertices.push_back({name, s});
    } else if (keyword == "facet") {
      Simplex f;
      std::string name;
      while (words >> name) {
        auto it = names.find(name);
        if (it == names.end()) fail("unknown vertex " + name);
        f.push_back(it->second);
      }
      if (f.empty()) fail("empty facet");
      facets.push_back(std::move(f));
    } else {
      fail("unknown keyword " + keyword);
    }
    std::string extra;
    if (keyword != "facet" && (words >> extra)) fail("trailing text " + extra);
  }
  if (n < 0) throw InputError("missing `dim` line");
  return FilteredComplex(n, std::move(vertices), std::move(facets));
}

FilteredComplex load_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str());
}

std::string format_complex(const FilteredComplex& k) {
  std::ostringstream out;
  out << "dim " << k.dimension() << "\n";
  for (const auto& v : k.vertices()) out << "vertex " << v.name << " stratum " << v.stratum << "\n";
  for (auto [d, i] : k.maximal_simplices()) {
    out << "facet";
    for (Index v : k.simplex(d, i)) out << " " << k.vertex(v).name;
    out << "\n";
  }
  return out.str();
}

}  // namespace ihtw

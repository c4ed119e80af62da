#include "ihtw/constructions.hpp"

#include <algorithm>
#include <map>

namespace ihtw {

namespace {

std::string fresh_name(const FilteredComplex& k, std::string base) {
  while (k.vertex_index(base)) base += "'";
  return base;
}

std::vector<Vertex> shifted_vertices(const FilteredComplex& k) {
  std::vector<Vertex> out;
  for (const auto& v : k.vertices()) out.push_back({v.name, v.stratum + 1});
  return out;
}

}  // namespace

FilteredComplex cone(const FilteredComplex& k) {
  std::vector<Vertex> vertices{{fresh_name(k, "apex"), 0}};
  for (auto& v : shifted_vertices(k)) vertices.push_back(std::move(v));
  std::vector<Simplex> facets;
  for (auto [d, i] : k.maximal_simplices()) {
    Simplex f{0};
    for (Index v : k.simplex(d, i)) f.push_back(v + 1);
    facets.push_back(std::move(f));
  }
  return FilteredComplex(k.dimension() + 1, std::move(vertices), std::move(facets));
}

FilteredComplex suspension(const FilteredComplex& k) {
  std::vector<Vertex> vertices{{fresh_name(k, "north"), 0}, {fresh_name(k, "south"), 0}};
  for (auto& v : shifted_vertices(k)) vertices.push_back(std::move(v));
  std::vector<Simplex> facets;
  for (auto [d, i] : k.maximal_simplices()) {
    for (Index apex : {0u, 1u}) {
      Simplex f{apex};
      for (Index v : k.simplex(d, i)) f.push_back(v + 2);
      facets.push_back(std::move(f));
    }
  }
  return FilteredComplex(k.dimension() + 1, std::move(vertices), std::move(facets));
}

Subdivision barycentric_subdivision(const FilteredComplex& k) {
  struct Barycenter {
    int stratum;
    int dim;
    Index index;
  };
  std::vector<Barycenter> order;
  for (int d = 0; d <= k.top_dimension(); ++d)
    for (Index i = 0; i < k.count(d); ++i) order.push_back({k.depth(k.simplex(d, i)), d, i});
  std::stable_sort(order.begin(), order.end(), [](const Barycenter& a, const Barycenter& b) {
    return std::tie(a.stratum, a.dim, a.index) < std::tie(b.stratum, b.dim, b.index);
  });
  std::vector<std::vector<Index>> id(k.top_dimension() + 1);
  for (int d = 0; d <= k.top_dimension(); ++d) id[d].resize(k.count(d));
  std::vector<Vertex> vertices;
  std::vector<Simplex> carrier;
  for (const auto& b : order) {
    const Simplex& s = k.simplex(b.dim, b.index);
    std::string name = b.dim == 0 ? k.vertex(s[0]).name : k.describe(s);
    if (b.dim > 0) name = "(" + name.substr(1, name.size() - 2) + ")";
    id[b.dim][b.index] = static_cast<Index>(vertices.size());
    vertices.push_back({name, b.stratum});
    carrier.push_back(s);
  }
  std::vector<Simplex> facets;
  for (auto [d, i] : k.maximal_simplices()) {
    Simplex perm = k.simplex(d, i);
    do {
      Simplex flag;
      Simplex prefix;
      for (Index v : perm) {
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
        flag.push_back(id[prefix.size() - 1][k.index_of(prefix)]);
      }
      facets.push_back(std::move(flag));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {FilteredComplex(k.dimension(), std::move(vertices), std::move(facets)), std::move(carrier)};
}

std::vector<Index> subdivide_involution(const FilteredComplex& k, const Subdivision& sd,
                                        const std::vector<Index>& involution) {
  std::map<Simplex, Index> by_carrier;
  for (Index v = 0; v < sd.carrier.size(); ++v) by_carrier.emplace(sd.carrier[v], v);
  std::vector<Index> out(sd.carrier.size());
  for (Index v = 0; v < sd.carrier.size(); ++v) {
    Simplex image;
    for (Index x : sd.carrier[v]) image.push_back(involution.at(x));
    std::sort(image.begin(), image.end());
    auto it = by_carrier.find(image);
    if (it == by_carrier.end())
      throw QuotientError("involution is not simplicial", {sd.carrier[v]});
    out[v] = it->second;
  }
  (void)k;
  return out;
}

FilteredComplex antipodal_quotient(const FilteredComplex& k, const std::vector<Index>& involution) {
  const std::size_t nv = k.vertex_count();
  if (involution.size() != nv) throw QuotientError("involution has the wrong size", {});
  for (Index v = 0; v < nv; ++v) {
    Index w = involution[v];
    if (w >= nv || involution[w] != v) throw QuotientError("map is not an involution", {{v}});
    if (w == v) throw QuotientError("involution fixes a vertex", {{v}});
    if (k.stratum(w) != k.stratum(v)) throw QuotientError("involution does not preserve strata", {{v}});
  }
  auto image = [&](const Simplex& s) {
    Simplex t;
    for (Index v : s) t.push_back(involution[v]);
    std::sort(t.begin(), t.end());
    return t;
  };
  for (auto [d, i] : k.maximal_simplices())
    if (!k.find(image(k.simplex(d, i)))) throw QuotientError("involution is not simplicial", {k.simplex(d, i)});
  for (const auto& e : k.simplices(1))
    if (involution[e[0]] == e[1]) throw QuotientError("a simplex meets its image", {e});

  std::vector<Index> orbit(nv);
  std::vector<Vertex> vertices;
  for (Index v = 0; v < nv; ++v) {
    if (involution[v] < v) continue;
    orbit[v] = orbit[involution[v]] = static_cast<Index>(vertices.size());
    vertices.push_back(k.vertex(v));
  }
  auto project = [&](const Simplex& s) {
    Simplex t;
    for (Index v : s) t.push_back(orbit[v]);
    std::sort(t.begin(), t.end());
    return t;
  };
  for (int d = 0; d <= k.top_dimension(); ++d) {
    std::map<Simplex, Simplex> seen;
    for (const auto& s : k.simplices(d)) {
      Simplex p = project(s);
      auto [it, fresh] = seen.emplace(p, s);
      if (!fresh && it->second != image(s))
        throw QuotientError("distinct simplices are identified", {it->second, s});
    }
  }
  std::vector<Simplex> facets;
  for (auto [d, i] : k.maximal_simplices()) facets.push_back(project(k.simplex(d, i)));
  return FilteredComplex(k.dimension(), std::move(vertices), std::move(facets));
}

SymmetricComplex cross_polytope_boundary(int d) {
  std::vector<Vertex> vertices;
  std::vector<Index> involution;
  for (int i = 0; i <= d; ++i) {
    vertices.push_back({"p" + std::to_string(i), d});
    vertices.push_back({"m" + std::to_string(i), d});
    involution.push_back(2 * i + 1);
    involution.push_back(2 * i);
  }
  std::vector<Simplex> facets;
  for (std::uint32_t signs = 0; signs < (1u << (d + 1)); ++signs) {
    Simplex f;
    for (int i = 0; i <= d; ++i) f.push_back(2 * i + ((signs >> i) & 1u));
    facets.push_back(std::move(f));
  }
  return {FilteredComplex(d, std::move(vertices), std::move(facets)), std::move(involution)};
}

SymmetricComplex hexagon_join() {
  std::vector<Vertex> vertices;
  std::vector<Index> involution;
  for (char c : {'a', 'b'})
    for (int i = 0; i < 6; ++i) vertices.push_back({std::string(1, c) + std::to_string(i), 3});
  for (Index side : {0u, 6u})
    for (Index i = 0; i < 6; ++i) involution.push_back(side + (i + 3) % 6);
  std::vector<Simplex> facets;
  for (Index i = 0; i < 6; ++i)
    for (Index j = 0; j < 6; ++j) facets.push_back({i, (i + 1) % 6, 6 + j, 6 + (j + 1) % 6});
  return {FilteredComplex(3, std::move(vertices), std::move(facets)), std::move(involution)};
}

FilteredComplex symmetric_quotient(const SymmetricComplex& k, int levels) {
  FilteredComplex current = k.complex;
  std::vector<Index> involution = k.involution;
  for (int l = 0; l < levels; ++l) {
    Subdivision sd = barycentric_subdivision(current);
    involution = subdivide_involution(current, sd, involution);
    current = std::move(sd.complex);
  }
  return antipodal_quotient(current, involution);
}

FilteredComplex boundary_simplex(int n) {
  std::vector<Vertex> vertices;
  for (int i = 0; i <= n + 1; ++i) vertices.push_back({"v" + std::to_string(i), n});
  std::vector<Simplex> facets;
  for (Index skip = 0; skip <= static_cast<Index>(n + 1); ++skip) {
    Simplex f;
    for (Index v = 0; v <= static_cast<Index>(n + 1); ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return FilteredComplex(n, std::move(vertices), std::move(facets));
}

FilteredComplex real_projective_space(int d) { return symmetric_quotient(cross_polytope_boundary(d), 1); }

FilteredComplex builtin_complex(std::string_view name) {
  if (name.starts_with("cone:")) return cone(builtin_complex(name.substr(5)));
  if (name.starts_with("susp:")) return suspension(builtin_complex(name.substr(5)));
  if (name == "rp2") return real_projective_space(2);
  if (name == "rp3") return real_projective_space(3);
  if (name == "rp3-hex") return symmetric_quotient(hexagon_join(), 1);
  if (name == "sigma-rp3") return suspension(real_projective_space(3));
  if (name.size() >= 2 && name[0] == 's') {
    std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) && digits.size() <= 2) {
      int n = std::stoi(digits);
      if (n <= 12) return boundary_simplex(n);
    }
  }
  throw InputError("unknown builtin `" + std::string(name) + "`");
}

}  // namespace ihtw

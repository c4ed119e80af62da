#pragma once

#include "ihtw/chain_complex.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <unordered_map>

namespace ihtw {

/// Strictly increasing vertex indices.
using Simplex = std::vector<Index>;

/// Stand-in for -infinity in perverse degrees.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min() / 4;

struct Vertex {
  std::string name;
  int stratum = 0;
};

/// A simplex with its join decomposition D_0 * ... * D_n by stratum.
struct FilteredSimplex {
  Simplex vertices;
  std::vector<Simplex> parts;  // n + 1 entries; parts[i] holds the stratum-i vertices
  bool regular = false;        // D_n nonempty

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  int formal_dimension() const { return static_cast<int>(parts.size()) - 1; }
  /// ||s||_i = dim(D_0 * ... * D_{n-i}), or kMinusInfinity when that join is empty.
  int perverse_degree(int i) const;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

/// Finite simplicial complex with a filtration X_0 c X_1 c ... c X_n by full
/// subcomplexes, X_i spanned by the vertices of stratum <= i.
class FilteredComplex {
 public:
  /// Closes `facets` under faces. Throws InputError for unknown vertices, repeated
  /// vertices in a facet, strata outside [0, n], or a vertex order that does not
  /// refine the stratum order.
  FilteredComplex(int n, std::vector<Vertex> vertices, std::vector<Simplex> facets);

  int dimension() const { return n_; }
  int top_dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const Vertex& vertex(Index v) const { return vertices_[v]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  int stratum(Index v) const { return vertices_[v].stratum; }

  std::size_t count(int d) const;
  const std::vector<Simplex>& simplices(int d) const;
  const Simplex& simplex(int d, Index i) const { return by_dim_[d][i]; }
  std::optional<Index> find(const Simplex& s) const;
  Index index_of(const Simplex& s) const;
  /// Indices of the (d+1)-simplices having simplex (d, i) as a face.
  const std::vector<Index>& cofaces(int d, Index i) const { return cofaces_[d][i]; }
  /// Simplices that are not a face of another simplex, by dimension then index.
  std::vector<std::pair<int, Index>> maximal_simplices() const;

  FilteredSimplex decompose(const Simplex& s) const;
  bool is_regular(const Simplex& s) const;
  /// Largest stratum among the vertices.
  int depth(const Simplex& s) const;

  /// Simplicial chains, degrees 0..top_dimension, alternating-sum boundary in vertex order.
  PresentedComplex chain_complex(const CoefficientRing& ring) const;

  std::string describe(const Simplex& s) const;
  std::optional<Index> vertex_index(std::string_view name) const;

 private:
  int n_;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, Index, SimplexHash>> lookup_;
  std::vector<std::vector<std::vector<Index>>> cofaces_;
};

/// Pseudomanifold surrogate checks; each names its witness on failure.
struct ValidationCheck {
  std::string condition;
  bool passed = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool normal = true;

  /// All checks other than normality.
  bool valid() const;
  std::string text() const;
};

ValidationReport validate(const FilteredComplex& k);

class OrientationError : public std::runtime_error {
 public:
  OrientationError(const std::string& what, std::vector<Simplex> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  /// Top simplices along an inconsistent adjacency cycle (or the offending face).
  const std::vector<Simplex>& witness() const { return witness_; }

 private:
  std::vector<Simplex> witness_;
};

/// Coherently oriented sum of the n-simplices, indexed like simplices(n). Signs are
/// propagated across faces shared by exactly two n-simplices starting from +1 on the
/// first simplex of each component. Throws OrientationError when that fails or the
/// result is not a cycle over the ring.
SparseVector fundamental_class(const FilteredComplex& k, const CoefficientRing& ring);

/// Text format: `dim <n>`, `vertex <name> stratum <i>`, `facet <name> ...`, `#` comments.
FilteredComplex parse_complex(std::string_view text);
FilteredComplex load_complex(const std::string& path);
std::string format_complex(const FilteredComplex& k);

}  // namespace ihtw

#pragma once

#include "ihtw/filtered_complex.hpp"
#include "ihtw/homology.hpp"
#include "ihtw/perversity.hpp"

#include <unordered_map>

namespace ihtw {

/// Basis element 1_{(F_0,e_0)} x ... x 1_{(F_{n-1},e_{n-1})} x 1_{F_n} of the blown-up
/// cochains of a regular simplex. F_i holds stratum-i vertices; an empty F_i stands
/// for the cone apex alone and always has e_i = 1. F_n is nonempty.
///
/// The same labels serve as basis of the blown-up chains, (F_i, 1) being F_i joined
/// with the apex.
struct BlownFace {
  std::vector<Simplex> parts;  // n + 1
  std::vector<char> coned;     // n

  int n() const { return static_cast<int>(coned.size()); }
  /// dim F_i + e_i for i < n (so 0 for the bare apex), dim F_n for i = n.
  int factor_degree(int i) const;
  int degree() const;
  /// kMinusInfinity if e_{n-l} = 1, else the sum of factor degrees past n - l.
  int perverse_degree(int l) const;
  Simplex support() const;

  friend bool operator==(const BlownFace&, const BlownFace&) = default;
  friend auto operator<=>(const BlownFace&, const BlownFace&) = default;
};

struct BlownFaceHash {
  std::size_t operator()(const BlownFace& f) const noexcept;
};

/// Terms of d 1_f: cone a factor, or add a vertex v (with its stratum) for each
/// entry of `extensions`. Each factor carries d = (-1)^{|x|+1} times the simplicial
/// coboundary of the cone (apex last); factors combine with the Koszul rule.
std::vector<std::pair<BlownFace, int>> blown_coboundary(const BlownFace& f,
                                                        const std::vector<std::pair<Index, int>>& extensions);

/// Blown-up cochains of a filtered complex: one basis element per regular simplex S
/// and cone choice on its nonempty singular parts. A compatible family of local
/// cochains is the same thing as a combination of these, since restricting to a
/// face keeps the labels supported there and kills the others.
class BlownComplex {
 public:
  BlownComplex(const FilteredComplex& k, const CoefficientRing& ring);

  int n() const { return n_; }
  const CoefficientRing& ring() const { return complex_->ring(); }
  /// Cochain degree k sits in degree -k.
  const ComplexPtr& complex() const { return complex_; }
  int top_degree() const { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int k) const;
  const std::vector<BlownFace>& cells(int k) const;
  std::optional<Index> find(const BlownFace& f) const;

  /// Max over the support, kMinusInfinity for the zero cochain.
  int perverse_degree(int k, const SparseVector& w, int l) const;
  bool allowable(int k, const SparseVector& w, const Perversity& p) const;

 private:
  int n_;
  std::vector<std::vector<BlownFace>> cells_;
  std::unordered_map<BlownFace, Index, BlownFaceHash> lookup_;
  ComplexPtr complex_;
};

/// A regular simplex with its faces, vertices renumbered 0..d in order and named
/// `v0`, `v1`, ...
FilteredComplex simplex_closure(const FilteredSimplex& s);

/// Blown-up cochains of one regular simplex; throws std::invalid_argument otherwise.
BlownComplex local_complex(const FilteredSimplex& s, const CoefficientRing& ring);

/// Perversity-p subcomplex {w : ||w||_l <= p(l), ||dw||_l <= p(l)}.
struct TWComplex {
  std::shared_ptr<const BlownComplex> blown;
  Perversity perversity;
  Subcomplex sub;

  const PresentedComplex& complex() const { return *sub.complex; }
  HomologyGroup cohomology(int k) const { return homology(complex(), -k); }
  /// Basis vectors of degree k in blown coordinates.
  const std::vector<SparseVector>& basis(int k) const { return sub.module(-k).basis(); }
};

TWComplex tw_complex(std::shared_ptr<const BlownComplex> blown, const Perversity& p);
HomologyGroup tw_cohomology(const FilteredComplex& k, const Perversity& p, const CoefficientRing& ring,
                            int degree);

/// Graded simplicial cochains of k (degree -k), as used by the comparison maps.
ComplexPtr simplicial_cochains(const FilteredComplex& k, const CoefficientRing& ring);

/// The blown chain 1_f projects to the simplex F_0 * ... * F_l, l the first uncone
/// factor, when every later factor has degree 0; otherwise to 0.
std::optional<Simplex> mu_lower(const BlownFace& f);
/// (-1)^{sum_{i<j} |f_i||f_j|}, the sign pairing a tensor cochain with a tensor chain.
int koszul_sign(const BlownFace& f);

/// M_0: simplicial cochains -> blown cochains, 1_F |-> sum of koszul_sign(b) 1_b over
/// the cells b with mu_lower(b) = F. On a single simplex this is mu^*.
ChainMap m_zero(const FilteredComplex& k, const ComplexPtr& cochains, const BlownComplex& blown);

/// M_0 followed by the inclusion of the 0-subcomplex into tw; throws std::logic_error
/// if some image falls outside tw.
ChainMap m_perversity(const ChainMap& m0, const TWComplex& tw);

}  // namespace ihtw

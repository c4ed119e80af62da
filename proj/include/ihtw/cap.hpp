#pragma once

#include "ihtw/blowup.hpp"
#include "ihtw/intersection.hpp"

namespace ihtw {

/// 1_F cap [e_0..e_m] = [e_r..e_m] when F = [e_0..e_r], nothing otherwise.
std::optional<Simplex> classical_cap_local(const Simplex& f, const Simplex& delta);

/// Boundary of the blown chain labelled f: drop a vertex or the apex from one factor,
/// Koszul signs across factors.
std::vector<std::pair<BlownFace, int>> blown_chain_boundary(const BlownFace& f);

/// 1_w cap~ of the blown fundamental chain of s, as a signed blown chain label.
std::optional<std::pair<BlownFace, int>> blown_cap(const BlownFace& w, const FilteredSimplex& s);

/// mu_* of the blown cap: a signed simplex of s, or nothing.
std::optional<std::pair<Simplex, int>> intersection_cap_local(const BlownFace& w, const FilteredSimplex& s);

/// Signs (a, b) in d(w cap x) = a (dw) cap x + b (-1)^|w| w cap dx.
struct LeibnizSigns {
  int coboundary = 1;
  int boundary = 1;
  friend bool operator==(const LeibnizSigns&, const LeibnizSigns&) = default;
};

/// The signs the cap products below satisfy; the tests refit them on small complexes.
inline constexpr LeibnizSigns kLeibnizSigns{1, 1};

/// Cap products on a filtered complex, tabulated per simplex.
class CapEngine {
 public:
  /// Both references must outlive the engine.
  CapEngine(const FilteredComplex& k, const BlownComplex& blown);

  const FilteredComplex& space() const { return *k_; }
  const BlownComplex& blown() const { return *blown_; }

  /// w (blown cochain of degree p) cap xi (chain of degree q), a chain of degree q - p.
  /// Non-regular simplices contribute nothing.
  SparseVector intersection(int p, const SparseVector& w, int q, const SparseVector& xi) const;
  /// Classical cap of a simplicial cochain of degree p with a chain of degree q.
  SparseVector classical(int p, const SparseVector& c, int q, const SparseVector& xi) const;

  struct Term {
    int cochain_degree;
    Index cochain;
    int sign;
    Index result;  // simplex of dimension dim - cochain_degree
  };
  /// Basis cochains with nonzero cap against simplex (d, i).
  const std::vector<Term>& intersection_terms(int d, Index i) const { return blown_terms_[d][i]; }
  const std::vector<Term>& classical_terms(int d, Index i) const { return classical_terms_[d][i]; }

 private:
  const FilteredComplex* k_;
  const BlownComplex* blown_;
  std::vector<std::vector<std::vector<Term>>> blown_terms_;
  std::vector<std::vector<std::vector<Term>>> classical_terms_;
};

/// Fits LeibnizSigns on (degree of w, w, degree of xi, xi) samples; nullopt when no
/// choice fits every sample.
struct CapSample {
  int p;
  SparseVector w;
  int q;
  SparseVector xi;
};
std::optional<LeibnizSigns> fit_leibniz_signs(const CapEngine& cap, const std::vector<CapSample>& samples);

/// Cap with a fixed n-cycle as a chain map of shift n from tw (degree -k) into ic
/// (degree n - k), with sign a^k for a = kLeibnizSigns.coboundary. Throws
/// std::logic_error when an image leaves ic.
ChainMap tw_duality_map(const CapEngine& cap, const TWComplex& tw, const IntersectionComplex& ic,
                        const SparseVector& fundamental);
/// Same for simplicial cochains into simplicial chains.
ChainMap classical_duality_map(const CapEngine& cap, const ComplexPtr& cochains, const ComplexPtr& chains,
                               const SparseVector& fundamental);

/// Outcome of a verification: a verdict and readable lines.
struct Report {
  bool passed = true;
  std::vector<std::string> lines;

  void add(bool ok, const std::string& line);
  void merge(const Report& other);
  std::string text() const;
};

/// M_0(c) cap s = c cap s for every basis cochain c and every regular simplex s.
/// Also checks that no non-regular simplex is allowable for any GM perversity.
Report check_chain_level_identity(const FilteredComplex& k, const CoefficientRing& ring);

/// mu^*(c) cap~ = c cap [s] on every regular simplex s, computed in the closure of s.
/// Also checks that mu_* is a chain map there.
Report check_local_cap_identity(const FilteredComplex& k, const CoefficientRing& ring);

/// For each perversity: the square of cap products commutes on generators of H^k(K),
/// the bottom map is an isomorphism in every degree, and alpha^q = beta^{p,q} alpha^p
/// for p <= q among the given perversities.
Report verify_factorization(const FilteredComplex& k, const std::vector<Perversity>& perversities,
                            const CoefficientRing& ring);

/// Per degree: (i) cap with [X] is an isomorphism H^k -> H_{n-k}; (ii) beta^{0,t} is an
/// isomorphism in degree n - k. Passes when (i) holds in all degrees exactly when
/// (ii) does.
Report check_zero_top(const FilteredComplex& k, const CoefficientRing& ring);

/// The groups around the failed factorization through GM cochains on the suspension
/// of RP^3, compared with their expected values.
Report gm_nonfactorization_demo(const FilteredComplex& k);

}  // namespace ihtw

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ihtw {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

/// Raised for malformed user input (ring names, perversity expressions, files).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RingKind { Integers, Rationals, Modular };

/// The coefficient ring R of every (co)homology computation: Z, Q or Z/m.
class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(RingKind::Integers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(RingKind::Rationals, 0); }
  static CoefficientRing modular(const Integer& m);

  /// Accepts `Z`, `Q` and `Zmod:<m>`.
  static CoefficientRing parse(std::string_view text);

  RingKind kind() const { return kind_; }
  const Integer& modulus() const { return modulus_; }
  bool is_field() const;

  /// `Z`, `Q` or `Z/m`.
  std::string symbol() const;
  /// Round-trips through parse().
  std::string spec() const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientRing(RingKind kind, Integer m) : kind_(kind), modulus_(std::move(m)) {}
  RingKind kind_;
  Integer modulus_;
};

/// Row/column operation [[s, t], [u, v]] with determinant 1 sending (a, b) to (g, 0).
struct GcdStep {
  Integer g, s, t, u, v;
};

/// Arithmetic of the elimination engine. The engine works over Z or Z/m; rational
/// computations run over Z because Q is flat over Z, so kernels, images and ranks
/// over Q are those over Z tensored with Q (torsion is dropped at the end).
class EngineRing {
 public:
  explicit EngineRing(const CoefficientRing& ring);

  bool modular() const { return modular_; }
  const Integer& modulus() const { return modulus_; }

  Integer reduce(Integer x) const;
  bool is_zero(const Integer& x) const { return x.is_zero(); }
  bool is_unit(const Integer& x) const;
  Integer inverse(const Integer& unit) const;

  /// Size used to pick pivots: |x| over Z, gcd(x, m) over Z/m.
  Integer norm(const Integer& x) const;
  /// True when b lies in the ideal generated by a.
  bool divides(const Integer& a, const Integer& b) const;
  /// Some q with a*q = b; requires divides(a, b).
  Integer quotient(const Integer& a, const Integer& b) const;
  GcdStep gcd_step(const Integer& a, const Integer& b) const;

  /// Canonical generator of the ideal (x): |x| over Z, gcd(x, m) over Z/m (m for x = 0).
  Integer ideal_generator(const Integer& x) const;

 private:
  bool modular_ = false;
  Integer modulus_;
};

Integer gcd(const Integer& a, const Integer& b);

}  // namespace ihtw

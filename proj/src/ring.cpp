#include "ihtw/ring.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <random>

namespace ihtw {

namespace {

struct Bezout {
  Integer g, s, t;
};

// s*a + t*b = g = gcd(a, b) >= 0
Bezout bezout(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (!r.is_zero()) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Integer floor_mod(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

Integer gcd(const Integer& a, const Integer& b) { return bezout(a, b).g; }

CoefficientRing CoefficientRing::modular(const Integer& m) {
  if (m < 2) throw InputError("modulus must be at least 2, got " + m.str());
  return CoefficientRing(RingKind::Modular, m);
}

CoefficientRing CoefficientRing::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  constexpr std::string_view prefix = "Zmod:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("invalid modulus in coefficient ring '" + std::string(text) + "'");
    return modular(Integer(digits));
  }
  throw InputError("unknown coefficient ring '" + std::string(text) + "' (expected Z, Q or Zmod:<m>)");
}

bool CoefficientRing::is_field() const {
  switch (kind_) {
    case RingKind::Integers:
      return false;
    case RingKind::Rationals:
      return true;
    case RingKind::Modular: {
      std::mt19937 rng(12345);
      return boost::multiprecision::miller_rabin_test(modulus_, 25, rng);
    }
  }
  return false;
}

std::string CoefficientRing::symbol() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::Modular:
      return "Z/" + modulus_.str();
  }
  return "?";
}

std::string CoefficientRing::spec() const {
  return kind_ == RingKind::Modular ? "Zmod:" + modulus_.str() : symbol();
}

EngineRing::EngineRing(const CoefficientRing& ring)
    : modular_(ring.kind() == RingKind::Modular), modulus_(ring.modulus()) {}

Integer EngineRing::reduce(Integer x) const {
  if (!modular_) return x;
  return floor_mod(x, modulus_);
}

bool EngineRing::is_unit(const Integer& x) const {
  if (!modular_) return x == 1 || x == -1;
  return !x.is_zero() && gcd(x, modulus_) == 1;
}

Integer EngineRing::inverse(const Integer& unit) const {
  if (!modular_) return unit;
  Bezout b = bezout(unit, modulus_);
  return floor_mod(b.s, modulus_);
}

Integer EngineRing::norm(const Integer& x) const {
  if (!modular_) return abs(x);
  return gcd(x, modulus_);
}

Integer EngineRing::ideal_generator(const Integer& x) const { return norm(x); }

bool EngineRing::divides(const Integer& a, const Integer& b) const {
  if (b.is_zero()) return true;
  if (a.is_zero()) return false;
  if (!modular_) return (b % a).is_zero();
  return (b % gcd(a, modulus_)).is_zero();
}

Integer EngineRing::quotient(const Integer& a, const Integer& b) const {
  if (b.is_zero()) return 0;
  if (!modular_) return b / a;
  Integer g = gcd(a, modulus_);
  Integer m = modulus_ / g;
  Integer a1 = floor_mod(a / g, m);
  Integer b1 = b / g;
  Integer inv = m == 1 ? Integer(0) : floor_mod(bezout(a1, m).s, m);
  return floor_mod(b1 * inv, m);
}

GcdStep EngineRing::gcd_step(const Integer& a, const Integer& b) const {
  if (divides(a, b)) {
    // Keep the pivot in place: (a, b) -> (a, b - q a).
    Integer q = quotient(a, b);
    return {a, 1, 0, reduce(-q), 1};
  }
  Bezout bz = bezout(a, b);
  return {reduce(bz.g), reduce(bz.s), reduce(bz.t), reduce(-(b / bz.g)), reduce(a / bz.g)};
}

}  // namespace ihtw

#pragma once

#include "ihtw/ring.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ihtw {

/// Values p(0..n). General sequences are representable; is_gm() tells whether
/// p(0) = p(1) = p(2) = 0 and p(i) <= p(i+1) <= p(i) + 1.
class Perversity {
 public:
  explicit Perversity(std::vector<int> values);

  static Perversity zero(int n);
  /// t(i) = i - 2, clamped to 0 below i = 2.
  static Perversity top(int n);
  /// p(i) = max(0, min(k, i - 2)).
  static Perversity clip(int k, int n);
  /// `zero | top | clip:<k> | list:<v0,...,vn>`; throws InputError.
  static Perversity parse(std::string_view expr, int n);

  int n() const { return static_cast<int>(values_.size()) - 1; }
  int operator()(int i) const { return values_.at(i); }
  const std::vector<int>& values() const { return values_; }
  bool is_gm() const;

  /// t - p; throws std::domain_error for a non-GM perversity.
  Perversity dual() const;

  /// `(0,0,0,1,2)`
  std::string to_string() const;
  /// `list:0,0,0,1,2`, accepted by parse().
  std::string spec() const;

  friend bool operator==(const Perversity&, const Perversity&) = default;

 private:
  std::vector<int> values_;
};

/// Pointwise sum; the result may leave the GM range.
Perversity sum(const Perversity& p, const Perversity& q);
/// Pointwise order.
bool leq(const Perversity& p, const Perversity& q);

/// Every GM perversity of length n + 1, lexicographically.
std::vector<Perversity> gm_perversities(int n);

}  // namespace ihtw

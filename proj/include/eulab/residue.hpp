#pragma once

#include <cstdint>

#include "eulab/eint.hpp"

namespace eulab {

/// The quotient ring E/(mu), with an explicit transversal.
///
/// The ideal (mu) is the lattice spanned by mu = (a, b) and w*mu = (-b, a-b)
/// in w-basis coordinates. Its triangular (Hermite) basis
///   v1 = (shift, h_b),  v2 = (h_a, 0),   h_a * h_b = N(mu)
/// makes the rectangle [0, h_a) x [0, h_b) a complete residue system.
/// Representatives are indexed by index = y * h_a + x, so the rational
/// integers 0..h_a-1 come first.
class ResidueRing {
 public:
  explicit ResidueRing(EInt modulus);

  EInt modulus() const { return modulus_; }
  std::int64_t size() const { return size_; }
  std::int64_t width() const { return h_a_; }
  std::int64_t height() const { return h_b_; }

  EInt reduce(EInt x) const;
  std::int64_t index_of(EInt x) const;  // index of reduce(x)
  EInt representative(std::int64_t index) const;

  /// gcd(x, modulus) is a unit.
  bool is_reduced(EInt x) const;

  EInt add(EInt x, EInt y) const { return reduce(reduce(x) + reduce(y)); }
  EInt mul(EInt x, EInt y) const { return reduce(reduce(x) * reduce(y)); }

  /// y with reduce(x*y) == 1. Throws DomainError if x is not invertible.
  EInt inverse(EInt x) const;

 private:
  EInt modulus_;
  std::int64_t h_a_ = 1;
  std::int64_t h_b_ = 1;
  std::int64_t shift_ = 0;
  std::int64_t size_ = 1;
};

inline EInt mod_reduce(EInt x, const ResidueRing& ring) { return ring.reduce(x); }
inline EInt mod_inverse(EInt x, const ResidueRing& ring) { return ring.inverse(x); }

}  // namespace eulab

#include "eulab/residue.hpp"

#include <numeric>

#include "eulab/error.hpp"

namespace eulab {

namespace {

struct IntExtGcd {
  __int128 g, u, v;  // u*x + v*y == g >= 0
};

IntExtGcd int_ext_gcd(__int128 x, __int128 y) {
  __int128 r0 = x, r1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
  while (r1 != 0) {
    const __int128 q = r0 / r1;
    __int128 t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = u0 - q * u1;
    u0 = u1;
    u1 = t;
    t = v0 - q * v1;
    v0 = v1;
    v1 = t;
  }
  if (r0 < 0) return {-r0, -u0, -v0};
  return {r0, u0, v0};
}

}  // namespace

ResidueRing::ResidueRing(EInt modulus) : modulus_(modulus) {
  if (modulus.is_zero()) throw DomainError("ResidueRing: zero modulus");
  const __int128 a = modulus.a, b = modulus.b;
  const __int128 n = norm_wide(modulus);
  // Combine the w-coordinates b (of mu) and a-b (of w*mu) into their gcd.
  const auto [g, u, v] = int_ext_gcd(b, a - b);
  const __int128 shift = detail::add_wide(detail::mul_wide(u, a), -detail::mul_wide(v, b));
  h_b_ = detail::narrow_checked(g);
  h_a_ = detail::narrow_checked(n / g);
  shift_ = detail::narrow_checked(detail::floor_mod(shift, h_a_));
  size_ = detail::narrow_checked(n);
}

EInt ResidueRing::reduce(EInt x) const {
  const __int128 k = detail::floor_div(x.b, h_b_);
  const __int128 xa = static_cast<__int128>(x.a) - detail::mul_wide(k, shift_);
  const __int128 yb = static_cast<__int128>(x.b) - k * h_b_;
  return {static_cast<std::int64_t>(detail::floor_mod(xa, h_a_)), static_cast<std::int64_t>(yb)};
}

std::int64_t ResidueRing::index_of(EInt x) const {
  const EInt r = reduce(x);
  return r.b * h_a_ + r.a;
}

EInt ResidueRing::representative(std::int64_t index) const {
  if (index < 0 || index >= size_) throw DomainError("ResidueRing: representative index out of range");
  return {index % h_a_, index / h_a_};
}

bool ResidueRing::is_reduced(EInt x) const { return norm(gcd(x, modulus_)) == 1; }

EInt ResidueRing::inverse(EInt x) const {
  const EInt r = reduce(x);
  if (r.is_zero() && size_ != 1) throw DomainError("mod_inverse: element not invertible");
  if (size_ == 1) return {0, 0};
  const auto eg = extended_gcd(r, modulus_);
  const auto unit = Unit::from_eint(eg.g);
  if (!unit) throw DomainError("mod_inverse: element " + to_string(x) + " not invertible mod " + to_string(modulus_));
  return reduce(unit->inverse() * eg.s);
}

}  // namespace eulab

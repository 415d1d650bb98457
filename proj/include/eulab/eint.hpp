#pragma once

/*
 * Exact arithmetic in the Eulerian (Eisenstein) integers E = Z[w],
 * w = (-1 + i*sqrt(3)) / 2, w^2 + w + 1 = 0.
 *
 * Elements are stored in the basis {1, w}: a + b*w. The norm is
 * N(a + b*w) = a^2 - ab + b^2 = |a + b*w|^2. All coordinates are 64-bit
 * and every operation checks for overflow (128-bit intermediates for
 * products and norms).
 *
 * The canonical associate of a nonzero x is the unique u*x (u a unit)
 * with argument in [0, 60) degrees; in coordinates this is the integer
 * predicate b >= 0 && a > b.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace eulab {

struct EInt {
  std::int64_t a = 0;  // coefficient of 1
  std::int64_t b = 0;  // coefficient of w

  constexpr EInt() = default;
  constexpr EInt(std::int64_t a_, std::int64_t b_ = 0) : a(a_), b(b_) {}

  constexpr bool is_zero() const { return a == 0 && b == 0; }

  friend constexpr bool operator==(const EInt&, const EInt&) = default;
  friend constexpr auto operator<=>(const EInt&, const EInt&) = default;
};

EInt operator+(EInt x, EInt y);
EInt operator-(EInt x, EInt y);
EInt operator-(EInt x);
EInt operator*(EInt x, EInt y);
inline EInt& operator+=(EInt& x, EInt y) { return x = x + y; }
inline EInt& operator-=(EInt& x, EInt y) { return x = x - y; }
inline EInt& operator*=(EInt& x, EInt y) { return x = x * y; }

/// Complex conjugate: conj(a + b*w) = (a - b) - b*w.
EInt conj(EInt x);

/// a^2 - ab + b^2. Throws OverflowError if it does not fit in int64.
std::int64_t norm(EInt x);

/// Norm with a 128-bit result; never overflows for int64 coordinates.
__int128 norm_wide(EInt x);

EInt pow(EInt x, unsigned k);

/// One of the six units, stored as the exponent k of (1 + w)^k, which has
/// argument 60k degrees.
class Unit {
 public:
  constexpr Unit() = default;
  static constexpr Unit from_power(int k) { return Unit(((k % 6) + 6) % 6); }
  /// Returns the unit equal to x, or nullopt if x has norm != 1.
  static std::optional<Unit> from_eint(EInt x);

  constexpr int power() const { return k_; }
  EInt value() const;
  constexpr Unit inverse() const { return Unit((6 - k_) % 6); }
  constexpr Unit operator*(Unit o) const { return Unit((k_ + o.k_) % 6); }

  friend constexpr bool operator==(Unit, Unit) = default;

 private:
  constexpr explicit Unit(int k) : k_(k) {}
  int k_ = 0;
};

inline EInt operator*(Unit u, EInt x) { return u.value() * x; }

/// Arg(x) in [0, 60) degrees. Throws DomainError for x == 0.
bool is_canonical(EInt x);

/// (y, u) with y = u * x and is_canonical(y). Throws DomainError for x == 0.
std::pair<EInt, Unit> canonical_associate(EInt x);

/// k in 0..5 with Arg(x) in [60k, 60(k+1)) degrees.
int sector_index(EInt x);

struct DivMod {
  EInt quotient;
  EInt remainder;
};

/// Euclidean division: x = q*y + r with 4*N(r) <= 3*N(y). The quotient is
/// x/y with both coordinates rounded to nearest, ties toward -infinity.
DivMod divmod(EInt x, EInt y);

/// x / y when y divides x exactly, nullopt otherwise. y must be nonzero.
std::optional<EInt> exact_div(EInt x, EInt y);

inline bool divides(EInt d, EInt x) { return exact_div(x, d).has_value(); }

/// Greatest common divisor normalized to its canonical associate; (1, 0)
/// for coprime inputs. Throws DomainError for gcd(0, 0).
EInt gcd(EInt x, EInt y);

struct ExtendedGcd {
  EInt g;  // not normalized
  EInt s;
  EInt t;  // s*x + t*y == g
};

ExtendedGcd extended_gcd(EInt x, EInt y);

/// "a,b" textual form.
std::string to_string(EInt x);
EInt parse_eint(std::string_view text);

std::ostream& operator<<(std::ostream& os, EInt x);

}  // namespace eulab

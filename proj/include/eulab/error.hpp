#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eulab {

/// Raised when an exact result does not fit the 64-bit coordinate type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when an operation is called outside its precondition
/// (zero argument, non-prime where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed textual input (set files, "a,b" literals, polynomial specs).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::int64_t add_checked(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline std::int64_t sub_checked(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline std::int64_t mul_checked(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::int64_t narrow_checked(__int128 v) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw OverflowError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

inline __int128 mul_wide(__int128 x, __int128 y) {
  __int128 r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("128-bit intermediate overflow");
  return r;
}

inline __int128 add_wide(__int128 x, __int128 y) {
  __int128 r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("128-bit intermediate overflow");
  return r;
}

/// floor(x / y) for y > 0.
inline __int128 floor_div(__int128 x, __int128 y) {
  __int128 q = x / y;
  if ((x % y != 0) && (x < 0)) --q;
  return q;
}

/// Representative of x mod y in [0, y) for y > 0.
inline __int128 floor_mod(__int128 x, __int128 y) {
  __int128 r = x % y;
  return r < 0 ? r + y : r;
}

}  // namespace detail
}  // namespace eulab

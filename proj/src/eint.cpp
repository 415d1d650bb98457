#include "eulab/eint.hpp"

#include <charconv>
#include <ostream>

#include "eulab/error.hpp"

namespace eulab {

using detail::add_checked;
using detail::mul_checked;
using detail::narrow_checked;
using detail::sub_checked;

EInt operator+(EInt x, EInt y) { return {add_checked(x.a, y.a), add_checked(x.b, y.b)}; }

EInt operator-(EInt x, EInt y) { return {sub_checked(x.a, y.a), sub_checked(x.b, y.b)}; }

EInt operator-(EInt x) { return {sub_checked(0, x.a), sub_checked(0, x.b)}; }

// (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd)w, using w^2 = -1 - w.
EInt operator*(EInt x, EInt y) {
  const __int128 a = x.a, b = x.b, c = y.a, d = y.b;
  const __int128 bd = b * d;
  return {narrow_checked(a * c - bd), narrow_checked(a * d + b * c - bd)};
}

EInt conj(EInt x) { return {sub_checked(x.a, x.b), sub_checked(0, x.b)}; }

__int128 norm_wide(EInt x) {
  const __int128 a = x.a, b = x.b;
  return a * a - a * b + b * b;
}

std::int64_t norm(EInt x) { return narrow_checked(norm_wide(x)); }

EInt pow(EInt x, unsigned k) {
  EInt result{1, 0};
  while (k > 0) {
    if (k & 1u) result = result * x;
    k >>= 1;
    if (k > 0) x = x * x;
  }
  return result;
}

namespace {

constexpr EInt kUnitPowers[6] = {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}};

}  // namespace

EInt Unit::value() const { return kUnitPowers[k_]; }

std::optional<Unit> Unit::from_eint(EInt x) {
  for (int k = 0; k < 6; ++k)
    if (kUnitPowers[k] == x) return Unit(k);
  return std::nullopt;
}

bool is_canonical(EInt x) {
  if (x.is_zero()) throw DomainError("is_canonical: zero has no argument");
  return x.b >= 0 && x.a > x.b;
}

std::pair<EInt, Unit> canonical_associate(EInt x) {
  if (x.is_zero()) throw DomainError("canonical_associate: zero input");
  for (int k = 0; k < 6; ++k) {
    const Unit u = Unit::from_power(k);
    const EInt y = u * x;
    if (is_canonical(y)) return {y, u};
  }
  throw std::logic_error("canonical_associate: no associate in the canonical sector");
}

int sector_index(EInt x) {
  if (x.is_zero()) throw DomainError("sector_index: zero input");
  // Rotating by (1+w)^{-k} maps sector k onto sector 0.
  for (int k = 0; k < 6; ++k)
    if (is_canonical(Unit::from_power(k).inverse() * x)) return k;
  throw std::logic_error("sector_index: unreachable");
}

namespace {

// Nearest integer to p/n (n > 0), ties toward -infinity: ceil((2p - n) / 2n).
__int128 round_half_down(__int128 p, __int128 n) {
  const __int128 num = detail::add_wide(detail::mul_wide(p, 2), -n);
  return -detail::floor_div(-num, 2 * n);
}

// x * conj(y) in 128-bit coordinates.
std::pair<__int128, __int128> mul_conj_wide(EInt x, EInt y) {
  const __int128 a = x.a, b = x.b;
  const __int128 c = static_cast<__int128>(y.a) - y.b, d = -static_cast<__int128>(y.b);
  const __int128 bd = detail::mul_wide(b, d);
  const __int128 re = detail::add_wide(detail::mul_wide(a, c), -bd);
  const __int128 im =
      detail::add_wide(detail::add_wide(detail::mul_wide(a, d), detail::mul_wide(b, c)), -bd);
  return {re, im};
}

}  // namespace

DivMod divmod(EInt x, EInt y) {
  if (y.is_zero()) throw DomainError("divmod: division by zero");
  const __int128 n = norm_wide(y);
  const auto [p, q] = mul_conj_wide(x, y);
  const EInt quotient{narrow_checked(round_half_down(p, n)), narrow_checked(round_half_down(q, n))};
  return {quotient, x - quotient * y};
}

std::optional<EInt> exact_div(EInt x, EInt y) {
  if (y.is_zero()) throw DomainError("exact_div: division by zero");
  const __int128 n = norm_wide(y);
  const auto [p, q] = mul_conj_wide(x, y);
  if (p % n != 0 || q % n != 0) return std::nullopt;
  return EInt{narrow_checked(p / n), narrow_checked(q / n)};
}

EInt gcd(EInt x, EInt y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("gcd(0, 0) is undefined");
  while (!y.is_zero()) {
    EInt r = divmod(x, y).remainder;
    x = y;
    y = r;
  }
  return canonical_associate(x).first;
}

ExtendedGcd extended_gcd(EInt x, EInt y) {
  if (x.is_zero() && y.is_zero()) throw DomainError("extended_gcd(0, 0) is undefined");
  EInt r0 = x, r1 = y;
  EInt s0{1, 0}, s1{0, 0};
  EInt t0{0, 0}, t1{1, 0};
  while (!r1.is_zero()) {
    const auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    EInt s2 = s0 - q * s1;
    s0 = s1;
    s1 = s2;
    EInt t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  return {r0, s0, t0};
}

std::string to_string(EInt x) { return std::to_string(x.a) + "," + std::to_string(x.b); }

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("malformed integer in '" + std::string(whole) + "'");
  return v;
}

}  // namespace

EInt parse_eint(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return {parse_int(text, text), 0};
  if (text.find(',', comma + 1) != std::string_view::npos)
    throw ParseError("expected 'a,b' but got '" + std::string(text) + "'");
  return {parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text)};
}

std::ostream& operator<<(std::ostream& os, EInt x) { return os << '(' << x.a << ',' << x.b << ')'; }

}  // namespace eulab

#include "eulab/factor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "eulab/error.hpp"

namespace eulab {

PrimeSieve::PrimeSieve(std::uint32_t limit) : limit_(std::max<std::uint32_t>(limit, 2)), spf_(limit_ + 1, 0) {
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t m = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || m > limit_) break;
      spf_[m] = p;
    }
  }
}

std::int64_t PrimeSieve::count_up_to(std::uint64_t x) const {
  if (x > limit_) throw DomainError("PrimeSieve::count_up_to beyond sieve limit");
  return std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin();
}

namespace {

std::uint32_t sieve_limit_from_env() {
  constexpr std::uint32_t kDefault = 1'000'000;
  const char* env = std::getenv("EULAB_SIEVE_LIMIT");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v < 100 || v > 400'000'000ull) return kDefault;
  return static_cast<std::uint32_t>(v);
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Brent's variant of Pollard rho; n odd composite.
u64 rho_split(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_large(u64 n, std::map<u64, int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const u64 d = rho_split(n);
  factor_large(d, out);
  factor_large(n / d, out);
}

void factor_u64(u64 n, std::map<u64, int>& out) {
  const PrimeSieve& sieve = shared_sieve();
  while (n > 1 && n <= sieve.limit()) {
    const u64 p = sieve.smallest_factor(static_cast<std::uint32_t>(n));
    ++out[p];
    n /= p;
  }
  if (n == 1) return;
  std::size_t tried = 0;
  for (std::uint32_t p : sieve.primes()) {
    const u64 pp = p;
    if (pp * pp > n) break;
    while (n % pp == 0) {
      ++out[pp];
      n /= pp;
    }
    // Large prime cofactors are common; stop trial division early for them.
    if (++tried == 1000 && n > 1 && is_prime(n)) {
      ++out[n];
      return;
    }
  }
  if (n == 1) return;
  if (n <= static_cast<u64>(sieve.limit()) * sieve.limit()) {
    ++out[n];  // no factor below sqrt(n)
    return;
  }
  factor_large(n, out);
}

}  // namespace

const PrimeSieve& shared_sieve() {
  static const PrimeSieve sieve(sieve_limit_from_env());
  return sieve;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::int64_t RationalFactorization::recompose() const {
  std::int64_t v = sign;
  for (const auto& [p, e] : factors)
    for (int i = 0; i < e; ++i) v = detail::mul_checked(v, static_cast<std::int64_t>(p));
  return v;
}

RationalFactorization factor_rational(std::int64_t n) {
  if (n == 0) throw DomainError("factor_rational: zero has no factorization");
  RationalFactorization result;
  result.sign = n < 0 ? -1 : 1;
  const u64 magnitude = n < 0 ? static_cast<u64>(0) - static_cast<u64>(n) : static_cast<u64>(n);
  std::map<u64, int> out;
  factor_u64(magnitude, out);
  for (const auto& [p, e] : out) result.factors.push_back({p, e});
  return result;
}

std::vector<std::uint64_t> prime_support(std::int64_t n) {
  std::vector<std::uint64_t> ps;
  for (const auto& pe : factor_rational(n).factors) ps.push_back(pe.p);
  return ps;
}

const char* to_string(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::ramified: return "ramified";
    case PrimeKind::split: return "split";
    case PrimeKind::inert: return "inert";
  }
  return "?";
}

PrimeKind classify_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("classify_prime: " + std::to_string(p) + " is not prime");
  if (p == 3) return PrimeKind::ramified;
  return p % 3 == 1 ? PrimeKind::split : PrimeKind::inert;
}

EInt split_prime(std::uint64_t p) {
  if (p % 3 != 1 || !is_prime(p))
    throw DomainError("split_prime: " + std::to_string(p) + " is not a prime congruent to 1 mod 3");
  if (p > static_cast<u64>(INT64_MAX)) throw OverflowError("split_prime: prime exceeds 63 bits");
  // A primitive cube root of unity r mod p satisfies r^2 + r + 1 = 0, so
  // (p, r - w) is a prime ideal over p.
  u64 r = 1;
  for (u64 g = 2; r == 1; ++g) r = powmod(g, (p - 1) / 3, p);
  if ((mulmod(r, r, p) + r + 1) % p != 0) throw std::logic_error("split_prime: cube root check failed");
  EInt pi = gcd(EInt{static_cast<std::int64_t>(p), 0}, EInt{static_cast<std::int64_t>(r), -1});
  if (static_cast<u64>(norm(pi)) != p) throw std::logic_error("split_prime: norm check failed");
  // Of the two canonical primes (a, b) and (a, a-b) over p, keep the one
  // with argument below 30 degrees.
  if (2 * pi.b > pi.a) pi = canonical_associate(conj(pi)).first;
  return pi;
}

bool prime_order(EInt x, EInt y) {
  const auto nx = norm_wide(x), ny = norm_wide(y);
  if (nx != ny) return nx < ny;
  return x < y;
}

EInt EFactorization::recompose() const {
  EInt v = unit.value();
  for (const auto& [pi, e] : factors) v = v * pow(pi, static_cast<unsigned>(e));
  return v;
}

EFactorization factor_e(EInt x) {
  if (x.is_zero()) throw DomainError("factor_e: zero has no factorization");
  EFactorization result;
  EInt rest = x;
  auto strip = [&rest](EInt pi) {
    int e = 0;
    while (auto q = exact_div(rest, pi)) {
      rest = *q;
      ++e;
    }
    return e;
  };
  for (const auto& [p, e] : factor_rational(norm(x)).factors) {
    switch (classify_prime(p)) {
      case PrimeKind::ramified: {
        const EInt pi{2, 1};
        result.factors.push_back({pi, strip(pi)});
        break;
      }
      case PrimeKind::inert: {
        const EInt pi{static_cast<std::int64_t>(p), 0};
        result.factors.push_back({pi, strip(pi)});
        break;
      }
      case PrimeKind::split: {
        const EInt pi = split_prime(p);
        const EInt other = canonical_associate(conj(pi)).first;
        const int e1 = strip(pi);
        const int e2 = strip(other);
        if (e1 > 0) result.factors.push_back({pi, e1});
        if (e2 > 0) result.factors.push_back({other, e2});
        break;
      }
    }
  }
  const auto unit = Unit::from_eint(rest);
  if (!unit) throw std::logic_error("factor_e: cofactor " + to_string(rest) + " is not a unit");
  result.unit = *unit;
  std::sort(result.factors.begin(), result.factors.end(),
            [](const EPrimePower& l, const EPrimePower& r) { return prime_order(l.prime, r.prime); });
  return result;
}

std::vector<EInt> e_prime_support(EInt x) {
  std::vector<EInt> ps;
  for (const auto& f : factor_e(x).factors) ps.push_back(f.prime);
  return ps;
}

int valuation(EInt x, EInt pi) {
  if (x.is_zero()) throw DomainError("valuation: zero has infinite valuation");
  if (norm_wide(pi) <= 1) throw DomainError("valuation: " + to_string(pi) + " is not a prime");
  int v = 0;
  while (auto q = exact_div(x, pi)) {
    x = *q;
    ++v;
  }
  return v;
}

int omega_e(EInt x) { return static_cast<int>(factor_e(x).factors.size()); }

int omega_n(std::int64_t n) { return static_cast<int>(factor_rational(n).factors.size()); }

std::int64_t tau_e(EInt x) {
  std::int64_t t = 6;
  for (const auto& f : factor_e(x).factors) t = detail::mul_checked(t, f.exponent + 1);
  return t;
}

std::int64_t prime_pi(double x) {
  if (!(x >= 0)) throw DomainError("prime_pi: negative argument");
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  const PrimeSieve& sieve = shared_sieve();
  if (n <= sieve.limit()) return sieve.count_up_to(n);
  if (n > 2'000'000'000ull) throw DomainError("prime_pi: argument beyond supported range");
  return PrimeSieve(static_cast<std::uint32_t>(n)).count_up_to(n);
}

}  // namespace eulab

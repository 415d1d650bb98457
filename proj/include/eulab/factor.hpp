#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulab/eint.hpp"

namespace eulab {

/// Smallest-prime-factor table shared by every factorization routine.
/// Built once on first use; the bound defaults to 10^6 and can be
/// overridden with the EULAB_SIEVE_LIMIT environment variable.
class PrimeSieve {
 public:
  explicit PrimeSieve(std::uint32_t limit);

  std::uint32_t limit() const { return limit_; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  /// Smallest prime factor of n, for 2 <= n <= limit.
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }
  /// Number of primes <= x, for x <= limit.
  std::int64_t count_up_to(std::uint64_t x) const;

 private:
  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

const PrimeSieve& shared_sieve();

/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p = 0;
  int e = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct RationalFactorization {
  int sign = 1;
  std::vector<PrimePower> factors;  // strictly increasing primes

  std::int64_t recompose() const;
};

/// Complete factorization of a nonzero 64-bit integer.
RationalFactorization factor_rational(std::int64_t n);

/// Distinct primes of n (n != 0), increasing.
std::vector<std::uint64_t> prime_support(std::int64_t n);

enum class PrimeKind { ramified, split, inert };

const char* to_string(PrimeKind kind);

/// Splitting of a rational prime in E. Throws DomainError for composites.
PrimeKind classify_prime(std::uint64_t p);

/// For p = 1 (mod 3): the canonical prime pi with N(pi) = p and Arg(pi) in
/// [0, 30) degrees. The other prime over p is canonical_associate(conj(pi)).
EInt split_prime(std::uint64_t p);

struct EPrimePower {
  EInt prime;  // canonical
  int exponent = 0;
  friend bool operator==(const EPrimePower&, const EPrimePower&) = default;
};

struct EFactorization {
  Unit unit;
  std::vector<EPrimePower> factors;  // sorted by (norm, a, b)

  EInt recompose() const;
};

/// Ordering used for every list of canonical primes: (norm, a, b).
bool prime_order(EInt x, EInt y);

EFactorization factor_e(EInt x);

/// Canonical primes dividing x (x != 0), in prime_order.
std::vector<EInt> e_prime_support(EInt x);

/// Exponent of the prime pi in x. Throws DomainError for x == 0.
int valuation(EInt x, EInt pi);

int omega_e(EInt x);
int omega_n(std::int64_t n);

/// Number of divisors of x counting unit multiples separately: 6 * prod(e + 1).
std::int64_t tau_e(EInt x);

/// Number of rational primes <= x.
std::int64_t prime_pi(double x);

}  // namespace eulab

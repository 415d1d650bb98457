#pragma once

/*
 * Set-refinement machinery behind the lower bounds for
 *   omega_E( prod_{a != b in A} (a + rho*b) )
 * and randomized verifiers for the bounds themselves.
 *
 * A refinement chain A_0 >= A_1 >= ... >= A_s takes one prime of the
 * product at a time and keeps the largest bucket of a residue split, so
 * that on the final set divisibility of a + rho*b by a prime power
 * transfers (with a bounded loss) to a and b individually.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "eulab/eint.hpp"
#include "eulab/factor.hpp"
#include "eulab/residue.hpp"

namespace eulab::bounds {

/// Assignment of the reduced residues of a ring to a small number of groups.
struct Coloring {
  ResidueRing ring;
  int groups = 0;
  std::vector<std::int8_t> assignment;  // by representative index; -1 = not reduced

  /// Group of x mod the ring. Throws DomainError if x is not a reduced residue.
  int group_of(EInt x) const;
};

/// Two groups over the reduced residues mod pi^k such that r and -r never
/// share a group. Representatives are visited in index order and the first
/// of each {r, -r} pair goes to group 0. pi must have odd norm.
Coloring antipodal_coloring(EInt pi, int k);

/// Three groups over the reduced residues mod pi^(delta+1), delta = v_pi(1 + rho0),
/// such that r and -rho0*r never share a group. Built greedily: r gets the
/// least group not used by -rho0*r or -rho0^{-1}*r.
/// Requires pi not dividing rho0 and 1 + rho0 != 0.
Coloring twist_coloring(EInt pi, EInt rho0);

/// A coloring is valid when no reduced r shares a group with mod_reduce(multiplier * r).
bool coloring_separates(const Coloring& c, EInt multiplier);

struct PrimeConstant {
  EInt prime;        // canonical, divides rho*(1 + rho)
  int gamma = 0;     // v_pi(rho)
  int delta = 0;     // v_pi(1 + rho0), rho0 = rho / pi^gamma; 0 when rho0 == -1
  bool negative_prime_power = false;  // rho == -pi^gamma
  int c = 0;         // gamma + delta, or gamma when negative_prime_power
};

struct RhoConstants {
  EInt rho;
  std::vector<PrimeConstant> primes;  // prime_order
  EFactorization c_rho;               // unit 1, product of prime^c
  std::int64_t tau = 0;               // tau_e(c_rho)
  std::int64_t threshold = 0;         // tau^2 + 2
  double constant = 0;                // log(threshold) / log 3

  EInt c_rho_value() const { return c_rho.recompose(); }
  /// c(pi, rho); 0 for primes not dividing rho*(1 + rho).
  int c_of(EInt pi) const;
};

/// Throws DomainError for rho in {0, -1}.
RhoConstants rho_constants(EInt rho);

/// If rho == -theta^gamma for a canonical prime theta and gamma >= 1,
/// returns (theta, gamma).
std::optional<std::pair<EInt, int>> negative_prime_power(EInt rho);

/// Keeps the largest of three buckets (ties: lowest group) obtained by
/// coloring a0 = a / pi^v_pi(a) with twist_coloring(pi, rho0). Zero goes to
/// bucket 0. Requires -rho not a positive power of pi (use valuation_split).
std::vector<EInt> residue_split(std::span<const EInt> set, EInt pi, EInt rho);

/// Keeps the larger of two buckets keyed by the parity of
/// floor(v_theta(a) / gamma) (ties: even). Zero goes to the even bucket.
std::vector<EInt> valuation_split(std::span<const EInt> set, EInt theta, int gamma);

/// For all a != b in set with a + rho*b != 0 and v = v_pi(a + rho*b) >= loss:
/// pi^(v - loss) divides a and b. False on a zero combination.
bool check_divisibility_transfer(std::span<const EInt> set, EInt pi, EInt rho, int loss);

/// For all a != b in set: v_pi(a + b) == min(v_pi(a), v_pi(b)).
bool check_sum_valuation(std::span<const EInt> set, EInt pi);

enum class SplitRule { antipodal, residue, valuation };

const char* to_string(SplitRule rule);

struct RefinementStep {
  EInt prime;
  SplitRule rule = SplitRule::residue;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
};

struct RefinementTrace {
  std::optional<EInt> rho;       // nullopt for the plain-sum chain
  std::optional<int> sector;     // sector of A_0 for the plain-sum chain
  std::vector<std::vector<EInt>> chain;  // A_0, A_1, ..., A_s
  std::vector<RefinementStep> steps;
  bool sizes_ok = false;           // per-step size floors
  bool nested_ok = false;          // A_{i+1} subset of A_i
  bool guarantee_ok = false;       // divisibility transfer on A_s for every prime
  std::optional<bool> combination_count_ok;    // |{Phi(a,b)}| <= tau(c(rho))
  std::optional<bool> combination_divides_ok;  // Phi(a,b) | c(rho)
  std::size_t distinct_combinations = 0;

  const std::vector<EInt>& final_set() const { return chain.back(); }
  bool ok() const;
};

/// The plain-sum chain: keep the fullest of the six sectors (A_0), then for
/// every odd-norm canonical prime of prod_{a != b in A_0} (a + b) halve with
/// antipodal_coloring buckets keyed by a / pi^v_pi(a).
RefinementTrace refine_sums(std::span<const EInt> set);

struct TwistedOptions {
  bool allow_rho_one = false;
};

/// The twisted chain for a + rho*b over every canonical prime of the
/// product, using valuation_split exactly when rho = -pi^gamma and
/// residue_split otherwise. Throws DomainError for rho in {0, -1} (and 1
/// unless allowed) or when some a + rho*b (a != b) is zero.
RefinementTrace refine_twisted_sums(std::span<const EInt> set, EInt rho, TwistedOptions options = {});

/// a / gcd(a, b) + rho * b / gcd(a, b), gcd canonical.
EInt reduced_combination(EInt a, EInt b, EInt rho);

// ---------------------------------------------------------------------------
// Verifiers

enum class Comparison { greater, at_least };

struct BoundReport {
  std::string theorem;
  std::optional<int> omega;  // nullopt: a factor of the product is zero
  double bound = 0;
  Comparison comparison = Comparison::greater;
  bool passed = false;
  bool zero_factor = false;
  std::vector<std::string> primes;  // "a,b" for E, decimal for Z
  std::optional<std::uint64_t> seed;
  std::optional<EInt> rho;
  std::vector<EInt> set;   // rational sets are stored as (n, 0)
  bool rational_set = false;
};

/// omega_E(prod_{a != b} (a + b)) > (log(|A| - 1) - log 18) / log 2.
BoundReport verify_sum_bound(std::span<const EInt> set);

struct TwistedVerifyOptions {
  bool general_path_for_rho_one = false;
};

/// omega_E(prod_{a != b} (a + rho*b)) > log|A| / log 3 - log(tau^2 + 2) / log 3.
/// rho == 1 is checked with verify_sum_bound unless the general path is requested.
BoundReport verify_twisted_bound(std::span<const EInt> set, EInt rho, TwistedVerifyOptions options = {});

/// omega_N(prod_{a != b} (a^2 - ab + b^2)) > (log|A| - log 38) / (2 log 3).
BoundReport verify_norm_minus_bound(std::span<const std::int64_t> set);

/// omega_N(prod_{a != b} (a^2 + ab + b^2)) > (log|A| - log 146) / (2 log 3).
BoundReport verify_norm_plus_bound(std::span<const std::int64_t> set);

/// omega_E(prod_{a != b} (a - b)) >= pi(sqrt(|A| - 1)).
BoundReport verify_difference_bound(std::span<const EInt> set);

/// omega_N(prod_{a != b} (a + b)) >= k + 1 for the largest k with 3 * 2^(k-1) <= |A|.
BoundReport verify_erdos_turan(std::span<const std::int64_t> set);

/// Distinct canonical primes of prod_{a != b} (a + rho*b); nullopt if a factor is zero.
std::optional<std::vector<EInt>> product_prime_support(std::span<const EInt> set, EInt rho);

// Random inputs for the verifiers.

/// n distinct EInts with coordinates uniform in [-range, range].
std::vector<EInt> random_eint_set(std::size_t n, std::int64_t range, std::mt19937_64& rng);

/// n distinct integers uniform in [1, range].
std::vector<std::int64_t> random_positive_set(std::size_t n, std::int64_t range, std::mt19937_64& rng);

/// Like random_eint_set, but redraws elements until a + rho*b != 0 for all a != b.
std::vector<EInt> random_eint_set_avoiding(std::size_t n, std::int64_t range, EInt rho, std::mt19937_64& rng);

}  // namespace eulab::bounds

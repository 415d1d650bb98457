#pragma once

/*
 * Exhaustive branch-and-bound search for the minimum of
 *   omega_N( prod_{a != b in A} (a^2 + ab + b^2) )
 * over k-subsets A of {1..M} (optionally primitive: gcd(A) = 1).
 *
 * Adding elements to a set never removes primes from the product, so a
 * partial set whose prime count already exceeds the bound is abandoned.
 */

#include <cstdint>
#include <span>
#include <vector>

namespace eulab::search {

/// Distinct primes of a^2 + ab + b^2 for every pair 1 <= a < b <= M, as
/// indices into a sorted prime table. Stored compressed (offsets + indices).
class PairPrimeCache {
 public:
  static constexpr int kMaxBound = 2000;

  explicit PairPrimeCache(int max_element);

  int max_element() const { return max_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  /// Prime indices of a^2 + ab + b^2, a != b, both in [1, M].
  std::span<const std::uint32_t> pair_primes(int a, int b) const;

  /// Recomputes every pair value from its cached primes (with multiplicity
  /// from a fresh factorization) and compares.
  bool validate() const;

 private:
  std::size_t pair_index(int a, int b) const;

  int max_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> indices_;
};

/// Number of distinct primes of prod_{a < b in S} (a^2 + ab + b^2).
int omega_of_set(std::span<const int> set, const PairPrimeCache& cache);

bool is_primitive(std::span<const int> set);

struct SearchConfig {
  int k = 3;
  int max_element = 10;
  bool primitive_only = true;
  bool all_witnesses = false;
  int workers = 1;
};

struct SearchResult {
  int minimum = 0;
  std::size_t witness_count = 0;
  std::vector<std::vector<int>> witnesses;  // lexicographic order
  std::uint64_t nodes_visited = 0;
  double seconds = 0;
};

/// Throws DomainError for k < 2, M < k or M beyond PairPrimeCache::kMaxBound.
/// Without all_witnesses, reports the lexicographically first witness only.
SearchResult search_min(const SearchConfig& config);
SearchResult search_min(const SearchConfig& config, const PairPrimeCache& cache);

}  // namespace eulab::search

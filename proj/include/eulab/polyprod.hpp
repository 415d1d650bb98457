#pragma once

/*
 * Polynomials f(x, y) = sum_{i=1}^{n-1} r_i x^{m_i} y^{i-1} + r_n y^{n-1}
 * with positive coefficients, written as dot products a'(x) . b'(y) of
 *   a'(x) = (r_1 x^{m_1}, ..., r_{n-1} x^{m_{n-1}}, 1)
 *   b'(y) = (1, y, ..., y^{n-2}, r_n y^{n-1}),
 * and the exact check that any n vectors of B' + {e_n} are independent.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace eulab::polyprod {

using BigInt = boost::multiprecision::cpp_int;

struct SparsePoly {
  int n = 2;
  std::vector<std::int64_t> r;  // n positive coefficients
  std::vector<int> m;           // n-1 nonnegative exponents

  /// Throws DomainError unless n >= 2, all r_i > 0, all m_i >= 0 and the
  /// lengths match n.
  void validate() const;

  /// f(x, y); throws OverflowError outside 64 bits.
  std::int64_t operator()(std::int64_t x, std::int64_t y) const;
};

struct VectorSet {
  int dimension = 0;
  std::vector<std::vector<std::int64_t>> vectors;
};

struct LiftedSets {
  VectorSet a;
  VectorSet b;
};

/// Requires |A| >= |B| >= 2n - 2 and positive elements.
LiftedSets build_vectors(const SparsePoly& f, std::span<const std::int64_t> as, std::span<const std::int64_t> bs);

BigInt dot(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(std::vector<std::vector<BigInt>> rows);

struct IndependenceCertificate {
  bool independent = true;
  std::size_t subsets_checked = 0;
  /// First singular n-subset. Indices into B'; the index |B'| stands for e_n.
  std::optional<std::vector<std::size_t>> singular_subset;
};

/// Checks every n-subset of B' + {e_n} for a nonzero determinant.
IndependenceCertificate check_independence(const VectorSet& b);

/// Distinct primes of prod_{a in A, b in B} f(a, b), as the union of the
/// prime supports of the individual values.
int omega_product(const SparsePoly& f, std::span<const std::int64_t> as, std::span<const std::int64_t> bs);

std::vector<std::uint64_t> product_primes(const SparsePoly& f, std::span<const std::int64_t> as,
                                          std::span<const std::int64_t> bs);

}  // namespace eulab::polyprod

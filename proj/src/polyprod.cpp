#include "eulab/polyprod.hpp"

#include <algorithm>
#include <string>

#include "eulab/error.hpp"
#include "eulab/factor.hpp"

namespace eulab::polyprod {

void SparsePoly::validate() const {
  if (n < 2) throw DomainError("polynomial: n must be at least 2");
  if (r.size() != static_cast<std::size_t>(n)) throw DomainError("polynomial: expected n coefficients r");
  if (m.size() != static_cast<std::size_t>(n - 1)) throw DomainError("polynomial: expected n-1 exponents m");
  for (auto c : r)
    if (c <= 0) throw DomainError("polynomial: coefficients must be positive");
  for (auto e : m)
    if (e < 0) throw DomainError("polynomial: exponents must be nonnegative");
}

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) v = detail::mul_checked(v, base);
  return v;
}

}  // namespace

std::int64_t SparsePoly::operator()(std::int64_t x, std::int64_t y) const {
  std::int64_t value = detail::mul_checked(r[static_cast<std::size_t>(n - 1)], ipow(y, n - 1));
  for (int i = 0; i + 1 < n; ++i) {
    const auto term = detail::mul_checked(detail::mul_checked(r[static_cast<std::size_t>(i)], ipow(x, m[static_cast<std::size_t>(i)])), ipow(y, i));
    value = detail::add_checked(value, term);
  }
  return value;
}

LiftedSets build_vectors(const SparsePoly& f, std::span<const std::int64_t> as, std::span<const std::int64_t> bs) {
  f.validate();
  const std::size_t floor = 2 * static_cast<std::size_t>(f.n) - 2;
  if (as.size() < bs.size() || bs.size() < floor)
    throw DomainError("build_vectors: need |A| >= |B| >= 2n-2 = " + std::to_string(floor));
  for (auto v : as)
    if (v <= 0) throw DomainError("build_vectors: elements of A must be positive");
  for (auto v : bs)
    if (v <= 0) throw DomainError("build_vectors: elements of B must be positive");

  const auto n = static_cast<std::size_t>(f.n);
  LiftedSets out{{f.n, {}}, {f.n, {}}};
  for (auto x : as) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i + 1 < n; ++i) v[i] = detail::mul_checked(f.r[i], ipow(x, f.m[i]));
    v[n - 1] = 1;
    out.a.vectors.push_back(std::move(v));
  }
  for (auto y : bs) {
    std::vector<std::int64_t> v(n);
    for (std::size_t i = 0; i + 1 < n; ++i) v[i] = ipow(y, static_cast<int>(i));
    v[n - 1] = detail::mul_checked(f.r[n - 1], ipow(y, static_cast<int>(n - 1)));
    out.b.vectors.push_back(std::move(v));
  }
  return out;
}

BigInt dot(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  if (u.size() != v.size()) throw DomainError("dot: dimension mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += BigInt(u[i]) * v[i];
  return s;
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("determinant: matrix is not square");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IndependenceCertificate check_independence(const VectorSet& b) {
  const auto n = static_cast<std::size_t>(b.dimension);
  if (n < 1) throw DomainError("check_independence: dimension must be positive");
  for (const auto& v : b.vectors)
    if (v.size() != n) throw DomainError("check_independence: vector of wrong dimension");

  // Candidate rows: B' followed by e_n.
  std::vector<std::vector<BigInt>> rows;
  for (const auto& v : b.vectors) rows.emplace_back(v.begin(), v.end());
  rows.emplace_back(n, BigInt(0));
  rows.back()[n - 1] = 1;

  IndependenceCertificate cert;
  const std::size_t total = rows.size();
  if (total < n) return cert;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<BigInt>> m;
    m.reserve(n);
    for (auto i : pick) m.push_back(rows[i]);
    ++cert.subsets_checked;
    if (determinant(std::move(m)) == 0) {
      cert.independent = false;
      cert.singular_subset = pick;
      return cert;
    }
    // next combination in lexicographic order
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == total - n + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return cert;
}

std::vector<std::uint64_t> product_primes(const SparsePoly& f, std::span<const std::int64_t> as,
                                          std::span<const std::int64_t> bs) {
  f.validate();
  std::vector<std::uint64_t> primes;
  for (auto a : as)
    for (auto b : bs) {
      const std::int64_t v = f(a, b);
      if (v == 0) throw DomainError("omega_product: f(a, b) == 0");
      for (auto p : prime_support(v)) primes.push_back(p);
    }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

int omega_product(const SparsePoly& f, std::span<const std::int64_t> as, std::span<const std::int64_t> bs) {
  return static_cast<int>(product_primes(f, as, bs).size());
}

}  // namespace eulab::polyprod

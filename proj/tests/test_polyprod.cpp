#include <gtest/gtest.h>

#include <random>
#include <set>

#include "eulab/error.hpp"
#include "eulab/polyprod.hpp"
#include "oracles.hpp"

namespace pp = eulab::polyprod;

namespace {

std::int64_t ipow(std::int64_t x, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= x;
  return v;
}

// f evaluated straight from its definition.
std::int64_t eval(const pp::SparsePoly& f, std::int64_t x, std::int64_t y) {
  std::int64_t v = f.r.back() * ipow(y, f.n - 1);
  for (int i = 0; i + 1 < f.n; ++i) v += f.r[static_cast<std::size_t>(i)] * ipow(x, f.m[static_cast<std::size_t>(i)]) * ipow(y, i);
  return v;
}

pp::SparsePoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(2, 6), coef(1, 9), exp(0, 5);
  pp::SparsePoly f;
  f.n = n(rng);
  for (int i = 0; i < f.n; ++i) f.r.push_back(coef(rng));
  for (int i = 0; i + 1 < f.n; ++i) f.m.push_back(exp(rng));
  return f;
}

std::vector<std::int64_t> random_distinct(std::mt19937_64& rng, std::size_t n, std::int64_t max) {
  std::uniform_int_distribution<std::int64_t> d(1, max);
  std::set<std::int64_t> s;
  while (s.size() < n) s.insert(d(rng));
  std::vector<std::int64_t> v(s.begin(), s.end());
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

}  // namespace

TEST(SparsePoly, Validation) {
  EXPECT_NO_THROW((pp::SparsePoly{3, {1, 1, 1}, {2, 1}}.validate()));
  EXPECT_THROW((pp::SparsePoly{1, {1}, {}}.validate()), eulab::DomainError);
  EXPECT_THROW((pp::SparsePoly{3, {1, 0, 1}, {2, 1}}.validate()), eulab::DomainError);
  EXPECT_THROW((pp::SparsePoly{3, {1, 1, 1}, {2}}.validate()), eulab::DomainError);
  EXPECT_THROW((pp::SparsePoly{3, {1, 1, 1}, {2, -1}}.validate()), eulab::DomainError);
}

TEST(BuildVectors, Examples) {
  const pp::SparsePoly f{3, {1, 1, 1}, {2, 1}};  // x^2 + xy + y^2
  const std::vector<std::int64_t> as = {2, 5, 7, 9}, bs = {3, 4, 6, 8};
  const auto v = pp::build_vectors(f, as, bs);
  EXPECT_EQ(v.a.vectors[0], (std::vector<std::int64_t>{4, 2, 1}));
  EXPECT_EQ(v.b.vectors[0], (std::vector<std::int64_t>{1, 3, 9}));
  EXPECT_EQ(pp::dot(v.a.vectors[0], v.b.vectors[0]), 19);
  EXPECT_EQ(f(2, 3), 19);

  const pp::SparsePoly g{2, {3, 5}, {4}};  // 3x^4 + 5y
  const std::vector<std::int64_t> a2 = {2, 3}, b2 = {7, 1};
  const auto w = pp::build_vectors(g, a2, b2);
  EXPECT_EQ(w.a.vectors[0], (std::vector<std::int64_t>{48, 1}));
  EXPECT_EQ(w.b.vectors[0], (std::vector<std::int64_t>{1, 35}));

  const std::vector<std::int64_t> small = {1, 2, 3};
  EXPECT_THROW(pp::build_vectors(f, as, small), eulab::DomainError);
  EXPECT_THROW(pp::build_vectors(f, small, bs), eulab::DomainError);
  const std::vector<std::int64_t> neg = {1, 2, 3, -4};
  EXPECT_THROW(pp::build_vectors(f, as, neg), eulab::DomainError);
}

TEST(BuildVectors, DotIdentityOnRandomSpecs) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(rng);
    const std::size_t nb = 2 * static_cast<std::size_t>(f.n) - 2;
    const auto as = random_distinct(rng, nb + 2, 50), bs = random_distinct(rng, nb, 50);
    const auto v = pp::build_vectors(f, as, bs);
    for (std::size_t i = 0; i < as.size(); ++i) {
      EXPECT_EQ(v.a.vectors[i].back(), 1);
      for (std::size_t j = 0; j < bs.size(); ++j) {
        const pp::BigInt direct = eval(f, as[i], bs[j]);
        EXPECT_EQ(pp::dot(v.a.vectors[i], v.b.vectors[j]), direct);
        EXPECT_EQ(pp::BigInt(f(as[i], bs[j])), direct);
      }
    }
  }
}

TEST(Determinant, SmallCases) {
  using M = std::vector<std::vector<pp::BigInt>>;
  EXPECT_EQ(pp::determinant(M{}), 1);
  EXPECT_EQ(pp::determinant(M{{5}}), 5);
  EXPECT_EQ(pp::determinant(M{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(pp::determinant(M{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(pp::determinant(M{{2, 4}, {1, 2}}), 0);
  EXPECT_EQ(pp::determinant(M{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_THROW(pp::determinant(M{{1, 2}}), eulab::DomainError);
}

TEST(Determinant, MatchesClosedFormForLiftedRows) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_poly(rng);
    const auto n = static_cast<std::size_t>(f.n);
    const auto ys = random_distinct(rng, n, 40);
    std::vector<std::vector<pp::BigInt>> m;
    for (auto y : ys) {
      std::vector<pp::BigInt> row;
      for (std::size_t i = 0; i + 1 < n; ++i) row.emplace_back(ipow(y, static_cast<int>(i)));
      row.emplace_back(f.r.back() * ipow(y, f.n - 1));
      m.push_back(std::move(row));
    }
    const __int128 closed = oracle::vandermonde(ys, f.r.back());
    const pp::BigInt det = pp::determinant(m);
    EXPECT_EQ(det, pp::BigInt(static_cast<long long>(closed)));
  }
}

TEST(CheckIndependence, DistinctYsAreIndependent) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const auto f = random_poly(rng);
    const auto bs = random_distinct(rng, 2 * static_cast<std::size_t>(f.n) - 2, 30);
    const auto v = pp::build_vectors(f, bs, bs);
    const auto cert = pp::check_independence(v.b);
    EXPECT_TRUE(cert.independent);
    EXPECT_FALSE(cert.singular_subset.has_value());
  }
  // n = 3, y in {1, 2, 3}, r_3 = 1: determinant 2.
  const pp::SparsePoly f{3, {1, 1, 1}, {2, 1}};
  const std::vector<std::int64_t> ys = {1, 2, 3, 4};
  const auto v = pp::build_vectors(f, ys, ys);
  const auto cert = pp::check_independence(v.b);
  EXPECT_TRUE(cert.independent);
  EXPECT_EQ(cert.subsets_checked, 10u);  // C(5, 3)
}

TEST(CheckIndependence, DuplicateRowIsReported) {
  const pp::SparsePoly f{3, {1, 1, 1}, {2, 1}};
  const std::vector<std::int64_t> ys = {1, 2, 3, 5};
  auto v = pp::build_vectors(f, ys, ys);
  v.b.vectors.push_back(v.b.vectors[1]);  // y = 2 again
  const auto cert = pp::check_independence(v.b);
  EXPECT_FALSE(cert.independent);
  ASSERT_TRUE(cert.singular_subset.has_value());
  const auto& s = *cert.singular_subset;
  EXPECT_TRUE(std::find(s.begin(), s.end(), 1u) != s.end());
  EXPECT_TRUE(std::find(s.begin(), s.end(), 4u) != s.end());
}

TEST(OmegaProduct, AgreesWithFactoring) {
  const pp::SparsePoly f{3, {1, 1, 1}, {2, 1}};
  const std::vector<std::int64_t> a = {1, 2, 3};
  std::set<std::uint64_t> expect;
  for (auto x : a)
    for (auto y : a)
      for (const auto& [p, _] : oracle::factor_int(static_cast<std::uint64_t>(x * x + x * y + y * y))) expect.insert(p);
  EXPECT_EQ(expect, (std::set<std::uint64_t>{2, 3, 7, 13, 19}));
  const auto primes = pp::product_primes(f, a, a);
  EXPECT_EQ(std::set<std::uint64_t>(primes.begin(), primes.end()), expect);
  EXPECT_EQ(pp::omega_product(f, a, a), 5);
  // Single pair: f(1, 1) is the coefficient sum.
  const pp::SparsePoly g{3, {2, 3, 5}, {1, 4}};
  const std::vector<std::int64_t> one = {1};
  EXPECT_EQ(pp::omega_product(g, one, one), 2);  // 10 = 2 * 5
}

TEST(OmegaProduct, GrowsForGeometricSets) {
  const pp::SparsePoly f{3, {1, 1, 1}, {2, 1}};
  const std::vector<std::int64_t> b = {1, 2, 3, 5};
  int last = 0;
  std::vector<std::int64_t> a;
  for (std::int64_t x = 1; x <= 1 << 12; x *= 2) {
    a.push_back(x);
    const int w = pp::omega_product(f, a, b);
    EXPECT_GE(w, last);
    last = w;
  }
  EXPECT_GT(last, 10);
}

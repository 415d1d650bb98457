#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "eulab/bounds.hpp"
#include "eulab/error.hpp"

namespace eulab::bounds {

namespace {

template <typename T>
void require_valid(std::span<const T> set, const char* who) {
  if (set.size() < 2) throw DomainError(std::string(who) + ": need at least two elements");
  std::set<T> seen(set.begin(), set.end());
  if (seen.size() != set.size()) throw DomainError(std::string(who) + ": set has repeated elements");
}

void require_positive(std::span<const std::int64_t> set, const char* who) {
  for (auto a : set)
    if (a <= 0) throw DomainError(std::string(who) + ": elements must be positive integers");
}

void finish(BoundReport& r) {
  if (!r.omega) {
    r.passed = true;  // every prime divides 0
    return;
  }
  const double omega = *r.omega;
  r.passed = r.comparison == Comparison::greater ? omega > r.bound : omega >= r.bound;
}

BoundReport eint_report(std::string theorem, std::span<const EInt> set, EInt rho, double bound,
                        Comparison cmp) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.bound = bound;
  r.comparison = cmp;
  r.set.assign(set.begin(), set.end());
  if (const auto primes = product_prime_support(set, rho)) {
    r.omega = static_cast<int>(primes->size());
    for (const EInt& p : *primes) r.primes.push_back(to_string(p));
  } else {
    r.zero_factor = true;
  }
  finish(r);
  return r;
}

// Union of rational primes of f(a, b) over ordered pairs a != b.
template <typename F>
BoundReport rational_report(std::string theorem, std::span<const std::int64_t> set, F f, double bound,
                            Comparison cmp) {
  BoundReport r;
  r.theorem = std::move(theorem);
  r.bound = bound;
  r.comparison = cmp;
  r.rational_set = true;
  for (auto a : set) r.set.emplace_back(a, 0);
  std::vector<std::uint64_t> primes;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      for (auto p : prime_support(f(set[i], set[j]))) primes.push_back(p);
    }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  r.omega = static_cast<int>(primes.size());
  for (auto p : primes) r.primes.push_back(std::to_string(p));
  finish(r);
  return r;
}

std::int64_t quadratic(std::int64_t a, std::int64_t b, int sign) {
  const __int128 x = a, y = b;
  return detail::narrow_checked(x * x + sign * x * y + y * y);
}

}  // namespace

BoundReport verify_sum_bound(std::span<const EInt> set) {
  require_valid(set, "verify t1");
  const double n = static_cast<double>(set.size());
  const double bound = (std::log(n - 1) - std::log(18.0)) / std::log(2.0);
  return eint_report("t1", set, EInt{1, 0}, bound, Comparison::greater);
}

BoundReport verify_twisted_bound(std::span<const EInt> set, EInt rho, TwistedVerifyOptions options) {
  require_valid(set, "verify t2");
  if (rho == EInt{1, 0} && !options.general_path_for_rho_one) {
    BoundReport r = verify_sum_bound(set);
    r.theorem = "t2";
    r.rho = rho;
    return r;
  }
  const RhoConstants k = rho_constants(rho);
  const double bound = std::log(static_cast<double>(set.size())) / std::log(3.0) - k.constant;
  BoundReport r = eint_report("t2", set, rho, bound, Comparison::greater);
  r.rho = rho;
  return r;
}

BoundReport verify_norm_minus_bound(std::span<const std::int64_t> set) {
  require_valid(set, "verify cor1");
  require_positive(set, "verify cor1");
  const double bound =
      (std::log(static_cast<double>(set.size())) - std::log(38.0)) / (2 * std::log(3.0));
  return rational_report(
      "cor1", set, [](std::int64_t a, std::int64_t b) { return quadratic(a, b, -1); }, bound,
      Comparison::greater);
}

BoundReport verify_norm_plus_bound(std::span<const std::int64_t> set) {
  require_valid(set, "verify cor2");
  require_positive(set, "verify cor2");
  const double bound =
      (std::log(static_cast<double>(set.size())) - std::log(146.0)) / (2 * std::log(3.0));
  return rational_report(
      "cor2", set, [](std::int64_t a, std::int64_t b) { return quadratic(a, b, 1); }, bound,
      Comparison::greater);
}

BoundReport verify_difference_bound(std::span<const EInt> set) {
  require_valid(set, "verify rho-minus1");
  const double bound =
      static_cast<double>(prime_pi(std::sqrt(static_cast<double>(set.size()) - 1.0)));
  BoundReport r = eint_report("rho-minus1", set, EInt{-1, 0}, bound, Comparison::at_least);
  r.rho = EInt{-1, 0};
  return r;
}

BoundReport verify_erdos_turan(std::span<const std::int64_t> set) {
  require_valid(set, "verify erdos-turan");
  require_positive(set, "verify erdos-turan");
  // largest k >= 0 with 3 * 2^(k-1) <= |A|, i.e. 3 * 2^k <= 2|A|
  int k = 0;
  while (3ull << (k + 1) <= 2 * set.size()) ++k;
  return rational_report(
      "erdos-turan", set,
      [](std::int64_t a, std::int64_t b) { return detail::add_checked(a, b); },
      static_cast<double>(k + 1), Comparison::at_least);
}

std::vector<EInt> random_eint_set(std::size_t n, std::int64_t range, std::mt19937_64& rng) {
  return random_eint_set_avoiding(n, range, EInt{0, 0}, rng);
}

std::vector<EInt> random_eint_set_avoiding(std::size_t n, std::int64_t range, EInt rho, std::mt19937_64& rng) {
  if (range < 0) throw DomainError("random_eint_set: negative range");
  const auto side = static_cast<std::uint64_t>(2 * range + 1);
  if (static_cast<double>(n) > 0.5 * static_cast<double>(side) * static_cast<double>(side))
    throw DomainError("random_eint_set: range too small for the requested size");
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<EInt> out;
  std::set<EInt> seen;
  const bool check_rho = !rho.is_zero();
  std::size_t attempts = 0;
  while (out.size() < n) {
    if (++attempts > 1000 * (n + 10)) throw DomainError("random_eint_set: could not satisfy constraints");
    const EInt c{coord(rng), coord(rng)};
    if (seen.count(c)) continue;
    if (check_rho) {
      const bool clash = std::any_of(out.begin(), out.end(), [&](const EInt& e) {
        return (c + rho * e).is_zero() || (e + rho * c).is_zero();
      });
      if (clash) continue;
    }
    seen.insert(c);
    out.push_back(c);
  }
  return out;
}

std::vector<std::int64_t> random_positive_set(std::size_t n, std::int64_t range, std::mt19937_64& rng) {
  if (range < 1 || static_cast<std::uint64_t>(range) < n)
    throw DomainError("random_positive_set: range too small for the requested size");
  std::uniform_int_distribution<std::int64_t> dist(1, range);
  std::vector<std::int64_t> out;
  std::set<std::int64_t> seen;
  while (out.size() < n) {
    const auto v = dist(rng);
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

}  // namespace eulab::bounds

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "eulab/bounds.hpp"
#include "eulab/error.hpp"

namespace eulab::bounds {

int RhoConstants::c_of(EInt pi) const {
  const EInt canon = canonical_associate(pi).first;
  for (const auto& pc : primes)
    if (pc.prime == canon) return pc.c;
  return 0;
}

RhoConstants rho_constants(EInt rho) {
  if (rho.is_zero() || rho == EInt{-1, 0})
    throw DomainError("rho_constants: rho must not be 0 or -1 (rho*(1+rho) == 0)");
  RhoConstants k;
  k.rho = rho;
  const EInt one_plus = EInt{1, 0} + rho;
  std::vector<EInt> support = e_prime_support(rho);
  for (const EInt& p : e_prime_support(one_plus)) support.push_back(p);
  std::sort(support.begin(), support.end(), prime_order);
  support.erase(std::unique(support.begin(), support.end()), support.end());

  k.c_rho.unit = Unit{};
  for (const EInt& pi : support) {
    PrimeConstant pc;
    pc.prime = pi;
    pc.gamma = valuation(rho, pi);
    const EInt rho0 = *exact_div(rho, pow(pi, static_cast<unsigned>(pc.gamma)));
    if (rho0 == EInt{-1, 0}) {
      pc.negative_prime_power = true;
      pc.c = pc.gamma;
    } else {
      pc.delta = valuation(EInt{1, 0} + rho0, pi);
      pc.c = pc.gamma + pc.delta;
    }
    if (pc.c > 0) k.c_rho.factors.push_back({pi, pc.c});
    k.primes.push_back(pc);
  }
  k.tau = 6;
  for (const auto& f : k.c_rho.factors) k.tau = detail::mul_checked(k.tau, f.exponent + 1);
  k.threshold = detail::add_checked(detail::mul_checked(k.tau, k.tau), 2);
  k.constant = std::log(static_cast<double>(k.threshold)) / std::log(3.0);
  return k;
}

std::optional<std::pair<EInt, int>> negative_prime_power(EInt rho) {
  if (rho.is_zero()) return std::nullopt;
  const EFactorization f = factor_e(-rho);
  if (f.factors.size() != 1 || !(f.unit == Unit{})) return std::nullopt;
  return std::make_pair(f.factors.front().prime, f.factors.front().exponent);
}

namespace {

template <std::size_t N>
std::vector<EInt> largest_bucket(std::array<std::vector<EInt>, N>& buckets) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < N; ++i)
    if (buckets[i].size() > buckets[best].size()) best = i;
  return std::move(buckets[best]);
}

EInt strip_prime(EInt a, EInt pi) {
  while (auto q = exact_div(a, pi)) a = *q;
  return a;
}

// v_pi(x), with zero treated as +infinity.
int valuation_or_inf(EInt x, EInt pi) {
  return x.is_zero() ? std::numeric_limits<int>::max() : valuation(x, pi);
}

}  // namespace

std::vector<EInt> residue_split(std::span<const EInt> set, EInt pi, EInt rho) {
  if (rho.is_zero()) throw DomainError("residue_split: rho == 0");
  const int gamma = valuation(rho, pi);
  const EInt rho0 = *exact_div(rho, pow(pi, static_cast<unsigned>(gamma)));
  if (rho0 == EInt{-1, 0})
    throw DomainError("residue_split: rho is -pi^gamma (or -1); use valuation_split");
  const Coloring coloring = twist_coloring(pi, rho0);
  std::array<std::vector<EInt>, 3> buckets;
  for (const EInt& a : set) {
    const int g = a.is_zero() ? 0 : coloring.group_of(strip_prime(a, pi));
    buckets[static_cast<std::size_t>(g)].push_back(a);
  }
  return largest_bucket(buckets);
}

std::vector<EInt> valuation_split(std::span<const EInt> set, EInt theta, int gamma) {
  if (gamma < 1) throw DomainError("valuation_split: gamma must be positive");
  std::array<std::vector<EInt>, 2> buckets;
  for (const EInt& a : set) {
    const int parity = a.is_zero() ? 0 : (valuation(a, theta) / gamma) % 2;
    buckets[static_cast<std::size_t>(parity)].push_back(a);
  }
  return largest_bucket(buckets);
}

bool check_divisibility_transfer(std::span<const EInt> set, EInt pi, EInt rho, int loss) {
  std::vector<int> vals;
  vals.reserve(set.size());
  for (const EInt& a : set) vals.push_back(valuation_or_inf(a, pi));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j) continue;
      const EInt s = set[i] + rho * set[j];
      if (s.is_zero()) return false;
      const int v = valuation(s, pi);
      if (v < loss) continue;
      const int need = v - loss;
      if (vals[i] < need || vals[j] < need) return false;
    }
  }
  return true;
}

bool check_sum_valuation(std::span<const EInt> set, EInt pi) {
  std::vector<int> vals;
  vals.reserve(set.size());
  for (const EInt& a : set) vals.push_back(valuation_or_inf(a, pi));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const EInt s = set[i] + set[j];
      if (s.is_zero()) return false;
      if (valuation(s, pi) != std::min(vals[i], vals[j])) return false;
    }
  }
  return true;
}

const char* to_string(SplitRule rule) {
  switch (rule) {
    case SplitRule::antipodal: return "uv";
    case SplitRule::residue: return "lemma2";
    case SplitRule::valuation: return "lemma4";
  }
  return "?";
}

bool RefinementTrace::ok() const {
  return sizes_ok && nested_ok && guarantee_ok && combination_count_ok.value_or(true) &&
         combination_divides_ok.value_or(true);
}

namespace {

bool is_nested(const std::vector<std::vector<EInt>>& chain) {
  for (std::size_t i = 1; i < chain.size(); ++i) {
    std::set<EInt> parent(chain[i - 1].begin(), chain[i - 1].end());
    for (const EInt& x : chain[i])
      if (!parent.count(x)) return false;
  }
  return true;
}

void require_distinct(std::span<const EInt> set, const char* who) {
  std::set<EInt> seen(set.begin(), set.end());
  if (seen.size() != set.size()) throw DomainError(std::string(who) + ": set has repeated elements");
}

}  // namespace

RefinementTrace refine_sums(std::span<const EInt> set) {
  if (set.size() < 2) throw DomainError("refine_sums: need at least two elements");
  require_distinct(set, "refine_sums");
  RefinementTrace trace;

  std::array<std::vector<EInt>, 6> sectors;
  for (const EInt& a : set)
    if (!a.is_zero()) sectors[static_cast<std::size_t>(sector_index(a))].push_back(a);
  std::size_t best = 0;
  for (std::size_t i = 1; i < 6; ++i)
    if (sectors[i].size() > sectors[best].size()) best = i;
  trace.sector = static_cast<int>(best);
  trace.chain.push_back(sectors[best]);
  bool sizes_ok = 6 * trace.chain.front().size() + 1 >= set.size();

  // Odd-norm primes of the product over A_0 (no zero factors inside one sector).
  std::vector<EInt> primes;
  const auto& a0 = trace.chain.front();
  for (std::size_t i = 0; i < a0.size(); ++i)
    for (std::size_t j = i + 1; j < a0.size(); ++j)
      for (const EInt& p : e_prime_support(a0[i] + a0[j]))
        if (norm_wide(p) % 2 == 1) primes.push_back(p);
  std::sort(primes.begin(), primes.end(), prime_order);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (const EInt& pi : primes) {
    const auto& current = trace.chain.back();
    const Coloring coloring = antipodal_coloring(pi, 1);
    std::array<std::vector<EInt>, 2> buckets;
    for (const EInt& a : current)
      buckets[static_cast<std::size_t>(coloring.group_of(strip_prime(a, pi)))].push_back(a);
    auto next = largest_bucket(buckets);
    trace.steps.push_back({pi, SplitRule::antipodal, current.size(), next.size()});
    sizes_ok = sizes_ok && 2 * next.size() >= current.size();
    trace.chain.push_back(std::move(next));
  }

  trace.sizes_ok = sizes_ok;
  trace.nested_ok = is_nested(trace.chain);
  trace.guarantee_ok = std::all_of(primes.begin(), primes.end(),
                                   [&](EInt pi) { return check_sum_valuation(trace.final_set(), pi); });
  return trace;
}

RefinementTrace refine_twisted_sums(std::span<const EInt> set, EInt rho, TwistedOptions options) {
  if (rho == EInt{1, 0} && !options.allow_rho_one)
    throw DomainError("refine_twisted_sums: rho == 1 is handled by refine_sums");
  require_distinct(set, "refine_twisted_sums");
  const RhoConstants constants = rho_constants(rho);
  const auto support = product_prime_support(set, rho);
  if (!support) throw DomainError("refine_twisted_sums: a + rho*b == 0 for some a != b");
  const auto npp = negative_prime_power(rho);

  RefinementTrace trace;
  trace.rho = rho;
  trace.chain.emplace_back(set.begin(), set.end());
  bool sizes_ok = true;
  for (const EInt& pi : *support) {
    const auto& current = trace.chain.back();
    std::vector<EInt> next;
    SplitRule rule;
    if (npp && npp->first == pi) {
      next = valuation_split(current, pi, npp->second);
      rule = SplitRule::valuation;
    } else {
      next = residue_split(current, pi, rho);
      rule = SplitRule::residue;
    }
    trace.steps.push_back({pi, rule, current.size(), next.size()});
    sizes_ok = sizes_ok && 3 * next.size() >= current.size();
    trace.chain.push_back(std::move(next));
  }
  trace.sizes_ok = sizes_ok;
  trace.nested_ok = is_nested(trace.chain);

  const auto& last = trace.final_set();
  trace.guarantee_ok = std::all_of(support->begin(), support->end(), [&](EInt pi) {
    return check_divisibility_transfer(last, pi, rho, constants.c_of(pi));
  });

  const EInt c_value = constants.c_rho_value();
  std::set<EInt> combinations;
  bool divides_ok = true;
  for (const EInt& a : last) {
    for (const EInt& b : last) {
      if (a.is_zero() && b.is_zero()) continue;
      const EInt phi = reduced_combination(a, b, rho);
      combinations.insert(phi);
      divides_ok = divides_ok && !phi.is_zero() && divides(phi, c_value);
    }
  }
  trace.distinct_combinations = combinations.size();
  trace.combination_count_ok = static_cast<std::int64_t>(combinations.size()) <= constants.tau;
  trace.combination_divides_ok = divides_ok;
  return trace;
}

EInt reduced_combination(EInt a, EInt b, EInt rho) {
  const EInt g = gcd(a, b);
  return *exact_div(a, g) + rho * *exact_div(b, g);
}

std::optional<std::vector<EInt>> product_prime_support(std::span<const EInt> set, EInt rho) {
  std::vector<EInt> primes;
  const bool symmetric = rho == EInt{1, 0};
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = 0; j < set.size(); ++j) {
      if (i == j || (symmetric && j < i)) continue;
      const EInt s = set[i] + rho * set[j];
      if (s.is_zero()) return std::nullopt;
      for (const EInt& p : e_prime_support(s)) primes.push_back(p);
    }
  }
  std::sort(primes.begin(), primes.end(), prime_order);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace eulab::bounds

// Acceptance run. With no arguments every criterion is checked and one
// PASS/FAIL line is printed per criterion; with arguments only the listed
// criteria run. Exit status is 1 if any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eulab/bounds.hpp"
#include "eulab/eint.hpp"
#include "eulab/factor.hpp"
#include "eulab/polyprod.hpp"
#include "eulab/search.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using eulab::EInt;
namespace b = eulab::bounds;
namespace s = eulab::search;
namespace pp = eulab::polyprod;

namespace {

// Collects failures; keeps the first few messages for the report.
struct Outcome {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> notes;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
  void info(const std::string& what) { notes.push_back(what); }
};

using Witnesses = std::vector<std::vector<int>>;

bool contains(const Witnesses& w, const std::vector<int>& x) {
  return std::binary_search(w.begin(), w.end(), x);
}

std::string str(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

void search_row(Outcome& out, int k, int m, int minimum, std::size_t count, const Witnesses& required,
                bool exact) {
  const auto r = s::search_min({.k = k, .max_element = m, .primitive_only = true, .all_witnesses = true});
  std::ostringstream tag;
  tag << "k=" << k << " M=" << m << ": ";
  out.expect(r.minimum == minimum, tag.str() + "minimum " + std::to_string(r.minimum));
  out.expect(r.witness_count == count, tag.str() + "witness count " + std::to_string(r.witness_count));
  if (exact) out.expect(r.witnesses == required, tag.str() + "witness sets differ");
  for (const auto& w : required) out.expect(contains(r.witnesses, w), tag.str() + "missing " + str(w));
}

void criterion_1(Outcome& out) {
  search_row(out, 3, 400, 3, 28868, {{1, 2, 3}, {1, 2, 4}, {388, 395, 399}}, false);
}

void criterion_2(Outcome& out) {
  search_row(out, 4, 400, 4, 5, {{1, 2, 4, 8}, {1, 3, 9, 18}, {1, 3, 9, 27}, {1, 4, 16, 22}, {1, 9, 15, 18}}, true);
}

void criterion_3(Outcome& out) {
  search_row(out, 5, 200, 5, 2, {{1, 2, 4, 8, 16}, {1, 3, 9, 27, 81}}, true);
  search_row(out, 6, 200, 6, 1, {{1, 2, 4, 8, 16, 32}}, true);
  search_row(out, 7, 150, 7, 1, {{1, 2, 4, 8, 16, 32, 64}}, true);
  search_row(out, 8, 100, 9, 3, {{2, 3, 4, 6, 9, 12, 18, 36}}, false);
}

void criterion_4(Outcome& out) {
  const auto w = b::rho_constants(EInt(0, 1));
  out.expect(w.c_rho_value() == EInt(1, 0), "c(w) = " + eulab::to_string(w.c_rho_value()));
  out.expect(w.tau == 6, "tau(c(w)) = " + std::to_string(w.tau));
  out.expect(w.threshold == 38, "threshold(w) = " + std::to_string(w.threshold));
  const auto mw = b::rho_constants(EInt(0, -1));
  out.expect(mw.c_rho_value() == EInt(2, 1), "c(-w) = " + eulab::to_string(mw.c_rho_value()));
  out.expect(mw.tau == 12, "tau(c(-w)) = " + std::to_string(mw.tau));
  out.expect(mw.threshold == 146, "threshold(-w) = " + std::to_string(mw.threshold));
  // Same values straight from the definitions.
  for (const EInt rho : {EInt(0, 1), EInt(0, -1)}) {
    oracle::E c{1, 0};
    for (const auto& [pi, _] : oracle::factor_e(props::o(rho * (rho + EInt(1, 0)))))
      for (int i = 0; i < props::correction(props::l(pi), rho); ++i) c = oracle::mul(c, pi);
    const auto k = b::rho_constants(rho);
    out.expect(k.c_rho_value() == props::l(c), "c(rho) disagrees with its definition");
    out.expect(k.tau == oracle::count_divisors(c), "tau disagrees with divisor enumeration");
  }
}

EInt random_with_norm_at_most(std::mt19937_64& rng, std::int64_t max_norm) {
  const auto r = static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(max_norm) / 3.0));
  std::uniform_int_distribution<std::int64_t> d(-r, r);
  for (;;) {
    const EInt x(d(rng), d(rng));
    if (!x.is_zero() && eulab::norm(x) <= max_norm) return x;
  }
}

void criterion_5(Outcome& out) {
  std::mt19937_64 rng(5001);
  for (int i = 0; i < 10000; ++i) {
    const EInt x = random_with_norm_at_most(rng, 1'000'000'000'000);
    const auto f = eulab::factor_e(x);
    bool primes_ok = true;
    for (const auto& pp : f.factors) {
      const std::int64_t n = eulab::norm(pp.prime);
      const auto r = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
      const bool prime_norm = eulab::is_prime(static_cast<std::uint64_t>(n));
      const bool inert = r * r == static_cast<std::uint64_t>(n) && r % 3 == 2 && eulab::is_prime(r) &&
                         pp.prime == EInt(static_cast<std::int64_t>(r), 0);
      primes_ok = primes_ok && eulab::is_canonical(pp.prime) && pp.exponent > 0 && (prime_norm || inert);
    }
    out.expect(f.recompose() == x, "factor_e(" + eulab::to_string(x) + ") does not recompose");
    out.expect(primes_ok, "factor_e(" + eulab::to_string(x) + ") has a non-prime factor");
  }
  for (int i = 0; i < 1000; ++i) {
    EInt x, y;
    if (i % 2) {
      x = random_with_norm_at_most(rng, 1'000'000);
      y = random_with_norm_at_most(rng, 1'000'000);
    } else {
      // Planted common factor so that nontrivial gcds are exercised.
      const EInt g = random_with_norm_at_most(rng, 100);
      x = g * random_with_norm_at_most(rng, 10'000);
      y = g * random_with_norm_at_most(rng, 10'000);
    }
    const EInt expect = props::l(oracle::gcd_by_factoring(props::o(x), props::o(y)));
    out.expect(eulab::gcd(x, y) == expect,
               "gcd(" + eulab::to_string(x) + ", " + eulab::to_string(y) + ") = " + eulab::to_string(eulab::gcd(x, y)));
  }
}

void criterion_6(Outcome& out) {
  for (const EInt& pi : props::canonical_primes_up_to(50)) {
    if (eulab::norm(pi) % 2 != 0)
      for (int k = 1; k <= 3; ++k) {
        const auto c = b::antipodal_coloring(pi, k);
        out.expect(props::well_formed(c) && props::separates(c, EInt(-1, 0)),
                   "antipodal coloring mod " + eulab::to_string(pi) + "^" + std::to_string(k));
      }
    for (int delta = 0; delta <= 2; ++delta) {
      const EInt rho0 = props::twist_for_delta(pi, delta);
      const auto c = b::twist_coloring(pi, rho0);
      out.expect(props::well_formed(c) && props::separates(c, -rho0),
                 "twist coloring mod " + eulab::to_string(pi) + " rho0=" + eulab::to_string(rho0));
    }
  }

  std::mt19937_64 rng(6001);
  const std::vector<EInt> rhos = {EInt(0, 1), EInt(0, -1), EInt(2, 1), EInt(1, 2), EInt(3, -2), EInt(-4, 1)};
  for (int trial = 0; trial < 200; ++trial) {
    const EInt rho = rhos[static_cast<std::size_t>(trial) % rhos.size()];
    const auto set = props::random_nonzero_set(rng, 20, 200, rho);
    const auto npp = b::negative_prime_power(rho);
    const auto primes = props::product_primes(set, rho);
    // One small prime and one drawn from the whole support per set.
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    for (const std::size_t idx : {std::size_t{0}, pick(rng)}) {
      const EInt pi = primes[idx];
      if (npp && npp->first == pi) continue;
      const auto kept = b::residue_split(set, pi, rho);
      out.expect(3 * kept.size() >= set.size() && props::transfer_holds(kept, pi, rho, props::correction(pi, rho)),
                 "residue split at " + eulab::to_string(pi) + " rho=" + eulab::to_string(rho));
    }
  }
  for (int trial = 0; trial < 200; ++trial) {
    static const EInt thetas[] = {EInt(2, 1), EInt(3, 1), EInt(2, 0), EInt(4, 1)};
    const EInt theta = thetas[trial % 4];
    const int gamma = 1 + trial % 3;
    const EInt rho = -eulab::pow(theta, static_cast<unsigned>(gamma));
    std::vector<EInt> set;
    std::uniform_int_distribution<unsigned> e(0, 6);
    for (const EInt& x : props::random_nonzero_set(rng, 16, 40, EInt(1, 0))) set.push_back(x * eulab::pow(theta, e(rng)));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    bool clash = false;
    for (const EInt& a : set)
      for (const EInt& c : set) clash = clash || (a != c && (a + rho * c).is_zero());
    if (clash) {
      --trial;
      continue;
    }
    const auto kept = b::valuation_split(set, theta, gamma);
    out.expect(2 * kept.size() >= set.size() && props::transfer_holds(kept, theta, rho, gamma),
               "valuation split at " + eulab::to_string(theta) + "^" + std::to_string(gamma));
  }
}

void criterion_7(Outcome& out) {
  std::mt19937_64 rng(7001);
  const std::vector<EInt> rhos = {EInt(0, 1), EInt(0, -1), EInt(2, 1), EInt(-2, -1), EInt(1, 2)};
  std::uniform_int_distribution<std::size_t> size(2, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const EInt rho = rhos[static_cast<std::size_t>(trial) % rhos.size()];
    const auto set = props::random_nonzero_set(rng, size(rng), 100, rho);
    const auto t = b::refine_twisted_sums(set, rho);
    const auto k = b::rho_constants(rho);
    const std::string audit = props::audit_twisted(set, rho, t, k.c_rho_value());
    out.expect(t.ok() && audit.empty(), "twisted chain, trial " + std::to_string(trial) + ": " + audit);

    const auto plain = props::random_nonzero_set(rng, size(rng), 100, EInt(1, 0));
    const auto u = b::refine_sums(plain);
    const std::string plain_audit = props::audit_sums(plain, u);
    out.expect(u.ok() && plain_audit.empty(), "plain chain, trial " + std::to_string(trial) + ": " + plain_audit);
  }
}

void criterion_8(Outcome& out) {
  std::mt19937_64 rng(8001);
  const std::vector<EInt> rhos = {EInt(0, 1), EInt(0, -1), EInt(2, 1), EInt(-2, -1), EInt(1, 2)};
  auto check = [&](const b::BoundReport& r, int trial) {
    out.expect(r.passed, r.theorem + " trial " + std::to_string(trial) + " failed");
  };
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + 2 * static_cast<std::size_t>(trial) % 199;  // 2..200
    const EInt rho = rhos[static_cast<std::size_t>(trial) % rhos.size()];
    check(b::verify_sum_bound(b::random_eint_set(n, 100, rng)), trial);
    check(b::verify_twisted_bound(b::random_eint_set_avoiding(n, 100, rho, rng), rho), trial);
    check(b::verify_norm_minus_bound(b::random_positive_set(n, 10000, rng)), trial);
    check(b::verify_norm_plus_bound(b::random_positive_set(n, 10000, rng)), trial);
    check(b::verify_difference_bound(b::random_eint_set(n, 100, rng)), trial);
    const std::size_t k = 1 + static_cast<std::size_t>(trial) % 4;
    check(b::verify_erdos_turan(b::random_positive_set(3u << (k - 1), 10000, rng)), trial);
  }
}

void criterion_9(Outcome& out) {
  for (int m = 3; m <= 60; ++m)
    for (bool primitive : {true, false}) {
      const auto expect = oracle::brute_min_triples(m, primitive);
      const std::string tag = "M=" + std::to_string(m) + (primitive ? " primitive" : "");
      for (int workers : {1, 4}) {
        const auto got = s::search_min(
            {.k = 3, .max_element = m, .primitive_only = primitive, .all_witnesses = true, .workers = workers});
        out.expect(got.minimum == expect.minimum && got.witnesses == expect.witnesses &&
                       got.witness_count == expect.witnesses.size(),
                   tag + " workers=" + std::to_string(workers));
      }
    }
}

std::int64_t ipow(std::int64_t x, int e) {
  std::int64_t v = 1;
  for (int i = 0; i < e; ++i) v *= x;
  return v;
}

void criterion_10(Outcome& out) {
  std::mt19937_64 rng(10001);
  std::uniform_int_distribution<int> dn(2, 6), coef(1, 9), exp(0, 5);
  for (int trial = 0; trial < 100; ++trial) {
    pp::SparsePoly f;
    f.n = dn(rng);
    for (int i = 0; i < f.n; ++i) f.r.push_back(coef(rng));
    for (int i = 0; i + 1 < f.n; ++i) f.m.push_back(exp(rng));
    const auto nb = 2 * static_cast<std::size_t>(f.n) - 2;
    auto draw = [&](std::size_t count) {
      std::vector<std::int64_t> v(40);
      std::iota(v.begin(), v.end(), 1);
      std::shuffle(v.begin(), v.end(), rng);
      v.resize(count);
      return v;
    };
    const auto as = draw(nb + 3), bs = draw(nb);
    const auto v = pp::build_vectors(f, as, bs);
    const std::string tag = "spec " + std::to_string(trial) + " (n=" + std::to_string(f.n) + ")";

    bool dots = true;
    for (std::size_t i = 0; i < as.size(); ++i)
      for (std::size_t j = 0; j < bs.size(); ++j) {
        std::int64_t direct = f.r.back() * ipow(bs[j], f.n - 1);
        for (int t = 0; t + 1 < f.n; ++t)
          direct += f.r[static_cast<std::size_t>(t)] * ipow(as[i], f.m[static_cast<std::size_t>(t)]) * ipow(bs[j], t);
        dots = dots && pp::dot(v.a.vectors[i], v.b.vectors[j]) == direct;
      }
    out.expect(dots, tag + ": dot product identity");

    const auto cert = pp::check_independence(v.b);
    std::size_t expected_subsets = 1;
    for (std::size_t i = 0; i < static_cast<std::size_t>(f.n); ++i)
      expected_subsets = expected_subsets * (nb + 1 - i) / (i + 1);
    out.expect(cert.independent && cert.subsets_checked == expected_subsets, tag + ": independence");

    const auto n = static_cast<std::size_t>(f.n);
    std::vector<std::vector<pp::BigInt>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(v.b.vectors[i].begin(), v.b.vectors[i].end());
    const std::vector<std::int64_t> ys(bs.begin(), bs.begin() + static_cast<std::ptrdiff_t>(n));
    const __int128 closed = oracle::vandermonde(ys, f.r.back());
    out.expect(pp::determinant(rows) == pp::BigInt(static_cast<long long>(closed)), tag + ": closed-form determinant");
  }
}

struct Criterion {
  const char* title;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"k=3, M=400 primitive search: minimum 3 with 28868 witnesses", criterion_1},
      {"k=4, M=400 primitive search: minimum 4 with the five known sets", criterion_2},
      {"k=5..8 primitive search rows", criterion_3},
      {"correction constants for w and -w", criterion_4},
      {"factorization round trip and gcd against the oracle", criterion_5},
      {"coloring and split properties", criterion_6},
      {"refinement chains pass the independent audit", criterion_7},
      {"bound verifiers on random trials", criterion_8},
      {"branch and bound equals brute force for k=3, M<=60", criterion_9},
      {"lifted vectors: dot identity, independence, determinant", criterion_10},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int n = std::atoi(argv[i]);
    if (n < 1 || n > static_cast<int>(criteria().size())) {
      std::cerr << "usage: " << argv[0] << " [criterion 1-" << criteria().size() << "]...\n";
      return 2;
    }
    selected.push_back(n);
  }
  if (selected.empty())
    for (int n = 1; n <= static_cast<int>(criteria().size()); ++n) selected.push_back(n);

  bool all_passed = true;
  for (const int n : selected) {
    const auto& c = criteria()[static_cast<std::size_t>(n - 1)];
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.failures == 0;
    all_passed = all_passed && pass;
    std::printf("criterion %2d: %s  %s (%zu checks, %.1fs)\n", n, pass ? "PASS" : "FAIL", c.title, out.checks, secs);
    for (const auto& note : out.notes) std::printf("    %s\n", note.c_str());
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}

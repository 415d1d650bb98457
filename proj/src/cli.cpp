#include "eulab/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "eulab/bounds.hpp"
#include "eulab/error.hpp"
#include "eulab/factor.hpp"
#include "eulab/io.hpp"
#include "eulab/polyprod.hpp"
#include "eulab/search.hpp"

namespace eulab::cli {

namespace {

using io::Json;

// What a subcommand produced: the text for stdout, the same text with
// timing fields removed (for the manifest digest), and its exit code.
struct Output {
  std::string text;
  std::string stable;
  int code = kOk;
};

Output single(const Json& doc, int code = kOk) {
  std::string text = doc.dump() + "\n";
  return {text, text, code};
}

Output cmd_factor(const std::optional<std::string>& e, const std::optional<std::int64_t>& n) {
  if (e.has_value() == n.has_value()) throw ParseError("factor: give exactly one of --e or --n");
  if (e) {
    const EInt x = parse_eint(*e);
    if (x.is_zero()) throw DomainError("factor: 0 has no factorization");
    return single(io::to_json(factor_e(x)));
  }
  if (*n == 0) throw DomainError("factor: 0 has no factorization");
  return single(io::to_json(factor_rational(*n)));
}

Output cmd_omega(const std::optional<std::string>& e, const std::optional<std::int64_t>& n) {
  if (e.has_value() == n.has_value()) throw ParseError("omega-e: give exactly one of --e or --n");
  Json primes = Json::array();
  std::string value;
  if (e) {
    const EInt x = parse_eint(*e);
    if (x.is_zero()) throw DomainError("omega-e: 0 has infinitely many prime divisors");
    for (const EInt& p : e_prime_support(x)) primes.push_back(to_string(p));
    value = to_string(x);
  } else {
    if (*n == 0) throw DomainError("omega-e: 0 has infinitely many prime divisors");
    for (auto p : prime_support(*n)) primes.push_back(std::to_string(p));
    value = std::to_string(*n);
  }
  const auto count = primes.size();
  return single(Json{{"value", value}, {"omega", count}, {"primes", std::move(primes)}});
}

Output cmd_tau(const std::string& e) {
  const EInt x = parse_eint(e);
  if (x.is_zero()) throw DomainError("tau: 0 has infinitely many divisors");
  return single(Json{{"value", to_string(x)}, {"tau", tau_e(x)}});
}

struct VerifyArgs {
  std::string theorem;
  std::optional<std::string> rho;
  std::size_t size = 20;
  std::int64_t range = 100;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  bool general = false;
};

bounds::BoundReport verify_once(const VerifyArgs& a, std::optional<EInt> rho, std::mt19937_64& rng) {
  const std::string& t = a.theorem;
  if (t == "t1") return bounds::verify_sum_bound(bounds::random_eint_set(a.size, a.range, rng));
  if (t == "t2") {
    if (!rho) throw ParseError("verify t2: --rho is required");
    const auto set = bounds::random_eint_set_avoiding(a.size, a.range, *rho, rng);
    return bounds::verify_twisted_bound(set, *rho, {.general_path_for_rho_one = a.general});
  }
  if (t == "cor1") return bounds::verify_norm_minus_bound(bounds::random_positive_set(a.size, a.range, rng));
  if (t == "cor2") return bounds::verify_norm_plus_bound(bounds::random_positive_set(a.size, a.range, rng));
  if (t == "rho-minus1") return bounds::verify_difference_bound(bounds::random_eint_set(a.size, a.range, rng));
  if (t == "erdos-turan") return bounds::verify_erdos_turan(bounds::random_positive_set(a.size, a.range, rng));
  throw ParseError("verify: unknown theorem '" + t + "'");
}

Output cmd_verify(const VerifyArgs& a) {
  std::optional<EInt> rho;
  if (a.rho) rho = parse_eint(*a.rho);
  Output o;
  for (std::size_t i = 0; i < a.trials; ++i) {
    const std::uint64_t seed = a.seed + i;
    std::mt19937_64 rng(seed);
    bounds::BoundReport r = verify_once(a, rho, rng);
    r.seed = seed;
    if (!r.passed) o.code = kBoundFailed;
    o.text += io::to_json(r, i).dump() + "\n";
  }
  o.stable = o.text;
  return o;
}

Output cmd_crho(const std::string& rho) { return single(io::to_json(bounds::rho_constants(parse_eint(rho)))); }

Output cmd_refine(const std::optional<std::string>& rho, const std::string& set_file) {
  const auto set = io::read_eint_set_file(set_file);
  const bounds::RefinementTrace t =
      rho ? bounds::refine_twisted_sums(set, parse_eint(*rho), {.allow_rho_one = true}) : bounds::refine_sums(set);
  return single(io::to_json(t), t.ok() ? kOk : kBoundFailed);
}

Output cmd_search(const search::SearchConfig& cfg, const std::string& format, const std::optional<std::string>& out_file) {
  if (cfg.k < 2 || cfg.max_element < cfg.k) throw DomainError("search: need k >= 2 and max >= k");
  if (cfg.max_element > search::PairPrimeCache::kMaxBound)
    throw DomainError("search: max is limited to " + std::to_string(search::PairPrimeCache::kMaxBound));
  if (cfg.workers < 1) throw DomainError("search: workers must be positive");
  const search::SearchResult r = search::search_min(cfg);
  Output o;
  if (format == "csv") {
    o.text = io::to_csv(r, cfg, true);
    o.stable = o.text;
  } else {
    Json doc = io::to_json(r, cfg);
    o.text = doc.dump() + "\n";
    doc.erase("nodes_visited");
    doc.erase("seconds");
    o.stable = doc.dump() + "\n";
  }
  if (out_file) {
    std::ofstream f(*out_file);
    if (!f) throw ParseError(*out_file + ": cannot write file");
    f << o.text;
  }
  return o;
}

Output cmd_polyprod(const std::string& poly, const std::string& set_a, const std::string& set_b, bool check) {
  const auto f = io::read_poly_file(poly);
  const auto as = io::read_integer_set_file(set_a);
  const auto bs = io::read_integer_set_file(set_b);
  const auto lifted = polyprod::build_vectors(f, as, bs);
  bool identity = true;
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = 0; j < bs.size(); ++j)
      identity = identity && polyprod::dot(lifted.a.vectors[i], lifted.b.vectors[j]) == f(as[i], bs[j]);
  const auto primes = polyprod::product_primes(f, as, bs);
  Json doc{{"n", f.n},
           {"size_a", as.size()},
           {"size_b", bs.size()},
           {"dot_identity", identity},
           {"omega", primes.size()},
           {"primes", primes}};
  int code = identity ? kOk : kBoundFailed;
  if (check) {
    const auto cert = polyprod::check_independence(lifted.b);
    doc["independence"] = Json{{"independent", cert.independent},
                               {"subsets_checked", cert.subsets_checked},
                               {"singular_subset", cert.singular_subset ? Json(*cert.singular_subset) : Json(nullptr)}};
    if (!cert.independent) code = kBoundFailed;
  }
  return single(doc, code);
}

Json echo_params(const CLI::App& sub) {
  Json params = Json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0) continue;
    std::string name = opt->get_name(false, true);
    if (name.empty() || name == "--help" || name == "-h") continue;
    while (!name.empty() && name.front() == '-') name.erase(name.begin());
    const auto& res = opt->results();
    if (opt->get_type_size() == 0)
      params[name] = true;
    else if (res.size() == 1)
      params[name] = res.front();
    else
      params[name] = res;
  }
  return params;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Arithmetic in the Eisenstein integers and prime-support bounds", "eulab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  std::optional<std::string> manifest;
  app.add_option("--manifest", manifest, "Write a run manifest (JSON) to FILE");

  std::optional<std::string> e_arg;
  std::optional<std::int64_t> n_arg;
  auto* factor = app.add_subcommand("factor", "Factor an Eisenstein integer or a rational integer");
  factor->add_option("--e", e_arg, "Eisenstein integer a,b");
  factor->add_option("--n", n_arg, "Rational integer");

  auto* omega = app.add_subcommand("omega-e", "Count distinct prime divisors");
  omega->add_option("--e", e_arg, "Eisenstein integer a,b (non-associated primes)");
  omega->add_option("--n", n_arg, "Rational integer (rational primes)");

  std::string tau_e_arg;
  auto* tau = app.add_subcommand("tau", "Divisor count with unit multiples counted separately");
  tau->add_option("--e", tau_e_arg, "Eisenstein integer a,b")->required();

  std::string rho_arg;
  auto* crho = app.add_subcommand("crho", "Correction constants for a + rho*b");
  crho->add_option("--rho", rho_arg, "rho as a,b")->required();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Random trials of a lower bound; one JSON report per trial");
  verify->add_option("theorem", va.theorem, "t1 | t2 | cor1 | cor2 | rho-minus1 | erdos-turan")
      ->required()
      ->check(CLI::IsMember({"t1", "t2", "cor1", "cor2", "rho-minus1", "erdos-turan"}));
  verify->add_option("--rho", va.rho, "rho as a,b (t2)");
  verify->add_option("--size", va.size, "Set size")->capture_default_str();
  verify->add_option("--range", va.range, "Coordinate range")->capture_default_str();
  verify->add_option("--trials", va.trials, "Number of trials")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed of the first trial; trial i uses seed + i")->capture_default_str();
  verify->add_flag("--general", va.general, "Use the general constant even for rho = 1");

  std::optional<std::string> refine_rho;
  std::string refine_set;
  auto* refine = app.add_subcommand("refine", "Refinement chain for a set of Eisenstein integers");
  refine->add_option("--rho", refine_rho, "rho as a,b; omit for plain sums");
  refine->add_option("--set", refine_set, "Set file")->required();

  search::SearchConfig cfg;
  cfg.primitive_only = false;
  std::string format = "json";
  std::optional<std::string> out_file;
  auto* srch = app.add_subcommand("search", "Minimum prime support of prod (a^2 + ab + b^2) over k-subsets");
  srch->add_option("--k", cfg.k, "Set size")->required();
  srch->add_option("--max", cfg.max_element, "Largest element")->required();
  srch->add_flag("--primitive", cfg.primitive_only, "Only sets with gcd 1");
  srch->add_flag("--all-witnesses", cfg.all_witnesses, "Report every set attaining the minimum");
  srch->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
  srch->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  srch->add_option("--out", out_file, "Also write the output to FILE");

  std::string poly_file, set_a, set_b;
  bool check_independence = false;
  auto* poly = app.add_subcommand("polyprod", "Prime support of prod f(a, b) and the vector lift");
  poly->add_option("--poly", poly_file, "Polynomial JSON {n, r, m}")->required();
  poly->add_option("--set-a", set_a, "Set file for A")->required();
  poly->add_option("--set-b", set_b, "Set file for B")->required();
  poly->add_flag("--check-independence", check_independence, "Check all n-subsets of B' and e_n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  Output o;
  try {
    if (sub == factor)
      o = cmd_factor(e_arg, n_arg);
    else if (sub == omega)
      o = cmd_omega(e_arg, n_arg);
    else if (sub == tau)
      o = cmd_tau(tau_e_arg);
    else if (sub == crho)
      o = cmd_crho(rho_arg);
    else if (sub == verify)
      o = cmd_verify(va);
    else if (sub == refine)
      o = cmd_refine(refine_rho, refine_set);
    else if (sub == srch)
      o = cmd_search(cfg, format, out_file);
    else
      o = cmd_polyprod(poly_file, set_a, set_b, check_independence);
  } catch (const OverflowError& e) {
    err << "error: overflow: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  out << o.text;
  if (o.code == kBoundFailed) err << "bound check failed\n";

  if (manifest) {
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json m{{"subcommand", sub->get_name()},
           {"params", echo_params(*sub)},
           {"seed", sub == verify ? Json(va.seed) : Json(nullptr)},
           {"version", kVersion},
           {"wall_seconds", io::round12(wall)},
           {"output_digest", io::digest(o.stable)}};
    std::ofstream f(*manifest);
    if (!f) {
      err << "error: " << *manifest << ": cannot write manifest\n";
      return kUsage;
    }
    f << m.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace eulab::cli

#include "eulab/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <string>
#include <thread>

#include "eulab/error.hpp"
#include "eulab/factor.hpp"

namespace eulab::search {

namespace {

std::int64_t pair_value(int a, int b) {
  return static_cast<std::int64_t>(a) * a + static_cast<std::int64_t>(a) * b + static_cast<std::int64_t>(b) * b;
}

}  // namespace

PairPrimeCache::PairPrimeCache(int max_element) : max_(max_element) {
  if (max_element < 2 || max_element > kMaxBound)
    throw DomainError("PairPrimeCache: max element must be in [2, " + std::to_string(kMaxBound) + "]");
  const std::size_t pairs = static_cast<std::size_t>(max_) * (max_ - 1) / 2;
  std::vector<std::vector<std::uint64_t>> raw(pairs);
  for (int b = 2; b <= max_; ++b)
    for (int a = 1; a < b; ++a) raw[pair_index(a, b)] = prime_support(pair_value(a, b));

  for (const auto& ps : raw) primes_.insert(primes_.end(), ps.begin(), ps.end());
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());

  offsets_.reserve(pairs + 1);
  offsets_.push_back(0);
  for (const auto& ps : raw) {
    for (auto p : ps)
      indices_.push_back(static_cast<std::uint32_t>(std::lower_bound(primes_.begin(), primes_.end(), p) - primes_.begin()));
    offsets_.push_back(static_cast<std::uint32_t>(indices_.size()));
  }
}

std::size_t PairPrimeCache::pair_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  return static_cast<std::size_t>(b - 1) * (b - 2) / 2 + static_cast<std::size_t>(a - 1);
}

std::span<const std::uint32_t> PairPrimeCache::pair_primes(int a, int b) const {
  if (a == b || a < 1 || b < 1 || a > max_ || b > max_)
    throw DomainError("PairPrimeCache: pair (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
  const std::size_t i = pair_index(a, b);
  return {indices_.data() + offsets_[i], indices_.data() + offsets_[i + 1]};
}

bool PairPrimeCache::validate() const {
  for (int b = 2; b <= max_; ++b) {
    for (int a = 1; a < b; ++a) {
      const std::int64_t value = pair_value(a, b);
      const auto fresh = factor_rational(value);
      const auto cached = pair_primes(a, b);
      if (fresh.factors.size() != cached.size()) return false;
      std::int64_t product = 1;
      for (std::size_t i = 0; i < cached.size(); ++i) {
        const std::uint64_t p = primes_[cached[i]];
        if (fresh.factors[i].p != p) return false;
        for (int e = 0; e < fresh.factors[i].e; ++e) product *= static_cast<std::int64_t>(p);
      }
      if (product != value) return false;
    }
  }
  return true;
}

int omega_of_set(std::span<const int> set, const PairPrimeCache& cache) {
  if (set.size() < 2) throw DomainError("omega_of_set: need at least two elements");
  std::vector<std::uint32_t> all;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const auto ps = cache.pair_primes(set[i], set[j]);
      all.insert(all.end(), ps.begin(), ps.end());
    }
  std::sort(all.begin(), all.end());
  return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

bool is_primitive(std::span<const int> set) {
  int g = 0;
  for (int a : set) g = std::gcd(g, a);
  return g == 1;
}

namespace {

// Depth-first enumeration of increasing k-subsets below one root element,
// maintaining the union of pair primes incrementally.
class SubtreeSearch {
 public:
  SubtreeSearch(const PairPrimeCache& cache, const SearchConfig& cfg) : cache_(cache), cfg_(cfg) {
    elems_.reserve(static_cast<std::size_t>(cfg.k));
  }

  std::uint64_t nodes() const { return nodes_; }

  // Phase 1: shrink the shared incumbent.
  void find_minimum(int root, std::atomic<int>& incumbent) {
    incumbent_ = &incumbent;
    mode_ = Mode::minimize;
    run(root);
  }

  // Phase 2: collect leaves with exactly `minimum` primes.
  std::vector<std::vector<int>> collect(int root, int minimum, bool all) {
    mode_ = Mode::collect;
    minimum_ = minimum;
    stop_after_first_ = !all;
    found_.clear();
    run(root);
    return std::move(found_);
  }

 private:
  enum class Mode { minimize, collect };

  int limit() const {
    if (mode_ == Mode::collect) return minimum_;
    const int inc = incumbent_->load(std::memory_order_relaxed);
    return inc == INT_MAX ? INT_MAX : inc - 1;
  }

  void run(int root) {
    elems_.assign(1, root);
    union_.clear();
    stopped_ = false;
    ++nodes_;
    descend();
  }

  // Adds the primes of pairs (e, c); false if the union exceeds `lim`.
  bool extend(int c, int lim) {
    for (int e : elems_) {
      for (std::uint32_t p : cache_.pair_primes(e, c)) {
        if (std::find(union_.begin(), union_.end(), p) != union_.end()) continue;
        union_.push_back(p);
        if (static_cast<int>(union_.size()) > lim) return false;
      }
    }
    return true;
  }

  void leaf() {
    if (cfg_.primitive_only && !is_primitive(elems_)) return;
    const int value = static_cast<int>(union_.size());
    if (mode_ == Mode::minimize) {
      int cur = incumbent_->load(std::memory_order_relaxed);
      while (value < cur && !incumbent_->compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
      }
    } else if (value == minimum_) {
      found_.push_back(elems_);
      if (stop_after_first_) stopped_ = true;
    }
  }

  void descend() {
    const int depth = static_cast<int>(elems_.size());
    if (depth == cfg_.k) {
      leaf();
      return;
    }
    const int last = cfg_.max_element - (cfg_.k - depth - 1);
    for (int c = elems_.back() + 1; c <= last && !stopped_; ++c) {
      const std::size_t saved = union_.size();
      ++nodes_;
      if (extend(c, limit())) {
        elems_.push_back(c);
        descend();
        elems_.pop_back();
      }
      union_.resize(saved);
    }
  }

  const PairPrimeCache& cache_;
  const SearchConfig& cfg_;
  Mode mode_ = Mode::minimize;
  std::atomic<int>* incumbent_ = nullptr;
  int minimum_ = 0;
  bool stop_after_first_ = false;
  bool stopped_ = false;
  std::vector<int> elems_;
  std::vector<std::uint32_t> union_;
  std::vector<std::vector<int>> found_;
  std::uint64_t nodes_ = 0;
};

// Runs task(root, searcher) for every root in [1, roots] on `workers` threads.
template <typename Task>
std::uint64_t for_each_root(const PairPrimeCache& cache, const SearchConfig& cfg, int roots, Task task) {
  std::atomic<int> next{1};
  std::atomic<std::uint64_t> nodes{0};
  auto worker = [&] {
    SubtreeSearch searcher(cache, cfg);
    for (int root = next.fetch_add(1); root <= roots; root = next.fetch_add(1)) task(root, searcher);
    nodes.fetch_add(searcher.nodes());
  };
  const int n = std::max(1, cfg.workers);
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < n; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  return nodes.load();
}

}  // namespace

SearchResult search_min(const SearchConfig& config) {
  if (config.max_element > PairPrimeCache::kMaxBound)
    throw DomainError("search: max element beyond " + std::to_string(PairPrimeCache::kMaxBound));
  if (config.k < 2 || config.max_element < config.k) throw DomainError("search: need k >= 2 and max >= k");
  const PairPrimeCache cache(config.max_element);
  return search_min(config, cache);
}

SearchResult search_min(const SearchConfig& config, const PairPrimeCache& cache) {
  if (config.k < 2 || config.max_element < config.k) throw DomainError("search: need k >= 2 and max >= k");
  if (config.max_element > cache.max_element()) throw DomainError("search: cache built for a smaller bound");
  if (config.workers < 1) throw DomainError("search: worker count must be positive");
  const auto start = std::chrono::steady_clock::now();
  const int roots = config.max_element - config.k + 1;

  SearchResult result;
  std::atomic<int> incumbent{INT_MAX};
  result.nodes_visited += for_each_root(cache, config, roots, [&](int root, SubtreeSearch& s) {
    s.find_minimum(root, incumbent);
  });
  result.minimum = incumbent.load();

  std::vector<std::vector<std::vector<int>>> per_root(static_cast<std::size_t>(roots) + 1);
  result.nodes_visited += for_each_root(cache, config, roots, [&](int root, SubtreeSearch& s) {
    per_root[static_cast<std::size_t>(root)] = s.collect(root, result.minimum, config.all_witnesses);
  });
  for (auto& ws : per_root) {
    for (auto& w : ws) {
      result.witnesses.push_back(std::move(w));
      if (!config.all_witnesses) break;
    }
    if (!config.all_witnesses && !result.witnesses.empty()) break;
  }
  result.witness_count = result.witnesses.size();
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace eulab::search

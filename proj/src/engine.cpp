#include "fsg/engine.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <new>
#include <string>
#include <thread>
#include <unordered_set>

#include "fsg/error.hpp"

namespace fsg {

namespace {

constexpr int kMaxDefaultFullN = 12;
constexpr std::uint64_t kDefaultMemoryLimit = std::uint64_t{2} << 30;
constexpr std::uint64_t kChunk = std::uint64_t{1} << 16;

// Largest n whose visited set is kept as a dense bitset.
constexpr int kMaxBitsetN = 12;

// Neighbour generation shared by every traversal.
struct Moves {
  int n = 0;
  std::vector<Edge> x_edges;
  std::array<VertexMask, kMaxVertices> y_adj{};

  explicit Moves(const FsInstance& inst) : n(inst.order()), x_edges(inst.x.edges()) {
    for (int v = 0; v < n; ++v) y_adj[v] = inst.y.neighbors(v);
  }

  bool allowed(std::uint8_t l1, std::uint8_t l2) const { return (y_adj[l1] >> l2) & 1U; }
};

// Lock-free disjoint sets. Roots are always the smallest member, so any two
// interleavings of the same unions produce the same partition.
template <class Index>
class ConcurrentUnionFind {
 public:
  explicit ConcurrentUnionFind(std::uint64_t size) : parent_(new std::atomic<Index>[size]) {
    for (std::uint64_t i = 0; i < size; ++i) {
      parent_[i].store(static_cast<Index>(i), std::memory_order_relaxed);
    }
  }

  Index find(Index x) const {
    while (true) {
      Index p = parent_[x].load(std::memory_order_acquire);
      if (p == x) return x;
      const Index gp = parent_[p].load(std::memory_order_acquire);
      if (p != gp) parent_[x].compare_exchange_weak(p, gp, std::memory_order_acq_rel);
      x = gp;
    }
  }

  bool unite(Index a, Index b) {
    while (true) {
      a = find(a);
      b = find(b);
      if (a == b) return false;
      if (a < b) std::swap(a, b);
      Index expected = a;
      if (parent_[a].compare_exchange_strong(expected, b, std::memory_order_acq_rel)) return true;
    }
  }

 private:
  std::unique_ptr<std::atomic<Index>[]> parent_;
};

template <class Index>
struct Enumeration {
  const Moves& moves;
  std::uint64_t total;
  ConcurrentUnionFind<Index> sets;
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> merges{0};
  std::atomic<bool> done{false};
  bool stop_when_connected = false;

  Enumeration(const Moves& m, std::uint64_t states) : moves(m), total(states), sets(states) {}

  // Unions every state in [lo, hi) with its lexicographically larger
  // neighbours; each FS edge is therefore handled exactly once.
  std::uint64_t scan(std::uint64_t lo, std::uint64_t hi) {
    const int n = moves.n;
    std::array<std::uint8_t, kMaxVertices> w{};
    const Permutation start = unrank({lo, n});
    std::copy(start.word().begin(), start.word().end(), w.begin());
    std::uint64_t merged = 0;
    for (std::uint64_t r = lo; r < hi; ++r) {
      for (auto [a, b] : moves.x_edges) {
        if (w[a] < w[b] && moves.allowed(w[a], w[b])) {
          std::swap(w[a], w[b]);
          const std::uint64_t up = rank_word(w.data(), n);
          std::swap(w[a], w[b]);
          if (sets.unite(static_cast<Index>(r), static_cast<Index>(up))) ++merged;
        }
      }
      std::next_permutation(w.begin(), w.begin() + n);
    }
    return merged;
  }

  void work() {
    while (!done.load(std::memory_order_relaxed)) {
      const std::uint64_t lo = next_chunk.fetch_add(kChunk);
      if (lo >= total) return;
      const std::uint64_t merged = scan(lo, std::min(total, lo + kChunk));
      const std::uint64_t so_far = merges.fetch_add(merged) + merged;
      if (stop_when_connected && so_far + 1 >= total) done.store(true);
    }
  }

  void run(int threads) {
    if (threads <= 1) {
      work();
      return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back([this] { work(); });
    for (auto& th : pool) th.join();
  }

  ComponentSummary summarize() const {
    ComponentSummary out;
    out.n = moves.n;
    out.total_states = total;
    std::vector<Index> count(total, 0);
    for (std::uint64_t i = 0; i < total; ++i) ++count[sets.find(static_cast<Index>(i))];
    for (Index c : count) {
      if (c != 0) {
        ++out.sizes[c];
        ++out.num_components;
      }
    }
    return out;
  }
};

void check_enumerable(int n, const EngineConfig& cfg) {
  cfg.validate();
  if (n > cfg.max_full_n) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the full-enumeration cap of " +
                        std::to_string(cfg.max_full_n));
  }
  const std::uint64_t need = full_enumeration_bytes(n);
  if (need > cfg.memory_limit_bytes) {
    throw ResourceError("full enumeration at n = " + std::to_string(n) + " needs " +
                        std::to_string(need) + " bytes, limit is " +
                        std::to_string(cfg.memory_limit_bytes));
  }
}

template <class Index, class Result>
Result enumerate(const FsInstance& inst, const EngineConfig& cfg, bool stop_when_connected,
                 Result (*finish)(const Enumeration<Index>&)) {
  const Moves moves(inst);
  try {
    Enumeration<Index> e(moves, factorial(inst.order()));
    e.stop_when_connected = stop_when_connected;
    e.run(cfg.thread_count);
    return finish(e);
  } catch (const std::bad_alloc&) {
    throw ResourceError("out of memory during full enumeration at n = " +
                        std::to_string(inst.order()));
  }
}

template <class Index>
ComponentSummary summary_of(const Enumeration<Index>& e) {
  auto s = e.summarize();
  std::uint64_t sum = 0;
  for (auto [size, count] : s.sizes) sum += size * count;
  if (sum != s.total_states) throw Error("component sizes do not sum to n!");
  return s;
}

template <class Index>
bool connected_of(const Enumeration<Index>& e) {
  return e.merges.load() + 1 >= e.total;
}

bool fits_32(int n) { return factorial(n) <= std::numeric_limits<std::uint32_t>::max(); }

}  // namespace

FsInstance FsInstance::make(Graph x, Graph y) {
  if (x.order() != y.order()) {
    throw SizeError("X has " + std::to_string(x.order()) + " vertices but Y has " +
                    std::to_string(y.order()));
  }
  if (x.order() < 1) throw SizeError("instances need at least one vertex");
  return FsInstance{std::move(x), std::move(y)};
}

void EngineConfig::validate() const {
  if (max_full_n < 1 || max_full_n > kMaxRankOrder) {
    throw ParameterError("max_full_n must lie in [1, 20]");
  }
  if (thread_count < 1) throw ParameterError("thread_count must be positive");
  if (memory_limit_bytes == 0) throw ParameterError("memory limit must be positive");
  if (max_full_n > kMaxDefaultFullN && memory_limit_bytes <= kDefaultMemoryLimit) {
    throw ParameterError("max_full_n above 12 requires raising the memory limit");
  }
}

std::uint64_t full_enumeration_bytes(int n) {
  const std::uint64_t width = fits_32(n) ? 4 : 8;
  const std::uint64_t states = factorial(n);
  if (states > std::numeric_limits<std::uint64_t>::max() / (2 * width)) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  // parent array plus per-root counters
  return states * 2 * width;
}

void to_json(Json& j, const ComponentSummary& s) {
  Json sizes = Json::object();
  for (auto [size, count] : s.sizes) sizes[std::to_string(size)] = count;
  j = Json{{"n", s.n},
           {"total", s.total_states},
           {"components", s.num_components},
           {"sizes", std::move(sizes)}};
}

std::vector<Permutation> fs_neighbors(const FsInstance& inst, const Permutation& p) {
  if (p.size() != inst.order()) throw SizeError("permutation size does not match the instance");
  const Moves moves(inst);
  std::vector<Permutation> out;
  for (auto [a, b] : moves.x_edges) {
    if (moves.allowed(p.at(a), p.at(b))) out.push_back(swap_positions(p, a, b));
  }
  return out;
}

ComponentSummary fs_components(const FsInstance& inst, const EngineConfig& cfg) {
  check_enumerable(inst.order(), cfg);
  if (fits_32(inst.order())) {
    return enumerate<std::uint32_t, ComponentSummary>(inst, cfg, false, &summary_of);
  }
  return enumerate<std::uint64_t, ComponentSummary>(inst, cfg, false, &summary_of);
}

bool fs_is_connected(const FsInstance& inst, const EngineConfig& cfg) {
  check_enumerable(inst.order(), cfg);
  if (inst.order() == 1) return true;
  // Labels can never leave a component of X.
  if (!is_connected(inst.x)) return false;
  if (fits_32(inst.order())) {
    return enumerate<std::uint32_t, bool>(inst, cfg, true, &connected_of);
  }
  return enumerate<std::uint64_t, bool>(inst, cfg, true, &connected_of);
}

class ReachableSet::Storage {
 public:
  explicit Storage(int n) : n_(n) {
    if (n <= kMaxBitsetN) dense_.assign(factorial(n), false);
  }

  bool insert(std::uint64_t r) {
    if (n_ <= kMaxBitsetN) {
      if (dense_[r]) return false;
      dense_[r] = true;
      ++count_;
      return true;
    }
    if (!sparse_.insert(r).second) return false;
    ++count_;
    return true;
  }

  bool contains(std::uint64_t r) const {
    return n_ <= kMaxBitsetN ? static_cast<bool>(dense_[r]) : sparse_.count(r) > 0;
  }

  int order() const { return n_; }
  std::uint64_t size() const { return count_; }

 private:
  int n_;
  std::uint64_t count_ = 0;
  std::vector<bool> dense_;
  std::unordered_set<std::uint64_t> sparse_;
};

ReachableSet::ReachableSet(std::shared_ptr<const Storage> storage)
    : storage_(std::move(storage)) {}

std::uint64_t ReachableSet::size() const { return storage_->size(); }

bool ReachableSet::contains(const Permutation& p) const {
  if (p.size() != storage_->order()) return false;
  return storage_->contains(rank(p).rank);
}

std::uint64_t search_budget(int n, const EngineConfig& cfg) {
  const std::uint64_t states = factorial(n);
  std::uint64_t fixed = 0;
  std::uint64_t per_state = 48;  // queue entry plus hash node
  if (n <= kMaxBitsetN) {
    fixed = (states + 7) / 8;
    per_state = 8;
  }
  if (fixed >= cfg.memory_limit_bytes) return 0;
  return std::min(states, (cfg.memory_limit_bytes - fixed) / per_state);
}

namespace {

// Breadth-first search from `seed`; stops early when `target` is reached.
std::shared_ptr<ReachableSet::Storage> search(const FsInstance& inst, const Permutation& seed,
                                              const EngineConfig& cfg,
                                              const Permutation* target, bool* found) {
  cfg.validate();
  const int n = inst.order();
  if (seed.size() != n) throw SizeError("permutation size does not match the instance");
  const std::uint64_t budget = search_budget(n, cfg);
  if (budget == 0) throw ResourceError("search budget is zero under the memory limit", 0);

  const Moves moves(inst);
  auto visited = std::make_shared<ReachableSet::Storage>(n);
  const std::uint64_t goal =
      target ? rank(*target).rank : std::numeric_limits<std::uint64_t>::max();

  std::vector<std::uint64_t> queue{rank(seed).rank};
  visited->insert(queue.front());
  if (queue.front() == goal) {
    *found = true;
    return visited;
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Permutation cur = unrank({queue[head], n});
    std::array<std::uint8_t, kMaxVertices> w{};
    std::copy(cur.word().begin(), cur.word().end(), w.begin());
    for (auto [a, b] : moves.x_edges) {
      if (!moves.allowed(w[a], w[b])) continue;
      std::swap(w[a], w[b]);
      const std::uint64_t r = rank_word(w.data(), n);
      std::swap(w[a], w[b]);
      if (!visited->insert(r)) continue;
      if (r == goal) {
        *found = true;
        return visited;
      }
      if (visited->size() > budget) {
        throw ResourceError("search exceeded its budget of " + std::to_string(budget) +
                                " states",
                            visited->size());
      }
      queue.push_back(r);
    }
  }
  return visited;
}

}  // namespace

ReachableSet fs_component_of(const FsInstance& inst, const Permutation& seed,
                             const EngineConfig& cfg) {
  bool found = false;
  return ReachableSet(search(inst, seed, cfg, nullptr, &found));
}

bool fs_same_component(const FsInstance& inst, const Permutation& p, const Permutation& q,
                       const EngineConfig& cfg) {
  if (q.size() != inst.order()) throw SizeError("permutation size does not match the instance");
  bool found = false;
  search(inst, p, cfg, &q, &found);
  return found;
}

}  // namespace fsg

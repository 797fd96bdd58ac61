#pragma once

// Friends-and-strangers graphs FS(X, Y), explored implicitly.
//
// States are permutations sigma with sigma(a) the label (vertex of Y) sitting
// on position a (vertex of X). sigma and phi are adjacent when they differ by
// exchanging the labels on the ends of one X-edge {a, b} whose labels
// {sigma(a), sigma(b)} form a Y-edge. States are identified by their
// lexicographic rank, so no edge list is ever built.

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "fsg/graph.hpp"
#include "fsg/perm.hpp"

namespace fsg {

struct FsInstance {
  Graph x;
  Graph y;

  /// Throws SizeError unless x and y have the same order in [1, 20].
  static FsInstance make(Graph x, Graph y);

  int order() const { return x.order(); }
};

struct EngineConfig {
  /// Largest n accepted by the full union-find enumeration.
  int max_full_n = 11;
  std::uint64_t memory_limit_bytes = std::uint64_t{2} << 30;
  int thread_count = 1;

  /// Throws ParameterError on non-positive values, or max_full_n above 12
  /// without a memory limit raised past the default.
  void validate() const;
};

struct ComponentSummary {
  int n = 0;
  std::uint64_t total_states = 0;
  std::uint64_t num_components = 0;
  /// component size -> number of components of that size
  std::map<std::uint64_t, std::uint64_t> sizes;

  std::uint64_t largest() const { return sizes.empty() ? 0 : sizes.rbegin()->first; }
  bool connected() const { return num_components == 1; }

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// {"n":..., "total":..., "components":..., "sizes": {"size": count}}
void to_json(Json& j, const ComponentSummary& s);

/// Bytes the union-find enumeration needs for an n-vertex instance.
std::uint64_t full_enumeration_bytes(int n);

/// Neighbours of p, one per qualifying X-edge, in X-edge order.
std::vector<Permutation> fs_neighbors(const FsInstance& inst, const Permutation& p);

/// Exact component count and size histogram over all n! states.
/// Throws ResourceError when n exceeds cfg.max_full_n or the memory limit.
ComponentSummary fs_components(const FsInstance& inst, const EngineConfig& cfg);

/// Same preconditions as fs_components; stops as soon as every state has
/// been merged into one component.
bool fs_is_connected(const FsInstance& inst, const EngineConfig& cfg);

/// The states reached by a search from one seed.
class ReachableSet {
 public:
  class Storage;

  explicit ReachableSet(std::shared_ptr<const Storage> storage);

  std::uint64_t size() const;
  bool contains(const Permutation& p) const;

 private:
  std::shared_ptr<const Storage> storage_;
};

/// Most states a single search may visit under cfg.
std::uint64_t search_budget(int n, const EngineConfig& cfg);

/// The component containing `seed`, found by breadth-first search. Throws
/// ResourceError carrying the visited count once search_budget is exceeded.
ReachableSet fs_component_of(const FsInstance& inst, const Permutation& seed,
                             const EngineConfig& cfg);

bool fs_same_component(const FsInstance& inst, const Permutation& p, const Permutation& q,
                       const EngineConfig& cfg);

}  // namespace fsg

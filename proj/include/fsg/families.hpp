#pragma once

// Constructors for the named graph families. Every constructor uses the
// vertex labelling fixed by the family's definition on {1..n}; the returned
// Graph is 0-based as usual, so label k lives at index k-1.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fsg/graph.hpp"

namespace fsg {

/// Leg lengths of a spider, kept non-increasing.
struct SpiderSignature {
  std::vector<int> legs;

  /// Sorts legs non-increasing. Throws ParameterError on an empty list or
  /// a non-positive leg.
  static SpiderSignature of(std::vector<int> legs);

  int order() const;
  int leg_count() const { return static_cast<int>(legs.size()); }
  friend bool operator==(const SpiderSignature&, const SpiderSignature&) = default;
};

struct TadpoleParams {
  int cycle = 3;
  int tail = 0;

  int order() const { return cycle + tail; }
};

/// Legs and cycles meeting only at a shared centre.
struct SpycleSignature {
  std::vector<int> legs;
  std::vector<int> cycles;

  /// Sorts both lists non-increasing and validates them.
  static SpycleSignature of(std::vector<int> legs, std::vector<int> cycles);

  /// 1 + sum(legs) + sum(cycle - 1): each cycle shares the centre.
  int order() const;
};

enum class VertexType { Center, AType, BType, CType, Other };

std::string to_string(VertexType t);
std::string to_string(const SpiderSignature& sig);

Graph path(int n);
Graph cycle(int n);
Graph star(int n);
Graph tadpole(TadpoleParams p);
Graph fruit(int n);
Graph spider(const SpiderSignature& sig);
Graph spycle(const SpycleSignature& sig);
Graph grid(int rows, int cols);

/// 0-based index of the spider centre (label n).
inline int spider_center(const SpiderSignature& sig) { return sig.order() - 1; }

/// Leg-length signature of a spider-shaped tree. Paths are reported with
/// the fewest legs, i.e. Path_n gives (n-1). Graphs on fewer than two
/// vertices are not spiders.
std::optional<SpiderSignature> recognize_spider(const Graph& g);

/// Types every vertex of spider(sig), indexed 0-based. Interior vertices of
/// legs longer than two are Other.
std::vector<VertexType> classify_vertices(const SpiderSignature& sig);

/// All partitions of `total` into positive parts, each non-increasing, in
/// reverse lexicographic order ((total) first).
std::vector<std::vector<int>> partitions(int total);

}  // namespace fsg

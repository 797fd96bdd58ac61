#include "fsg/families.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "fsg/error.hpp"

namespace fsg {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

void require_order(int n) {
  if (n > kMaxVertices) {
    throw SizeError("family needs " + std::to_string(n) + " vertices, limit is " +
                    std::to_string(kMaxVertices));
  }
}

// 1-based edge helper so constructors read like their definitions.
void link(Graph& g, int a, int b) { g.add_edge(a - 1, b - 1); }

}  // namespace

SpiderSignature SpiderSignature::of(std::vector<int> legs) {
  require(!legs.empty(), "a spider needs at least one leg");
  for (int l : legs) require(l >= 1, "spider legs must have positive length");
  std::sort(legs.begin(), legs.end(), std::greater<>());
  return SpiderSignature{std::move(legs)};
}

int SpiderSignature::order() const { return 1 + std::accumulate(legs.begin(), legs.end(), 0); }

SpycleSignature SpycleSignature::of(std::vector<int> legs, std::vector<int> cycles) {
  for (int l : legs) require(l >= 1, "spycle legs must have positive length");
  for (int c : cycles) require(c >= 3, "cycle length must be >= 3");
  std::sort(legs.begin(), legs.end(), std::greater<>());
  std::sort(cycles.begin(), cycles.end(), std::greater<>());
  return SpycleSignature{std::move(legs), std::move(cycles)};
}

int SpycleSignature::order() const {
  int n = 1 + std::accumulate(legs.begin(), legs.end(), 0);
  for (int c : cycles) n += c - 1;
  return n;
}

std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::Center: return "center";
    case VertexType::AType: return "A";
    case VertexType::BType: return "B";
    case VertexType::CType: return "C";
    case VertexType::Other: return "other";
  }
  return "?";
}

std::string to_string(const SpiderSignature& sig) {
  std::string out = "(";
  for (std::size_t i = 0; i < sig.legs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sig.legs[i]);
  }
  return out + ")";
}

Graph path(int n) {
  require(n >= 1, "path needs n >= 1");
  require_order(n);
  Graph g(n);
  for (int k = 1; k < n; ++k) link(g, k, k + 1);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle length must be >= 3");
  Graph g = path(n);
  link(g, n, 1);
  return g;
}

Graph star(int n) {
  require(n >= 2, "star needs n >= 2");
  require_order(n);
  Graph g(n);
  for (int b = 2; b <= n; ++b) link(g, 1, b);
  return g;
}

Graph tadpole(TadpoleParams p) {
  require(p.cycle >= 3, "cycle length must be >= 3");
  require(p.tail >= 0, "tadpole tail must be >= 0");
  const int n = p.order();
  require_order(n);
  Graph g = path(n);
  link(g, 1, p.cycle);
  return g;
}

Graph fruit(int n) {
  require(n >= 4, "fruit needs n >= 4");
  return tadpole({n - 1, 1});
}

Graph spider(const SpiderSignature& sig) {
  const int n = sig.order();
  require_order(n);
  Graph g(n);
  std::vector<bool> starts(n + 1, false);
  int s = 1;
  for (int leg : sig.legs) {
    starts[s] = true;
    link(g, s, n);
    s += leg;
  }
  // Label n-1 always closes the last leg, so the chaining rule stops at n-2.
  for (int m = 1; m <= n - 2; ++m) {
    if (!starts[m + 1]) link(g, m, m + 1);
  }
  return g;
}

Graph spycle(const SpycleSignature& sig) {
  const int n = sig.order();
  require_order(n);
  Graph g(n);
  int next = 1;
  for (int leg : sig.legs) {
    link(g, next, n);
    for (int i = 0; i + 1 < leg; ++i) link(g, next + i, next + i + 1);
    next += leg;
  }
  for (int len : sig.cycles) {
    const int first = next;
    const int last = next + len - 2;
    for (int v = first; v < last; ++v) link(g, v, v + 1);
    link(g, first, n);
    link(g, last, n);
    next = last + 1;
  }
  return g;
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid dimensions must be positive");
  require_order(std::max(rows, cols));
  require_order(rows * cols);
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) g.add_edge(v, v + 1);
      if (r + 1 < rows) g.add_edge(v, v + cols);
    }
  }
  return g;
}

namespace {

// Lengths of the paths hanging off `center`, walking out to each foot.
// Returns the vertices of each leg from the centre outwards.
std::vector<std::vector<int>> legs_from(const Graph& g, int center) {
  std::vector<std::vector<int>> legs;
  for (int first : mask_to_vertices(g.neighbors(center))) {
    std::vector<int> leg{first};
    int prev = center;
    int cur = first;
    while (g.degree(cur) == 2) {
      const VertexMask rest = g.neighbors(cur) & ~(VertexMask{1} << prev);
      prev = cur;
      cur = std::countr_zero(rest);
      leg.push_back(cur);
    }
    legs.push_back(std::move(leg));
  }
  return legs;
}

}  // namespace

std::optional<SpiderSignature> recognize_spider(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;

  int center = -1;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) >= 3) {
      if (center >= 0) return std::nullopt;
      center = v;
    }
  }
  if (center < 0) return SpiderSignature{{n - 1}};

  std::vector<int> lengths;
  for (const auto& leg : legs_from(g, center)) lengths.push_back(static_cast<int>(leg.size()));
  return SpiderSignature::of(std::move(lengths));
}

std::vector<VertexType> classify_vertices(const SpiderSignature& sig) {
  const Graph g = spider(sig);
  const int center = spider_center(sig);
  std::vector<VertexType> types(g.order(), VertexType::Other);
  types[center] = VertexType::Center;
  for (const auto& leg : legs_from(g, center)) {
    if (leg.size() == 1) {
      types[leg[0]] = VertexType::AType;
      continue;
    }
    types[leg.back()] = VertexType::CType;
    if (leg.size() == 2) types[leg[0]] = VertexType::BType;
  }
  return types;
}

std::vector<std::vector<int>> partitions(int total) {
  std::vector<std::vector<int>> out;
  if (total <= 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> build = [&](int left, int cap) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(left, cap); part >= 1; --part) {
      current.push_back(part);
      build(left - part, part);
      current.pop_back();
    }
  };
  build(total, total);
  return out;
}

}  // namespace fsg

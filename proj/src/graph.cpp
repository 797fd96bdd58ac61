#include "fsg/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "fsg/error.hpp"

namespace fsg {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw SizeError("graph order " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxVertices) + "]");
  }
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw RangeError("vertex " + std::to_string(v + 1) + " outside [1, " +
                     std::to_string(n_) + "]");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw RangeError("self-loop at vertex " + std::to_string(u + 1));
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u] &= ~(VertexMask{1} << v);
  adj_[v] &= ~(VertexMask{1} << u);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int total = g.order() + h.order();
  if (total > kMaxVertices) {
    throw SizeError("disjoint union has " + std::to_string(total) + " vertices, limit is " +
                    std::to_string(kMaxVertices));
  }
  Graph out(total);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + g.order(), v + g.order());
  return out;
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw RangeError("cannot delete vertex " + std::to_string(v + 1) + " from a graph on " +
                     std::to_string(g.order()) + " vertices");
  }
  Graph out(g.order() - 1);
  auto shift = [v](int u) { return u < v ? u : u - 1; };
  for (auto [a, b] : g.edges()) {
    if (a != v && b != v) out.add_edge(shift(a), shift(b));
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw RangeError("relabelling has the wrong length");
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(g.order());
  for (int v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

int min_degree(const Graph& g) {
  auto d = degrees(g);
  return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

int max_degree(const Graph& g) {
  auto d = degrees(g);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

VertexMask reachable(const Graph& g, int start, VertexMask allowed) {
  VertexMask seen = VertexMask{1} << start;
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int component_count(const Graph& g, VertexMask allowed) {
  int count = 0;
  VertexMask left = allowed & g.all_vertices();
  while (left != 0) {
    left &= ~reachable(g, std::countr_zero(left), left);
    ++count;
  }
  return count;
}

int component_count(const Graph& g) { return component_count(g, g.all_vertices()); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

VertexMask cut_vertices(const Graph& g) {
  const VertexMask all = g.all_vertices();
  const int base = component_count(g, all);
  VertexMask cuts = 0;
  for (int v = 0; v < g.order(); ++v) {
    const VertexMask without = all & ~(VertexMask{1} << v);
    if (component_count(g, without) > base) cuts |= VertexMask{1} << v;
  }
  return cuts;
}

std::vector<int> mask_to_vertices(VertexMask mask) {
  std::vector<int> out;
  for (; mask != 0; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

namespace {

// Joint colour refinement of g and h: vertex colours of g occupy [0, ng),
// those of h follow. Colour ids are shared so classes are comparable.
std::vector<int> refine_colours(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int total = ng + h.order();
  auto graph_of = [&](int i) -> const Graph& { return i < ng ? g : h; };
  auto local = [&](int i) { return i < ng ? i : i - ng; };

  std::vector<int> colour(total);
  for (int i = 0; i < total; ++i) colour[i] = graph_of(i).degree(local(i));

  int classes = -1;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(total);
    for (int i = 0; i < total; ++i) {
      sig[i].push_back(colour[i]);
      const int offset = i < ng ? 0 : ng;
      std::vector<int> around;
      for (int u : mask_to_vertices(graph_of(i).neighbors(local(i)))) {
        around.push_back(colour[u + offset]);
      }
      std::sort(around.begin(), around.end());
      sig[i].insert(sig[i].end(), around.begin(), around.end());
      ids.emplace(sig[i], 0);
    }
    int next_id = 0;
    for (auto& [key, id] : ids) id = next_id++;
    for (int i = 0; i < total; ++i) colour[i] = ids[sig[i]];
    if (next_id == classes) break;
    classes = next_id;
  }
  return colour;
}

struct IsoSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> colour_g;
  std::vector<int> colour_h;
  std::vector<int> order;
  std::vector<int> map;
  VertexMask used = 0;

  bool consistent(int v, int w, int depth) const {
    for (int i = 0; i < depth; ++i) {
      const int u = order[i];
      if (g.adjacent(v, u) != h.adjacent(w, map[u])) return false;
    }
    return true;
  }

  bool run(int depth) {
    if (depth == static_cast<int>(order.size())) return true;
    const int v = order[depth];
    for (int w = 0; w < h.order(); ++w) {
      if ((used >> w) & 1U) continue;
      if (colour_h[w] != colour_g[v] || !consistent(v, w, depth)) continue;
      map[v] = w;
      used |= VertexMask{1} << w;
      if (run(depth + 1)) return true;
      used &= ~(VertexMask{1} << w);
    }
    return false;
  }
};

// Visits vertices so that each next one has as many already-placed
// neighbours as possible; ties go to the more constrained vertex.
std::vector<int> search_order(const Graph& g, const std::vector<int>& rank_key) {
  std::vector<int> order;
  VertexMask placed = 0;
  for (int step = 0; step < g.order(); ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < g.order(); ++v) {
      if ((placed >> v) & 1U) continue;
      const int links = std::popcount(g.neighbors(v) & placed);
      if (best < 0 || links > best_links ||
          (links == best_links && rank_key[v] < rank_key[best])) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed |= VertexMask{1} << best;
  }
  return order;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  auto dg = degrees(g);
  auto dh = degrees(h);
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  const auto colours = refine_colours(g, h);
  const int n = g.order();
  std::vector<int> cg(colours.begin(), colours.begin() + n);
  std::vector<int> ch(colours.begin() + n, colours.end());
  std::vector<int> hist_g = cg;
  std::vector<int> hist_h = ch;
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return false;

  // Smaller colour classes first.
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<int> key(n);
  for (int v = 0; v < n; ++v) key[v] = class_size[cg[v]] * kMaxVertices + v;

  IsoSearch search{g, h, cg, ch, search_order(g, key), std::vector<int>(n, -1)};
  return search.run(0);
}

namespace {

struct EmbedSearch {
  const Graph& p;
  const Graph& host;
  std::vector<int> order;
  std::vector<int> map;
  VertexMask used = 0;

  bool run(int depth) {
    if (depth == static_cast<int>(order.size())) return true;
    const int v = order[depth];
    VertexMask candidates = host.all_vertices() & ~used;
    for (int i = 0; i < depth; ++i) {
      const int u = order[i];
      if (p.adjacent(v, u)) candidates &= host.neighbors(map[u]);
    }
    const int need = p.degree(v);
    for (; candidates != 0; candidates &= candidates - 1) {
      const int w = std::countr_zero(candidates);
      if (host.degree(w) < need) continue;
      map[v] = w;
      used |= VertexMask{1} << w;
      if (run(depth + 1)) return true;
      used &= ~(VertexMask{1} << w);
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> contains_subgraph(const Graph& pattern, const Graph& host) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) {
    return std::nullopt;
  }
  if (max_degree(pattern) > max_degree(host)) return std::nullopt;

  // High-degree pattern vertices first.
  std::vector<int> key(pattern.order());
  for (int v = 0; v < pattern.order(); ++v) {
    key[v] = (kMaxVertices - pattern.degree(v)) * kMaxVertices + v;
  }
  EmbedSearch search{pattern, host, search_order(pattern, key),
                     std::vector<int>(pattern.order(), -1)};
  if (!search.run(0)) return std::nullopt;
  return IsoWitness{std::move(search.map)};
}

bool is_valid_embedding(const Graph& pattern, const Graph& host, const IsoWitness& w) {
  if (static_cast<int>(w.mapping.size()) != pattern.order()) return false;
  VertexMask seen = 0;
  for (int target : w.mapping) {
    if (target < 0 || target >= host.order() || ((seen >> target) & 1U)) return false;
    seen |= VertexMask{1} << target;
  }
  for (auto [u, v] : pattern.edges()) {
    if (!host.adjacent(w.mapping[u], w.mapping[v])) return false;
  }
  return true;
}

void to_json(Json& j, const Graph& g) {
  auto edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  j = Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

void from_json(const Json& j, Graph& g) {
  Graph out(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    out.add_edge(e.at(0).get<int>() - 1, e.at(1).get<int>() - 1);
  }
  g = out;
}

}  // namespace fsg

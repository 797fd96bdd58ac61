#include "fsg/certificate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "fsg/error.hpp"

namespace fsg {

namespace {

bool is_bridge(const Graph& x, int u, int v) {
  Graph h = x;
  h.remove_edge(u, v);
  return ((reachable(h, u, h.all_vertices()) >> v) & 1U) == 0;
}

}  // namespace

std::vector<std::vector<int>> cut_paths(const Graph& x) {
  const VertexMask cuts = cut_vertices(x);
  auto is_cut = [cuts](int v) { return ((cuts >> v) & 1U) != 0; };

  std::vector<std::vector<int>> found;
  for (int first : mask_to_vertices(cuts)) {
    found.push_back({first});
    for (int u : mask_to_vertices(x.neighbors(first))) {
      std::vector<int> walk{first, u};
      int prev = first;
      int cur = u;
      while (true) {
        if (!is_bridge(x, prev, cur)) break;
        if (is_cut(cur) && cur > first) found.push_back(walk);
        if (x.degree(cur) != 2) break;
        const int next = std::countr_zero(x.neighbors(cur) & ~(VertexMask{1} << prev));
        if (std::find(walk.begin(), walk.end(), next) != walk.end()) break;
        walk.push_back(next);
        prev = cur;
        cur = next;
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    const auto ka = std::make_tuple(a.front(), a.back(), a.size());
    const auto kb = std::make_tuple(b.front(), b.back(), b.size());
    return ka != kb ? ka < kb : a < b;
  });
  return found;
}

std::optional<DisconnectCertificate> find_disconnect_certificate(const FsInstance& inst) {
  const int delta = min_degree(inst.y);
  if (inst.order() >= 2 && !is_connected(inst.x)) {
    return DisconnectCertificate{CertificateKind::DisconnectedX, {}, delta};
  }
  for (auto& p : cut_paths(inst.x)) {
    if (static_cast<int>(p.size()) >= delta) {
      return DisconnectCertificate{CertificateKind::CutPath, std::move(p), delta};
    }
  }
  return std::nullopt;
}

std::optional<DisconnectCertificate> longest_leg_certificate(const SpiderSignature& sig,
                                                             const Graph& y) {
  if (y.order() != sig.order()) {
    throw SizeError("spider has " + std::to_string(sig.order()) + " vertices but Y has " +
                    std::to_string(y.order()));
  }
  if (sig.leg_count() < 2) return std::nullopt;
  const int others = std::accumulate(sig.legs.begin() + 1, sig.legs.end(), 0);
  if (max_degree(complement(y)) != others) return std::nullopt;

  // The longest leg occupies labels 1..legs[0], its foot being the last.
  DisconnectCertificate cert{CertificateKind::CutPath, {spider_center(sig)}, min_degree(y)};
  for (int v = 0; v + 1 < sig.legs.front(); ++v) cert.path.push_back(v);
  if (!is_valid_certificate(FsInstance::make(spider(sig), y), cert)) return std::nullopt;
  return cert;
}

bool is_valid_certificate(const FsInstance& inst, const DisconnectCertificate& cert) {
  const Graph& x = inst.x;
  if (cert.min_deg_y != min_degree(inst.y)) return false;
  if (cert.kind == CertificateKind::DisconnectedX) {
    return x.order() >= 2 && !is_connected(x);
  }
  const auto& p = cert.path;
  if (p.empty() || cert.min_deg_y > cert.d()) return false;
  VertexMask seen = 0;
  for (int v : p) {
    if (v < 0 || v >= x.order() || ((seen >> v) & 1U)) return false;
    seen |= VertexMask{1} << v;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!x.adjacent(p[i], p[i + 1]) || !is_bridge(x, p[i], p[i + 1])) return false;
  }
  const VertexMask cuts = cut_vertices(x);
  if (!((cuts >> p.front()) & 1U) || !((cuts >> p.back()) & 1U)) return false;
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    if (x.degree(p[i]) != 2) return false;
  }
  return true;
}

void to_json(Json& j, const DisconnectCertificate& cert) {
  std::vector<int> labels;
  for (int v : cert.path) labels.push_back(v + 1);
  j = Json{{"kind", cert.kind == CertificateKind::CutPath ? "cut-path" : "disconnected-X"},
           {"path", labels},
           {"d", cert.d()},
           {"min_deg_y", cert.min_deg_y}};
}

}  // namespace fsg

#pragma once

// Disconnectedness witnesses for FS(X, Y).
//
// A cut path is a path x1 ... xd in X (d >= 1, d = 1 meaning a single cut
// vertex) whose ends are cut vertices of X, whose interior vertices have
// degree exactly two and whose edges are all bridges of X. If
// min_degree(Y) <= d, FS(X, Y) is disconnected. Without the bridge
// condition the criterion fails, e.g. on a cut-vertex pair lying on a cycle.
// Finding no certificate says nothing about connectivity.

#include <optional>
#include <vector>

#include "fsg/engine.hpp"
#include "fsg/families.hpp"

namespace fsg {

enum class CertificateKind {
  CutPath,
  /// X itself is disconnected, so labels can never cross between its parts.
  DisconnectedX,
};

struct DisconnectCertificate {
  CertificateKind kind = CertificateKind::CutPath;
  std::vector<int> path;  // 0-based X vertices; empty for DisconnectedX
  int min_deg_y = 0;

  int d() const { return static_cast<int>(path.size()); }
};

/// All cut paths of X in canonical (x1, xd, d) order, each listed once with
/// x1 <= xd.
std::vector<std::vector<int>> cut_paths(const Graph& x);

/// First cut path with d >= min_degree(Y), or the DisconnectedX kind when X
/// is disconnected and has at least two vertices.
std::optional<DisconnectCertificate> find_disconnect_certificate(const FsInstance& inst);

/// When max_degree(complement(y)) equals the sum of all legs but the
/// longest, returns the path running from the centre along the longest leg
/// up to (not including) its foot. Throws SizeError if y has the wrong order.
std::optional<DisconnectCertificate> longest_leg_certificate(const SpiderSignature& sig,
                                                           const Graph& y);

/// Structural re-check of a certificate against its instance.
bool is_valid_certificate(const FsInstance& inst, const DisconnectCertificate& cert);

/// {"kind":"cut-path","path":[...],"d":...,"min_deg_y":...}, 1-based path.
void to_json(Json& j, const DisconnectCertificate& cert);

}  // namespace fsg

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypercop/hypergraph.hpp"

namespace hypercop {

/// A vertex elimination order together with, for every vertex except the
/// last, the cover witnessing that it is a corner at its step.
struct DismantlingCertificate {
  std::vector<std::string> ordering;  // permutation of V(h)
  std::vector<std::string> covers;    // covers[i] covers ordering[i]; size n-1
};

/// Least corner of h in vertex order with its least cover.
std::optional<std::pair<VertexId, VertexId>> find_corner(const Hypergraph& h);

/// Greedily remove the least corner until one vertex remains. Returns the
/// certificate, or nullopt when some intermediate hypergraph has no corner
/// (corner removal is order-independent, so the greedy loop is complete).
std::optional<DismantlingCertificate> dismantling_order(const Hypergraph& h);

/// Replay the certificate: each step only checks the claimed containment
/// N[v_i] ⊆ N[u_i], never re-searches for corners. Structurally malformed
/// certificates raise Error.
bool verify_certificate(const Hypergraph& h, const DismantlingCertificate& cert);

inline bool is_dismantlable(const Hypergraph& h) {
  return dismantling_order(h).has_value();
}

}  // namespace hypercop

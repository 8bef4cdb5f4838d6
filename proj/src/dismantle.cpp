#include "hypercop/dismantle.hpp"

#include <algorithm>

namespace hypercop {

std::optional<std::pair<VertexId, VertexId>> find_corner(const Hypergraph& h) {
  if (h.vertex_count() < 2) throw Error("corner search needs at least two vertices");
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (auto cover = is_corner(h, v)) return std::make_pair(v, *cover);
  }
  return std::nullopt;
}

std::optional<DismantlingCertificate> dismantling_order(const Hypergraph& h) {
  if (!is_connected(h)) throw Error("dismantling requires a connected hypergraph");
  DismantlingCertificate cert;
  Hypergraph work = h;
  while (work.vertex_count() >= 2) {
    auto corner = find_corner(work);
    if (!corner) return std::nullopt;
    cert.ordering.push_back(work.label(corner->first));
    cert.covers.push_back(work.label(corner->second));
    work = dot_delete(work, corner->first);
  }
  cert.ordering.push_back(work.label(0));
  return cert;
}

bool verify_certificate(const Hypergraph& h, const DismantlingCertificate& cert) {
  const int n = h.vertex_count();
  if (static_cast<int>(cert.ordering.size()) != n)
    throw Error("certificate ordering has wrong length");
  if (cert.covers.size() + 1 != cert.ordering.size())
    throw Error("certificate covers have wrong length");
  {
    auto sorted = cert.ordering;
    std::sort(sorted.begin(), sorted.end());
    auto expected = h.labels();
    std::sort(expected.begin(), expected.end());
    if (sorted != expected)
      throw Error("certificate ordering is not a permutation of the vertex set");
  }
  for (std::size_t i = 0; i < cert.covers.size(); ++i) {
    if (cert.covers[i] == cert.ordering[i])
      throw Error("certificate cover equals its vertex");
    auto later = std::find(cert.ordering.begin() + i + 1, cert.ordering.end(),
                           cert.covers[i]);
    if (later == cert.ordering.end())
      throw Error("certificate cover does not appear after its vertex");
  }

  Hypergraph work = h;
  for (std::size_t i = 0; i < cert.covers.size(); ++i) {
    VertexId v = work.vertex(cert.ordering[i]);
    VertexId u = work.vertex(cert.covers[i]);
    const auto& nv = work.closed_neighbors(v);
    const auto& nu = work.closed_neighbors(u);
    if (!std::includes(nu.begin(), nu.end(), nv.begin(), nv.end())) return false;
    work = dot_delete(work, v);
  }
  return true;
}

}  // namespace hypercop

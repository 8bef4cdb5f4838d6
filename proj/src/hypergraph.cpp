#include "hypercop/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace hypercop {

namespace {

void sort_unique(std::vector<VertexId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> labels,
                       std::vector<std::vector<VertexId>> edges)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw Error("hypergraph must have at least one vertex");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("duplicate vertex label");
  }
  const int n = vertex_count();
  for (auto& e : edges) {
    sort_unique(e);
    if (e.empty()) throw Error("empty edge");
    if (e.front() < 0 || e.back() >= n) throw Error("edge references unknown vertex");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  closed_.assign(n, {});
  for (int v = 0; v < n; ++v) closed_[v].push_back(v);
  for (const auto& e : edges_) {
    if (e.size() < 2) continue;  // size-1 edges are irrelevant to adjacency
    for (VertexId a : e)
      for (VertexId b : e)
        if (a != b) closed_[a].push_back(b);
  }
  for (auto& nb : closed_) sort_unique(nb);
}

Hypergraph Hypergraph::from_label_edges(
    std::vector<std::string> labels,
    const std::vector<std::vector<std::string>>& edges) {
  std::unordered_map<std::string, VertexId> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
  std::vector<std::vector<VertexId>> ids;
  ids.reserve(edges.size());
  for (const auto& e : edges) {
    std::vector<VertexId> edge;
    for (const auto& l : e) {
      auto it = index.find(l);
      if (it == index.end()) throw Error("edge references unknown vertex '" + l + "'");
      edge.push_back(it->second);
    }
    ids.push_back(std::move(edge));
  }
  return Hypergraph(std::move(labels), std::move(ids));
}

const std::string& Hypergraph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> Hypergraph::find_vertex(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

VertexId Hypergraph::vertex(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw Error("unknown vertex '" + label + "'");
  return *v;
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= vertex_count()) throw Error("vertex id out of range");
}

std::vector<std::vector<std::string>> Hypergraph::edge_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    std::vector<std::string> le;
    for (VertexId v : e) le.push_back(labels_[v]);
    out.push_back(std::move(le));
  }
  return out;
}

const std::vector<VertexId>& Hypergraph::closed_neighbors(VertexId v) const {
  check_vertex(v);
  return closed_[v];
}

std::vector<VertexId> Hypergraph::open_neighbors(VertexId v) const {
  check_vertex(v);
  std::vector<VertexId> out;
  for (VertexId u : closed_[v])
    if (u != v) out.push_back(u);
  return out;
}

bool Hypergraph::adjacent(VertexId a, VertexId b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return false;
  const auto& nb = closed_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph::Graph(Hypergraph h) : Hypergraph(std::move(h)) {
  for (const auto& e : edges())
    if (e.size() != 2) throw Error("graph edge must have exactly two vertices");
}

Graph two_section(const Hypergraph& h) {
  std::vector<std::vector<VertexId>> pairs;
  for (VertexId v = 0; v < h.vertex_count(); ++v)
    for (VertexId u : h.closed_neighbors(v))
      if (v < u) pairs.push_back({v, u});
  return Graph(Hypergraph(h.labels(), std::move(pairs)));
}

NeighborSet closed_neighborhood(const Hypergraph& h, VertexId x) {
  h.check_vertex(x);
  return NeighborSet{x, h.closed_neighbors(x)};
}

NeighborSet closed_neighborhood(const Hypergraph& h, const std::string& label) {
  return closed_neighborhood(h, h.vertex(label));
}

bool is_connected(const Hypergraph& h) {
  const int n = h.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : h.closed_neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

std::pair<int, int> rank_antirank(const Hypergraph& h) {
  if (h.edge_count() == 0) throw Error("rank undefined: hypergraph has no edges");
  int rank = 0, antirank = h.vertex_count() + 1;
  for (const auto& e : h.edges()) {
    rank = std::max(rank, static_cast<int>(e.size()));
    antirank = std::min(antirank, static_cast<int>(e.size()));
  }
  return {rank, antirank};
}

namespace {

Hypergraph delete_vertex(const Hypergraph& h, VertexId x, bool keep_small_remnants) {
  h.check_vertex(x);
  std::vector<std::string> labels;
  std::vector<VertexId> remap(h.vertex_count(), -1);
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    if (v == x) continue;
    remap[v] = static_cast<VertexId>(labels.size());
    labels.push_back(h.label(v));
  }
  std::vector<std::vector<VertexId>> edges;
  for (const auto& e : h.edges()) {
    const bool has_x = std::binary_search(e.begin(), e.end(), x);
    if (has_x && !keep_small_remnants && e.size() < 3) continue;
    std::vector<VertexId> f;
    for (VertexId v : e)
      if (v != x) f.push_back(remap[v]);
    if (f.empty()) continue;  // weak deletion drops size-0 remnants
    edges.push_back(std::move(f));
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

}  // namespace

Hypergraph dot_delete(const Hypergraph& h, VertexId x) {
  return delete_vertex(h, x, false);
}

Hypergraph dot_delete(const Hypergraph& h, const std::string& label) {
  return dot_delete(h, h.vertex(label));
}

Hypergraph weak_delete(const Hypergraph& h, VertexId x) {
  return delete_vertex(h, x, true);
}

Hypergraph weak_delete(const Hypergraph& h, const std::string& label) {
  return weak_delete(h, h.vertex(label));
}

std::optional<VertexId> is_corner(const Hypergraph& h, VertexId x) {
  h.check_vertex(x);
  if (h.vertex_count() < 2) throw Error("corner test needs at least two vertices");
  const auto& nx = h.closed_neighbors(x);
  for (VertexId u = 0; u < h.vertex_count(); ++u) {
    if (u == x) continue;
    const auto& nu = h.closed_neighbors(u);
    if (std::includes(nu.begin(), nu.end(), nx.begin(), nx.end())) return u;
  }
  return std::nullopt;
}

}  // namespace hypercop

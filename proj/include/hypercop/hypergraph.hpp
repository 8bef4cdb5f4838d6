#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypercop {

using VertexId = int;

/// Domain error for all hypergraph/game operations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable hypergraph: an ordered vertex set (labels) plus a family of
/// vertex subsets of size >= 1, stored deduplicated as sorted id lists.
/// The label order fixes the total vertex order used everywhere for
/// tie-breaking, so all operations are deterministic.
class Hypergraph {
 public:
  Hypergraph(std::vector<std::string> labels,
             std::vector<std::vector<VertexId>> edges);

  /// Build from edges given as label lists.
  static Hypergraph from_label_edges(
      std::vector<std::string> labels,
      const std::vector<std::vector<std::string>>& edges);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const;
  std::optional<VertexId> find_vertex(const std::string& label) const;
  /// Like find_vertex but throws Error on unknown labels.
  VertexId vertex(const std::string& label) const;
  void check_vertex(VertexId v) const;

  /// Edges with sorted members, in lexicographic order.
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }
  std::vector<std::vector<std::string>> edge_labels() const;

  /// Sorted, always contains v itself. Size-1 edges contribute nothing.
  const std::vector<VertexId>& closed_neighbors(VertexId v) const;
  std::vector<VertexId> open_neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;  // a != b sharing an edge

  bool operator==(const Hypergraph& other) const {
    return labels_ == other.labels_ && edges_ == other.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> edges_;
  std::vector<std::vector<VertexId>> closed_;
};

/// A hypergraph whose every edge has exactly two vertices.
class Graph : public Hypergraph {
 public:
  explicit Graph(Hypergraph h);
};

struct NeighborSet {
  VertexId vertex;
  std::vector<VertexId> closed;  // sorted, contains vertex
};

/// The graph on V(h) joining every pair of vertices that share an edge.
Graph two_section(const Hypergraph& h);

NeighborSet closed_neighborhood(const Hypergraph& h, VertexId x);
NeighborSet closed_neighborhood(const Hypergraph& h, const std::string& label);

/// True iff the 2-section is connected; a single vertex is connected.
bool is_connected(const Hypergraph& h);

/// (max edge size, min edge size); errors when h has no edges.
std::pair<int, int> rank_antirank(const Hypergraph& h);

/// Delete x, keeping remnants f \ {x} only of edges f with |f| >= 3.
/// On a graph this coincides with ordinary vertex deletion.
Hypergraph dot_delete(const Hypergraph& h, VertexId x);
Hypergraph dot_delete(const Hypergraph& h, const std::string& label);

/// Delete x, keeping all remnants f \ {x}, including size-1 ones.
Hypergraph weak_delete(const Hypergraph& h, VertexId x);
Hypergraph weak_delete(const Hypergraph& h, const std::string& label);

/// Least u != x with N[x] ⊆ N[u], or nullopt when x is not a corner.
std::optional<VertexId> is_corner(const Hypergraph& h, VertexId x);

}  // namespace hypercop

#pragma once

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hypercop/hypergraph.hpp"

namespace hypercop {

/// Class sizes for the complete multipartite families. `s` is set for the
/// L family only (edges must meet at least s classes).
struct PartitionSpec {
  int r = 2;
  std::optional<int> s;
  std::vector<int> parts;  // nondecreasing, positive
};

/// r-uniform complete multipartite hypergraph: all r-subsets meeting every
/// class in at most one vertex. Requires t >= r >= 2.
Hypergraph complete_multipartite(const PartitionSpec& spec);

/// r-uniform hypergraph of all r-subsets meeting at least s classes.
/// Requires 2 <= s <= t < r and sum of parts >= r.
Hypergraph l_multipartite(const PartitionSpec& spec);

/// Returns the class index (0-based) of each vertex, in vertex order, for
/// hypergraphs produced by the two constructors above.
std::vector<int> multipartite_classes(const PartitionSpec& spec);

/// n-ary Cartesian product. Vertex labels are flat tuples "(a,b,...)";
/// a leading factor that is itself a product contributes its coordinates
/// without extra nesting, so iterated binary products and this constructor
/// label identically.
Hypergraph cartesian_product(const std::vector<Hypergraph>& factors);

struct PrismSpec {
  Hypergraph base;
  int copies = 2;  // n >= 2
  int r = 2;       // transitional edge size >= 2
};

/// n labelled copies of the base ("label@i"), linked between consecutive
/// copies by size-r edges {v@i, v@i+1, u_1..u_{r-2}} with the fillers drawn
/// from the union of the two clones of an edge containing the pivot v.
Hypergraph prism(const PrismSpec& spec);

/// A tree on a labelled vertex set, with path queries.
class HostTree {
 public:
  explicit HostTree(Graph tree);  // validates connected and |E| = |V| - 1

  const Graph& tree() const { return tree_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool is_leaf(VertexId v) const;
  /// Vertices of the unique a..b path, inclusive.
  std::vector<VertexId> path(VertexId a, VertexId b) const;
  /// Least non-leaf vertex; nullopt when every vertex is a leaf (|V| <= 2).
  std::optional<VertexId> least_cut_vertex() const;

 private:
  Graph tree_;
};

/// Validates that every edge induces a subtree of the host and that the
/// result is connected; returns the hypertree on the host's vertex set.
Hypergraph hypertree_from_host(const HostTree& host,
                               const std::vector<std::vector<std::string>>& edges);

/// Random hypertree: uniform labelled host tree (random Pruefer sequence),
/// edge_count random connected subtrees of size 2..max_edge, plus host
/// 2-edges wherever needed for connectivity. Deterministic per generator
/// state; the engine is taken by value so parallel use stays reproducible.
std::pair<Hypergraph, HostTree> random_hypertree(int n, int max_edge,
                                                 int edge_count,
                                                 std::mt19937_64 rng);

enum class BasicKind { Path, Cycle, Complete, Hypercube };

/// Standard graphs as 2-uniform hypergraphs; Hypercube(n) is the n-fold
/// product of a single edge on two vertices.
Hypergraph basic(BasicKind kind, int n);

}  // namespace hypercop

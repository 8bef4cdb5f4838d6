#include "hypercop/construct.hpp"

#include <algorithm>
#include <set>

namespace hypercop {

namespace {

void validate_parts(const PartitionSpec& spec) {
  if (spec.parts.size() < 2) throw Error("partition needs at least two classes");
  int prev = 1;
  for (int p : spec.parts) {
    if (p < 1) throw Error("class sizes must be positive");
    if (p < prev) throw Error("class sizes must be nondecreasing");
    prev = p;
  }
}

std::vector<std::string> partition_labels(const PartitionSpec& spec) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    for (int j = 0; j < spec.parts[i]; ++j)
      labels.push_back(std::to_string(i + 1) + "." + std::to_string(j + 1));
  return labels;
}

/// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Deterministic bounded draw; std::uniform_int_distribution is not
// portable across standard libraries.
int bounded(std::mt19937_64& rng, int m) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(m));
}

}  // namespace

std::vector<int> multipartite_classes(const PartitionSpec& spec) {
  validate_parts(spec);
  std::vector<int> classes;
  for (std::size_t i = 0; i < spec.parts.size(); ++i)
    for (int j = 0; j < spec.parts[i]; ++j) classes.push_back(static_cast<int>(i));
  return classes;
}

Hypergraph complete_multipartite(const PartitionSpec& spec) {
  validate_parts(spec);
  const int t = static_cast<int>(spec.parts.size());
  if (spec.r < 2 || spec.r > t)
    throw Error("complete multipartite family requires t >= r >= 2");

  std::vector<int> first(t);  // first vertex id of each class
  for (int i = 1; i < t; ++i) first[i] = first[i - 1] + spec.parts[i - 1];

  std::vector<std::vector<VertexId>> edges;
  for_each_combination(t, spec.r, [&](const std::vector<int>& classes) {
    // one vertex from each chosen class, odometer over member indices
    std::vector<int> pick(classes.size(), 0);
    while (true) {
      std::vector<VertexId> edge;
      for (std::size_t i = 0; i < classes.size(); ++i)
        edge.push_back(first[classes[i]] + pick[i]);
      edges.push_back(std::move(edge));
      int i = static_cast<int>(pick.size()) - 1;
      while (i >= 0 && pick[i] + 1 == spec.parts[classes[i]]) pick[i--] = 0;
      if (i < 0) break;
      ++pick[i];
    }
  });
  return Hypergraph(partition_labels(spec), std::move(edges));
}

Hypergraph l_multipartite(const PartitionSpec& spec) {
  validate_parts(spec);
  const int t = static_cast<int>(spec.parts.size());
  if (!spec.s) throw Error("L family requires the class-count threshold s");
  const int s = *spec.s;
  if (!(2 <= s && s <= t && t < spec.r))
    throw Error("L family requires 2 <= s <= t < r");
  auto classes = multipartite_classes(spec);
  const int total = static_cast<int>(classes.size());
  if (total < spec.r) throw Error("L family requires at least r vertices in total");

  std::vector<std::vector<VertexId>> edges;
  for_each_combination(total, spec.r, [&](const std::vector<int>& subset) {
    std::set<int> met;
    for (int v : subset) met.insert(classes[v]);
    if (static_cast<int>(met.size()) >= s)
      edges.emplace_back(subset.begin(), subset.end());
  });
  return Hypergraph(partition_labels(spec), std::move(edges));
}

namespace {

// Left-associative tuple flattening: "(a,b)" contributes "a,b" when it is
// the accumulated left coordinate of a further product.
std::string strip_tuple(const std::string& label) {
  if (label.size() >= 2 && label.front() == '(' && label.back() == ')')
    return label.substr(1, label.size() - 2);
  return label;
}

}  // namespace

Hypergraph cartesian_product(const std::vector<Hypergraph>& factors) {
  if (factors.size() < 2) throw Error("product needs at least two factors");
  const int d = static_cast<int>(factors.size());

  std::vector<int> sizes(d), stride(d);
  for (int i = 0; i < d; ++i) sizes[i] = factors[i].vertex_count();
  stride[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * sizes[i + 1];
  const int total = stride[0] * sizes[0];

  std::vector<std::string> labels(total);
  {
    std::vector<int> coord(d, 0);
    for (int v = 0; v < total; ++v) {
      std::string label = "(" + strip_tuple(factors[0].label(coord[0]));
      for (int i = 1; i < d; ++i) label += "," + factors[i].label(coord[i]);
      labels[v] = label + ")";
      int i = d - 1;
      while (i >= 0 && coord[i] + 1 == sizes[i]) coord[i--] = 0;
      if (i >= 0) ++coord[i];
    }
  }

  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < d; ++i) {
    // base offsets: every assignment of the other coordinates
    std::vector<int> offsets{0};
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      std::vector<int> next;
      next.reserve(offsets.size() * sizes[j]);
      for (int off : offsets)
        for (int c = 0; c < sizes[j]; ++c) next.push_back(off + c * stride[j]);
      offsets = std::move(next);
    }
    for (const auto& f : factors[i].edges()) {
      for (int off : offsets) {
        std::vector<VertexId> edge;
        edge.reserve(f.size());
        for (VertexId v : f) edge.push_back(off + v * stride[i]);
        edges.push_back(std::move(edge));
      }
    }
  }
  return Hypergraph(std::move(labels), std::move(edges));
}

Hypergraph prism(const PrismSpec& spec) {
  if (spec.copies < 2) throw Error("prism needs at least two copies");
  if (spec.r < 2) throw Error("prism transitional edge size must be >= 2");
  auto [rank, antirank] = rank_antirank(spec.base);
  (void)antirank;
  if (2 * rank < spec.r)
    throw Error("prism requires rank(base) >= r/2 so transitional edges exist");

  const int nb = spec.base.vertex_count();
  auto id_in_copy = [&](VertexId v, int copy) { return copy * nb + v; };

  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(nb) * spec.copies);
  for (int c = 0; c < spec.copies; ++c)
    for (VertexId v = 0; v < nb; ++v)
      labels.push_back(spec.base.label(v) + "@" + std::to_string(c + 1));

  std::set<std::vector<VertexId>> edges;
  for (int c = 0; c < spec.copies; ++c) {
    for (const auto& e : spec.base.edges()) {
      std::vector<VertexId> copy_edge;
      for (VertexId v : e) copy_edge.push_back(id_in_copy(v, c));
      edges.insert(std::move(copy_edge));
    }
  }
  for (int c = 0; c + 1 < spec.copies; ++c) {
    for (const auto& e : spec.base.edges()) {
      if (2 * static_cast<int>(e.size()) < spec.r) continue;
      for (VertexId v : e) {
        // pool: both clones of e minus the pivot pair
        std::vector<VertexId> pool;
        for (VertexId u : e) {
          if (u != v) pool.push_back(id_in_copy(u, c));
          if (u != v) pool.push_back(id_in_copy(u, c + 1));
        }
        std::sort(pool.begin(), pool.end());
        for_each_combination(static_cast<int>(pool.size()), spec.r - 2,
                             [&](const std::vector<int>& pick) {
                               std::vector<VertexId> edge{id_in_copy(v, c),
                                                          id_in_copy(v, c + 1)};
                               for (int p : pick) edge.push_back(pool[p]);
                               std::sort(edge.begin(), edge.end());
                               edges.insert(std::move(edge));
                             });
      }
    }
  }
  return Hypergraph(std::move(labels),
                    std::vector<std::vector<VertexId>>(edges.begin(), edges.end()));
}

HostTree::HostTree(Graph tree) : tree_(std::move(tree)) {
  if (tree_.edge_count() != tree_.vertex_count() - 1)
    throw Error("host tree must have exactly |V| - 1 edges");
  if (!is_connected(tree_)) throw Error("host tree must be connected");
}

const std::vector<VertexId>& HostTree::neighbors(VertexId v) const {
  return tree_.closed_neighbors(v);  // contains v; callers skip it
}

bool HostTree::is_leaf(VertexId v) const {
  return static_cast<int>(tree_.closed_neighbors(v).size()) == 2;
}

std::vector<VertexId> HostTree::path(VertexId a, VertexId b) const {
  tree_.check_vertex(a);
  tree_.check_vertex(b);
  std::vector<VertexId> parent(tree_.vertex_count(), -1);
  std::vector<VertexId> queue{a};
  parent[a] = a;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    VertexId v = queue[i];
    if (v == b) break;
    for (VertexId u : tree_.closed_neighbors(v)) {
      if (u != v && parent[u] == -1) {
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  std::vector<VertexId> rev;
  for (VertexId v = b; v != a; v = parent[v]) rev.push_back(v);
  rev.push_back(a);
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::optional<VertexId> HostTree::least_cut_vertex() const {
  if (tree_.vertex_count() <= 2) return std::nullopt;
  for (VertexId v = 0; v < tree_.vertex_count(); ++v)
    if (!is_leaf(v)) return v;
  return std::nullopt;
}

Hypergraph hypertree_from_host(const HostTree& host,
                               const std::vector<std::vector<std::string>>& edges) {
  const Graph& t = host.tree();
  for (const auto& e : edges) {
    std::vector<VertexId> ids;
    for (const auto& l : e) ids.push_back(t.vertex(l));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    // connected within the host, restricted to the edge's vertices
    std::vector<char> in_edge(t.vertex_count(), 0), seen(t.vertex_count(), 0);
    for (VertexId v : ids) in_edge[v] = 1;
    std::vector<VertexId> stack{ids.front()};
    seen[ids.front()] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : t.closed_neighbors(v)) {
        if (u != v && in_edge[u] && !seen[u]) {
          seen[u] = 1;
          ++count;
          stack.push_back(u);
        }
      }
    }
    if (count != ids.size()) {
      std::string desc;
      for (const auto& l : e) desc += (desc.empty() ? "" : ",") + l;
      throw Error("edge {" + desc + "} does not induce a subtree of the host");
    }
  }
  Hypergraph result = Hypergraph::from_label_edges(t.labels(), edges);
  if (!is_connected(result)) throw Error("hypertree edges do not connect the vertex set");
  return result;
}

std::pair<Hypergraph, HostTree> random_hypertree(int n, int max_edge,
                                                 int edge_count,
                                                 std::mt19937_64 rng) {
  if (n < 1) throw Error("random hypertree needs n >= 1");
  if (max_edge < 2) throw Error("random hypertree needs max_edge >= 2");
  if (edge_count < 0) throw Error("random hypertree needs edge_count >= 0");

  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  if (n == 1) {
    Hypergraph single(labels, {});
    return {single, HostTree(Graph(single))};
  }

  // host tree from a random Pruefer sequence
  std::vector<std::vector<VertexId>> tree_edges;
  if (n == 2) {
    tree_edges.push_back({0, 1});
  } else {
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = bounded(rng, n);
    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.insert(v);
    for (int x : seq) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      tree_edges.push_back({std::min(leaf, x), std::max(leaf, x)});
      if (--degree[x] == 1) leaves.insert(x);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    tree_edges.push_back({a, b});
  }
  HostTree host(Graph(Hypergraph(labels, tree_edges)));

  std::set<std::vector<VertexId>> edge_set;
  const int cap = std::min(max_edge, n);
  for (int j = 0; j < edge_count; ++j) {
    int size = 2 + bounded(rng, cap - 1);
    std::vector<char> in(n, 0);
    std::vector<VertexId> members{bounded(rng, n)};
    in[members[0]] = 1;
    while (static_cast<int>(members.size()) < size) {
      std::vector<VertexId> frontier;
      for (VertexId v : members)
        for (VertexId u : host.neighbors(v))
          if (u != v && !in[u]) frontier.push_back(u);
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      if (frontier.empty()) break;
      VertexId pick = frontier[bounded(rng, static_cast<int>(frontier.size()))];
      in[pick] = 1;
      members.push_back(pick);
    }
    if (members.size() < 2) continue;
    std::sort(members.begin(), members.end());
    edge_set.insert(members);
  }

  // Every host edge must lie inside some hyperedge, otherwise the result
  // is disconnected; patch with 2-edges.
  for (const auto& te : host.tree().edges()) {
    bool covered = false;
    for (const auto& e : edge_set) {
      if (std::binary_search(e.begin(), e.end(), te[0]) &&
          std::binary_search(e.begin(), e.end(), te[1])) {
        covered = true;
        break;
      }
    }
    if (!covered) edge_set.insert(te);
  }

  Hypergraph result(labels,
                    std::vector<std::vector<VertexId>>(edge_set.begin(), edge_set.end()));
  return {result, host};
}

Hypergraph basic(BasicKind kind, int n) {
  auto number_labels = [](int count) {
    std::vector<std::string> labels;
    for (int i = 1; i <= count; ++i) labels.push_back(std::to_string(i));
    return labels;
  };
  switch (kind) {
    case BasicKind::Path: {
      if (n < 1) throw Error("path needs n >= 1");
      std::vector<std::vector<VertexId>> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return Hypergraph(number_labels(n), std::move(edges));
    }
    case BasicKind::Cycle: {
      if (n < 3) throw Error("cycle needs n >= 3");
      std::vector<std::vector<VertexId>> edges;
      for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      return Hypergraph(number_labels(n), std::move(edges));
    }
    case BasicKind::Complete: {
      if (n < 1) throw Error("complete graph needs n >= 1");
      std::vector<std::vector<VertexId>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
      return Hypergraph(number_labels(n), std::move(edges));
    }
    case BasicKind::Hypercube: {
      if (n < 0) throw Error("hypercube needs dimension >= 0");
      if (n == 0) return Hypergraph(number_labels(1), {});
      Hypergraph k2 = basic(BasicKind::Complete, 2);
      if (n == 1) return k2;
      return cartesian_product(std::vector<Hypergraph>(n, k2));
    }
  }
  throw Error("unknown basic kind");
}

}  // namespace hypercop

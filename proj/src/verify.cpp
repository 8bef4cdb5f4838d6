#include "hypercop/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "hypercop/dismantle.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/strategies.hpp"

namespace hypercop {

bool check_inequality_2(const std::vector<int>& tree_orders,
                        const std::vector<int>& hg_orders) {
  const int p = static_cast<int>(tree_orders.size());
  const int q = static_cast<int>(hg_orders.size());
  if (q < 1) throw Error("at least one hypergraph factor is required");
  if (p == 0 && q == 1) throw Error("the single-factor case (p,q) = (0,1) is excluded");
  for (int t : tree_orders)
    if (t < 2) throw Error("factor orders must be at least 2");
  for (int h : hg_orders)
    if (h < 2) throw Error("factor orders must be at least 2");

  long long neighborhood = 1;
  for (int t : tree_orders) neighborhood += t - 1;
  for (int h : hg_orders) neighborhood += h - 1;
  const long long cops = (p + 1) / 2 + q - 1;
  const long long lhs = cops * neighborhood;
  long long rhs = 1;
  for (int t : tree_orders) rhs *= t;
  for (int h : hg_orders) rhs *= h;
  return lhs < rhs;
}

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int draw(std::uint64_t& state, int m) {
  state = mix64(state);
  return static_cast<int>(state % static_cast<std::uint64_t>(m));
}

std::vector<std::string> number_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Hypergraph> random_connected_hypergraphs(int count, int max_n,
                                                     int max_rank,
                                                     std::uint64_t seed) {
  std::vector<Hypergraph> pool;
  pool.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t state = mix64(seed ^ (0x9e37u + static_cast<std::uint64_t>(i) * 0x85ebca77ULL));
    const int n = 2 + draw(state, max_n - 1);
    const int target = n - 1 + draw(state, n + 1);
    std::set<std::vector<VertexId>> edges;
    for (int j = 0; j < target; ++j) {
      const int size = 2 + draw(state, std::min(max_rank, n) - 1);
      std::set<VertexId> members;
      while (static_cast<int>(members.size()) < size) members.insert(draw(state, n));
      edges.insert(std::vector<VertexId>(members.begin(), members.end()));
    }
    // join components with 2-edges until connected
    while (true) {
      UnionFind uf(n);
      for (const auto& e : edges)
        for (std::size_t j = 1; j < e.size(); ++j) uf.unite(e[0], e[j]);
      const int root = uf.find(0);
      VertexId stray = -1;
      for (VertexId v = 1; v < n && stray < 0; ++v)
        if (uf.find(v) != root) stray = v;
      if (stray < 0) break;
      edges.insert({std::min<VertexId>(0, stray), std::max<VertexId>(0, stray)});
    }
    pool.emplace_back(number_labels(n),
                      std::vector<std::vector<VertexId>>(edges.begin(), edges.end()));
  }
  return pool;
}

std::vector<Hypergraph> random_connected_graphs(int order, int count,
                                                std::uint64_t seed) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < order; ++a)
    for (int b = a + 1; b < order; ++b) pairs.emplace_back(a, b);
  std::vector<Hypergraph> pool;
  pool.reserve(count);
  std::uint64_t state = mix64(seed ^ 0x6a7f0123u);
  while (static_cast<int>(pool.size()) < count) {
    std::vector<std::vector<VertexId>> edges;
    UnionFind uf(order);
    for (const auto& [a, b] : pairs) {
      if (draw(state, 2)) {
        edges.push_back({a, b});
        uf.unite(a, b);
      }
    }
    bool connected = true;
    for (int v = 1; v < order && connected; ++v)
      connected = uf.find(v) == uf.find(0);
    if (connected) pool.emplace_back(number_labels(order), std::move(edges));
  }
  return pool;
}

std::vector<std::pair<Hypergraph, HostTree>> random_hypertrees(int count, int max_n,
                                                               std::uint64_t seed) {
  std::vector<std::pair<Hypergraph, HostTree>> pool;
  pool.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::uint64_t state = mix64(seed ^ (0x7ee5u + static_cast<std::uint64_t>(i) * 0xc2b2ae3dULL));
    const int n = 1 + draw(state, max_n);
    const int max_edge = 2 + draw(state, 3);
    const int edge_count = draw(state, 2 * n + 1);
    pool.push_back(random_hypertree(n, max_edge, edge_count,
                                    std::mt19937_64(mix64(state))));
  }
  return pool;
}

std::vector<Graph> tree_isomorphism_classes(int max_n) {
  std::vector<Graph> classes;
  for (int n = 2; n <= max_n; ++n) {
    std::set<std::vector<std::pair<int, int>>> canonical;
    auto register_tree = [&](std::vector<std::pair<int, int>> edges) {
      // canonical form: the least relabelled sorted edge list
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<std::pair<int, int>> best;
      do {
        auto relabelled = edges;
        for (auto& [a, b] : relabelled) {
          a = perm[a];
          b = perm[b];
          if (a > b) std::swap(a, b);
        }
        std::sort(relabelled.begin(), relabelled.end());
        if (best.empty() || relabelled < best) best = relabelled;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (canonical.insert(best).second) {
        std::vector<std::vector<VertexId>> he;
        for (auto [a, b] : best) he.push_back({a, b});
        classes.emplace_back(Hypergraph(number_labels(n), he));
      }
    };
    if (n == 2) {
      register_tree({{0, 1}});
      continue;
    }
    // all Pruefer sequences
    std::vector<int> seq(n - 2, 0);
    while (true) {
      std::vector<int> degree(n, 1);
      for (int x : seq) ++degree[x];
      std::set<int> leaves;
      for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
      std::vector<std::pair<int, int>> edges;
      for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1) leaves.insert(x);
      }
      int a = *leaves.begin(), b = *std::next(leaves.begin());
      edges.emplace_back(std::min(a, b), std::max(a, b));
      register_tree(std::move(edges));
      int i = n - 3;
      while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
      if (i < 0) break;
      ++seq[i];
    }
  }
  return classes;
}

SuiteId suite_from_string(const std::string& name) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(c)));
  if (upper == "ALL") return SuiteId::All;
  if (upper == "CHARACTERISATION") return SuiteId::Characterisation;
  if (upper == "HYPERTREE") return SuiteId::Hypertree;
  if (upper == "MULTIPARTITE") return SuiteId::Multipartite;
  if (upper == "PRODUCTS") return SuiteId::Products;
  if (upper == "PRISM") return SuiteId::Prism;
  throw Error("unknown suite '" + name + "'");
}

std::string to_string(SuiteId id) {
  switch (id) {
    case SuiteId::All: return "ALL";
    case SuiteId::Characterisation: return "CHARACTERISATION";
    case SuiteId::Hypertree: return "HYPERTREE";
    case SuiteId::Multipartite: return "MULTIPARTITE";
    case SuiteId::Products: return "PRODUCTS";
    case SuiteId::Prism: return "PRISM";
  }
  return "ALL";
}

namespace {

struct CheckDef {
  const char* name;
  const char* claim;
  const char* criterion;
  std::vector<SuiteId> suites;
  std::string expected;
  std::function<std::pair<bool, std::string>(std::uint64_t)> run;
};

std::string show(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "none";
}

Hypergraph single_edge_hypertree(const std::vector<std::string>& labels) {
  std::vector<VertexId> edge(labels.size());
  std::iota(edge.begin(), edge.end(), 0);
  return Hypergraph(labels, {edge});
}

/// dismantlable ⇔ cop-win ⇔ both on the 2-section, counted over instances.
std::pair<long, long> characterisation_scan(const std::vector<Hypergraph>& pool) {
  long instances = 0, violations = 0;
  for (const auto& h : pool) {
    ++instances;
    const bool dism = dismantling_order(h).has_value();
    const bool copwin = is_k_cop_win(h, 1);
    const auto section = two_section(h);
    const bool dism2 = dismantling_order(section).has_value();
    const bool copwin2 = is_k_cop_win(section, 1);
    if (!(dism == copwin && copwin == dism2 && dism2 == copwin2)) ++violations;
  }
  return {instances, violations};
}

std::vector<Hypergraph> all_connected_graphs_up_to(int max_order) {
  std::vector<Hypergraph> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    const std::uint64_t masks = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      std::vector<std::vector<VertexId>> edges;
      UnionFind uf(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask & (1ULL << i)) {
          edges.push_back({pairs[i].first, pairs[i].second});
          uf.unite(pairs[i].first, pairs[i].second);
        }
      }
      bool connected = true;
      for (int v = 1; v < n && connected; ++v) connected = uf.find(v) == uf.find(0);
      if (connected) out.emplace_back(number_labels(n), std::move(edges));
    }
  }
  return out;
}

std::vector<CheckDef> check_definitions() {
  std::vector<CheckDef> defs;

  defs.push_back(CheckDef{
      "characterisation-small-graphs",
      "a connected hypergraph is cop-win iff dismantlable, iff its 2-section "
      "is cop-win, iff its 2-section is dismantlable",
      "1",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = all_connected_graphs_up_to(6);
        auto sampled = random_connected_graphs(7, 1000, seed ^ 0x11u);
        pool.insert(pool.end(), sampled.begin(), sampled.end());
        auto [instances, violations] = characterisation_scan(pool);
        std::ostringstream out;
        out << violations << " violations (orders 1-6 enumerated, order 7 "
            << "sampled 1000; " << instances << " connected graphs)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "characterisation-random-hypergraphs",
      "the cop-win / dismantlable equivalence holds on random connected "
      "hypergraphs of rank at most 4",
      "1",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_connected_hypergraphs(300, 8, 4, seed ^ 0x12u);
        auto [instances, violations] = characterisation_scan(pool);
        std::ostringstream out;
        out << violations << " violations (" << instances << " hypergraphs)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "cop-number-invariant-under-2-section",
      "a connected hypergraph and its 2-section have the same cop number",
      "2",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_connected_hypergraphs(300, 8, 4, seed ^ 0x12u);
        long violations = 0;
        for (const auto& h : pool)
          if (cop_number(h, 3) != cop_number(two_section(h), 3)) ++violations;
        std::ostringstream out;
        out << violations << " violations (300 hypergraphs, max_k = 3)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "hypertrees-are-cop-win",
      "every hypertree has cop number 1, and the host-path strategy captures "
      "an optimal robber within |V| rounds",
      "3",
      {SuiteId::Hypertree},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_hypertrees(200, 10, seed ^ 0x31u);
        long violations = 0;
        for (const auto& [t, host] : pool) {
          if (!is_k_cop_win(t, 1)) {
            ++violations;
            continue;
          }
          auto table = solve_shared(t, 1);
          auto cop = hypertree_cop_strategy(t, host);
          auto robber = extract_strategy(table, Side::Robber);
          auto trace = play_match(t, 1, *cop, *robber,
                                  std::max(1, t.vertex_count()));
          if (!trace.captured || trace.rounds_played > t.vertex_count())
            ++violations;
        }
        std::ostringstream out;
        out << violations << " violations (200 random hypertrees, n <= 10)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "multipartite-cop-numbers",
      "uniform complete multipartite hypergraphs need one cop when the "
      "smallest class is a single vertex, two otherwise; the relaxed family "
      "needs one",
      "4",
      {SuiteId::Multipartite},
      "K3(1,2,2)=1 K2(2,2)=2 K3(2,2,2)=2 L4,2(1,1,2)=1",
      [](std::uint64_t) {
        auto k122 = cop_number(complete_multipartite({3, {}, {1, 2, 2}}));
        auto k22 = cop_number(complete_multipartite({2, {}, {2, 2}}));
        auto k222 = cop_number(complete_multipartite({3, {}, {2, 2, 2}}));
        auto l112 = cop_number(l_multipartite({4, 2, {1, 1, 2}}));
        std::ostringstream out;
        out << "K3(1,2,2)=" << show(k122) << " K2(2,2)=" << show(k22)
            << " K3(2,2,2)=" << show(k222) << " L4,2(1,1,2)=" << show(l112);
        const bool pass = k122 == 1 && k22 == 2 && k222 == 2 && l112 == 1;
        return std::make_pair(pass, out.str());
      }});

  defs.push_back(CheckDef{
      "multipartite-evader-survival",
      "with every class of size two, one robber in the cop's class evades "
      "one cop indefinitely",
      "4",
      {SuiteId::Multipartite},
      "survives 100 rounds on both families",
      [](std::uint64_t) {
        long captured = 0;
        for (PartitionSpec spec : {PartitionSpec{2, {}, {2, 2}},
                                   PartitionSpec{3, {}, {2, 2, 2}}}) {
          auto h = complete_multipartite(spec);
          auto cop = pursuit_strategy(solve_shared(h, 1));
          auto evader = multipartite_robber_evader(spec);
          if (play_match(h, 1, *cop, *evader, 100).captured) ++captured;
        }
        std::ostringstream out;
        out << "captured in " << captured << " of 2 matches";
        return std::make_pair(captured == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "tree-product-cop-numbers",
      "products of d non-trivial trees need ceil((d+1)/2) cops",
      "5",
      {SuiteId::Products},
      "P2xP2=2 P3xP3=2 P2xP2xP2=2",
      [](std::uint64_t) {
        auto p2 = basic(BasicKind::Path, 2);
        auto p3 = basic(BasicKind::Path, 3);
        auto c1 = cop_number(cartesian_product({p2, p2}));
        auto c2 = cop_number(cartesian_product({p3, p3}));
        auto c3 = cop_number(cartesian_product({p2, p2, p2}));
        std::ostringstream out;
        out << "P2xP2=" << show(c1) << " P3xP3=" << show(c2)
            << " P2xP2xP2=" << show(c3);
        return std::make_pair(c1 == 2 && c2 == 2 && c3 == 2, out.str());
      }});

  defs.push_back(CheckDef{
      "hypergraph-product-cop-numbers",
      "products of cop-win factors with at least two vertices each need "
      "exactly two cops",
      "6",
      {SuiteId::Products},
      "T3xT3=2 K2xK3=2 K3xK3=2 Q2xK3=2",
      [](std::uint64_t) {
        auto t3a = single_edge_hypertree({"a", "b", "c"});
        auto t3b = single_edge_hypertree({"x", "y", "z"});
        auto k2 = basic(BasicKind::Complete, 2);
        auto k3 = basic(BasicKind::Complete, 3);
        auto q2 = basic(BasicKind::Hypercube, 2);
        auto c1 = cop_number(cartesian_product({t3a, t3b}));
        auto c2 = cop_number(cartesian_product({k2, k3}));
        auto c3 = cop_number(cartesian_product({k3, k3}));
        auto c4 = cop_number(cartesian_product({q2, k3}));
        std::ostringstream out;
        out << "T3xT3=" << show(c1) << " K2xK3=" << show(c2)
            << " K3xK3=" << show(c3) << " Q2xK3=" << show(c4);
        const bool pass = c1 == 2 && c2 == 2 && c3 == 2 && c4 == 2;
        return std::make_pair(pass, out.str());
      }});

  defs.push_back(CheckDef{
      "product-evader-survival",
      "one robber holding both coordinates away from a single cop survives "
      "on every product of two connected factors",
      "6",
      {SuiteId::Products},
      "survives 100 rounds on all four products",
      [](std::uint64_t) {
        auto t3a = single_edge_hypertree({"a", "b", "c"});
        auto t3b = single_edge_hypertree({"x", "y", "z"});
        auto k2 = basic(BasicKind::Complete, 2);
        auto k3 = basic(BasicKind::Complete, 3);
        auto q2 = basic(BasicKind::Hypercube, 2);
        const std::vector<std::pair<Hypergraph, Hypergraph>> pairs = {
            {t3a, t3b}, {k2, k3}, {k3, k3}, {q2, k3}};
        long captured = 0;
        for (const auto& [g, h] : pairs) {
          auto prod = cartesian_product({g, h});
          auto cop = pursuit_strategy(solve_shared(prod, 1));
          auto evader = product_robber_evader(g, h);
          if (play_match(prod, 1, *cop, *evader, 100).captured) ++captured;
        }
        std::ostringstream out;
        out << "captured in " << captured << " of 4 matches";
        return std::make_pair(captured == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "cartesian-product-size-inequality",
      "too few cops cannot cover a product: the closed-neighbourhood bound "
      "is strictly below the product order whenever every hypergraph factor "
      "has at least three vertices",
      "7",
      {SuiteId::Products},
      "4714 true, 2 sub-minimum points false",
      [](std::uint64_t) {
        long points = 0, wrong = 0;
        std::vector<int> orders = {2, 3, 4};
        // odometer over all order assignments for given (p, q)
        auto each_assignment = [&](int len, auto&& fn) {
          std::vector<int> pick(len, 0);
          while (true) {
            std::vector<int> vals(len);
            for (int i = 0; i < len; ++i) vals[i] = orders[pick[i]];
            fn(vals);
            int i = len - 1;
            while (i >= 0 && pick[i] + 1 == 3) pick[i--] = 0;
            if (i < 0) break;
            ++pick[i];
          }
        };
        for (int p = 0; p <= 4; ++p) {
          for (int q = 1; q <= 3; ++q) {
            if (p == 0 && q == 1) continue;
            each_assignment(p, [&](const std::vector<int>& trees) {
              each_assignment(q, [&](const std::vector<int>& hgs) {
                ++points;
                // the bound only fails when every factor has two vertices:
                // two grid points, both at equality 8 = 8
                const bool all2 = std::all_of(hgs.begin(), hgs.end(),
                                              [](int o) { return o == 2; }) &&
                                  std::all_of(trees.begin(), trees.end(),
                                              [](int o) { return o == 2; });
                const bool excluded =
                    all2 && ((p == 0 && q == 3) || (p == 1 && q == 2));
                const bool expected = !excluded;
                if (check_inequality_2(trees, hgs) != expected) ++wrong;
              });
            });
          }
        }
        std::ostringstream out;
        out << wrong << " mismatches over " << points
            << " grid points (false only at p=0,q=3,orders 2,2,2 and "
            << "p=1,q=2,orders 2,2,2)";
        return std::make_pair(wrong == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "prism-cop-numbers-and-strategies",
      "linking n copies of a base by transitional edges of size r >= 3 "
      "keeps the cop number; with r = 2 it can rise by one",
      "8",
      {SuiteId::Prism},
      "prism(T3,2,3)=1 captured; prism(C4,2,3)=2 evader survives; "
      "prism(T3,2,2)=2; C4xP2=2",
      [](std::uint64_t) {
        std::ostringstream out;
        bool pass = true;
        auto t3 = single_edge_hypertree({"a", "b", "c"});
        auto c4 = basic(BasicKind::Cycle, 4);

        auto p1 = prism({t3, 2, 3});
        auto cp1 = cop_number(p1);
        pass = pass && cp1 == 1;
        auto inner = extract_strategy(solve_shared(t3, 1), Side::Cop);
        auto cop = prism_cop_strategy(t3, 2, 3, inner);
        auto robber = extract_strategy(solve_shared(p1, 1), Side::Robber);
        auto trace = play_match(p1, 1, *cop, *robber, 100);
        pass = pass && trace.captured;
        out << "prism(T3,2,3)=" << show(cp1)
            << (trace.captured ? " captured" : " NOT captured");

        auto p2 = prism({c4, 2, 3});
        auto cp2 = cop_number(p2);
        pass = pass && cp2 == 2;
        auto inner_ev = extract_strategy(solve_shared(c4, 1), Side::Robber);
        auto evader = prism_robber_evader(c4, 2, 3, inner_ev);
        auto chaser = pursuit_strategy(solve_shared(p2, 1));
        auto trace2 = play_match(p2, 1, *chaser, *evader, 100);
        pass = pass && !trace2.captured;
        out << "; prism(C4,2,3)=" << show(cp2)
            << (trace2.captured ? " evader CAUGHT" : " evader survives");

        auto cp3 = cop_number(prism({t3, 2, 2}));
        pass = pass && cp3 == 2;
        auto cp4 = cop_number(cartesian_product({c4, basic(BasicKind::Path, 2)}));
        pass = pass && cp4 == 2;
        out << "; prism(T3,2,2)=" << show(cp3) << "; C4xP2=" << show(cp4);
        return std::make_pair(pass, out.str());
      }});

  defs.push_back(CheckDef{
      "tree-product-forced-move-capture",
      "one cop captures a robber who must move every turn on any product of "
      "two non-trivial trees: pass on even distance sum, else shrink the "
      "larger coordinate distance",
      "9",
      {SuiteId::Products},
      "captured on all 49 ordered tree pairs",
      [](std::uint64_t) {
        auto trees = tree_isomorphism_classes(5);
        long pairs = 0, failures = 0;
        for (const auto& t1 : trees) {
          for (const auto& t2 : trees) {
            ++pairs;
            auto prod = cartesian_product({t1, t2});
            auto table = solve_shared(prod, 1, Variant::ActiveRobber);
            if (!table->is_cop_win()) {
              ++failures;
              continue;
            }
            auto cop = mm_product_cop_strategy(t1, t2, Variant::ActiveRobber);
            auto robber = extract_strategy(table, Side::Robber);
            auto trace = play_match(prod, 1, *cop, *robber,
                                    static_cast<int>(table->state_count()) * 10,
                                    Variant::ActiveRobber);
            if (!trace.captured) ++failures;
          }
        }
        std::ostringstream out;
        out << failures << " failures over " << pairs << " ordered tree pairs";
        return std::make_pair(failures == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "corner-deletion-preserves-connectivity",
      "deleting a corner keeps a connected hypergraph connected",
      "10",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_connected_hypergraphs(300, 8, 4, seed ^ 0x12u);
        long violations = 0, corners = 0;
        for (const auto& h : pool) {
          for (VertexId x = 0; x < h.vertex_count(); ++x) {
            if (!is_corner(h, x)) continue;
            ++corners;
            if (!is_connected(dot_delete(h, x))) ++violations;
          }
        }
        std::ostringstream out;
        out << violations << " violations (" << corners << " corners)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "corner-reduction-preserves-cop-win",
      "a cop-win hypergraph on two or more vertices has a corner, and "
      "deleting any corner preserves cop-win status in both directions",
      "10",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_connected_hypergraphs(300, 8, 4, seed ^ 0x12u);
        long violations = 0;
        for (const auto& h : pool) {
          const bool copwin = is_k_cop_win(h, 1);
          if (copwin && h.vertex_count() >= 2 && !find_corner(h)) ++violations;
          for (VertexId x = 0; x < h.vertex_count(); ++x) {
            if (!is_corner(h, x)) continue;
            if (is_k_cop_win(dot_delete(h, x), 1) != copwin) ++violations;
          }
        }
        std::ostringstream out;
        out << violations << " violations (300 hypergraphs)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "corners-and-deletion-match-2-section",
      "corners coincide with 2-section corners, and both deletion operators "
      "commute with the 2-section",
      "10",
      {SuiteId::Characterisation},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_connected_hypergraphs(300, 8, 4, seed ^ 0x12u);
        long violations = 0;
        for (const auto& h : pool) {
          const auto section = two_section(h);
          for (VertexId x = 0; x < h.vertex_count(); ++x) {
            if (is_corner(h, x).has_value() != is_corner(section, x).has_value())
              ++violations;
            const auto deleted = two_section(dot_delete(h, x));
            if (!(deleted == dot_delete(section, x))) ++violations;
            if (!(two_section(weak_delete(h, x)) == deleted)) ++violations;
          }
        }
        std::ostringstream out;
        out << violations << " violations (300 hypergraphs)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "product-2-section-commutes",
      "the 2-section of a product is the product of the 2-sections",
      "10",
      {SuiteId::Products},
      "0 violations",
      [](std::uint64_t seed) {
        auto left = random_connected_hypergraphs(50, 5, 3, seed ^ 0x44u);
        auto right = random_connected_hypergraphs(50, 5, 3, seed ^ 0x45u);
        long violations = 0;
        for (int i = 0; i < 50; ++i) {
          const auto lhs = two_section(cartesian_product({left[i], right[i]}));
          const auto rhs = cartesian_product(
              {two_section(left[i]), two_section(right[i])});
          if (!(lhs == rhs)) ++violations;
        }
        std::ostringstream out;
        out << violations << " violations (50 random factor pairs)";
        return std::make_pair(violations == 0, out.str());
      }});

  defs.push_back(CheckDef{
      "hypertree-host-structure",
      "within a hypertree, every edge contains the host path between any "
      "two of its vertices, and every host edge lies inside some edge",
      "10",
      {SuiteId::Hypertree},
      "0 violations",
      [](std::uint64_t seed) {
        auto pool = random_hypertrees(200, 10, seed ^ 0x31u);
        long violations = 0;
        for (const auto& [t, host] : pool) {
          for (const auto& e : t.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) {
              for (std::size_t j = i + 1; j < e.size(); ++j) {
                for (VertexId mid : host.path(e[i], e[j])) {
                  if (!std::binary_search(e.begin(), e.end(), mid)) ++violations;
                }
              }
            }
          }
          for (const auto& te : host.tree().edges()) {
            bool covered = false;
            for (const auto& e : t.edges()) {
              if (std::binary_search(e.begin(), e.end(), te[0]) &&
                  std::binary_search(e.begin(), e.end(), te[1])) {
                covered = true;
                break;
              }
            }
            if (!covered) ++violations;
          }
        }
        std::ostringstream out;
        out << violations << " violations (200 hypertrees)";
        return std::make_pair(violations == 0, out.str());
      }});

  return defs;
}

}  // namespace

VerificationReport run_suite(SuiteId id, double budget_seconds, std::uint64_t seed) {
  VerificationReport report;
  report.suite = to_string(id);
  report.seed = seed;
  report.budget_seconds = budget_seconds;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& def : check_definitions()) {
    const bool in_suite =
        id == SuiteId::All ||
        std::find(def.suites.begin(), def.suites.end(), id) != def.suites.end();
    if (!in_suite) continue;
    CheckRecord record;
    record.name = def.name;
    record.claim = def.claim;
    record.criterion = def.criterion;
    record.expected = def.expected;
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (budget_seconds > 0 && elapsed > budget_seconds) {
      record.status = CheckStatus::Skipped;
      record.computed = "skipped: budget exhausted";
      ++report.skipped;
      report.checks.push_back(std::move(record));
      continue;
    }
    const auto check_start = std::chrono::steady_clock::now();
    try {
      auto [pass, computed] = def.run(seed);
      record.status = pass ? CheckStatus::Pass : CheckStatus::Fail;
      record.computed = std::move(computed);
    } catch (const std::exception& e) {
      record.status = CheckStatus::Fail;
      record.computed = std::string("error: ") + e.what();
    }
    record.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  check_start)
            .count();
    if (record.status == CheckStatus::Pass) ++report.passed;
    else ++report.failed;
    report.checks.push_back(std::move(record));
  }
  return report;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["suite"] = report.suite;
  doc["seed"] = report.seed;
  doc["budget_seconds"] = report.budget_seconds;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["name"] = c.name;
    entry["claim"] = c.claim;
    entry["criterion"] = c.criterion;
    entry["expected"] = c.expected;
    entry["computed"] = c.computed;
    entry["status"] = c.status == CheckStatus::Pass    ? "pass"
                      : c.status == CheckStatus::Fail ? "fail"
                                                      : "skipped";
    entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  doc["summary"] = {{"passed", report.passed},
                    {"failed", report.failed},
                    {"skipped", report.skipped}};
  return doc.dump(2) + "\n";
}

std::string report_to_markdown(const VerificationReport& report) {
  std::ostringstream out;
  out << "# Verification report: " << report.suite << "\n\n";
  out << "seed " << report.seed << ", budget "
      << report.budget_seconds << " s — " << report.passed << " passed, "
      << report.failed << " failed, " << report.skipped << " skipped\n\n";
  out << "| status | check | criterion | computed | ms |\n";
  out << "|---|---|---|---|---|\n";
  for (const auto& c : report.checks) {
    const char* status = c.status == CheckStatus::Pass    ? "PASS"
                         : c.status == CheckStatus::Fail ? "FAIL"
                                                         : "SKIP";
    out << "| " << status << " | " << c.name << " | " << c.criterion << " | "
        << c.computed << " | " << static_cast<long>(c.elapsed_ms) << " |\n";
  }
  return out.str();
}

}  // namespace hypercop

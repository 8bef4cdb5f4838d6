#include <map>
#include <set>

#include "doctest.h"
#include "hypercop/construct.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/verify.hpp"
#include "test_util.hpp"

using namespace hypercop;
using testutil::make;
using testutil::nums;

namespace {

// independent enumeration: all r-subsets meeting each class at most once
long count_transversal_edges(const PartitionSpec& spec) {
  auto classes = multipartite_classes(spec);
  const int n = static_cast<int>(classes.size());
  long count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != spec.r) continue;
    std::map<int, int> per_class;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) ++per_class[classes[v]];
    bool ok = true;
    for (auto [cls, cnt] : per_class) ok = ok && cnt <= 1;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("complete multipartite family") {
  auto k22 = complete_multipartite({2, {}, {2, 2}});
  CHECK(k22.vertex_count() == 4);
  CHECK(k22.edge_count() == 4);  // isomorphic to a 4-cycle
  CHECK(cop_number(k22) == 2);

  CHECK(complete_multipartite({3, {}, {1, 2, 2}}).edge_count() == 4);
  CHECK(complete_multipartite({3, {}, {2, 2, 2}}).edge_count() == 8);

  CHECK_THROWS_AS(complete_multipartite({3, {}, {2, 2}}), Error);   // r > t
  CHECK_THROWS_AS(complete_multipartite({2, {}, {2, 1}}), Error);   // not sorted
  CHECK_THROWS_AS(complete_multipartite({2, {}, {3}}), Error);      // t < 2
}

TEST_CASE("complete multipartite edge counts match brute enumeration") {
  const std::vector<PartitionSpec> specs = {
      {2, {}, {1, 2}},      {2, {}, {2, 3}},    {3, {}, {1, 1, 2}},
      {3, {}, {2, 2, 2}},   {3, {}, {1, 2, 3}}, {4, {}, {1, 1, 2, 2}},
      {2, {}, {2, 2, 2}},   {3, {}, {3, 3, 3}},
  };
  for (const auto& spec : specs)
    CHECK(complete_multipartite(spec).edge_count() == count_transversal_edges(spec));
}

TEST_CASE("relaxed multipartite family") {
  auto l = l_multipartite({4, 2, {1, 1, 2}});
  CHECK(l.edge_count() == 1);
  CHECK(l.edges().front().size() == 4);

  // enumeration: of the five 4-subsets of {a | b,c | d,e}, only the one
  // omitting the singleton class meets fewer than 3 classes
  CHECK(l_multipartite({4, 3, {1, 2, 2}}).edge_count() == 4);

  CHECK_THROWS_AS(l_multipartite({4, 2, {1, 1, 1}}), Error);   // too few vertices
  CHECK_THROWS_AS(l_multipartite({3, 2, {1, 1, 2}}), Error);   // needs t < r
  CHECK_THROWS_AS(l_multipartite({2, 2, {2, 2}}), Error);      // needs t < r
  CHECK_THROWS_AS(l_multipartite({4, {}, {1, 1, 2}}), Error);  // missing s
}

TEST_CASE("cartesian product") {
  auto k2 = basic(BasicKind::Complete, 2);
  auto c4 = cartesian_product({k2, k2});
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  for (VertexId v = 0; v < 4; ++v)
    CHECK(c4.closed_neighbors(v).size() == 3);  // 2-regular

  auto t3a = make({"a", "b", "c"}, {{"a", "b", "c"}});
  auto t3b = make({"x", "y", "z"}, {{"x", "y", "z"}});
  auto prod = cartesian_product({t3a, t3b});
  CHECK(prod.vertex_count() == 9);
  CHECK(prod.edge_count() == 6);
  for (const auto& e : prod.edges()) CHECK(e.size() == 3);
  CHECK(prod.label(0) == "(a,x)");

  CHECK_THROWS_AS(cartesian_product({k2}), Error);
}

TEST_CASE("iterated binary products flatten to the n-ary labelling") {
  auto k2 = basic(BasicKind::Complete, 2);
  auto k3 = basic(BasicKind::Complete, 3);
  auto left = cartesian_product({cartesian_product({k2, k2}), k3});
  auto nary = cartesian_product({k2, k2, k3});
  CHECK(left == nary);
  CHECK(nary.label(0) == "(1,1,1)");
}

TEST_CASE("product 2-sections commute") {
  auto left = random_connected_hypergraphs(20, 5, 3, 31001u);
  auto right = random_connected_hypergraphs(20, 5, 3, 31002u);
  for (int i = 0; i < 20; ++i) {
    CHECK(two_section(cartesian_product({left[i], right[i]})) ==
          cartesian_product({two_section(left[i]), two_section(right[i])}));
  }
}

TEST_CASE("prism construction") {
  auto t3 = make({"a", "b", "c"}, {{"a", "b", "c"}});
  auto p = prism({t3, 2, 3});
  CHECK(p.vertex_count() == 6);
  // independent count: 2 copy edges, plus per pivot vertex the 1-element
  // fillers from the 4 non-pivot clone vertices: 3 * 4 = 12
  int transitional = 0;
  for (const auto& e : p.edges()) {
    std::set<char> copies;
    for (VertexId v : e) copies.insert(p.label(v).back());
    if (copies.size() == 2) ++transitional;
  }
  CHECK(transitional == 12);
  CHECK(p.edge_count() == 14);
  CHECK(is_connected(p));
  CHECK(p.find_vertex("a@1").has_value());

  CHECK_THROWS_AS(prism({t3, 1, 3}), Error);
  CHECK_THROWS_AS(prism({t3, 2, 1}), Error);
  CHECK_THROWS_AS(prism({t3, 2, 7}), Error);  // rank too small for r
}

TEST_CASE("prisms over connected bases stay connected") {
  auto pool = random_connected_hypergraphs(15, 5, 4, 31003u);
  for (const auto& base : pool) {
    auto [rank, antirank] = rank_antirank(base);
    (void)antirank;
    for (int r = 2; r <= 2 * rank && r <= 5; ++r)
      CHECK(is_connected(prism({base, 3, r})));
  }
}

TEST_CASE("prism with pair transitional edges is the product with a path") {
  auto c4 = basic(BasicKind::Cycle, 4);
  for (int copies : {2, 3}) {
    auto p = prism({c4, copies, 2});
    auto prod = cartesian_product({c4, basic(BasicKind::Path, copies)});
    // relabel v@i <-> (v,i); both use copy-major vertex ids
    REQUIRE(p.vertex_count() == prod.vertex_count());
    std::map<std::string, std::string> relabel;
    for (VertexId v = 0; v < c4.vertex_count(); ++v)
      for (int i = 1; i <= copies; ++i)
        relabel["(" + c4.label(v) + "," + std::to_string(i) + ")"] =
            c4.label(v) + "@" + std::to_string(i);
    std::set<std::set<std::string>> prod_edges, prism_edges;
    for (const auto& e : prod.edge_labels()) {
      std::set<std::string> s;
      for (const auto& l : e) s.insert(relabel.at(l));
      prod_edges.insert(std::move(s));
    }
    for (const auto& e : p.edge_labels())
      prism_edges.insert(std::set<std::string>(e.begin(), e.end()));
    CHECK(prod_edges == prism_edges);
  }
}

TEST_CASE("hypertree_from_host") {
  auto path5 = Graph(basic(BasicKind::Path, 5));
  HostTree host(path5);
  auto t = hypertree_from_host(host, {{"1", "2", "3"}, {"3", "4", "5"}});
  CHECK(t.edge_count() == 2);

  HostTree path3{Graph(basic(BasicKind::Path, 3))};
  try {
    hypertree_from_host(path3, {{"1", "3"}});
    FAIL("expected an error naming the offending edge");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("1,3") != std::string::npos);
  }

  auto star = make({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
  HostTree star_host{Graph(star)};
  CHECK(hypertree_from_host(star_host, {{"c", "x", "y"}, {"c", "z"}}).edge_count() == 2);

  // edges must connect the whole vertex set
  CHECK_THROWS_AS(hypertree_from_host(path3, {{"1", "2"}}), Error);
}

TEST_CASE("random_hypertree") {
  auto [single, single_host] = random_hypertree(1, 2, 3, std::mt19937_64(1));
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  for (std::uint64_t seed : {1u, 7u, 42u, 1234u}) {
    auto [t, host] = random_hypertree(10, 4, 6, std::mt19937_64(seed));
    CHECK(is_connected(t));
    // round-trip: the emitted host certifies the emitted hypertree
    CHECK(hypertree_from_host(host, t.edge_labels()) == t);
  }

  auto [t42, host42] = random_hypertree(10, 4, 6, std::mt19937_64(42));
  CHECK(cop_number(t42) == 1);

  // determinism per generator state
  auto a = random_hypertree(9, 3, 5, std::mt19937_64(5));
  auto b = random_hypertree(9, 3, 5, std::mt19937_64(5));
  CHECK(a.first == b.first);

  CHECK_THROWS_AS(random_hypertree(0, 2, 1, std::mt19937_64(1)), Error);
  CHECK_THROWS_AS(random_hypertree(3, 1, 1, std::mt19937_64(1)), Error);
}

TEST_CASE("basic families") {
  auto c4 = basic(BasicKind::Cycle, 4);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);

  auto q3 = basic(BasicKind::Hypercube, 3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);

  auto p1 = basic(BasicKind::Path, 1);
  CHECK(p1.vertex_count() == 1);
  CHECK(p1.edge_count() == 0);

  CHECK(basic(BasicKind::Hypercube, 0).vertex_count() == 1);
  CHECK(basic(BasicKind::Complete, 4).edge_count() == 6);

  CHECK_THROWS_AS(basic(BasicKind::Cycle, 2), Error);
  CHECK_THROWS_AS(basic(BasicKind::Path, 0), Error);
  CHECK_THROWS_AS(basic(BasicKind::Hypercube, -1), Error);
}

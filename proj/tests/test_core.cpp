#include <algorithm>

#include "doctest.h"
#include "hypercop/hypergraph.hpp"
#include "hypercop/verify.hpp"
#include "test_util.hpp"

using namespace hypercop;
using testutil::make;
using testutil::nums;

namespace {

Hypergraph c4() { return make(nums(4), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}}); }

std::vector<std::string> labels_of(const Hypergraph& h, const std::vector<VertexId>& ids) {
  std::vector<std::string> out;
  for (VertexId v : ids) out.push_back(h.label(v));
  return out;
}

}  // namespace

TEST_CASE("hypergraph construction validates its invariants") {
  CHECK_THROWS_AS(Hypergraph({}, {}), Error);
  CHECK_THROWS_AS(make({"1", "1"}, {}), Error);
  CHECK_THROWS_AS(Hypergraph(nums(2), {{0, 5}}), Error);
  CHECK_THROWS_AS(Hypergraph(nums(2), {{}}), Error);
  // duplicate edges merge; members are a set
  Hypergraph h(nums(3), {{0, 1}, {1, 0}, {2, 2, 1}});
  CHECK(h.edge_count() == 2);
}

TEST_CASE("two_section") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  auto g = two_section(t);
  CHECK(g.edge_count() == 3);
  CHECK(g.labels() == t.labels());

  // a graph is a fixed point
  auto graph = c4();
  CHECK(two_section(graph) == graph);

  auto h = make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}});
  auto s = two_section(h);
  std::vector<std::vector<VertexId>> expected = {{0, 1}, {0, 2}, {1, 2},
                                                 {2, 3}, {2, 4}, {3, 4}};
  CHECK(s.edges() == expected);

  // idempotent
  CHECK(two_section(s) == s);
}

TEST_CASE("closed_neighborhood") {
  auto h = make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}});
  auto nb = closed_neighborhood(h, std::string("3"));
  CHECK(labels_of(h, nb.closed) == nums(5));

  auto cyc = c4();
  auto nb1 = closed_neighborhood(cyc, std::string("1"));
  CHECK(labels_of(cyc, nb1.closed) == std::vector<std::string>{"1", "2", "4"});

  auto singleton = make({"1"}, {{"1"}});
  auto nbs = closed_neighborhood(singleton, std::string("1"));
  CHECK(nbs.closed == std::vector<VertexId>{0});

  CHECK_THROWS_AS(closed_neighborhood(cyc, std::string("9")), Error);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}})));
  CHECK_FALSE(is_connected(make(nums(4), {{"1", "2"}, {"3", "4"}})));
  CHECK(is_connected(make({"1"}, {})));
}

TEST_CASE("rank_antirank") {
  CHECK(rank_antirank(make(nums(4), {{"1", "2", "3"}, {"3", "4"}})) ==
        std::pair<int, int>{3, 2});
  CHECK(rank_antirank(make(nums(3), {{"1", "2"}, {"2", "3"}, {"1", "3"}})) ==
        std::pair<int, int>{2, 2});
  CHECK(rank_antirank(make(nums(4), {{"1", "2", "3", "4"}})) ==
        std::pair<int, int>{4, 4});
  CHECK_THROWS_AS(rank_antirank(make(nums(2), {})), Error);
}

TEST_CASE("dot_delete") {
  auto h = make(nums(3), {{"1", "2"}, {"1", "2", "3"}});
  auto d1 = dot_delete(h, std::string("1"));
  CHECK(d1.labels() == std::vector<std::string>{"2", "3"});
  CHECK(d1.edges() == std::vector<std::vector<VertexId>>{{0, 1}});

  auto d3 = dot_delete(h, std::string("3"));
  CHECK(d3.labels() == std::vector<std::string>{"1", "2"});
  CHECK(d3.edges() == std::vector<std::vector<VertexId>>{{0, 1}});

  // on a graph this is ordinary vertex deletion
  auto g = c4();
  auto gd = dot_delete(g, std::string("1"));
  CHECK(gd == make({"2", "3", "4"}, {{"2", "3"}, {"3", "4"}}));

  CHECK_THROWS_AS(dot_delete(g, std::string("9")), Error);
}

TEST_CASE("weak_delete") {
  auto h = make(nums(4), {{"1", "2"}, {"1", "3", "4"}});
  auto w = weak_delete(h, std::string("1"));
  CHECK(w.labels() == std::vector<std::string>{"2", "3", "4"});
  CHECK(w.edges() == std::vector<std::vector<VertexId>>{{0}, {1, 2}});

  auto t = make(nums(3), {{"1", "2", "3"}});
  CHECK(weak_delete(t, std::string("1")) == dot_delete(t, std::string("1")));

  auto e = make(nums(2), {{"1", "2"}});
  auto we = weak_delete(e, std::string("2"));
  CHECK(we.labels() == std::vector<std::string>{"1"});
  CHECK(we.edges() == std::vector<std::vector<VertexId>>{{0}});
}

TEST_CASE("is_corner") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  CHECK(is_corner(t, 0) == 1);  // least cover is vertex "2"

  // exhaustive oracle: no containment holds between distinct closed
  // neighbourhoods of a 4-cycle
  auto cyc = c4();
  for (VertexId x = 0; x < 4; ++x) {
    for (VertexId u = 0; u < 4; ++u) {
      if (u == x) continue;
      const auto& nx = cyc.closed_neighbors(x);
      const auto& nu = cyc.closed_neighbors(u);
      CHECK_FALSE(std::includes(nu.begin(), nu.end(), nx.begin(), nx.end()));
    }
    CHECK_FALSE(is_corner(cyc, x).has_value());
  }

  auto h = make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}});
  CHECK(is_corner(h, 0) == 1);

  CHECK_THROWS_AS(is_corner(make({"1"}, {}), 0), Error);
  CHECK_THROWS_AS(is_corner(cyc, 9), Error);
}

TEST_CASE("neighbourhoods, corners and deletions agree with the 2-section") {
  auto pool = random_connected_hypergraphs(40, 7, 4, 20240817u);
  for (const auto& h : pool) {
    auto section = two_section(h);
    CHECK(two_section(section) == section);
    for (VertexId x = 0; x < h.vertex_count(); ++x) {
      CHECK(closed_neighborhood(h, x).closed ==
            closed_neighborhood(section, x).closed);
      CHECK(is_corner(h, x).has_value() == is_corner(section, x).has_value());
      auto deleted = two_section(dot_delete(h, x));
      CHECK(deleted == dot_delete(section, x));
      CHECK(two_section(weak_delete(h, x)) == deleted);
      if (is_corner(h, x)) CHECK(is_connected(dot_delete(h, x)));
    }
  }
}

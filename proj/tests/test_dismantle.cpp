#include "doctest.h"
#include "hypercop/dismantle.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/verify.hpp"
#include "test_util.hpp"

using namespace hypercop;
using testutil::make;
using testutil::nums;

namespace {

Hypergraph c4() { return make(nums(4), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}}); }

// try every corner at every step; complete search over corner orderings
bool dismantlable_backtracking(const Hypergraph& h) {
  if (h.vertex_count() == 1) return true;
  for (VertexId x = 0; x < h.vertex_count(); ++x) {
    if (!is_corner(h, x)) continue;
    if (dismantlable_backtracking(dot_delete(h, x))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("find_corner") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  CHECK(find_corner(t) == std::pair<VertexId, VertexId>{0, 1});

  CHECK_FALSE(find_corner(c4()).has_value());

  auto pendant = make(nums(5), {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}, {"1", "5"}});
  CHECK(find_corner(pendant) == std::pair<VertexId, VertexId>{4, 0});

  CHECK_THROWS_AS(find_corner(make({"1"}, {})), Error);
}

TEST_CASE("dismantling_order") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  auto cert = dismantling_order(t);
  REQUIRE(cert.has_value());
  CHECK(cert->ordering == std::vector<std::string>{"1", "2", "3"});
  CHECK(cert->covers == std::vector<std::string>{"2", "3"});

  CHECK_FALSE(dismantling_order(c4()).has_value());

  auto hypertree = make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}});
  CHECK(dismantling_order(hypertree).has_value());

  CHECK(dismantling_order(make({"1"}, {}))->ordering == std::vector<std::string>{"1"});

  CHECK_THROWS_AS(dismantling_order(make(nums(4), {{"1", "2"}, {"3", "4"}})), Error);
}

TEST_CASE("verify_certificate") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  auto cert = dismantling_order(t);
  REQUIRE(cert.has_value());
  CHECK(verify_certificate(t, *cert));

  // a different valid cover assignment is accepted
  DismantlingCertificate alt{{"1", "2", "3"}, {"3", "3"}};
  CHECK(verify_certificate(t, alt));

  // any structurally well-formed ordering fails on a hypergraph without corners
  DismantlingCertificate bad{{"1", "2", "3", "4"}, {"2", "3", "4"}};
  CHECK_FALSE(verify_certificate(c4(), bad));

  CHECK_THROWS_AS(verify_certificate(t, DismantlingCertificate{{"1", "2"}, {"2"}}),
                  Error);
  CHECK_THROWS_AS(
      verify_certificate(t, DismantlingCertificate{{"1", "1", "3"}, {"2", "3"}}),
      Error);
  CHECK_THROWS_AS(
      verify_certificate(t, DismantlingCertificate{{"1", "2", "3"}, {"1", "3"}}),
      Error);
  // cover must appear after its vertex
  CHECK_THROWS_AS(
      verify_certificate(t, DismantlingCertificate{{"2", "1", "3"}, {"3", "2"}}),
      Error);
}

TEST_CASE("emitted certificates always verify") {
  auto pool = random_connected_hypergraphs(60, 8, 4, 77001u);
  for (const auto& h : pool) {
    auto cert = dismantling_order(h);
    if (cert) CHECK(verify_certificate(h, *cert));
  }
}

TEST_CASE("greedy least-corner elimination is complete") {
  auto pool = random_connected_hypergraphs(60, 6, 4, 77002u);
  for (const auto& h : pool)
    CHECK(dismantling_order(h).has_value() == dismantlable_backtracking(h));
}

TEST_CASE("dismantlability characterises one-cop capture") {
  auto pool = random_connected_hypergraphs(40, 7, 4, 77003u);
  for (const auto& h : pool) {
    const bool dism = dismantling_order(h).has_value();
    CHECK(dism == is_k_cop_win(h, 1));
    CHECK(dism == dismantling_order(two_section(h)).has_value());
  }
}

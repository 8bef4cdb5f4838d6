#include "doctest.h"
#include "hypercop/construct.hpp"
#include "hypercop/dismantle.hpp"
#include "hypercop/io.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/verify.hpp"
#include "test_util.hpp"

using namespace hypercop;
using testutil::make;
using testutil::nums;

namespace {

ParseCode code_of(const std::string& text) {
  try {
    parse_hypergraph_file(text);
  } catch (const ParseError& e) {
    return e.code();
  }
  throw std::logic_error("expected a parse error");
}

}  // namespace

TEST_CASE("parse_hypergraph accepts the documented format") {
  auto file = parse_hypergraph_file(
      R"({"vertices":["1","2","3"],"edges":[["1","2","3"]]})");
  CHECK(file.hypergraph == make(nums(3), {{"1", "2", "3"}}));
  CHECK_FALSE(file.name.has_value());

  auto named = parse_hypergraph_file(
      R"({"name":"demo","vertices":["a"],"edges":[]})");
  CHECK(named.name == "demo");
}

TEST_CASE("parse errors carry distinct codes and locations") {
  CHECK(code_of("{nope") == ParseCode::MalformedJson);
  CHECK(code_of(R"(["vertices"])") == ParseCode::BadSchema);
  CHECK(code_of(R"({"vertices":["1","1"],"edges":[]})") == ParseCode::DuplicateVertex);
  CHECK(code_of(R"({"vertices":["1","2"],"edges":[["1","9"]]})") ==
        ParseCode::UnknownVertex);
  CHECK(code_of(R"({"vertices":["1","2"],"edges":[["1","2"],["2","1"]]})") ==
        ParseCode::DuplicateEdge);
  CHECK(code_of(R"({"vertices":["1","2"],"edges":[[]]})") == ParseCode::EmptyEdge);
  CHECK(code_of(R"({"vertices":[],"edges":[]})") == ParseCode::BadSchema);

  try {
    parse_hypergraph(R"({"vertices":["1","2"],"edges":[["1","9"]]})");
  } catch (const ParseError& e) {
    CHECK(e.location() == "edges[0][1]");
    CHECK(std::string(e.what()).find("UNKNOWN_VERTEX") != std::string::npos);
  }
}

TEST_CASE("serialisation is canonical and round-trips") {
  const std::string canonical = serialize_hypergraph(
      make(nums(3), {{"3", "2"}, {"1", "2"}}));
  CHECK(serialize_hypergraph(parse_hypergraph(canonical)) == canonical);
  // edge members follow vertex order; edges sort lexicographically
  CHECK(canonical.find("\"1\",\n      \"2\"") < canonical.find("\"2\",\n      \"3\""));

  auto pool = random_connected_hypergraphs(20, 8, 4, 60901u);
  for (const auto& h : pool) CHECK(parse_hypergraph(serialize_hypergraph(h)) == h);
}

TEST_CASE("certificates serialise with a null final cover") {
  auto t = make(nums(3), {{"1", "2", "3"}});
  auto cert = dismantling_order(t);
  REQUIRE(cert.has_value());
  auto json = certificate_to_json(*cert);
  CHECK(json.find("\"cover\": null") != std::string::npos);
  auto back = certificate_from_json(json);
  CHECK(back.ordering == cert->ordering);
  CHECK(back.covers == cert->covers);
  CHECK(verify_certificate(t, back));
}

TEST_CASE("match traces serialise with labelled moves") {
  auto k3 = basic(BasicKind::Complete, 3);
  auto table = solve_shared(k3, 1);
  auto cop = extract_strategy(table, Side::Cop);
  auto robber = extract_strategy(table, Side::Robber);
  auto trace = play_match(k3, 1, *cop, *robber, 10);
  auto json = trace_to_json(trace, k3, 1, Variant::Standard);
  CHECK(json.find("\"captured\": true") != std::string::npos);
  CHECK(json.find("\"variant\": \"standard\"") != std::string::npos);
  CHECK(json.find("\"initial\"") != std::string::npos);
  CHECK(json.find("\"rounds_played\"") != std::string::npos);
}

#include <algorithm>

#include "doctest.h"
#include "hypercop/construct.hpp"
#include "hypercop/solver.hpp"
#include "hypercop/verify.hpp"
#include "test_util.hpp"

using namespace hypercop;
using testutil::make;
using testutil::nums;
using testutil::ReferenceSolver;

namespace {

Hypergraph c4() { return basic(BasicKind::Cycle, 4); }

Hypergraph petersen() {
  std::vector<std::vector<VertexId>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});              // outer cycle
    edges.push_back({5 + i, 5 + (i + 2) % 5});      // inner star
    edges.push_back({i, 5 + i});                    // spokes
  }
  for (auto& e : edges) std::sort(e.begin(), e.end());
  return Hypergraph(nums(10), edges);
}

/// Drives extracted strategies from a fixed mid-game state (no placement
/// phase); returns cop half-moves until capture, or -1 past max_moves.
int run_from_state(const WinTablePtr& table, GameState state, int max_moves) {
  auto cop = extract_strategy(table, Side::Cop);
  auto robber = extract_strategy(table, Side::Robber);
  std::sort(state.cops.begin(), state.cops.end());
  int moves = 0;
  for (int half = 0; half < 2 * max_moves + 2; ++half) {
    if (std::binary_search(state.cops.begin(), state.cops.end(), state.robber))
      return moves;
    if (state.to_move == Side::Cop) {
      state.cops = cop->cop_move(state);
      std::sort(state.cops.begin(), state.cops.end());
      state.to_move = Side::Robber;
      ++moves;
    } else {
      state.robber = robber->robber_move(state);
      state.to_move = Side::Cop;
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("solve on a triangle: every cop-to-move state is won") {
  auto k3 = basic(BasicKind::Complete, 3);
  auto table = solve(k3, 1);
  for (VertexId c = 0; c < 3; ++c)
    for (VertexId r = 0; r < 3; ++r)
      CHECK(table.won(GameState{{c}, r, Side::Cop}));
  CHECK(table.is_cop_win());
}

TEST_CASE("solve on a 4-cycle matches the reference fixpoint") {
  auto cyc = c4();
  ReferenceSolver ref(cyc, 1, Variant::Standard);
  auto table = solve(cyc, 1);
  for (VertexId c = 0; c < 4; ++c) {
    for (VertexId r = 0; r < 4; ++r) {
      for (Side side : {Side::Cop, Side::Robber}) {
        CHECK(table.won(GameState{{c}, r, side}) == ref.won({c}, r, side));
      }
      // cop-to-move states are won exactly when the robber is within reach
      const auto& nb = cyc.closed_neighbors(c);
      CHECK(table.won(GameState{{c}, r, Side::Cop}) ==
            std::binary_search(nb.begin(), nb.end(), r));
    }
  }
  CHECK_FALSE(table.is_cop_win());
}

TEST_CASE("two cops on opposite corners of a 4-cycle capture next move") {
  auto table = solve(c4(), 2);
  GameState s{{0, 2}, 1, Side::Cop};
  CHECK(table.won(s));
  CHECK(table.steps_to_capture(s) == 1);
  CHECK_THROWS_AS(solve(c4(), 1).steps_to_capture(GameState{{0}, 2, Side::Cop}),
                  Error);
}

TEST_CASE("is_k_cop_win") {
  CHECK(is_k_cop_win(basic(BasicKind::Complete, 3), 1));
  CHECK_FALSE(is_k_cop_win(c4(), 1));
  CHECK(is_k_cop_win(c4(), 2));
  CHECK(ReferenceSolver(c4(), 1, Variant::Standard).is_k_cop_win() == false);
  CHECK(ReferenceSolver(c4(), 2, Variant::Standard).is_k_cop_win() == true);
  CHECK(is_k_cop_win(make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}}), 1));

  CHECK_THROWS_AS(solve(make(nums(4), {{"1", "2"}, {"3", "4"}}), 1), Error);
  CHECK_THROWS_AS(solve(c4(), 0), Error);
}

TEST_CASE("cop_number") {
  CHECK(cop_number(complete_multipartite({3, {}, {2, 2, 2}})) == 2);
  CHECK(cop_number(basic(BasicKind::Hypercube, 3)) == 2);
  CHECK(cop_number(petersen(), 2) == std::nullopt);
  CHECK(cop_number(petersen(), 3) == 3);
  CHECK_THROWS_AS(cop_number(c4(), 0), Error);
}

TEST_CASE("more cops never hurt") {
  auto pool = random_connected_hypergraphs(25, 6, 4, 90301u);
  for (const auto& h : pool) {
    for (int k = 1; k <= 2; ++k) {
      if (is_k_cop_win(h, k)) CHECK(is_k_cop_win(h, k + 1));
    }
  }
}

TEST_CASE("sorted cop tuples lose nothing against the reference solver") {
  auto pool = random_connected_hypergraphs(20, 5, 3, 90302u);
  for (const auto& h : pool) {
    for (int k = 1; k <= 2; ++k) {
      for (Variant variant : {Variant::Standard, Variant::ActiveRobber}) {
        ReferenceSolver ref(h, k, variant);
        auto table = solve(h, k, variant);
        CHECK(table.is_cop_win() == ref.is_k_cop_win());
        // every ordered tuple agrees with its canonical form
        const int n = h.vertex_count();
        std::vector<VertexId> cops(k, 0);
        while (true) {
          for (VertexId r = 0; r < n; ++r)
            for (Side side : {Side::Cop, Side::Robber})
              CHECK(table.won(GameState{cops, r, side}) == ref.won(cops, r, side));
          int i = k - 1;
          while (i >= 0 && cops[i] == n - 1) cops[i--] = 0;
          if (i < 0) break;
          ++cops[i];
        }
      }
    }
  }
}

TEST_CASE("extracted strategies capture in exactly steps_to_capture") {
  const std::vector<std::pair<Hypergraph, int>> instances = {
      {basic(BasicKind::Complete, 3), 1},
      {basic(BasicKind::Path, 4), 1},
      {c4(), 2},
      {make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}}), 1},
  };
  for (const auto& [h, k] : instances) {
    auto table = solve_shared(h, k);
    REQUIRE(table->is_cop_win());
    const auto& tuples = table->cop_tuples();
    for (std::size_t rank = 0; rank < tuples.size(); ++rank) {
      for (VertexId r = 0; r < h.vertex_count(); ++r) {
        GameState s{tuples[rank], r, Side::Cop};
        REQUIRE(table->won(s));
        const int steps = static_cast<int>(table->steps_to_capture(s));
        CHECK(run_from_state(table, s, steps + 1) == steps);
      }
    }
  }
}

TEST_CASE("the extracted robber outlasts every cop we field on a 4-cycle") {
  auto cyc = c4();
  auto table = solve_shared(cyc, 1);
  auto robber = extract_strategy(table, Side::Robber);
  auto chaser = pursuit_strategy(table);
  CHECK_FALSE(play_match(cyc, 1, *chaser, *robber, 100).captured);
  for (std::uint64_t seed : {3u, 5u, 8u}) {
    auto rnd = random_strategy(cyc, Side::Cop, Variant::Standard, seed);
    CHECK_FALSE(play_match(cyc, 1, *rnd, *robber, 100).captured);
  }
}

TEST_CASE("extract_strategy refuses a cop strategy for a lost table") {
  CHECK_THROWS_AS(extract_strategy(solve_shared(c4(), 1), Side::Cop), Error);
}

TEST_CASE("play_match") {
  auto k3 = basic(BasicKind::Complete, 3);
  auto t3 = solve_shared(k3, 1);
  auto cop = extract_strategy(t3, Side::Cop);
  auto robber = extract_strategy(t3, Side::Robber);
  auto trace = play_match(k3, 1, *cop, *robber, 10);
  CHECK(trace.captured);
  CHECK(trace.rounds_played <= 1);

  auto cyc = c4();
  auto t4 = solve_shared(cyc, 1);
  auto chase = pursuit_strategy(t4);
  auto evade = extract_strategy(t4, Side::Robber);
  auto trace2 = play_match(cyc, 1, *chase, *evade, 100);
  CHECK_FALSE(trace2.captured);
  CHECK(trace2.rounds_played == 100);

  auto t42 = solve_shared(cyc, 2);
  auto cop2 = extract_strategy(t42, Side::Cop);
  auto robber2 = extract_strategy(t42, Side::Robber);
  auto trace3 = play_match(cyc, 2, *cop2, *robber2, 100);
  CHECK(trace3.captured);
  GameState opening{trace3.initial_cops, trace3.initial_robber, Side::Cop};
  CHECK(trace3.rounds_played <= static_cast<int>(t42->steps_to_capture(opening)));
}

TEST_CASE("play_match reports the offending side and round of illegal moves") {
  auto cyc = c4();
  auto cop = pass_strategy(cyc, Side::Cop);
  auto robber = pass_strategy(cyc, Side::Robber);
  // passing is fine in the standard game
  CHECK_FALSE(play_match(cyc, 1, *cop, *robber, 5).captured);
  // a robber who must move cannot pass
  try {
    play_match(cyc, 1, *cop, *robber, 5, Variant::ActiveRobber);
    FAIL("expected an illegal-move error");
  } catch (const Error& e) {
    const std::string what = e.what();
    CHECK(what.find("robber") != std::string::npos);
    CHECK(what.find("round 1") != std::string::npos);
  }
  CHECK_THROWS_AS(play_match(cyc, 1, *robber, *robber, 5), Error);
}

TEST_CASE("active robber on a path loses even against one cop") {
  // forced movement lets the cop corner the robber at a leaf
  auto p4 = basic(BasicKind::Path, 4);
  CHECK(is_k_cop_win(p4, 1, Variant::ActiveRobber));
  ReferenceSolver ref(p4, 1, Variant::ActiveRobber);
  CHECK(ref.is_k_cop_win());
}

TEST_CASE("product cop numbers sit between the factor bounds") {
  auto pool = random_connected_hypergraphs(10, 4, 2, 90303u);
  for (int i = 0; i + 1 < static_cast<int>(pool.size()); i += 2) {
    const auto& g = pool[i];
    const auto& h = pool[i + 1];
    const int cg = *cop_number(g);
    const int ch = *cop_number(h);
    auto prod = cartesian_product({g, h});
    CHECK_FALSE(is_k_cop_win(prod, 1));  // two coordinates defeat one cop
    auto cp = cop_number(prod, cg + ch);
    REQUIRE(cp.has_value());
    CHECK(*cp >= std::max(cg, ch));
  }
  auto cyc = c4();
  auto cp = cop_number(cartesian_product({cyc, cyc}), 4);
  REQUIRE(cp.has_value());
  CHECK(*cp >= 2);
}

TEST_CASE("steps are zero exactly on occupied-vertex states") {
  for (const auto& [h, k] :
       {std::pair{basic(BasicKind::Path, 4), 1}, {c4(), 2},
        {make(nums(5), {{"1", "2", "3"}, {"3", "4", "5"}}), 1}}) {
    auto table = solve(h, k);
    const auto& tuples = table.cop_tuples();
    for (std::size_t rank = 0; rank < tuples.size(); ++rank) {
      for (VertexId r = 0; r < h.vertex_count(); ++r) {
        const bool occupied = std::binary_search(tuples[rank].begin(),
                                                 tuples[rank].end(), r);
        for (Side side : {Side::Cop, Side::Robber}) {
          GameState s{tuples[rank], r, side};
          if (!table.won(s)) continue;
          CHECK((table.steps_to_capture(s) == 0) == occupied);
        }
      }
    }
  }
}

TEST_CASE("products of two cop-win hypergraphs need exactly two cops") {
  auto pool = random_connected_hypergraphs(12, 4, 3, 90304u);
  for (int i = 0; i + 1 < static_cast<int>(pool.size()); i += 2) {
    const auto& g = pool[i];
    const auto& h = pool[i + 1];
    if (!is_k_cop_win(g, 1) || !is_k_cop_win(h, 1)) continue;
    CHECK(cop_number(cartesian_product({g, h}), 2) == 2);
  }
}

TEST_CASE("size-1 edges do not change the game") {
  auto pool = random_connected_hypergraphs(10, 6, 3, 90305u);
  for (const auto& h : pool) {
    auto edges = h.edges();
    for (VertexId v = 0; v < h.vertex_count(); v += 2) edges.push_back({v});
    Hypergraph with_singletons(h.labels(), edges);
    CHECK(cop_number(with_singletons, 3) == cop_number(h, 3));
  }
}

TEST_CASE("win table diagnostics") {
  auto table = solve(basic(BasicKind::Complete, 3), 1);
  auto csv = table.dump_csv();
  CHECK(csv.find("cops;robber;to_move;steps") == 0);
  CHECK(csv.find("1;1;cop;0") != std::string::npos);
}

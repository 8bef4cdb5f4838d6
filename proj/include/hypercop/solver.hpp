#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hypercop/hypergraph.hpp"

namespace hypercop {

enum class Variant { Standard, ActiveRobber };
enum class Side { Cop, Robber };

/// Canonical game state: the cop positions are a sorted tuple (cops are
/// interchangeable), so symmetric states collapse to one entry.
struct GameState {
  std::vector<VertexId> cops;
  VertexId robber = 0;
  Side to_move = Side::Cop;
};

/// Result of the backward attractor computation: the least fixed point of
/// "cop side forces capture", with the exact number of cop half-moves
/// needed from every won state.
class WinTable {
 public:
  WinTable(Hypergraph h, int k, Variant variant);

  const Hypergraph& hypergraph() const { return h_; }
  int cop_count() const { return k_; }
  Variant variant() const { return variant_; }

  bool won(const GameState& s) const;
  /// Cop half-moves to capture under optimal play; errors on non-won states.
  std::uint32_t steps_to_capture(const GameState& s) const;

  /// True iff some placement wins against every robber placement.
  bool is_cop_win() const { return cop_win_; }

  const std::vector<std::vector<VertexId>>& cop_tuples() const { return tuples_; }
  std::size_t state_count() const { return won_.size(); }

  /// Diagnostic dump: one "cops;robber;side;steps" line per won state.
  std::string dump_csv() const;

  std::size_t state_index(const GameState& s) const;
  std::size_t tuple_rank(const std::vector<VertexId>& sorted_cops) const;
  bool won_at(std::size_t rank, VertexId robber, Side side) const;
  std::uint32_t steps_at(std::size_t rank, VertexId robber, Side side) const;

 private:
  Hypergraph h_;
  int k_;
  Variant variant_;
  std::vector<std::vector<VertexId>> tuples_;  // all sorted k-tuples, lex order
  std::vector<char> won_;
  std::vector<std::uint32_t> steps_;
  bool cop_win_ = false;

  void compute();
};

using WinTablePtr = std::shared_ptr<const WinTable>;

WinTable solve(const Hypergraph& h, int k, Variant variant = Variant::Standard);
WinTablePtr solve_shared(const Hypergraph& h, int k,
                         Variant variant = Variant::Standard);

bool is_k_cop_win(const Hypergraph& h, int k, Variant variant = Variant::Standard);

/// Least k <= max_k winning for the cops, else nullopt.
std::optional<int> cop_number(const Hypergraph& h, int max_k,
                              Variant variant = Variant::Standard);
/// max_k defaults to |V(h)| (a cop on every vertex captures at placement).
std::optional<int> cop_number(const Hypergraph& h);

/// A deterministic player for one side. Move methods receive the canonical
/// state and return positions aligned with it (cop i moves from s.cops[i]).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Side side() const = 0;

  virtual std::vector<VertexId> place_cops(int k);
  virtual VertexId place_robber(const std::vector<VertexId>& cops);
  virtual std::vector<VertexId> cop_move(const GameState& s);
  virtual VertexId robber_move(const GameState& s);
};

using StrategyPtr = std::shared_ptr<Strategy>;

/// Optimal play from the table. The cop side requires is_cop_win (it moves
/// to minimise steps_to_capture); the robber side is total: it moves to a
/// non-won successor when one exists, else maximises steps_to_capture.
StrategyPtr extract_strategy(WinTablePtr table, Side side);

/// Total cop player: optimal from won states, greedy 2-section-distance
/// chase otherwise. Usable below the cop number, unlike extract_strategy.
StrategyPtr pursuit_strategy(WinTablePtr table);

/// Uniformly random legal moves, reproducible per seed (the draw is a pure
/// function of seed and state).
StrategyPtr random_strategy(const Hypergraph& h, Side side, Variant variant,
                            std::uint64_t seed);

/// Places on the least vertex and never moves.
StrategyPtr pass_strategy(const Hypergraph& h, Side side);

struct MatchRound {
  std::vector<VertexId> cop_to;          // aligned with the sorted previous tuple
  std::optional<VertexId> robber_to;     // absent when capture preempted the move
};

/// Round-by-round record of a played game.
struct MatchTrace {
  std::vector<VertexId> initial_cops;  // sorted
  VertexId initial_robber = 0;
  std::vector<MatchRound> rounds;
  bool captured = false;
  int rounds_played = 0;
};

/// Placement phase then alternating rounds; every emitted move is checked
/// for legality and an offending strategy raises Error naming its side and
/// the round.
MatchTrace play_match(const Hypergraph& h, int k, Strategy& cop_strategy,
                      Strategy& robber_strategy, int max_rounds,
                      Variant variant = Variant::Standard);

}  // namespace hypercop

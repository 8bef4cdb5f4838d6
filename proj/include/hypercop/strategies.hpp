#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercop/construct.hpp"
#include "hypercop/solver.hpp"

namespace hypercop {

/// One-cop winning strategy for a hypertree with the given host tree:
/// open on a cut vertex, then each round advance along the host path to
/// the robber as far as one move allows, shrinking his territory.
StrategyPtr hypertree_cop_strategy(const Hypergraph& t, const HostTree& host);

/// One-cop strategy on the product of two non-trivial trees against a
/// robber who must move every turn: pass when the coordinate distances sum
/// to an even number, otherwise shrink the larger one. Refuses to build
/// for the standard variant, where it has no guarantee.
StrategyPtr mm_product_cop_strategy(const Graph& t1, const Graph& t2,
                                    Variant variant);

/// c(base) cops win on the prism: pursue the robber's clone inside the
/// first copy with `inner`, then ladder the adjacent cop up one copy per
/// turn along transitional edges pivoted at its vertex.
StrategyPtr prism_cop_strategy(const Hypergraph& base, int copies, int r,
                               StrategyPtr inner);

enum class MultipartiteFamily { K, L };

/// Opening placements whose closed neighbourhoods cover the whole vertex
/// set, so the first cop move captures.
StrategyPtr multipartite_cop_strategy(const PartitionSpec& spec,
                                      MultipartiteFamily family);

/// One robber evades one cop on a complete multipartite hypergraph with all
/// classes of size >= 2 by ending every round inside the cop's class.
StrategyPtr multipartite_robber_evader(const PartitionSpec& spec);

/// One robber evades one cop on g x h by keeping both coordinates distinct
/// from the cop's at the end of every round.
StrategyPtr product_robber_evader(const Hypergraph& g, const Hypergraph& h);

/// Fewer than c(base) cops never capture on the prism: the robber stays in
/// the first copy and plays `inner_evader` against the cops' clones there.
StrategyPtr prism_robber_evader(const Hypergraph& base, int copies, int r,
                                StrategyPtr inner_evader);

/// Construction context for strategies referenced by name (CLI / bindings).
struct StrategyContext {
  explicit StrategyContext(Hypergraph game_hypergraph)
      : game(std::move(game_hypergraph)) {}

  Hypergraph game;
  int cops = 1;
  Variant variant = Variant::Standard;
  std::uint64_t seed = 0;
  std::optional<Graph> host;
  std::optional<std::vector<Hypergraph>> factors;
  std::optional<Hypergraph> base;
  std::optional<int> prism_copies;
  std::optional<int> prism_r;
  std::optional<PartitionSpec> partition;
  std::optional<MultipartiteFamily> family;
};

/// Ids: optimal | hypertree | mm | prism | multipartite |
/// evader-multipartite | evader-product | evader-prism | random | pass.
StrategyPtr make_strategy(const std::string& id, Side side,
                          const StrategyContext& ctx);

}  // namespace hypercop

#include "hypercop/strategies.hpp"

#include <algorithm>

namespace hypercop {

namespace {

class HypertreeCopStrategy : public Strategy {
 public:
  HypertreeCopStrategy(Hypergraph t, HostTree host)
      : t_(std::move(t)), host_(std::move(host)) {
    if (host_.tree().labels() != t_.labels())
      throw Error("host tree must be on the hypertree's vertex set, in order");
    hypertree_from_host(host_, t_.edge_labels());  // throws when host is invalid
  }
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    if (k != 1) throw Error("hypertree strategy plays a single cop");
    auto cut = host_.least_cut_vertex();
    return {cut ? *cut : 0};
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    const VertexId u = s.cops.at(0);
    if (u == s.robber) return {u};
    const auto path = host_.path(u, s.robber);
    // adjacency along the host path is a prefix; jump to its end
    const auto& nb = t_.closed_neighbors(u);
    VertexId target = u;
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!std::binary_search(nb.begin(), nb.end(), path[i])) break;
      target = path[i];
    }
    return {target};
  }

 private:
  Hypergraph t_;
  HostTree host_;
};

class MmProductCopStrategy : public Strategy {
 public:
  MmProductCopStrategy(Graph t1, Graph t2)
      : host1_(std::move(t1)), host2_(std::move(t2)) {
    if (host1_.tree().vertex_count() < 2 || host2_.tree().vertex_count() < 2)
      throw Error("both factors must be non-trivial trees");
    n2_ = host2_.tree().vertex_count();
  }
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    if (k != 1) throw Error("tree-product strategy plays a single cop");
    return {0};
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    const VertexId cop = s.cops.at(0);
    const VertexId a1 = cop / n2_, a2 = cop % n2_;
    const VertexId b1 = s.robber / n2_, b2 = s.robber % n2_;
    const auto p1 = host1_.path(a1, b1);
    const auto p2 = host2_.path(a2, b2);
    const int d1 = static_cast<int>(p1.size()) - 1;
    const int d2 = static_cast<int>(p2.size()) - 1;
    if ((d1 + d2) % 2 == 0) return {cop};
    if (d1 >= d2) return {p1[1] * n2_ + a2};
    return {a1 * n2_ + p2[1]};
  }

 private:
  HostTree host1_, host2_;
  int n2_ = 0;
};

class PrismCopStrategy : public Strategy {
 public:
  PrismCopStrategy(Hypergraph base, int copies, int r, StrategyPtr inner)
      : base_(std::move(base)), inner_(std::move(inner)) {
    if (r < 3) throw Error("prism cop strategy requires r >= 3");
    auto [rank, antirank] = rank_antirank(base_);
    (void)rank;
    if (2 * antirank < r)
      throw Error("prism cop strategy requires anti-rank(base) >= r/2");
    if (!inner_ || inner_->side() != Side::Cop)
      throw Error("inner strategy must play the cop side");
    (void)copies;
    nb_ = base_.vertex_count();
  }
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    auto placement = inner_->place_cops(k);  // copy 1 shares base vertex ids
    return placement;
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    const VertexId w = s.robber % nb_;
    const int j = s.robber / nb_;
    // tracker: deepest cop whose base vertex can reach the robber's base
    int tracker = -1, tracker_copy = -1;
    for (std::size_t i = 0; i < s.cops.size(); ++i) {
      const VertexId c = s.cops[i] % nb_;
      const int copy = s.cops[i] / nb_;
      const bool reaches = c == w || base_.adjacent(c, w);
      if (reaches && copy > tracker_copy) {
        tracker = static_cast<int>(i);
        tracker_copy = copy;
      }
    }
    if (tracker < 0) {
      // clone pursuit inside copy 1 (prism ids of copy 1 equal base ids)
      GameState clone_state{s.cops, w, Side::Cop};
      return inner_->cop_move(clone_state);
    }
    auto moves = s.cops;
    if (j <= tracker_copy) {
      moves[tracker] = tracker_copy * nb_ + w;  // same-copy capture move
    } else {
      moves[tracker] = (tracker_copy + 1) * nb_ + w;  // ladder one copy up
    }
    return moves;
  }

 private:
  Hypergraph base_;
  StrategyPtr inner_;
  int nb_ = 0;
};

class MultipartiteCopStrategy : public Strategy {
 public:
  MultipartiteCopStrategy(const PartitionSpec& spec, MultipartiteFamily family)
      : family_(family),
        h_(family == MultipartiteFamily::K ? complete_multipartite(spec)
                                           : l_multipartite(spec)),
        classes_(multipartite_classes(spec)),
        parts_(spec.parts) {}
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    if (family_ == MultipartiteFamily::L) {
      if (k != 1) throw Error("one cop suffices on this family");
      // least vertex of the last (largest) class
      return {h_.vertex_count() - parts_.back()};
    }
    if (parts_[0] == 1) {
      if (k != 1) throw Error("one cop suffices on this family");
      return {0};
    }
    if (k != 2) throw Error("two cops are required and sufficient here");
    return {0, parts_[0]};  // least vertices of the first two classes
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    auto moves = s.cops;
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const auto& nb = h_.closed_neighbors(s.cops[i]);
      if (std::binary_search(nb.begin(), nb.end(), s.robber)) {
        moves[i] = s.robber;
        break;
      }
    }
    return moves;
  }

 private:
  MultipartiteFamily family_;
  Hypergraph h_;
  std::vector<int> classes_;
  std::vector<int> parts_;
};

class MultipartiteRobberEvader : public Strategy {
 public:
  explicit MultipartiteRobberEvader(const PartitionSpec& spec)
      : h_(complete_multipartite(spec)), classes_(multipartite_classes(spec)) {
    if (spec.parts[0] < 2)
      throw Error("evasion needs every class of size at least two");
  }
  Side side() const override { return Side::Robber; }

  VertexId place_robber(const std::vector<VertexId>& cops) override {
    return safe_vertex(single_cop(cops));
  }

  VertexId robber_move(const GameState& s) override {
    const VertexId cop = single_cop(s.cops);
    if (classes_[s.robber] == classes_[cop] && s.robber != cop) return s.robber;
    return safe_vertex(cop);
  }

 private:
  VertexId single_cop(const std::vector<VertexId>& cops) const {
    if (cops.size() != 1) throw Error("evader is only sound against one cop");
    return cops[0];
  }
  // least vertex in the cop's class, distinct from the cop
  VertexId safe_vertex(VertexId cop) const {
    for (VertexId v = 0; v < h_.vertex_count(); ++v)
      if (classes_[v] == classes_[cop] && v != cop) return v;
    throw Error("no safe vertex in the cop's class");
  }

  Hypergraph h_;
  std::vector<int> classes_;
};

class ProductRobberEvader : public Strategy {
 public:
  ProductRobberEvader(Hypergraph g, Hypergraph h)
      : g_(std::move(g)), h_(std::move(h)) {
    if (g_.vertex_count() < 2 || h_.vertex_count() < 2)
      throw Error("both factors need at least two vertices");
    if (!is_connected(g_) || !is_connected(h_))
      throw Error("both factors must be connected");
    nh_ = h_.vertex_count();
  }
  Side side() const override { return Side::Robber; }

  VertexId place_robber(const std::vector<VertexId>& cops) override {
    const VertexId cop = single_cop(cops);
    const VertexId a = cop / nh_, b = cop % nh_;
    for (VertexId v = 0; v < g_.vertex_count() * nh_; ++v)
      if (v / nh_ != a && v % nh_ != b) return v;
    throw Error("no starting vertex differs from the cop in both coordinates");
  }

  VertexId robber_move(const GameState& s) override {
    const VertexId cop = single_cop(s.cops);
    const VertexId a = cop / nh_, b = cop % nh_;
    const VertexId ar = s.robber / nh_, br = s.robber % nh_;
    if (a != ar && b != br) return s.robber;
    if (a == ar) {
      const auto open = g_.open_neighbors(ar);
      return open.front() * nh_ + br;  // any move leaves the cop's row
    }
    const auto open = h_.open_neighbors(br);
    return ar * nh_ + open.front();
  }

 private:
  VertexId single_cop(const std::vector<VertexId>& cops) const {
    if (cops.size() != 1) throw Error("evader is only sound against one cop");
    return cops[0];
  }

  Hypergraph g_, h_;
  int nh_ = 0;
};

class PrismRobberEvader : public Strategy {
 public:
  PrismRobberEvader(Hypergraph base, int copies, int r, StrategyPtr inner)
      : base_(std::move(base)), inner_(std::move(inner)) {
    if (r < 3) throw Error("prism evader requires r >= 3");
    auto [rank, antirank] = rank_antirank(base_);
    (void)rank;
    if (2 * antirank < r) throw Error("prism evader requires anti-rank(base) >= r/2");
    if (!inner_ || inner_->side() != Side::Robber)
      throw Error("inner strategy must play the robber side");
    (void)copies;
    nb_ = base_.vertex_count();
    base_cop_number_ = cop_number(base_).value_or(base_.vertex_count());
    if (base_cop_number_ < 2)
      throw Error("prism evasion needs a base with cop number at least two");
  }
  Side side() const override { return Side::Robber; }

  VertexId place_robber(const std::vector<VertexId>& cops) override {
    return inner_->place_robber(clones(cops));
  }

  VertexId robber_move(const GameState& s) override {
    GameState clone_state{clones(s.cops), s.robber % nb_, Side::Robber};
    return inner_->robber_move(clone_state);  // copy-1 ids equal base ids
  }

 private:
  std::vector<VertexId> clones(const std::vector<VertexId>& cops) const {
    if (static_cast<int>(cops.size()) >= base_cop_number_)
      throw Error("prism evasion is only sound against fewer cops than the base cop number");
    std::vector<VertexId> out(cops.size());
    for (std::size_t i = 0; i < cops.size(); ++i) out[i] = cops[i] % nb_;
    std::sort(out.begin(), out.end());
    return out;
  }

  Hypergraph base_;
  StrategyPtr inner_;
  int nb_ = 0;
  int base_cop_number_ = 0;
};

}  // namespace

StrategyPtr hypertree_cop_strategy(const Hypergraph& t, const HostTree& host) {
  return std::make_shared<HypertreeCopStrategy>(t, host);
}

StrategyPtr mm_product_cop_strategy(const Graph& t1, const Graph& t2,
                                    Variant variant) {
  if (variant != Variant::ActiveRobber)
    throw Error("tree-product strategy is only guaranteed against a robber "
                "who must move; use the active-robber variant");
  return std::make_shared<MmProductCopStrategy>(t1, t2);
}

StrategyPtr prism_cop_strategy(const Hypergraph& base, int copies, int r,
                               StrategyPtr inner) {
  return std::make_shared<PrismCopStrategy>(base, copies, r, std::move(inner));
}

StrategyPtr multipartite_cop_strategy(const PartitionSpec& spec,
                                      MultipartiteFamily family) {
  return std::make_shared<MultipartiteCopStrategy>(spec, family);
}

StrategyPtr multipartite_robber_evader(const PartitionSpec& spec) {
  return std::make_shared<MultipartiteRobberEvader>(spec);
}

StrategyPtr product_robber_evader(const Hypergraph& g, const Hypergraph& h) {
  return std::make_shared<ProductRobberEvader>(g, h);
}

StrategyPtr prism_robber_evader(const Hypergraph& base, int copies, int r,
                                StrategyPtr inner_evader) {
  return std::make_shared<PrismRobberEvader>(base, copies, r, std::move(inner_evader));
}

namespace {

const Graph& require_host(const StrategyContext& ctx) {
  if (!ctx.host) throw Error("strategy needs a host tree");
  return *ctx.host;
}

std::pair<const Hypergraph&, const Hypergraph&> require_factors(
    const StrategyContext& ctx) {
  if (!ctx.factors || ctx.factors->size() != 2)
    throw Error("strategy needs exactly two product factors");
  const Hypergraph product = cartesian_product(*ctx.factors);
  if (!(product == ctx.game))
    throw Error("game hypergraph is not the product of the given factors");
  return {(*ctx.factors)[0], (*ctx.factors)[1]};
}

const Hypergraph& require_prism(const StrategyContext& ctx) {
  if (!ctx.base || !ctx.prism_copies || !ctx.prism_r)
    throw Error("strategy needs the prism base, copy count and edge size");
  const Hypergraph built =
      prism(PrismSpec{*ctx.base, *ctx.prism_copies, *ctx.prism_r});
  if (!(built == ctx.game))
    throw Error("game hypergraph is not the prism of the given base");
  return *ctx.base;
}

const PartitionSpec& require_partition(const StrategyContext& ctx) {
  if (!ctx.partition) throw Error("strategy needs a multipartite descriptor");
  return *ctx.partition;
}

}  // namespace

StrategyPtr make_strategy(const std::string& id, Side side,
                          const StrategyContext& ctx) {
  if (id == "optimal") {
    auto table = solve_shared(ctx.game, ctx.cops, ctx.variant);
    if (side == Side::Robber) return extract_strategy(table, Side::Robber);
    return table->is_cop_win() ? extract_strategy(table, Side::Cop)
                               : pursuit_strategy(table);
  }
  if (id == "random") return random_strategy(ctx.game, side, ctx.variant, ctx.seed);
  if (id == "pass") return pass_strategy(ctx.game, side);
  if (id == "hypertree") {
    if (side != Side::Cop) throw Error("hypertree strategy plays the cop side");
    return hypertree_cop_strategy(ctx.game, HostTree(require_host(ctx)));
  }
  if (id == "mm") {
    if (side != Side::Cop) throw Error("mm strategy plays the cop side");
    auto [f1, f2] = require_factors(ctx);
    return mm_product_cop_strategy(Graph(f1), Graph(f2), ctx.variant);
  }
  if (id == "prism") {
    if (side != Side::Cop) throw Error("prism strategy plays the cop side");
    const Hypergraph& base = require_prism(ctx);
    auto c = cop_number(base);
    if (!c) throw Error("could not determine the base cop number");
    if (ctx.cops != *c)
      throw Error("prism strategy needs exactly the base cop number of cops (" +
                  std::to_string(*c) + ")");
    auto inner = extract_strategy(solve_shared(base, *c), Side::Cop);
    return prism_cop_strategy(base, *ctx.prism_copies, *ctx.prism_r, inner);
  }
  if (id == "multipartite") {
    if (side != Side::Cop) throw Error("multipartite strategy plays the cop side");
    return multipartite_cop_strategy(
        require_partition(ctx),
        ctx.family.value_or(MultipartiteFamily::K));
  }
  if (id == "evader-multipartite") {
    if (side != Side::Robber) throw Error("evader strategies play the robber side");
    return multipartite_robber_evader(require_partition(ctx));
  }
  if (id == "evader-product") {
    if (side != Side::Robber) throw Error("evader strategies play the robber side");
    auto [f1, f2] = require_factors(ctx);
    return product_robber_evader(f1, f2);
  }
  if (id == "evader-prism") {
    if (side != Side::Robber) throw Error("evader strategies play the robber side");
    const Hypergraph& base = require_prism(ctx);
    auto inner = extract_strategy(solve_shared(base, ctx.cops), Side::Robber);
    return prism_robber_evader(base, *ctx.prism_copies, *ctx.prism_r, inner);
  }
  throw Error("unknown strategy id '" + id + "'");
}

}  // namespace hypercop

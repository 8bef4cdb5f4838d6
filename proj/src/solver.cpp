#include "hypercop/solver.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace hypercop {

namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::vector<std::vector<VertexId>> enumerate_sorted_tuples(int n, int k) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - 1) --i;
    if (i < 0) break;
    const VertexId next = cur[i] + 1;
    for (int j = i; j < k; ++j) cur[j] = next;
  }
  return out;
}

bool tuple_contains(const std::vector<VertexId>& sorted, VertexId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Visits every assignment drawing one element from each option list.
template <typename Fn>
void for_each_assignment(const std::vector<const std::vector<VertexId>*>& options,
                         Fn&& fn) {
  const int k = static_cast<int>(options.size());
  std::vector<int> pick(k, 0);
  std::vector<VertexId> assign(k);
  while (true) {
    for (int i = 0; i < k; ++i) assign[i] = (*options[i])[pick[i]];
    fn(assign);
    int i = k - 1;
    while (i >= 0 && pick[i] + 1 == static_cast<int>(options[i]->size())) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
}

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

}  // namespace

WinTable::WinTable(Hypergraph h, int k, Variant variant)
    : h_(std::move(h)), k_(k), variant_(variant) {
  if (k_ < 1) throw Error("need at least one cop");
  if (!is_connected(h_)) throw Error("solver requires a connected hypergraph");
  compute();
}

void WinTable::compute() {
  const int n = h_.vertex_count();
  tuples_ = enumerate_sorted_tuples(n, k_);
  const std::size_t tuple_count = tuples_.size();
  const std::size_t states = tuple_count * n * 2;
  if (states > (1u << 27))
    throw Error("state space too large for the exact solver");
  won_.assign(states, 0);
  steps_.assign(states, kUnset);

  auto index = [n](std::size_t rank, VertexId r, Side side) -> std::uint32_t {
    return static_cast<std::uint32_t>((rank * n + r) * 2 +
                                      (side == Side::Robber ? 1 : 0));
  };

  // number of legal robber moves per vertex
  std::vector<int> move_count(n);
  for (VertexId r = 0; r < n; ++r) {
    const int closed = static_cast<int>(h_.closed_neighbors(r).size());
    move_count[r] = variant_ == Variant::Standard ? closed : closed - 1;
  }
  // remaining not-yet-won successors of each robber-to-move state
  std::vector<int> counter(tuple_count * n);
  for (std::size_t rank = 0; rank < tuple_count; ++rank)
    for (VertexId r = 0; r < n; ++r) counter[rank * n + r] = move_count[r];

  std::vector<std::uint32_t> cur, next;
  for (std::size_t rank = 0; rank < tuple_count; ++rank) {
    for (VertexId r : tuples_[rank]) {
      for (Side side : {Side::Cop, Side::Robber}) {
        const auto id = index(rank, r, side);
        if (!won_[id]) {
          won_[id] = 1;
          steps_[id] = 0;
          cur.push_back(id);
        }
      }
    }
    // a robber who must move but cannot counts as caught
    if (variant_ == Variant::ActiveRobber) {
      for (VertexId r = 0; r < n; ++r) {
        const auto id = index(rank, r, Side::Robber);
        if (move_count[r] == 0 && !won_[id]) {
          won_[id] = 1;
          steps_[id] = 0;
          cur.push_back(id);
        }
      }
    }
  }

  std::uint32_t step = 0;
  std::vector<const std::vector<VertexId>*> options(k_);
  std::vector<VertexId> canon(k_);
  while (!cur.empty()) {
    for (std::size_t qi = 0; qi < cur.size(); ++qi) {
      const std::uint32_t id = cur[qi];
      const Side side = (id & 1) ? Side::Robber : Side::Cop;
      const VertexId r = static_cast<VertexId>((id >> 1) % n);
      const std::size_t rank = (id >> 1) / n;
      if (side == Side::Robber) {
        // a cop-to-move predecessor wins by moving here
        const auto& cops = tuples_[rank];
        for (int i = 0; i < k_; ++i) options[i] = &h_.closed_neighbors(cops[i]);
        for_each_assignment(options, [&](const std::vector<VertexId>& assign) {
          canon = assign;
          std::sort(canon.begin(), canon.end());
          const auto pid = index(tuple_rank(canon), r, Side::Cop);
          if (!won_[pid]) {
            won_[pid] = 1;
            steps_[pid] = step + 1;
            next.push_back(pid);
          }
        });
      } else {
        // a robber-to-move predecessor is won once all its moves are
        for (VertexId rp : h_.closed_neighbors(r)) {
          if (variant_ == Variant::ActiveRobber && rp == r) continue;
          const auto pid = index(rank, rp, Side::Robber);
          if (won_[pid]) continue;
          if (--counter[rank * n + rp] == 0) {
            won_[pid] = 1;
            steps_[pid] = step;
            cur.push_back(pid);
          }
        }
      }
    }
    std::swap(cur, next);
    next.clear();
    ++step;
  }

  for (std::size_t rank = 0; rank < tuple_count && !cop_win_; ++rank) {
    bool all = true;
    for (VertexId r = 0; r < n && all; ++r) all = won_[index(rank, r, Side::Cop)];
    cop_win_ = all;
  }
}

std::size_t WinTable::tuple_rank(const std::vector<VertexId>& sorted_cops) const {
  auto it = std::lower_bound(tuples_.begin(), tuples_.end(), sorted_cops);
  if (it == tuples_.end() || *it != sorted_cops) throw Error("invalid cop tuple");
  return static_cast<std::size_t>(it - tuples_.begin());
}

std::size_t WinTable::state_index(const GameState& s) const {
  if (static_cast<int>(s.cops.size()) != k_)
    throw Error("state has wrong number of cops");
  for (VertexId c : s.cops) h_.check_vertex(c);
  h_.check_vertex(s.robber);
  auto sorted = s.cops;
  std::sort(sorted.begin(), sorted.end());
  return (tuple_rank(sorted) * h_.vertex_count() + s.robber) * 2 +
         (s.to_move == Side::Robber ? 1 : 0);
}

bool WinTable::won(const GameState& s) const { return won_[state_index(s)] != 0; }

std::uint32_t WinTable::steps_to_capture(const GameState& s) const {
  const auto id = state_index(s);
  if (!won_[id]) throw Error("steps_to_capture is defined only on won states");
  return steps_[id];
}

bool WinTable::won_at(std::size_t rank, VertexId robber, Side side) const {
  return won_[(rank * h_.vertex_count() + robber) * 2 +
              (side == Side::Robber ? 1 : 0)] != 0;
}

std::uint32_t WinTable::steps_at(std::size_t rank, VertexId robber, Side side) const {
  return steps_[(rank * h_.vertex_count() + robber) * 2 +
                (side == Side::Robber ? 1 : 0)];
}

std::string WinTable::dump_csv() const {
  std::ostringstream out;
  out << "cops;robber;to_move;steps\n";
  const int n = h_.vertex_count();
  for (std::size_t rank = 0; rank < tuples_.size(); ++rank) {
    for (VertexId r = 0; r < n; ++r) {
      for (Side side : {Side::Cop, Side::Robber}) {
        if (!won_at(rank, r, side)) continue;
        for (std::size_t i = 0; i < tuples_[rank].size(); ++i)
          out << (i ? " " : "") << h_.label(tuples_[rank][i]);
        out << ';' << h_.label(r) << ';'
            << (side == Side::Cop ? "cop" : "robber") << ';'
            << steps_at(rank, r, side) << '\n';
      }
    }
  }
  return out.str();
}

WinTable solve(const Hypergraph& h, int k, Variant variant) {
  return WinTable(h, k, variant);
}

WinTablePtr solve_shared(const Hypergraph& h, int k, Variant variant) {
  return std::make_shared<const WinTable>(h, k, variant);
}

bool is_k_cop_win(const Hypergraph& h, int k, Variant variant) {
  return WinTable(h, k, variant).is_cop_win();
}

std::optional<int> cop_number(const Hypergraph& h, int max_k, Variant variant) {
  if (max_k < 1) throw Error("max_k must be at least 1");
  for (int k = 1; k <= max_k; ++k)
    if (is_k_cop_win(h, k, variant)) return k;
  return std::nullopt;
}

std::optional<int> cop_number(const Hypergraph& h) {
  return cop_number(h, h.vertex_count(), Variant::Standard);
}

std::vector<VertexId> Strategy::place_cops(int) {
  throw Error("strategy does not play the cop side");
}
VertexId Strategy::place_robber(const std::vector<VertexId>&) {
  throw Error("strategy does not play the robber side");
}
std::vector<VertexId> Strategy::cop_move(const GameState&) {
  throw Error("strategy does not play the cop side");
}
VertexId Strategy::robber_move(const GameState&) {
  throw Error("strategy does not play the robber side");
}

namespace {

/// Best cop assignment from a won cop-to-move state: minimise the successor
/// steps_to_capture, ties by lexicographic canonical successor tuple.
std::vector<VertexId> optimal_cop_assignment(const WinTable& t, const GameState& s) {
  const Hypergraph& h = t.hypergraph();
  auto sorted = s.cops;
  std::sort(sorted.begin(), sorted.end());
  std::vector<const std::vector<VertexId>*> options(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    options[i] = &h.closed_neighbors(sorted[i]);
  std::vector<VertexId> best_assign, best_canon, canon;
  std::uint32_t best_steps = kUnset;
  for_each_assignment(options, [&](const std::vector<VertexId>& assign) {
    canon = assign;
    std::sort(canon.begin(), canon.end());
    const auto rank = t.tuple_rank(canon);
    if (!t.won_at(rank, s.robber, Side::Robber)) return;
    const auto steps = t.steps_at(rank, s.robber, Side::Robber);
    if (steps < best_steps || (steps == best_steps && canon < best_canon)) {
      best_steps = steps;
      best_canon = canon;
      best_assign = assign;
    }
  });
  if (best_assign.empty()) throw Error("no winning cop move from this state");
  return best_assign;
}

class ExtractedCopStrategy : public Strategy {
 public:
  explicit ExtractedCopStrategy(WinTablePtr table) : t_(std::move(table)) {
    if (!t_->is_cop_win())
      throw Error("cop strategy requires a cop-winning table");
  }
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    if (k != t_->cop_count()) throw Error("placement cop count mismatch");
    const int n = t_->hypergraph().vertex_count();
    std::size_t best_rank = 0;
    std::uint32_t best_worst = kUnset;
    for (std::size_t rank = 0; rank < t_->cop_tuples().size(); ++rank) {
      std::uint32_t worst = 0;
      bool all = true;
      for (VertexId r = 0; r < n && all; ++r) {
        if (!t_->won_at(rank, r, Side::Cop)) all = false;
        else worst = std::max(worst, t_->steps_at(rank, r, Side::Cop));
      }
      if (all && worst < best_worst) {
        best_worst = worst;
        best_rank = rank;
      }
    }
    return t_->cop_tuples()[best_rank];
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    if (!t_->won(s)) throw Error("optimal cop move requested from a lost state");
    return optimal_cop_assignment(*t_, s);
  }

 private:
  WinTablePtr t_;
};

class ExtractedRobberStrategy : public Strategy {
 public:
  explicit ExtractedRobberStrategy(WinTablePtr table) : t_(std::move(table)) {}
  Side side() const override { return Side::Robber; }

  VertexId place_robber(const std::vector<VertexId>& cops) override {
    auto sorted = cops;
    std::sort(sorted.begin(), sorted.end());
    const auto rank = t_->tuple_rank(sorted);
    const int n = t_->hypergraph().vertex_count();
    VertexId best = 0;
    std::uint32_t best_steps = 0;
    bool found = false;
    for (VertexId r = 0; r < n; ++r) {
      if (!t_->won_at(rank, r, Side::Cop)) return r;
      const auto steps = t_->steps_at(rank, r, Side::Cop);
      if (!found || steps > best_steps) {
        found = true;
        best_steps = steps;
        best = r;
      }
    }
    return best;
  }

  VertexId robber_move(const GameState& s) override {
    auto sorted = s.cops;
    std::sort(sorted.begin(), sorted.end());
    const auto rank = t_->tuple_rank(sorted);
    const Hypergraph& h = t_->hypergraph();
    VertexId best = -1;
    std::uint32_t best_steps = 0;
    for (VertexId r : h.closed_neighbors(s.robber)) {
      if (t_->variant() == Variant::ActiveRobber && r == s.robber) continue;
      if (!t_->won_at(rank, r, Side::Cop)) return r;
      const auto steps = t_->steps_at(rank, r, Side::Cop);
      if (best < 0 || steps > best_steps) {
        best = r;
        best_steps = steps;
      }
    }
    if (best < 0) throw Error("robber has no legal move");
    return best;
  }

 private:
  WinTablePtr t_;
};

class PursuitStrategy : public Strategy {
 public:
  explicit PursuitStrategy(WinTablePtr table) : t_(std::move(table)) {
    const Hypergraph& h = t_->hypergraph();
    const int n = h.vertex_count();
    dist_.assign(n, std::vector<int>(n, n + 1));
    for (VertexId s = 0; s < n; ++s) {
      dist_[s][s] = 0;
      std::vector<VertexId> queue{s};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        VertexId v = queue[i];
        for (VertexId u : h.closed_neighbors(v)) {
          if (dist_[s][u] > dist_[s][v] + 1) {
            dist_[s][u] = dist_[s][v] + 1;
            queue.push_back(u);
          }
        }
      }
    }
  }
  Side side() const override { return Side::Cop; }

  std::vector<VertexId> place_cops(int k) override {
    if (k != t_->cop_count()) throw Error("placement cop count mismatch");
    const int n = t_->hypergraph().vertex_count();
    std::size_t best_rank = 0;
    int best_missed = n + 1;
    for (std::size_t rank = 0; rank < t_->cop_tuples().size(); ++rank) {
      int missed = 0;
      for (VertexId r = 0; r < n; ++r)
        if (!t_->won_at(rank, r, Side::Cop)) ++missed;
      if (missed < best_missed) {
        best_missed = missed;
        best_rank = rank;
      }
    }
    return t_->cop_tuples()[best_rank];
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    if (t_->won(s)) return optimal_cop_assignment(*t_, s);
    // no winning line: close the smallest cop-robber distance, then the sum
    const Hypergraph& h = t_->hypergraph();
    auto sorted = s.cops;
    std::sort(sorted.begin(), sorted.end());
    std::vector<const std::vector<VertexId>*> options(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      options[i] = &h.closed_neighbors(sorted[i]);
    std::vector<VertexId> best_assign, best_canon, canon;
    long best_min = -1, best_sum = -1;
    for_each_assignment(options, [&](const std::vector<VertexId>& assign) {
      long mind = std::numeric_limits<long>::max(), sum = 0;
      for (VertexId c : assign) {
        mind = std::min(mind, static_cast<long>(dist_[c][s.robber]));
        sum += dist_[c][s.robber];
      }
      canon = assign;
      std::sort(canon.begin(), canon.end());
      if (best_min < 0 || mind < best_min ||
          (mind == best_min && (sum < best_sum ||
                                (sum == best_sum && canon < best_canon)))) {
        best_min = mind;
        best_sum = sum;
        best_canon = canon;
        best_assign = assign;
      }
    });
    return best_assign;
  }

 private:
  WinTablePtr t_;
  std::vector<std::vector<int>> dist_;
};

class RandomStrategy : public Strategy {
 public:
  RandomStrategy(Hypergraph h, Side side, Variant variant, std::uint64_t seed)
      : h_(std::move(h)), side_(side), variant_(variant), seed_(seed) {}
  Side side() const override { return side_; }

  std::vector<VertexId> place_cops(int k) override {
    std::uint64_t state = mix64(seed_ ^ 0x1u);
    std::vector<VertexId> out(k);
    for (auto& c : out) c = draw(state, h_.vertex_count());
    return out;
  }

  VertexId place_robber(const std::vector<VertexId>& cops) override {
    std::uint64_t state = seed_ ^ 0x2u;
    for (VertexId c : cops) state = mix64(state ^ static_cast<std::uint64_t>(c));
    return draw(state, h_.vertex_count());
  }

  std::vector<VertexId> cop_move(const GameState& s) override {
    std::uint64_t state = fingerprint(s);
    auto sorted = s.cops;
    std::sort(sorted.begin(), sorted.end());
    std::vector<VertexId> out(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto& nb = h_.closed_neighbors(sorted[i]);
      out[i] = nb[draw(state, static_cast<int>(nb.size()))];
    }
    return out;
  }

  VertexId robber_move(const GameState& s) override {
    std::uint64_t state = fingerprint(s);
    std::vector<VertexId> legal;
    for (VertexId r : h_.closed_neighbors(s.robber)) {
      if (variant_ == Variant::ActiveRobber && r == s.robber) continue;
      legal.push_back(r);
    }
    if (legal.empty()) throw Error("robber has no legal move");
    return legal[draw(state, static_cast<int>(legal.size()))];
  }

 private:
  std::uint64_t fingerprint(const GameState& s) const {
    std::uint64_t x = seed_;
    for (VertexId c : s.cops) x = mix64(x ^ static_cast<std::uint64_t>(c + 1));
    x = mix64(x ^ static_cast<std::uint64_t>(s.robber + 0x100));
    return mix64(x ^ (s.to_move == Side::Cop ? 0xA5u : 0x5Au));
  }

  Hypergraph h_;
  Side side_;
  Variant variant_;
  std::uint64_t seed_;
};

class PassStrategy : public Strategy {
 public:
  PassStrategy(Hypergraph h, Side side) : h_(std::move(h)), side_(side) {}
  Side side() const override { return side_; }

  std::vector<VertexId> place_cops(int k) override {
    return std::vector<VertexId>(k, 0);
  }
  VertexId place_robber(const std::vector<VertexId>& cops) override {
    for (VertexId r = 0; r < h_.vertex_count(); ++r)
      if (std::find(cops.begin(), cops.end(), r) == cops.end()) return r;
    return 0;
  }
  std::vector<VertexId> cop_move(const GameState& s) override {
    auto sorted = s.cops;
    std::sort(sorted.begin(), sorted.end());
    return sorted;
  }
  VertexId robber_move(const GameState& s) override { return s.robber; }

 private:
  Hypergraph h_;
  Side side_;
};

}  // namespace

StrategyPtr extract_strategy(WinTablePtr table, Side side) {
  if (side == Side::Cop) return std::make_shared<ExtractedCopStrategy>(std::move(table));
  return std::make_shared<ExtractedRobberStrategy>(std::move(table));
}

StrategyPtr pursuit_strategy(WinTablePtr table) {
  return std::make_shared<PursuitStrategy>(std::move(table));
}

StrategyPtr random_strategy(const Hypergraph& h, Side side, Variant variant,
                            std::uint64_t seed) {
  return std::make_shared<RandomStrategy>(h, side, variant, seed);
}

StrategyPtr pass_strategy(const Hypergraph& h, Side side) {
  return std::make_shared<PassStrategy>(h, side);
}

MatchTrace play_match(const Hypergraph& h, int k, Strategy& cop_strategy,
                      Strategy& robber_strategy, int max_rounds, Variant variant) {
  if (k < 1) throw Error("need at least one cop");
  if (cop_strategy.side() != Side::Cop)
    throw Error("cop_strategy must play the cop side");
  if (robber_strategy.side() != Side::Robber)
    throw Error("robber_strategy must play the robber side");

  MatchTrace trace;
  auto cops = cop_strategy.place_cops(k);
  if (static_cast<int>(cops.size()) != k)
    throw Error("cop placement has wrong size");
  for (VertexId c : cops) h.check_vertex(c);
  std::sort(cops.begin(), cops.end());
  trace.initial_cops = cops;

  VertexId robber = robber_strategy.place_robber(cops);
  h.check_vertex(robber);
  trace.initial_robber = robber;
  trace.captured = tuple_contains(cops, robber);

  for (int round = 1; round <= max_rounds && !trace.captured; ++round) {
    trace.rounds_played = round;
    MatchRound record;

    auto moved = cop_strategy.cop_move(GameState{cops, robber, Side::Cop});
    if (static_cast<int>(moved.size()) != k)
      throw Error("cop side emitted a move of wrong size in round " +
                  std::to_string(round));
    for (int i = 0; i < k; ++i) {
      const auto& nb = h.closed_neighbors(cops[i]);
      if (!std::binary_search(nb.begin(), nb.end(), moved[i]))
        throw Error("cop side emitted an illegal move in round " +
                    std::to_string(round));
    }
    record.cop_to = moved;
    cops = moved;
    std::sort(cops.begin(), cops.end());
    if (tuple_contains(cops, robber)) {
      trace.captured = true;
      trace.rounds.push_back(std::move(record));
      break;
    }

    VertexId next = robber_strategy.robber_move(GameState{cops, robber, Side::Robber});
    const auto& nb = h.closed_neighbors(robber);
    const bool adjacent_ok = std::binary_search(nb.begin(), nb.end(), next);
    const bool stays = next == robber;
    if (!adjacent_ok || (variant == Variant::ActiveRobber && stays))
      throw Error("robber side emitted an illegal move in round " +
                  std::to_string(round));
    record.robber_to = next;
    robber = next;
    trace.rounds.push_back(std::move(record));
    if (tuple_contains(cops, robber)) trace.captured = true;
  }
  return trace;
}

}  // namespace hypercop

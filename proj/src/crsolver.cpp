#include "scar/crsolver.hpp"

#include <bit>
#include <sstream>

#include "scar/errors.hpp"

namespace scar {

std::optional<int> CrSolution::capturer(StateId s) const {
  if (!finite(s) || std::popcount(capturers[s]) != 1) return std::nullopt;
  return std::countr_zero(capturers[s]) + 1;
}

CrSolution solve_modified_cr(const Arena& arena) {
  const StateId count = arena.state_count();
  CrSolution sol;
  sol.capture_time.assign(count, kNeverCaptured);
  sol.opt_moves.assign(count, 0);
  sol.capturers.assign(count, 0);

  // Retrograde layering: states are finalized in nondecreasing capture time.
  // A cop-move state is finalized by its first finalized successor, a
  // robber-move state by its last.
  std::vector<int> unresolved(count, -1);
  std::vector<StateId> queue;
  for (StateId s = 0; s < count; ++s) {
    if (arena.is_capture(s)) {
      sol.capture_time[s] = 0;
      sol.capturers[s] = static_cast<std::uint8_t>(arena.cops_at_robber(s));
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId t = queue[head];
    arena.for_each_predecessor(t, [&](StateId p, int) {
      if (sol.finite(p) || arena.is_capture(p)) return;
      if (!arena.robber_moves(p)) {
        sol.capture_time[p] = sol.capture_time[t] + 1;
        queue.push_back(p);
        return;
      }
      if (unresolved[p] < 0) unresolved[p] = arena.move_count(p);
      if (--unresolved[p] == 0) {
        sol.capture_time[p] = sol.capture_time[t] + 1;
        queue.push_back(p);
      }
    });
  }

  for (StateId s = 0; s < count; ++s) {
    if (arena.is_capture(s)) continue;
    const int value = sol.capture_time[s];
    MoveSet opt = 0;
    if (value == kNeverCaptured) {
      if (arena.robber_moves(s)) {
        arena.for_each_successor(s, [&](int slot, StateId next) {
          if (!sol.finite(next)) opt |= MoveSet{1} << slot;
        });
      } else {
        opt = arena.all_moves(s);
      }
    } else {
      arena.for_each_successor(s, [&](int slot, StateId next) {
        if (sol.capture_time[next] == value - 1) opt |= MoveSet{1} << slot;
      });
    }
    sol.opt_moves[s] = opt;
  }

  // Capturer sets, in increasing capture time (queue order).
  for (StateId s : queue) {
    if (arena.is_capture(s)) continue;
    std::uint8_t mask = 0;
    arena.for_each_successor(s, [&](int slot, StateId next) {
      if (sol.opt_moves[s] >> slot & 1) mask |= sol.capturers[next];
    });
    sol.capturers[s] = mask;
  }
  return sol;
}

CaptureAttribution capture_attribution(const CrSolution& sol, const Arena& arena, StateId s) {
  if (!sol.finite(s)) throw ValidationError("state " + arena.label(s) + " has infinite capture time");

  // Depth-first enumeration of optimal plays, remembering the first outcome
  // seen and the play that produced it.
  struct Outcome {
    int cop;
    int time;
    std::vector<StateId> play;
  };
  std::optional<Outcome> first;
  std::vector<StateId> path{s};
  std::vector<char> done(arena.state_count(), 0);

  auto describe = [&](const Outcome& o) {
    std::ostringstream out;
    out << "cop " << o.cop << " at time " << o.time << " via";
    for (StateId x : o.play) out << ' ' << arena.label(x);
    return out.str();
  };

  auto visit = [&](auto&& self, StateId cur) -> void {
    if (arena.is_capture(cur)) {
      std::uint32_t cops = arena.cops_at_robber(cur);
      int time = static_cast<int>(path.size()) - 1;
      for (int cop = 1; cop < arena.n_players(); ++cop) {
        if (!(cops >> (cop - 1) & 1)) continue;
        Outcome o{cop, time, path};
        if (!first) {
          first = o;
        } else if (first->cop != o.cop || first->time != o.time || std::popcount(cops) != 1) {
          throw UniquenessViolation("optimal plays from " + arena.label(s) + " disagree: " + describe(*first) +
                                    " versus " + describe(o));
        }
      }
      return;
    }
    // Every optimal play from a fully explored state already agreed with first.
    if (done[cur]) return;
    arena.for_each_successor(cur, [&](int slot, StateId next) {
      if (!(sol.opt_moves[cur] >> slot & 1)) return;
      path.push_back(next);
      self(self, next);
      path.pop_back();
    });
    done[cur] = 1;
  };
  visit(visit, s);

  if (!first || first->time != sol.capture_time[s])
    throw UniquenessViolation("optimal plays from " + arena.label(s) + " do not end at the solved capture time");
  return {first->cop, first->time};
}

namespace {

// Classic arena: index = ((c_1*|V| + ... + c_k)*|V| + r)*2 + turn,
// turn 0 = cops to move, 1 = robber to move.
class ClassicArena {
 public:
  ClassicArena(const Graph& g, int k, std::size_t max_states) : g_(g), k_(k), n_(g.vertex_count()) {
    std::size_t count = 2;
    for (int i = 0; i <= k; ++i) {
      if (count > max_states / static_cast<std::size_t>(n_))
        throw CapacityExceeded("classic game with " + std::to_string(k) + " cops exceeds the state cap");
      count *= static_cast<std::size_t>(n_);
    }
    count_ = static_cast<StateId>(count);
  }

  StateId count() const { return count_; }
  StateId index(const std::vector<Vertex>& cops, Vertex robber, int turn) const {
    StateId id = 0;
    for (Vertex c : cops) id = id * n_ + c;
    return (id * n_ + robber) * 2 + turn;
  }
  void decode(StateId id, std::vector<Vertex>& cops, Vertex& robber, int& turn) const {
    turn = static_cast<int>(id % 2);
    id /= 2;
    robber = static_cast<Vertex>(id % n_);
    id /= n_;
    cops.assign(k_, 0);
    for (int i = k_ - 1; i >= 0; --i) {
      cops[i] = static_cast<Vertex>(id % n_);
      id /= n_;
    }
  }

  // Cops-win attractor.
  std::vector<char> solve() const {
    std::vector<char> win(count_, 0);
    std::vector<int> pending(count_, -1);
    std::vector<StateId> queue;
    std::vector<Vertex> cops;
    Vertex r;
    int turn;
    auto captured = [&](const std::vector<Vertex>& cs, Vertex rob) {
      for (Vertex c : cs)
        if (c == rob) return true;
      return false;
    };
    for (StateId s = 0; s < count_; ++s) {
      decode(s, cops, r, turn);
      if (captured(cops, r)) {
        win[s] = 1;
        queue.push_back(s);
      }
    }
    std::vector<Vertex> prev;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      decode(queue[head], cops, r, turn);
      if (turn == 0) {
        // Predecessors: robber-turn states with the robber one step away.
        for (Vertex from : g_.closed_neighbors(r)) {
          StateId p = index(cops, from, 1);
          if (win[p] || captured(cops, from)) continue;
          if (pending[p] < 0) pending[p] = static_cast<int>(g_.closed_neighbors(from).size());
          if (--pending[p] == 0) {
            win[p] = 1;
            queue.push_back(p);
          }
        }
      } else {
        // Predecessors: cop-turn states, every cop one step away.
        prev = cops;
        auto rec = [&](auto&& self, int i) -> void {
          if (i == k_) {
            StateId p = index(prev, r, 0);
            if (!win[p] && !captured(prev, r)) {
              win[p] = 1;
              queue.push_back(p);
            }
            return;
          }
          for (Vertex from : g_.closed_neighbors(cops[i])) {
            prev[i] = from;
            self(self, i + 1);
          }
          prev[i] = cops[i];
        };
        rec(rec, 0);
      }
    }
    return win;
  }

 private:
  const Graph& g_;
  int k_;
  int n_;
  StateId count_ = 0;
};

}  // namespace

bool classic_cop_win(const Graph& g, int k, std::size_t max_states) {
  if (k < 1) throw ValidationError("classic_cop_win needs k >= 1");
  ClassicArena arena(g, k, max_states);
  auto win = arena.solve();
  for (StateId s = 0; s < arena.count(); s += 2)
    if (!win[s]) return false;
  return true;
}

bool classic_cop_win_placement(const Graph& g, int k, std::size_t max_states) {
  if (k < 1) throw ValidationError("classic_cop_win_placement needs k >= 1");
  ClassicArena arena(g, k, max_states);
  auto win = arena.solve();
  const int n = g.vertex_count();
  // States with the same cop placement are contiguous blocks of 2n ids.
  for (StateId block = 0; block < arena.count(); block += 2 * n) {
    bool all = true;
    for (Vertex r = 0; r < n && all; ++r) all = win[block + 2 * r] != 0;
    if (all) return true;
  }
  return false;
}

std::optional<int> classic_cop_number(const Graph& g, int k_max, std::size_t max_states) {
  if (k_max < 1) throw ValidationError("classic_cop_number needs k_max >= 1");
  for (int k = 1; k <= k_max; ++k)
    if (classic_cop_win(g, k, max_states)) return k;
  return std::nullopt;
}

}  // namespace scar

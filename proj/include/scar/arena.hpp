#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scar/graph.hpp"

namespace scar {

using StateId = std::uint32_t;
// Bit i set <=> slot i of the mover's closed neighborhood (sorted targets).
using MoveSet = std::uint64_t;

inline constexpr std::size_t kDefaultMaxStates = 10'000'000;
inline constexpr int kMaxPlayers = 9;

// (x^1, ..., x^{N-1}, x^N, n): cop positions, robber position, token to move.
// Tokens are numbered 1..N; token N is the robber.
struct State {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  int mover = 1;

  friend bool operator==(const State&, const State&) = default;
};

// Literal "c1,...,c_{N-1};r;n" with 0-based vertices and 1-based mover.
State parse_state(std::string_view literal);
std::string format_state(const State& s);

// Enumerated state space of the N-token game on a graph. Successors are
// computed arithmetically from the dense mixed-radix index
//   ((x^1*|V| + x^2)*|V| + ... + x^N)*N + (n-1).
// Capture states are absorbing; the terminal bookkeeping state is implicit.
class Arena {
 public:
  Arena(Graph graph, int n_players, std::size_t max_states = kDefaultMaxStates);

  const Graph& graph() const { return graph_; }
  int n_players() const { return n_players_; }
  int cop_count() const { return n_players_ - 1; }
  StateId state_count() const { return state_count_; }

  StateId encode(const State& s) const;
  State decode(StateId id) const;
  std::string label(StateId id) const { return format_state(decode(id)); }
  // Validates vertices and mover against this arena.
  StateId parse(std::string_view literal) const { return encode(parse_state(literal)); }

  int mover(StateId id) const { return static_cast<int>(id % n_players_) + 1; }
  bool robber_moves(StateId id) const { return mover(id) == n_players_; }
  Vertex position(StateId id, int token) const {
    return static_cast<Vertex>((id / stride_[token]) % vertex_count_);
  }
  Vertex robber(StateId id) const { return position(id, n_players_); }

  bool is_capture(StateId id) const { return capture_mask_[id] != 0; }
  // Bit (i-1) set <=> cop i shares the robber's vertex.
  std::uint32_t cops_at_robber(StateId id) const { return capture_mask_[id]; }
  std::size_t capture_count() const { return capture_count_; }

  int move_count(StateId id) const {
    return static_cast<int>(graph_.closed_neighbors(position(id, mover(id))).size());
  }
  MoveSet all_moves(StateId id) const {
    int k = move_count(id);
    return k == 64 ? ~MoveSet{0} : ((MoveSet{1} << k) - 1);
  }
  Vertex move_target(StateId id, int slot) const {
    return graph_.closed_neighbors(position(id, mover(id)))[slot];
  }
  // -1 if target is not in the mover's closed neighborhood.
  int move_slot(StateId id, Vertex target) const;
  StateId successor(StateId id, int slot) const {
    int n = mover(id);
    Vertex from = position(id, n);
    Vertex to = graph_.closed_neighbors(from)[slot];
    return with_mover(id + (static_cast<StateId>(to) - static_cast<StateId>(from)) * stride_[n], n % n_players_ + 1);
  }
  std::vector<StateId> successors(StateId id) const;

  // f(slot, successor)
  template <class F>
  void for_each_successor(StateId id, F&& f) const {
    int n = mover(id);
    Vertex from = position(id, n);
    StateId base = with_mover(id - static_cast<StateId>(from) * stride_[n], n % n_players_ + 1);
    auto targets = graph_.closed_neighbors(from);
    for (int slot = 0; slot < static_cast<int>(targets.size()); ++slot)
      f(slot, base + static_cast<StateId>(targets[slot]) * stride_[n]);
  }

  // f(predecessor, slot of the move predecessor -> id). Includes capture
  // predecessors; callers skip those as needed.
  template <class F>
  void for_each_predecessor(StateId id, F&& f) const {
    int prev = mover(id) == 1 ? n_players_ : mover(id) - 1;
    Vertex now = position(id, prev);
    StateId base = with_mover(id - static_cast<StateId>(now) * stride_[prev], prev);
    for (Vertex from : graph_.closed_neighbors(now)) {
      auto targets = graph_.closed_neighbors(from);
      int slot = static_cast<int>(std::lower_bound(targets.begin(), targets.end(), now) - targets.begin());
      f(base + static_cast<StateId>(from) * stride_[prev], slot);
    }
  }

 private:
  StateId with_mover(StateId id, int mover) const {
    return id - id % n_players_ + static_cast<StateId>(mover - 1);
  }

  Graph graph_;
  int n_players_;
  int vertex_count_;
  StateId state_count_;
  std::vector<StateId> stride_;  // indexed by token 1..N
  std::vector<std::uint8_t> capture_mask_;
  std::size_t capture_count_ = 0;
};

// Noncapture states at the end of some finite noncapture history from s0
// (s0 included).
std::vector<StateId> reachable_noncapture(const Arena& arena, StateId s0);

struct Play {
  StateId initial = 0;
  std::vector<Vertex> moves;
  std::vector<StateId> states;  // states[0] = initial, states[t] after move t
  std::optional<int> capture_time;  // nullopt = never (evasion)
  std::vector<int> capturing_cops;  // 1-based, empty on evasion
};

// profile[s] = target vertex chosen by mover(s) at s; entries for capture
// states are ignored. max_steps == 0 means 2 * |states|.
Play simulate(const Arena& arena, StateId s0, std::span<const Vertex> profile, std::size_t max_steps = 0);

// Requires a path graph: all cops strictly on one side of the robber.
bool all_cops_one_side(const Graph& g, const State& s);

}  // namespace scar

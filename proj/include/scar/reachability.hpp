#pragma once

#include <functional>
#include <span>
#include <vector>

#include "scar/arena.hpp"

namespace scar {

// Turn-based reachability game on an arena. The reaching player wins at a
// target state; every other capture state is a losing sink. At a noncapture state the
// reaching player controls the move iff `reacher_moves(s)`; only moves in
// `allowed(s)` are available there (for either side).
struct ReachabilityGame {
  std::span<const char> target;
  std::function<bool(StateId)> reacher_moves;
  // Optional move restriction; empty means every move is allowed.
  std::function<MoveSet(StateId)> allowed;
};

// Attractor of the target set (1 = reacher can force a target state).
// Computed by backward propagation with successor counters.
std::vector<char> solve_reachability(const Arena& arena, const ReachabilityGame& game);

}  // namespace scar

#include "scar/reachability.hpp"

#include <bit>

namespace scar {

std::vector<char> solve_reachability(const Arena& arena, const ReachabilityGame& game) {
  const StateId count = arena.state_count();
  std::vector<char> win(count, 0);
  // Remaining allowed moves not yet known to be winning (opponent states).
  std::vector<int> pending(count, -1);
  std::vector<StateId> queue;

  auto allowed = [&](StateId s) { return game.allowed ? game.allowed(s) : arena.all_moves(s); };

  for (StateId s = 0; s < count; ++s) {
    if (game.target[s]) {
      win[s] = 1;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    StateId t = queue[head];
    arena.for_each_predecessor(t, [&](StateId p, int slot) {
      if (win[p] || arena.is_capture(p)) return;
      MoveSet moves = allowed(p);
      if (!(moves >> slot & 1)) return;
      if (game.reacher_moves(p)) {
        win[p] = 1;
        queue.push_back(p);
        return;
      }
      if (pending[p] < 0) pending[p] = std::popcount(moves);
      if (--pending[p] == 0) {
        win[p] = 1;
        queue.push_back(p);
      }
    });
  }
  return win;
}

}  // namespace scar

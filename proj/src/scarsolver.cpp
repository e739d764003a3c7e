#include "scar/scarsolver.hpp"

#include <bit>

#include "scar/errors.hpp"

namespace scar {

void GameParams::validate(bool allow_wide_epsilon) const {
  if (n_players < 2) throw ValidationError("N must be at least 2");
  if (gamma <= Rational(0) || gamma >= Rational(1))
    throw ValidationError("gamma must lie in (0,1), got " + gamma.str());
  Rational eps_max(1, n_players - 1);
  if (allow_wide_epsilon && eps_max < Rational(1, 2)) eps_max = Rational(1, 2);
  if (epsilon < Rational(0) || epsilon > eps_max)
    throw ValidationError("epsilon must lie in [0," + eps_max.str() + "], got " + epsilon.str());
}

Rational terminal_payoff(const Arena& arena, StateId s, int m, const GameParams& params) {
  if (!arena.is_capture(s)) throw ValidationError("terminal_payoff at noncapture state " + arena.label(s));
  if (m < 1 || m >= arena.n_players()) throw ValidationError("protected cop index out of range");
  const int n = arena.n_players();
  std::uint32_t cops = arena.cops_at_robber(s);
  int k = std::popcount(cops);
  if (k == n - 1) return Rational(1, n - 1);
  if (cops >> (m - 1) & 1) return (Rational(1) - params.epsilon) / Rational(k);
  return params.epsilon / Rational(n - k - 1);
}

DiscountedSolution solve_discounted(const Arena& arena, const std::vector<Rational>& terminal,
                                    const std::function<bool(StateId)>& maximizer_moves, const Rational& gamma,
                                    const UpdateObserver& observer) {
  const StateId count = arena.state_count();
  const mpq_class& g = gamma.raw();
  std::vector<mpq_class> value(count);
  for (StateId s = 0; s < count; ++s)
    if (arena.is_capture(s)) value[s] = terminal[s].raw();

  std::vector<char> is_max(count, 0);
  for (StateId s = 0; s < count; ++s)
    if (!arena.is_capture(s)) is_max[s] = maximizer_moves(s);

  auto backup = [&](StateId s) {
    const mpq_class* best = nullptr;
    arena.for_each_successor(s, [&](int, StateId next) {
      const mpq_class& v = value[next];
      if (!best || (is_max[s] ? cmp(v, *best) > 0 : cmp(v, *best) < 0)) best = &v;
    });
    return mpq_class(g * *best);
  };

  // Jacobi sweeps from the all-zero function, recomputing only states whose
  // successors changed in the previous round.
  std::vector<StateId> candidates;
  for (StateId s = 0; s < count; ++s)
    if (!arena.is_capture(s)) candidates.push_back(s);

  const long cap = 4L * static_cast<long>(count);
  std::vector<char> marked(count, 0);
  std::vector<std::pair<StateId, mpq_class>> updates;
  int rounds = 0;
  while (true) {
    updates.clear();
    for (StateId s : candidates) {
      mpq_class next = backup(s);
      int c = cmp(next, value[s]);
      if (c < 0)
        throw SolverError("value iteration lost monotonicity at " + arena.label(s));
      if (c > 0) updates.emplace_back(s, std::move(next));
    }
    ++rounds;
    if (updates.empty()) break;
    if (rounds >= cap) throw NonConvergence("no exact fixed point after " + std::to_string(cap) + " rounds");

    candidates.clear();
    for (auto& [s, v] : updates) {
      if (observer) observer(rounds, s, Rational(value[s]), Rational(v));
      value[s] = std::move(v);
      arena.for_each_predecessor(s, [&](StateId p, int) {
        if (!marked[p] && !arena.is_capture(p)) {
          marked[p] = 1;
          candidates.push_back(p);
        }
      });
    }
    for (StateId p : candidates) marked[p] = 0;
  }

  DiscountedSolution sol;
  sol.iterations = rounds;
  sol.opt_moves.assign(count, 0);
  for (StateId s = 0; s < count; ++s) {
    if (arena.is_capture(s)) continue;
    const mpq_class target = value[s] / g;
    MoveSet opt = 0;
    arena.for_each_successor(s, [&](int slot, StateId next) {
      if (cmp(value[next], target) == 0) opt |= MoveSet{1} << slot;
    });
    sol.opt_moves[s] = opt;
  }
  sol.value.reserve(count);
  for (auto& v : value) sol.value.emplace_back(std::move(v));
  return sol;
}

GameSolution solve_game(const Arena& arena, int m, const GameParams& params) {
  if (m < 1 || m >= arena.n_players())
    throw ValidationError("game index m must be in [1," + std::to_string(arena.n_players() - 1) + "]");
  if (params.n_players != arena.n_players()) throw ValidationError("parameter N does not match the arena");
  std::vector<Rational> terminal(arena.state_count());
  for (StateId s = 0; s < arena.state_count(); ++s)
    if (arena.is_capture(s)) terminal[s] = terminal_payoff(arena, s, m, params);
  auto solved = solve_discounted(arena, terminal, [&](StateId s) { return arena.mover(s) == m; }, params.gamma);
  return GameSolution{m, params, std::move(solved.value), std::move(solved.opt_moves), solved.iterations};
}

std::vector<MoveSet> opt_move_table(const Arena& arena, const GameSolution& sol, int n) {
  std::vector<MoveSet> out(arena.state_count(), 0);
  for (StateId s = 0; s < arena.state_count(); ++s)
    if (arena.mover(s) == n) out[s] = sol.opt_moves[s];
  return out;
}

DiscountedSolution solve_cr_discounted(const Arena& arena, const Rational& gamma) {
  std::vector<Rational> terminal(arena.state_count(), Rational(1));
  return solve_discounted(arena, terminal, [&](StateId s) { return !arena.robber_moves(s); }, gamma);
}

}  // namespace scar

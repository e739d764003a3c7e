#include "scar/positionality.hpp"

#include <algorithm>
#include <bit>

#include "scar/errors.hpp"

namespace scar {

SolvedGames solve_all_games(const Arena& arena, const GameParams& params) {
  SolvedGames solved{params, {}};
  for (int m = 1; m < arena.n_players(); ++m) solved.games.push_back(solve_game(arena, m, params));
  return solved;
}

PositionalityVerdict evaluate_positionality(const Arena& arena, const CrSolution& cr, const SolvedGames& solved,
                                            std::span<const StateId> reachable, StateId s0) {
  PositionalityVerdict verdict;
  verdict.s0 = s0;
  verdict.params = solved.params;
  verdict.positional_exists = true;
  for (StateId s : reachable) {
    const int n = arena.mover(s);
    const MoveSet cr_opt = cr.opt_moves[s];
    for (const GameSolution& game : solved.games) {
      const MoveSet opt = game.opt_moves[s];
      if ((opt & cr_opt) == 0) {
        verdict.positional_exists = false;
        verdict.witnesses.push_back({n, game.m, s});
      }
      if (opt & ~cr_opt) verdict.nonpositional_exists = true;
    }
  }
  return verdict;
}

PositionalityVerdict evaluate_positionality(const Arena& arena, const CrSolution& cr, const SolvedGames& solved,
                                            StateId s0) {
  auto reachable = reachable_noncapture(arena, s0);
  return evaluate_positionality(arena, cr, solved, reachable, s0);
}

PositionalityVerdict check_positionality(const Arena& arena, StateId s0, const GameParams& params) {
  if (arena.is_capture(s0)) throw ValidationError("initial state " + arena.label(s0) + " is a capture state");
  auto cr = solve_modified_cr(arena);
  return evaluate_positionality(arena, cr, solve_all_games(arena, params), s0);
}

std::vector<PositionalityVerdict> scan_region(const Graph& g, int n_players, const State& s0,
                                              std::span<const Rational> gamma_grid,
                                              std::span<const Rational> epsilon_grid, bool allow_wide_epsilon,
                                              std::size_t max_states) {
  Arena arena(g, n_players, max_states);
  StateId start = arena.encode(s0);
  auto reachable = reachable_noncapture(arena, start);
  auto cr = solve_modified_cr(arena);
  std::vector<PositionalityVerdict> out;
  for (const Rational& eps : epsilon_grid) {
    for (const Rational& gamma : gamma_grid) {
      GameParams params{n_players, gamma, eps};
      params.validate(allow_wide_epsilon);
      out.push_back(evaluate_positionality(arena, cr, solve_all_games(arena, params), reachable, start));
    }
  }
  return out;
}

namespace {

Vertex lowest_target(const Arena& arena, StateId s, MoveSet moves) {
  return arena.move_target(s, std::countr_zero(moves));
}

}  // namespace

TriggerProfile build_trigger_profile(const Arena& arena, const CrSolution& cr, const SolvedGames& solved) {
  const int n_players = arena.n_players();
  if (static_cast<int>(solved.games.size()) != n_players - 1)
    throw ValidationError("trigger profile needs all N-1 auxiliary games");
  TriggerProfile profile;
  profile.punishment.assign(n_players, std::vector<Vertex>(arena.state_count(), -1));
  profile.cooperative.assign(arena.state_count(), -1);
  for (StateId s = 0; s < arena.state_count(); ++s) {
    if (arena.is_capture(s)) continue;
    for (int m = 1; m <= n_players; ++m) {
      MoveSet opt = m < n_players ? solved.games[m - 1].opt_moves[s] : cr.opt_moves[s];
      profile.punishment[m - 1][s] = lowest_target(arena, s, opt);
    }
    profile.cooperative[s] = profile.punishment[arena.mover(s) - 1][s];
  }
  return profile;
}

TriggerPlay simulate_trigger(const Arena& arena, StateId s0, const TriggerProfile& profile,
                             const std::optional<Deviation>& deviant, std::size_t max_steps) {
  if (deviant) {
    if (deviant->player < 1 || deviant->player > arena.n_players())
      throw ValidationError("deviant player out of range");
    if (deviant->table.size() != arena.state_count()) throw ValidationError("deviant table size mismatch");
  }
  if (max_steps == 0) max_steps = 2 * static_cast<std::size_t>(arena.state_count());

  TriggerPlay out;
  Play& play = out.play;
  play.initial = s0;
  play.states.push_back(s0);
  int mode = 0;
  std::vector<char> visited(arena.state_count(), 0);
  StateId cur = s0;
  for (std::size_t t = 0;; ++t) {
    if (arena.is_capture(cur)) {
      play.capture_time = static_cast<int>(t);
      for (int cop = 1; cop < arena.n_players(); ++cop)
        if (arena.cops_at_robber(cur) >> (cop - 1) & 1) play.capturing_cops.push_back(cop);
      return out;
    }
    // The profile is positional within a mode, so a repeat proves evasion.
    if (visited[cur] || t >= max_steps) return out;
    visited[cur] = 1;

    const int n = arena.mover(cur);
    Vertex move;
    if (deviant && n == deviant->player) {
      move = deviant->table[cur];
      if (mode == 0 && move != profile.cooperative[cur]) {
        mode = deviant->player;
        out.switch_time = static_cast<int>(t) + 1;
        std::fill(visited.begin(), visited.end(), 0);
        visited[cur] = 1;
      }
    } else {
      move = mode == 0 ? profile.cooperative[cur] : profile.punishment[mode - 1][cur];
    }
    int slot = arena.move_slot(cur, move);
    if (slot < 0)
      throw ValidationError("illegal move to vertex " + std::to_string(move) + " at state " + arena.label(cur));
    out.modes.push_back(mode);
    play.moves.push_back(move);
    cur = arena.successor(cur, slot);
    play.states.push_back(cur);
  }
}

}  // namespace scar

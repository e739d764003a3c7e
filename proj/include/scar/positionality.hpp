#pragma once

#include <optional>
#include <span>
#include <vector>

#include "scar/arena.hpp"
#include "scar/crsolver.hpp"
#include "scar/scarsolver.hpp"

namespace scar {

// Token n at state s (game m) has no optimal move that is also CR-optimal.
struct PositionalityWitness {
  int n = 0;
  int m = 0;
  StateId state = 0;
};

struct PositionalityVerdict {
  bool positional_exists = false;
  bool nonpositional_exists = false;
  std::vector<PositionalityWitness> witnesses;
  StateId s0 = 0;
  GameParams params;
};

// The CR solution and every auxiliary game for one (gamma, epsilon) point.
struct SolvedGames {
  GameParams params;
  std::vector<GameSolution> games;  // games[m-1] for m = 1..N-1
};

SolvedGames solve_all_games(const Arena& arena, const GameParams& params);

// Per-state test over the noncapture states reachable from s0: positional
// iff every optimal-move set meets the CR-optimal set; nonpositional iff some
// optimal-move set is not contained in it.
PositionalityVerdict evaluate_positionality(const Arena& arena, const CrSolution& cr, const SolvedGames& solved,
                                            StateId s0);
PositionalityVerdict evaluate_positionality(const Arena& arena, const CrSolution& cr, const SolvedGames& solved,
                                            std::span<const StateId> reachable, StateId s0);

PositionalityVerdict check_positionality(const Arena& arena, StateId s0, const GameParams& params);

// One verdict per (epsilon, gamma) grid point, epsilon-major. The arena and
// CR solution are built once.
std::vector<PositionalityVerdict> scan_region(const Graph& g, int n_players, const State& s0,
                                              std::span<const Rational> gamma_grid,
                                              std::span<const Rational> epsilon_grid, bool allow_wide_epsilon = false,
                                              std::size_t max_states = kDefaultMaxStates);

// Concrete trigger-strategy tables with lowest-vertex tie-breaking.
// punishment[m-1][s] is the move of mover(s) in game m (m = N: CR game);
// cooperative[s] = punishment[mover(s)-1][s].
struct TriggerProfile {
  std::vector<Vertex> cooperative;
  std::vector<std::vector<Vertex>> punishment;
};

TriggerProfile build_trigger_profile(const Arena& arena, const CrSolution& cr, const SolvedGames& solved);

struct Deviation {
  int player = 0;             // 1..N
  std::vector<Vertex> table;  // the deviant's per-state moves
};

struct TriggerPlay {
  Play play;
  std::optional<int> switch_time;  // 1-based move index of the first deviation
  std::vector<int> modes;          // per move: 0 cooperative, m punishing m
};

TriggerPlay simulate_trigger(const Arena& arena, StateId s0, const TriggerProfile& profile,
                             const std::optional<Deviation>& deviant, std::size_t max_steps = 0);

}  // namespace scar

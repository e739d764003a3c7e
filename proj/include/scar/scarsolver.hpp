#pragma once

#include <functional>
#include <vector>

#include "scar/arena.hpp"
#include "scar/rational.hpp"

namespace scar {

struct GameParams {
  int n_players = 3;
  Rational gamma{1, 2};
  Rational epsilon{0};

  // gamma in (0,1); epsilon in [0, 1/(N-1)], or [0, max(1/(N-1), 1/2)] when
  // wide epsilons are allowed.
  void validate(bool allow_wide_epsilon = false) const;
};

// Payoff coefficient of P_m at a capture state, before discounting. With K
// cops on the robber's vertex: 1/(N-1) if K = N-1, (1-eps)/K if cop m is
// among them, eps/(N-K-1) otherwise.
Rational terminal_payoff(const Arena& arena, StateId s, int m, const GameParams& params);

// Deterministic discounted game with terminal payoffs at capture states.
// The maximizer moves at states where `maximizer_moves(s)`.
struct DiscountedSolution {
  std::vector<Rational> value;
  std::vector<MoveSet> opt_moves;  // 0 on capture states
  int iterations = 0;
};

// Called for each value change as (round, state, old value, new value).
using UpdateObserver = std::function<void(int, StateId, const Rational&, const Rational&)>;

DiscountedSolution solve_discounted(const Arena& arena, const std::vector<Rational>& terminal,
                                    const std::function<bool(StateId)>& maximizer_moves, const Rational& gamma,
                                    const UpdateObserver& observer = {});

// Zero-sum auxiliary game protecting cop m (1..N-1): P_m moves cop m and
// maximizes, the coalition of all other tokens minimizes.
struct GameSolution {
  int m = 1;
  GameParams params;
  std::vector<Rational> value;
  std::vector<MoveSet> opt_moves;
  int iterations = 0;
};

GameSolution solve_game(const Arena& arena, int m, const GameParams& params);

// opt_moves restricted to states where token n moves; 0 elsewhere.
std::vector<MoveSet> opt_move_table(const Arena& arena, const GameSolution& sol, int n);

// The cops-vs-robber game as a discounted game: payoff 1 at every capture,
// cops maximize. Its value is gamma^T(s) (0 on evasion).
DiscountedSolution solve_cr_discounted(const Arena& arena, const Rational& gamma);

}  // namespace scar

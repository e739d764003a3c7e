#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "scar/arena.hpp"

namespace scar {

inline constexpr int kNeverCaptured = std::numeric_limits<int>::max();

// Exact solution of the modified cops-and-robber game, where one token moves
// per turn and time counts moves. Cops minimize the capture time, the robber
// maximizes it.
struct CrSolution {
  std::vector<int> capture_time;     // kNeverCaptured = infinite
  std::vector<MoveSet> opt_moves;    // CR-optimal moves; 0 on capture states
  std::vector<std::uint8_t> capturers;  // bitmask of cops ending optimal plays

  bool finite(StateId s) const { return capture_time[s] != kNeverCaptured; }
  // 1-based capturing cop; nullopt when the robber evades.
  std::optional<int> capturer(StateId s) const;
};

CrSolution solve_modified_cr(const Arena& arena);

struct CaptureAttribution {
  int cop = 0;
  int time = 0;
};

// Walks every optimal play from s and confirms a single capturing cop at a
// single capture time. Throws UniquenessViolation with two witness plays
// otherwise, ValidationError if s has infinite capture time.
CaptureAttribution capture_attribution(const CrSolution& sol, const Arena& arena, StateId s);

// Classic game: k cops move simultaneously, then the robber; stay allowed.
// True iff the cops capture from every start position with cops moving first.
bool classic_cop_win(const Graph& g, int k, std::size_t max_states = kDefaultMaxStates);
// Cops choose their start, then the robber does, then cops move first.
bool classic_cop_win_placement(const Graph& g, int k, std::size_t max_states = kDefaultMaxStates);
// Least k <= k_max with classic_cop_win; nullopt means "greater than k_max".
std::optional<int> classic_cop_number(const Graph& g, int k_max, std::size_t max_states = kDefaultMaxStates);

}  // namespace scar

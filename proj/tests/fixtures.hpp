#pragma once

#include <string>
#include <vector>

#include "scar/arena.hpp"
#include "scar/graph.hpp"

namespace scar::testing {

// 4-cycle with a three-edge tail, relabeled 0-based from the 1-based
// edges 1-2,1-3,2-4,3-4,3-5,5-6,6-7.
inline Graph figure_graph() { return parse_edge_list("0 1\n0 2\n1 3\n2 3\n2 4\n4 5\n5 6\n"); }

inline std::vector<StateId> noncapture_states(const Arena& a) {
  std::vector<StateId> out;
  for (StateId s = 0; s < a.state_count(); ++s)
    if (!a.is_capture(s)) out.push_back(s);
  return out;
}

// Canonical per-state profile taking the lowest-slot move of a move table.
inline std::vector<Vertex> lowest_selection(const Arena& a, const std::vector<MoveSet>& moves) {
  std::vector<Vertex> out(a.state_count(), 0);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_capture(s)) continue;
    MoveSet m = moves[s];
    int slot = 0;
    while (!(m >> slot & 1)) ++slot;
    out[s] = a.move_target(s, slot);
  }
  return out;
}

// Highest-slot variant, to exercise a second greedy selection.
inline std::vector<Vertex> highest_selection(const Arena& a, const std::vector<MoveSet>& moves) {
  std::vector<Vertex> out(a.state_count(), 0);
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_capture(s)) continue;
    MoveSet m = moves[s];
    int slot = 63;
    while (!(m >> slot & 1)) --slot;
    out[s] = a.move_target(s, slot);
  }
  return out;
}

}  // namespace scar::testing

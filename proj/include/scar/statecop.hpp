#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scar/arena.hpp"
#include "scar/crsolver.hpp"

namespace scar {

// Cop coalition as a bitmask: bit (i-1) set <=> cop i belongs.
using Coalition = std::uint32_t;

inline constexpr int kUnboundedCopNumber = std::numeric_limits<int>::max();

// Winning region of `coalition` for forcing any capture (by any cop) against
// adversarial play of all other tokens.
std::vector<char> guaranteed_capture_region(const Arena& arena, Coalition coalition);
bool guaranteed_capture(const Arena& arena, StateId s, Coalition coalition);

struct StateCopReport {
  // c(G|s) per state: 1..N-1, kUnboundedCopNumber, or 0 on capture states.
  std::vector<int> value;
  // Lowest-numbered minimum coalition where the value is finite.
  std::vector<Coalition> witness;
  int max_value = 0;

  bool unbounded(StateId s) const { return value[s] == kUnboundedCopNumber; }
};

StateCopReport compute_state_cop_numbers(const Arena& arena);
// nullopt = infinite.
std::optional<int> state_cop_number(const Arena& arena, StateId s);

struct CopNumberCheck {
  std::optional<int> cop_number;        // classic c(G), nullopt = > N-1
  std::optional<int> max_state_cop;     // max over S_nc of c(G|s), nullopt = infinite
  bool agree = false;
  std::optional<StateId> witness;       // a state attaining the maximum
};

// Compares the classic cop number against the maximum state cop number:
// c(G) = K <= N-1 iff max c(G|s) = K, and c(G) > N-1 iff max c(G|s) = infinity.
CopNumberCheck crosscheck_cop_number(const Graph& g, int n_players, std::size_t max_states = kDefaultMaxStates);
CopNumberCheck crosscheck_cop_number(const Arena& arena, const StateCopReport& report);

}  // namespace scar

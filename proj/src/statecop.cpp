#include "scar/statecop.hpp"

#include <bit>

#include "scar/errors.hpp"
#include "scar/reachability.hpp"

namespace scar {
namespace {

void check_coalition(const Arena& arena, Coalition coalition) {
  Coalition all = (Coalition{1} << arena.cop_count()) - 1;
  if (coalition == 0 || (coalition & ~all))
    throw ValidationError("coalition must be a nonempty subset of cops 1.." + std::to_string(arena.cop_count()));
}

}  // namespace

std::vector<char> guaranteed_capture_region(const Arena& arena, Coalition coalition) {
  check_coalition(arena, coalition);
  std::vector<char> target(arena.state_count());
  for (StateId s = 0; s < arena.state_count(); ++s) target[s] = arena.is_capture(s);
  ReachabilityGame game{target, [&](StateId s) {
                          int n = arena.mover(s);
                          return n < arena.n_players() && (coalition >> (n - 1) & 1);
                        },
                        {}};
  return solve_reachability(arena, game);
}

bool guaranteed_capture(const Arena& arena, StateId s, Coalition coalition) {
  if (arena.is_capture(s)) throw ValidationError("state " + arena.label(s) + " is a capture state");
  return guaranteed_capture_region(arena, coalition)[s] != 0;
}

StateCopReport compute_state_cop_numbers(const Arena& arena) {
  const StateId count = arena.state_count();
  StateCopReport report;
  report.value.assign(count, kUnboundedCopNumber);
  report.witness.assign(count, 0);
  for (StateId s = 0; s < count; ++s)
    if (arena.is_capture(s)) report.value[s] = 0;

  const Coalition full = (Coalition{1} << arena.cop_count()) - 1;
  // Subsets in increasing size, ties by numeric value; first hit is minimal.
  std::vector<Coalition> order;
  for (int size = 1; size <= arena.cop_count(); ++size)
    for (Coalition c = 1; c <= full; ++c)
      if (std::popcount(c) == size) order.push_back(c);

  for (Coalition c : order) {
    auto region = guaranteed_capture_region(arena, c);
    int size = std::popcount(c);
    for (StateId s = 0; s < count; ++s) {
      if (region[s] && report.value[s] == kUnboundedCopNumber) {
        report.value[s] = size;
        report.witness[s] = c;
      }
    }
  }
  for (StateId s = 0; s < count; ++s)
    if (!arena.is_capture(s)) report.max_value = std::max(report.max_value, report.value[s]);
  return report;
}

std::optional<int> state_cop_number(const Arena& arena, StateId s) {
  if (arena.is_capture(s)) throw ValidationError("state " + arena.label(s) + " is a capture state");
  const Coalition full = (Coalition{1} << arena.cop_count()) - 1;
  for (int size = 1; size <= arena.cop_count(); ++size)
    for (Coalition c = 1; c <= full; ++c)
      if (std::popcount(c) == size && guaranteed_capture_region(arena, c)[s]) return size;
  return std::nullopt;
}

CopNumberCheck crosscheck_cop_number(const Arena& arena, const StateCopReport& report) {
  CopNumberCheck check;
  check.cop_number = classic_cop_number(arena.graph(), arena.cop_count());
  if (report.max_value != kUnboundedCopNumber) check.max_state_cop = report.max_value;
  for (StateId s = 0; s < arena.state_count(); ++s) {
    if (!arena.is_capture(s) && report.value[s] == report.max_value) {
      check.witness = s;
      break;
    }
  }
  check.agree = check.cop_number == check.max_state_cop;
  return check;
}

CopNumberCheck crosscheck_cop_number(const Graph& g, int n_players, std::size_t max_states) {
  Arena arena(g, n_players, max_states);
  return crosscheck_cop_number(arena, compute_state_cop_numbers(arena));
}

}  // namespace scar

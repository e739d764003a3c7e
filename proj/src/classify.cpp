#include "scar/classify.hpp"

#include "scar/errors.hpp"
#include "scar/reachability.hpp"

namespace scar {

std::string to_string(GraphClass c) {
  switch (c) {
    case GraphClass::kNotInG: return "NotInG";
    case GraphClass::kG1: return "G1";
    case GraphClass::kG2: return "G2";
    case GraphClass::kG3: return "G3";
    case GraphClass::kG3Prime: return "G3Prime";
  }
  return "?";
}

GraphClass parse_graph_class(const std::string& name) {
  for (auto c : {GraphClass::kNotInG, GraphClass::kG1, GraphClass::kG2, GraphClass::kG3, GraphClass::kG3Prime})
    if (to_string(c) == name) return c;
  throw ValidationError("unknown graph class '" + name + "'");
}

std::vector<char> g3_guarantee_region(const Arena& arena, const CrSolution& cr, int m, GuaranteeVariant variant) {
  if (m < 1 || m >= arena.n_players()) throw ValidationError("cop index out of range");
  std::vector<char> target(arena.state_count(), 0);
  for (StateId s = 0; s < arena.state_count(); ++s) target[s] = (arena.cops_at_robber(s) >> (m - 1)) & 1;
  ReachabilityGame game{target,
                        [&](StateId s) { return variant == GuaranteeVariant::kExists && arena.mover(s) == m; },
                        [&](StateId s) { return arena.mover(s) == m ? cr.opt_moves[s] : arena.all_moves(s); }};
  return solve_reachability(arena, game);
}

bool g3_guarantee_test(const Arena& arena, const CrSolution& cr, StateId s, GuaranteeVariant variant) {
  if (arena.is_capture(s)) throw ValidationError("g3_guarantee_test at capture state " + arena.label(s));
  auto m = cr.capturer(s);
  if (!m) throw ValidationError("g3_guarantee_test needs a finite capture time at " + arena.label(s));
  bool single = false;
  for (int cop = 1; cop < arena.n_players() && !single; ++cop) single = guaranteed_capture(arena, s, Coalition{1} << (cop - 1));
  if (!single) throw ValidationError("g3_guarantee_test needs c(G|s) = 1 at " + arena.label(s));
  return g3_guarantee_region(arena, cr, *m, variant)[s] != 0;
}

bool in_script_g(const Graph& g, int n_players, std::size_t max_states) {
  Arena arena(g, n_players, max_states);
  auto region = guaranteed_capture_region(arena, (Coalition{1} << arena.cop_count()) - 1);
  for (StateId s = 0; s < arena.state_count(); ++s)
    if (!region[s]) return true;
  return false;
}

Classification classify(const Arena& arena, const CrSolution& cr, const StateCopReport& report) {
  Classification out;
  const int cops = arena.cop_count();
  std::optional<StateId> robber_unbounded_violation;  // S^N state with finite value
  for (StateId s = 0; s < arena.state_count(); ++s) {
    if (arena.is_capture(s)) continue;
    int v = report.value[s];
    if (v == kUnboundedCopNumber) {
      if (!out.unbounded_witness) out.unbounded_witness = s;
    } else if (v >= 2 && v <= cops) {
      if (!out.g1_witness) out.g1_witness = s;
    }
    if (arena.robber_moves(s) && v != kUnboundedCopNumber && !robber_unbounded_violation)
      robber_unbounded_violation = s;
    if (arena.robber_moves(s) && v == 1 && !out.g2prime_witness) out.g2prime_witness = s;
  }

  if (!out.unbounded_witness) {
    out.klass = GraphClass::kNotInG;
    return out;
  }
  if (out.g1_witness) {
    out.klass = GraphClass::kG1;
    return out;
  }
  if (!robber_unbounded_violation) {
    out.klass = GraphClass::kG2;
    return out;
  }

  // Remaining states have values in {1, infinity} and some robber-move state
  // has value 1.
  std::vector<std::vector<char>> exists_region, adversarial_region;
  for (int m = 1; m <= cops; ++m) {
    exists_region.push_back(g3_guarantee_region(arena, cr, m, GuaranteeVariant::kExists));
    adversarial_region.push_back(g3_guarantee_region(arena, cr, m, GuaranteeVariant::kAdversarial));
  }
  bool exists_ok = true, adversarial_ok = true;
  for (StateId s = 0; s < arena.state_count(); ++s) {
    if (arena.is_capture(s) || report.value[s] != 1) continue;
    auto m = cr.capturer(s);
    if (!m) throw SolverError("state " + arena.label(s) + " has c(G|s)=1 but no unique CR capturer");
    bool e = exists_region[*m - 1][s] != 0;
    bool a = adversarial_region[*m - 1][s] != 0;
    if (!e && exists_ok) out.g3prime_witness = s;
    exists_ok = exists_ok && e;
    adversarial_ok = adversarial_ok && a;
    if (e != a && !out.variant_disagreement) out.variant_disagreement = s;
  }
  out.g3_exists_variant = exists_ok;
  out.g3_adversarial_variant = adversarial_ok;
  out.klass = exists_ok ? GraphClass::kG3 : GraphClass::kG3Prime;
  return out;
}

Classification classify(const Graph& g, int n_players, std::size_t max_states) {
  Arena arena(g, n_players, max_states);
  auto cr = solve_modified_cr(arena);
  return classify(arena, cr, compute_state_cop_numbers(arena));
}

}  // namespace scar

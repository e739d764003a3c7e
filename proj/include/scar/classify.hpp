#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scar/arena.hpp"
#include "scar/crsolver.hpp"
#include "scar/statecop.hpp"

namespace scar {

enum class GraphClass { kNotInG, kG1, kG2, kG3, kG3Prime };

std::string to_string(GraphClass c);
GraphClass parse_graph_class(const std::string& name);

// How the designated capturer's CR-optimal strategy is chosen when testing
// whether it forces its own capture.
enum class GuaranteeVariant {
  kExists,       // some positional CR-optimal strategy works
  kAdversarial,  // the opponent also picks among CR-optimal moves at each visit
};

// Regions where cop m, restricted to CR-optimal moves, forces a capture
// state with itself on the robber's vertex against all other tokens.
std::vector<char> g3_guarantee_region(const Arena& arena, const CrSolution& cr, int m, GuaranteeVariant variant);

// Requires c(G|s) = 1 and a finite capture time; m is the CR capturer of s.
bool g3_guarantee_test(const Arena& arena, const CrSolution& cr, StateId s,
                       GuaranteeVariant variant = GuaranteeVariant::kExists);

struct Classification {
  GraphClass klass = GraphClass::kNotInG;
  std::optional<StateId> unbounded_witness;  // c(G|s) = infinity
  std::optional<StateId> g1_witness;         // c(G|s) in 2..N-1
  std::optional<StateId> g2prime_witness;    // robber to move, c(G|s) = 1
  std::optional<StateId> g3prime_witness;    // c(G|s) = 1, capturer cannot force own capture
  // Only decided for graphs outside G1 and G2.
  std::optional<bool> g3_exists_variant;
  std::optional<bool> g3_adversarial_variant;
  // A state where the two variants disagree, if any.
  std::optional<StateId> variant_disagreement;
};

bool in_script_g(const Graph& g, int n_players, std::size_t max_states = kDefaultMaxStates);

Classification classify(const Arena& arena, const CrSolution& cr, const StateCopReport& report);
Classification classify(const Graph& g, int n_players, std::size_t max_states = kDefaultMaxStates);

}  // namespace scar

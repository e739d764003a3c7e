#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "scar/arena.hpp"
#include "scar/classify.hpp"
#include "scar/cli.hpp"
#include "scar/positionality.hpp"
#include "scar/statecop.hpp"

namespace scar::cli {

using nlohmann::json;

inline constexpr std::size_t kWitnessCap = 32;

struct Inputs {
  std::string graph_file;
  std::string builtin;
  int n = 3;
  std::optional<std::string> gamma, epsilon, state;
  std::optional<std::string> gamma_grid, epsilon_grid;
  bool csv = false;
  bool allow_wide_epsilon = false;
  std::string cache_dir;
  std::size_t max_states = kDefaultMaxStates;
};

Graph load_graph(const Inputs& in);

json graph_json(const Graph& g);
json verdict_json(const Arena& a, const PositionalityVerdict& v);
json classification_json(const Arena& a, const Classification& c);
// Finite integers as numbers, the unbounded sentinel as null.
json count_or_null(std::optional<int> v);

std::string cmd_arena_stats(const Graph& g, const Inputs& in);
std::string cmd_cr_solve(const Graph& g, const Inputs& in);
std::string cmd_scn(const Graph& g, const Inputs& in);
std::string cmd_classify(const Graph& g, const Inputs& in);
std::string cmd_poscheck(const Graph& g, const Inputs& in);
std::string cmd_scan(const Graph& g, const Inputs& in);

// Prints one PASS/FAIL line per case and a summary; returns 0 iff all pass.
int cmd_verify(const std::string& manifest, const std::string& filter, std::ostream& out);

}  // namespace scar::cli

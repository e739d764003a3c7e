#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "scar/graph.hpp"
#include "scar/rational.hpp"

namespace scar::cli {

// Graph recipe grammar:
//   recipe := name[:k] | file:<path> | leaf(recipe,v) | bridge(recipe,u,recipe,w)
// with names as accepted by builtin(). Relative file paths resolve against
// base_dir.
Graph resolve_graph_recipe(std::string_view recipe, const std::filesystem::path& base_dir = ".");

// "a/b,c/d,..." -> rationals; empty items are rejected.
std::vector<Rational> parse_rational_list(std::string_view text);

// 64-bit FNV-1a, used as the report cache key.
std::uint64_t content_hash(std::string_view bytes);

// Runs one command line (args exclude the program name). Returns the exit
// code: 0 success, 1 verification failures, 2 invalid input, 3 solver error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scar::cli

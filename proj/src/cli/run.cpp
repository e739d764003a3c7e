#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "internal.hpp"

namespace scar::cli {
namespace {

using Command = std::function<std::string(const Graph&, const Inputs&)>;

void add_common(CLI::App* sub, Inputs& in) {
  sub->add_option("--graph", in.graph_file, "edge-list file");
  sub->add_option("--builtin", in.builtin, "graph recipe, e.g. petersen, path:4, leaf(petersen,0)");
  sub->add_option("--n", in.n, "number of players (cops + robber)");
  sub->add_option("--gamma", in.gamma, "discount factor a/b");
  sub->add_option("--epsilon", in.epsilon, "collusion payoff a/b");
  sub->add_option("--s0,--state", in.state, "state literal c1,...;r;n");
  sub->add_option("--gamma-grid", in.gamma_grid, "comma-separated discount factors");
  sub->add_option("--epsilon-grid", in.epsilon_grid, "comma-separated collusion payoffs");
  sub->add_flag("--csv", in.csv, "CSV output (scan only)");
  sub->add_flag("--json", "JSON output (default)");
  sub->add_option("--cache-dir", in.cache_dir, "report cache directory")->envname("SCAR_CACHE_DIR");
  sub->add_flag("--allow-wide-epsilon", in.allow_wide_epsilon, "allow epsilon up to max(1/(N-1), 1/2)");
  sub->add_option("--max-states", in.max_states, "state-space cap");
}

// Everything a report depends on, in a fixed order.
std::string cache_key(const std::string& command, const Graph& g, const Inputs& in) {
  std::ostringstream key;
  auto opt = [&](const std::optional<std::string>& v) { key << (v ? *v : std::string("-")) << '\n'; };
  key << command << '\n' << serialize_edge_list(g) << in.n << '\n';
  opt(in.gamma);
  opt(in.epsilon);
  opt(in.state);
  opt(in.gamma_grid);
  opt(in.epsilon_grid);
  key << in.csv << in.allow_wide_epsilon << '\n' << in.max_states << '\n';
  return key.str();
}

std::string cached_report(const std::string& command, const Command& fn, const Graph& g, const Inputs& in) {
  if (in.cache_dir.empty()) return fn(g, in);
  std::string key = cache_key(command, g, in);
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << content_hash(key);
  std::filesystem::path dir(in.cache_dir);
  std::filesystem::path report = dir / (name.str() + ".report");
  std::filesystem::path keyfile = dir / (name.str() + ".key");
  {
    std::ifstream cached_key(keyfile, std::ios::binary), cached(report, std::ios::binary);
    if (cached_key && cached) {
      std::string stored((std::istreambuf_iterator<char>(cached_key)), {});
      // A hash collision falls through to a fresh solve.
      if (stored == key) return std::string((std::istreambuf_iterator<char>(cached)), {});
    }
  }
  std::string text = fn(g, in);
  std::filesystem::create_directories(dir);
  std::ofstream(report, std::ios::binary) << text;
  std::ofstream(keyfile, std::ios::binary) << key;
  return text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact solvers for N-player selfish cops and robber", "scar");
  app.require_subcommand(1);
  Inputs in;
  std::string manifest = std::string(SCAR_DATA_DIR) + "/verification_suite.json";
  std::string filter;

  const std::map<std::string, std::pair<Command, const char*>> commands{
      {"arena-stats", {cmd_arena_stats, "state-space statistics"}},
      {"cr-solve", {cmd_cr_solve, "capture times and CR-optimal moves"}},
      {"scn", {cmd_scn, "state cop numbers"}},
      {"classify", {cmd_classify, "place (G, N) in the class taxonomy"}},
      {"poscheck", {cmd_poscheck, "positional trigger-profile existence"}},
      {"scan", {cmd_scan, "positionality over a (gamma, epsilon) grid"}},
  };
  for (const auto& [name, entry] : commands) add_common(app.add_subcommand(name, entry.second), in);
  auto* verify = app.add_subcommand("verify", "run the verification manifest");
  verify->add_option("--suite", manifest, "manifest path");
  verify->add_option("--filter", filter, "comma-separated case id prefixes");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(manifest, filter, out);
    for (const auto& [name, entry] : commands) {
      if (!app.got_subcommand(name)) continue;
      if (in.csv && name != "scan") throw ValidationError("--csv is only supported by scan");
      Graph g = load_graph(in);
      out << cached_report(name, entry.first, g, in);
      return 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    err << "solver error: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace scar::cli

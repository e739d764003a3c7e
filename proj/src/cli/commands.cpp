#include <sstream>

#include "internal.hpp"
#include "scar/crsolver.hpp"

namespace scar::cli {
namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

StateId noncapture_state(const Arena& a, const std::string& literal) {
  StateId s = a.parse(literal);
  if (a.is_capture(s)) throw ValidationError("state " + literal + " is a capture state");
  return s;
}

const std::string& required(const std::optional<std::string>& value, const char* flag) {
  if (!value) throw ValidationError(std::string(flag) + " is required");
  return *value;
}

GameParams params_from(const Inputs& in, const Rational& gamma, const Rational& epsilon) {
  GameParams p{in.n, gamma, epsilon};
  p.validate(in.allow_wide_epsilon);
  return p;
}

json header(const Graph& g, const Inputs& in) { return {{"graph", graph_json(g)}, {"n", in.n}}; }

}  // namespace

std::string cmd_arena_stats(const Graph& g, const Inputs& in) {
  Arena a(g, in.n, in.max_states);
  json j = header(g, in);
  j["states"] = a.state_count();
  j["capture_states"] = a.capture_count();
  j["noncapture_states"] = a.state_count() - a.capture_count();
  if (in.state) {
    StateId s = noncapture_state(a, *in.state);
    j["s0"] = a.label(s);
    j["reachable_noncapture"] = reachable_noncapture(a, s).size();
  }
  return dump(j);
}

std::string cmd_cr_solve(const Graph& g, const Inputs& in) {
  Arena a(g, in.n, in.max_states);
  auto sol = solve_modified_cr(a);
  json j = header(g, in);
  if (in.state) {
    StateId s = noncapture_state(a, *in.state);
    j["state"] = a.label(s);
    json moves = json::array();
    for (int slot = 0; slot < a.move_count(s); ++slot)
      if (sol.opt_moves[s] >> slot & 1) moves.push_back(a.move_target(s, slot));
    j["opt_moves"] = moves;
    if (sol.finite(s)) {
      auto attribution = capture_attribution(sol, a, s);
      j["capture_time"] = attribution.time;
      j["capturer"] = attribution.cop;
    } else {
      j["capture_time"] = nullptr;
      j["capturer"] = nullptr;
    }
    return dump(j);
  }
  std::size_t finite = 0, evasion = 0;
  int max_time = 0;
  for (StateId s = 0; s < a.state_count(); ++s) {
    if (a.is_capture(s)) continue;
    if (sol.finite(s)) {
      ++finite;
      max_time = std::max(max_time, sol.capture_time[s]);
    } else {
      ++evasion;
    }
  }
  j["states"] = a.state_count();
  j["finite_states"] = finite;
  j["evasion_states"] = evasion;
  j["max_capture_time"] = max_time;
  return dump(j);
}

std::string cmd_scn(const Graph& g, const Inputs& in) {
  Arena a(g, in.n, in.max_states);
  auto report = compute_state_cop_numbers(a);
  json j = header(g, in);
  if (in.state) {
    StateId s = noncapture_state(a, *in.state);
    j["state"] = a.label(s);
    json coalition = json::array();
    if (report.unbounded(s)) {
      j["c_state"] = nullptr;
    } else {
      j["c_state"] = report.value[s];
      for (int cop = 1; cop < in.n; ++cop)
        if (report.witness[s] >> (cop - 1) & 1) coalition.push_back(cop);
    }
    j["coalition"] = coalition;
    return dump(j);
  }
  auto check = crosscheck_cop_number(a, report);
  j["classic_cop_number"] = count_or_null(check.cop_number);
  j["max_state_cop"] = count_or_null(check.max_state_cop);
  j["agree"] = check.agree;
  j["witness"] = check.witness ? json(a.label(*check.witness)) : json(nullptr);
  return dump(j);
}

std::string cmd_classify(const Graph& g, const Inputs& in) {
  Arena a(g, in.n, in.max_states);
  auto cr = solve_modified_cr(a);
  auto report = compute_state_cop_numbers(a);
  json j = classification_json(a, classify(a, cr, report));
  j.update(header(g, in));
  return dump(j);
}

std::string cmd_poscheck(const Graph& g, const Inputs& in) {
  Arena a(g, in.n, in.max_states);
  auto params = params_from(in, Rational::parse(required(in.gamma, "--gamma")),
                            Rational::parse(required(in.epsilon, "--epsilon")));
  StateId s0 = noncapture_state(a, required(in.state, "--s0"));
  json j = verdict_json(a, check_positionality(a, s0, params));
  j.update(header(g, in));
  return dump(j);
}

std::string cmd_scan(const Graph& g, const Inputs& in) {
  auto gammas = parse_rational_list(required(in.gamma_grid, "--gamma-grid"));
  auto epsilons = parse_rational_list(required(in.epsilon_grid, "--epsilon-grid"));
  Arena a(g, in.n, in.max_states);
  StateId s0 = noncapture_state(a, required(in.state, "--s0"));
  auto table = scan_region(g, in.n, a.decode(s0), gammas, epsilons, in.allow_wide_epsilon, in.max_states);
  if (in.csv) {
    std::ostringstream out;
    out << "epsilon,gamma,positional_exists,nonpositional_exists,witness_count\n";
    for (const auto& v : table)
      out << v.params.epsilon << ',' << v.params.gamma << ',' << (v.positional_exists ? "true" : "false") << ','
          << (v.nonpositional_exists ? "true" : "false") << ',' << v.witnesses.size() << '\n';
    return out.str();
  }
  json points = json::array();
  for (const auto& v : table) points.push_back(verdict_json(a, v));
  json j = header(g, in);
  j["s0"] = a.label(s0);
  j["points"] = points;
  return dump(j);
}

}  // namespace scar::cli

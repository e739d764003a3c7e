#include <fstream>
#include <sstream>

#include "internal.hpp"
#include "scar/crsolver.hpp"

namespace scar::cli {
namespace {

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<std::string> diffs;

  void expect(bool ok, const std::string& where, const std::string& want, const std::string& got) {
    ++checks;
    if (ok) return;
    pass = false;
    if (diffs.size() < 5) diffs.push_back(where + ": expected " + want + ", got " + got);
  }
};

[[noreturn]] void schema(const std::string& id, const std::string& why) {
  throw ValidationError("manifest case '" + id + "': " + why);
}

const json& field(const json& c, const std::string& id, const char* key) {
  if (!c.contains(key)) schema(id, std::string("missing field '") + key + "'");
  return c.at(key);
}

// ["a/b", ...] or {"den": d, "from": i, "to": j} for i/d..j/d.
std::vector<Rational> grid(const json& range, const std::string& id) {
  std::vector<Rational> out;
  if (range.is_array()) {
    for (const auto& item : range) out.push_back(Rational::parse(item.get<std::string>()));
  } else if (range.is_object()) {
    long den = range.at("den").get<long>();
    for (long k = range.at("from").get<long>(); k <= range.at("to").get<long>(); ++k) out.emplace_back(k, den);
  } else {
    schema(id, "grid must be a list or a {den, from, to} range");
  }
  if (out.empty()) schema(id, "empty grid");
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string count_text(std::optional<int> v) { return v ? std::to_string(*v) : "unbounded"; }

std::optional<int> expected_count(const json& v) {
  if (v.is_null()) return std::nullopt;
  return v.get<int>();
}

// Named closed-form expectations for the positional verdict.
bool rule_value(const std::string& rule, const std::string& id, const Arena& a, StateId s0, const GameParams& p) {
  if (rule == "p2_interval") {
    const Rational& e = p.epsilon;
    const Rational& g = p.gamma;
    return e < Rational(1, 2) && g * g >= e / (Rational(1) - e) && g <= Rational(1) / (Rational(2) - Rational(2) * e);
  }
  if (rule == "one_side_low_gamma")
    return all_cops_one_side(a.graph(), a.decode(s0)) && p.gamma <= Rational(1, a.n_players() - 1);
  schema(id, "unknown rule '" + rule + "'");
}

Outcome run_positional(const json& c, const std::string& id, const Graph& g, int n) {
  Arena a(g, n);
  auto cr = solve_modified_cr(a);
  auto gammas = grid(field(c, id, "gamma"), id);
  auto epsilons = grid(field(c, id, "epsilon"), id);
  std::vector<StateId> starts;
  const json& s0 = field(c, id, "s0");
  if (s0 == "all") {
    for (StateId s = 0; s < a.state_count(); ++s)
      if (!a.is_capture(s)) starts.push_back(s);
  } else {
    StateId s = a.parse(s0.get<std::string>());
    if (a.is_capture(s)) schema(id, "s0 is a capture state");
    starts.push_back(s);
  }
  const json* pos = c.contains("expect_positional") ? &c.at("expect_positional") : nullptr;
  const json* nonpos = c.contains("expect_nonpositional") ? &c.at("expect_nonpositional") : nullptr;
  if (!pos && !nonpos) schema(id, "no expectation");

  Outcome out;
  for (const auto& e : epsilons) {
    for (const auto& gm : gammas) {
      GameParams params{n, gm, e};
      params.validate(c.value("allow_wide_epsilon", false));
      auto solved = solve_all_games(a, params);
      for (StateId s : starts) {
        auto v = evaluate_positionality(a, cr, solved, s);
        std::string where = "gamma=" + gm.str() + " epsilon=" + e.str() + " s0=" + a.label(s);
        if (pos) {
          bool want = pos->is_boolean() ? pos->get<bool>() : rule_value(pos->get<std::string>(), id, a, s, params);
          out.expect(v.positional_exists == want, where + " positional_exists", yes_no(want),
                     yes_no(v.positional_exists));
        }
        if (nonpos)
          out.expect(v.nonpositional_exists == nonpos->get<bool>(), where + " nonpositional_exists",
                     yes_no(nonpos->get<bool>()), yes_no(v.nonpositional_exists));
      }
    }
  }
  return out;
}

Outcome run_classify(const json& c, const std::string& id, const Graph& g, int n) {
  Arena a(g, n);
  auto cr = solve_modified_cr(a);
  auto report = compute_state_cop_numbers(a);
  auto result = classify(a, cr, report);
  Outcome out;
  std::string want = field(c, id, "expect").get<std::string>();
  out.expect(to_string(result.klass) == want, "class", want, to_string(result.klass));
  if (result.klass == GraphClass::kG1) {
    int v = report.value[*result.g1_witness];
    out.expect(v >= 2 && v <= n - 1, "G1 witness " + a.label(*result.g1_witness), "value in 2.." + std::to_string(n - 1),
               std::to_string(v));
  }
  return out;
}

Outcome run_state_cop(const json& c, const std::string& id, const Graph& g, int n) {
  Arena a(g, n);
  StateId s = a.parse(field(c, id, "state").get<std::string>());
  if (a.is_capture(s)) schema(id, "state is a capture state");
  Outcome out;
  auto want = expected_count(field(c, id, "expect"));
  auto got = state_cop_number(a, s);
  out.expect(got == want, "c(G|" + a.label(s) + ")", count_text(want), count_text(got));
  return out;
}

Outcome run_cop_number(const json& c, const std::string& id, const Graph& g, int n) {
  Outcome out;
  int k_max = c.value("k_max", n - 1);
  auto want = expected_count(field(c, id, "expect"));
  auto got = classic_cop_number(g, k_max);
  out.expect(got == want, "classic cop number (k_max " + std::to_string(k_max) + ")", count_text(want),
             count_text(got));
  return out;
}

Outcome run_agreement(const Graph& g, int n) {
  Outcome out;
  auto check = crosscheck_cop_number(g, n);
  out.expect(check.agree, "cop number " + count_text(check.cop_number) + " vs max state cop " +
                              count_text(check.max_state_cop),
             "agreement", "disagreement");
  return out;
}

// Runs the CLI itself; every key of expect_json must match the report.
Outcome run_cli_case(const json& c, const std::string& id, const std::filesystem::path& suite_dir) {
  std::vector<std::string> args;
  for (const auto& a : field(c, id, "args")) {
    std::string arg = a.get<std::string>();
    if (auto at = arg.find("{suite_dir}"); at != std::string::npos) arg.replace(at, 11, suite_dir.string());
    args.push_back(arg);
  }
  std::ostringstream o, e;
  int code = run(args, o, e);
  Outcome out;
  int want_code = c.value("expect_exit", 0);
  out.expect(code == want_code, "exit code", std::to_string(want_code), std::to_string(code));
  if (c.contains("expect_json") && code == 0) {
    json got = json::parse(o.str());
    for (const auto& [key, value] : c.at("expect_json").items())
      out.expect(got.contains(key) && got.at(key) == value, key, value.dump(),
                 got.contains(key) ? got.at(key).dump() : "missing");
  }
  return out;
}

bool selected(const std::string& id, const std::string& filter) {
  if (filter.empty()) return true;
  std::size_t start = 0;
  while (start <= filter.size()) {
    std::size_t end = filter.find(',', start);
    if (end == std::string::npos) end = filter.size();
    std::string prefix = filter.substr(start, end - start);
    if (!prefix.empty() && id.compare(0, prefix.size(), prefix) == 0) return true;
    start = end + 1;
  }
  return false;
}

}  // namespace

int cmd_verify(const std::string& manifest, const std::string& filter, std::ostream& out) {
  std::ifstream file(manifest);
  if (!file) throw ValidationError("cannot open manifest " + manifest);
  json suite = json::parse(file);
  if (!suite.contains("cases") || !suite.at("cases").is_array()) throw ValidationError("manifest: missing 'cases' list");
  std::filesystem::path suite_dir = std::filesystem::absolute(manifest).parent_path();

  int passed = 0, failed = 0;
  for (const auto& c : suite.at("cases")) {
    std::string id = c.at("id").get<std::string>();
    if (!selected(id, filter)) continue;
    std::string kind = field(c, id, "kind").get<std::string>();
    Outcome result;
    if (kind == "cli") {
      result = run_cli_case(c, id, suite_dir);
    } else {
      Graph g = resolve_graph_recipe(field(c, id, "graph").get<std::string>(), suite_dir);
      int n = field(c, id, "n").get<int>();
      if (kind == "positional") result = run_positional(c, id, g, n);
      else if (kind == "classify") result = run_classify(c, id, g, n);
      else if (kind == "state_cop") result = run_state_cop(c, id, g, n);
      else if (kind == "cop_number") result = run_cop_number(c, id, g, n);
      else if (kind == "agreement") result = run_agreement(g, n);
      else schema(id, "unknown kind '" + kind + "'");
    }
    out << (result.pass ? "PASS  " : "FAIL  ") << id << "  (" << result.checks << " checks)\n";
    for (const auto& d : result.diffs) out << "      " << d << '\n';
    (result.pass ? passed : failed)++;
  }
  out << passed << " passed, " << failed << " failed\n";
  if (passed + failed == 0) throw ValidationError("filter '" + filter + "' matches no case");
  return failed == 0 ? 0 : 1;
}

}  // namespace scar::cli

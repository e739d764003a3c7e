#include "doctest.h"
#include "fixtures.hpp"
#include "scar/crsolver.hpp"
#include "scar/positionality.hpp"

using namespace scar;

namespace {

bool positional(const Graph& g, int n, const char* s0, Rational gamma, Rational eps) {
  Arena a(g, n);
  return check_positionality(a, a.parse(s0), {n, gamma, eps}).positional_exists;
}

}  // namespace

TEST_CASE("verdicts on small paths") {
  CHECK(positional(path_graph(2), 3, "0,0;1;1", Rational(11, 20), Rational(1, 5)));
  CHECK_FALSE(positional(path_graph(2), 3, "0,0;1;1", Rational(7, 10), Rational(1, 5)));
  CHECK(positional(path_graph(2), 4, "0,0,0;1;1", Rational(1, 3), Rational(0)));
  CHECK_FALSE(positional(path_graph(2), 4, "0,0,0;1;1", Rational(2, 5), Rational(0)));
  CHECK(positional(path_graph(3), 3, "0,0;2;1", Rational(1, 4), Rational(0)));
  CHECK_FALSE(positional(path_graph(3), 3, "0,2;1;1", Rational(1, 4), Rational(0)));
}

TEST_CASE("K3 has no positional profile") {
  for (auto gamma : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
    CHECK_FALSE(positional(complete_graph(3), 3, "0,0;1;1", gamma, Rational(0)));
}

TEST_CASE("verdict witnesses are consistent") {
  Arena a(path_graph(2), 4);
  auto v = check_positionality(a, a.parse("0,0,0;1;1"), {4, Rational(2, 5), Rational(0)});
  CHECK(v.nonpositional_exists);
  REQUIRE_FALSE(v.witnesses.empty());
  auto cr = solve_modified_cr(a);
  auto solved = solve_all_games(a, v.params);
  for (const auto& w : v.witnesses) {
    CHECK(a.mover(w.state) == w.n);
    CHECK((solved.games[w.m - 1].opt_moves[w.state] & cr.opt_moves[w.state]) == 0);
  }
}

TEST_CASE("scan over gamma on P2 matches the closed form at zero epsilon") {
  std::vector<Rational> gammas;
  for (int k = 1; k <= 19; ++k) gammas.emplace_back(k, 20);
  std::vector<Rational> eps{Rational(0)};
  auto table = scan_region(path_graph(2), 3, parse_state("0,0;1;1"), gammas, eps);
  REQUIRE(table.size() == gammas.size());
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    CHECK(table[i].positional_exists == (gammas[i] <= Rational(1, 2)));
    CHECK(table[i].params.gamma == gammas[i]);
  }
}

TEST_CASE("scan is epsilon-major") {
  std::vector<Rational> gammas{Rational(1, 4), Rational(1, 2)};
  std::vector<Rational> eps{Rational(0), Rational(1, 10)};
  auto table = scan_region(path_graph(2), 3, parse_state("0,0;1;1"), gammas, eps);
  REQUIRE(table.size() == 4);
  CHECK(table[1].params.epsilon == Rational(0));
  CHECK(table[1].params.gamma == Rational(1, 2));
  CHECK(table[2].params.epsilon == Rational(1, 10));
}

TEST_CASE("Petersen scans") {
  std::vector<Rational> eps{Rational(0)};
  std::vector<Rational> gammas{Rational(1, 10), Rational(1, 2), Rational(9, 10)};
  for (const auto& v : scan_region(petersen_graph(), 3, parse_state("0,1;2;1"), gammas, eps))
    CHECK(v.positional_exists);
  std::vector<Rational> leaf_gammas{Rational(1, 2), Rational(51, 100)};
  auto leaf = scan_region(attach_leaf(petersen_graph(), 0), 3, parse_state("0,1;2;1"), leaf_gammas, eps);
  CHECK(leaf[0].positional_exists);
  CHECK_FALSE(leaf[1].positional_exists);
}

TEST_CASE("the CR game meets its own optimal sets everywhere") {
  for (auto [g, n] : std::vector<std::pair<Graph, int>>{{path_graph(3), 3}, {cycle_graph(4), 3}, {path_graph(2), 4}}) {
    Arena a(g, n);
    auto cr = solve_modified_cr(a);
    for (auto gamma : {Rational(1, 3), Rational(3, 4)}) {
      auto d = solve_cr_discounted(a, gamma);
      for (StateId s : scar::testing::noncapture_states(a)) CHECK((d.opt_moves[s] & cr.opt_moves[s]) != 0);
    }
  }
}

TEST_CASE("verdicts are deterministic and independent of s0 off paths") {
  for (auto g : {complete_graph(3), cycle_graph(4)}) {
    Arena a(g, 3);
    auto cr = solve_modified_cr(a);
    for (auto params : {GameParams{3, Rational(1, 2), Rational(0)}, GameParams{3, Rational(1, 4), Rational(1, 10)}}) {
      auto solved = solve_all_games(a, params);
      auto again = solve_all_games(a, params);
      std::optional<bool> first;
      for (StateId s : scar::testing::noncapture_states(a)) {
        auto v = evaluate_positionality(a, cr, solved, s);
        auto w = evaluate_positionality(a, cr, again, s);
        CHECK(v.positional_exists == w.positional_exists);
        CHECK(v.nonpositional_exists == w.nonpositional_exists);
        if (!first) first = v.positional_exists;
        CHECK(v.positional_exists == *first);
      }
    }
  }
}

TEST_CASE("boundary gamma is inclusive") {
  CHECK(positional(path_graph(3), 3, "0,0;2;1", Rational(1, 2), Rational(0)));
  CHECK_FALSE(positional(path_graph(3), 3, "0,0;2;1", Rational(21, 40), Rational(0)));
  CHECK(positional(path_graph(2), 4, "0,0,0;1;1", Rational(1, 3), Rational(0)));
  CHECK_FALSE(positional(path_graph(2), 4, "0,0,0;1;1", Rational(7, 20), Rational(0)));
}

TEST_CASE("trigger profile tables") {
  {
    Arena a(path_graph(2), 3);
    auto cr = solve_modified_cr(a);
    auto solved = solve_all_games(a, {3, Rational(1, 2), Rational(0)});
    auto profile = build_trigger_profile(a, cr, solved);
    CHECK(profile.cooperative[a.parse("0,0;1;1")] == 1);
    REQUIRE(profile.punishment.size() == 3);
    // Punishment moves of the protected cop maximize its value.
    for (int m = 1; m <= 2; ++m) {
      const auto& v = solved.games[m - 1].value;
      for (StateId s : scar::testing::noncapture_states(a)) {
        if (a.mover(s) != m) continue;
        Rational best = 0;
        for (StateId t : a.successors(s)) best = std::max(best, v[t]);
        CHECK(v[a.successor(s, a.move_slot(s, profile.punishment[m - 1][s]))] == best);
      }
    }
  }
  {
    Arena a(path_graph(2), 4);
    auto cr = solve_modified_cr(a);
    auto solved = solve_all_games(a, {4, Rational(1, 2), Rational(1, 10)});
    auto profile = build_trigger_profile(a, cr, solved);
    StateId s = a.parse("0,0,0;1;2");
    CHECK(profile.cooperative[s] == 1);
    CHECK(profile.punishment[0][s] == 0);
  }
}

TEST_CASE("trigger simulation switches at the first deviation") {
  Arena a(path_graph(2), 3);
  auto cr = solve_modified_cr(a);
  auto solved = solve_all_games(a, {3, Rational(1, 2), Rational(0)});
  auto profile = build_trigger_profile(a, cr, solved);
  StateId s0 = a.parse("0,0;1;1");

  auto plain = simulate_trigger(a, s0, profile, std::nullopt);
  CHECK_FALSE(plain.switch_time.has_value());
  auto coop = simulate(a, s0, profile.cooperative);
  CHECK(plain.play.states == coop.states);
  for (int mode : plain.modes) CHECK(mode == 0);

  Deviation stay{1, profile.cooperative};
  stay.table[s0] = 0;
  auto deviated = simulate_trigger(a, s0, profile, stay);
  CHECK(deviated.switch_time == 1);
  CHECK(deviated.play.moves.front() == 0);
  REQUIRE(deviated.modes.size() >= 2);
  CHECK(deviated.modes[1] == 1);

  auto same = simulate_trigger(a, s0, profile, Deviation{1, profile.cooperative});
  CHECK_FALSE(same.switch_time.has_value());
}

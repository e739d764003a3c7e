#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "scar/crsolver.hpp"
#include "scar/scarsolver.hpp"

using namespace scar;
using scar::testing::figure_graph;

namespace {

std::vector<std::pair<Graph, int>> small_arenas() {
  return {{path_graph(2), 3}, {path_graph(3), 3}, {path_graph(4), 3}, {complete_graph(3), 3},
          {cycle_graph(4), 3}, {cycle_graph(5), 3}, {star_graph(3), 3}, {path_graph(2), 4},
          {figure_graph(), 3}, {cycle_graph(4), 2}, {petersen_graph(), 3}};
}

}  // namespace

TEST_CASE("modified CR on P2 with three tokens") {
  Arena a(path_graph(2), 3);
  auto sol = solve_modified_cr(a);
  StateId s1 = a.parse("0,0;1;1"), s2 = a.parse("0,0;1;2"), s3 = a.parse("0,0;1;3");
  CHECK(sol.capture_time[s1] == 1);
  CHECK(sol.opt_moves[s1] == MoveSet{1} << a.move_slot(s1, 1));
  CHECK(sol.capture_time[s2] == 1);
  // Robber: capture now (time 1) or stay and be caught by C1 (time 2).
  CHECK(sol.capture_time[s3] == 2);
  CHECK(sol.opt_moves[s3] == MoveSet{1} << a.move_slot(s3, 1));
}

TEST_CASE("capture attribution on P2") {
  Arena a(path_graph(2), 3);
  auto sol = solve_modified_cr(a);
  auto c1 = capture_attribution(sol, a, a.parse("0,0;1;1"));
  CHECK(c1.cop == 1);
  CHECK(c1.time == 1);
  auto c2 = capture_attribution(sol, a, a.parse("0,0;1;2"));
  CHECK(c2.cop == 2);
  CHECK(c2.time == 1);
  auto c3 = capture_attribution(sol, a, a.parse("0,0;1;3"));
  CHECK(c3.cop == 1);
  CHECK(c3.time == 2);
  CHECK(sol.capturer(a.parse("0,0;1;3")) == 1);
}

TEST_CASE("capture attribution rejects evasion states") {
  Arena a(cycle_graph(4), 2);
  auto sol = solve_modified_cr(a);
  StateId s = a.parse("0;2;2");
  CHECK_FALSE(sol.finite(s));
  CHECK_THROWS_AS(capture_attribution(sol, a, s), ValidationError);
}

TEST_CASE("Bellman equations hold exactly at every state") {
  for (auto& [g, n] : small_arenas()) {
    Arena a(g, n);
    auto sol = solve_modified_cr(a);
    for (StateId s = 0; s < a.state_count(); ++s) {
      if (a.is_capture(s)) {
        CHECK(sol.capture_time[s] == 0);
        continue;
      }
      auto succ = a.successors(s);
      std::vector<int> t;
      for (StateId x : succ) t.push_back(sol.capture_time[x]);
      int best = a.robber_moves(s) ? *std::max_element(t.begin(), t.end()) : *std::min_element(t.begin(), t.end());
      int expect = best == kNeverCaptured ? kNeverCaptured : best + 1;
      CHECK(sol.capture_time[s] == expect);
      // Optimal moves are exactly the arg-opt successors (all moves at
      // cop states that cannot capture).
      MoveSet opt = 0;
      for (std::size_t i = 0; i < succ.size(); ++i)
        if (t[i] == best) opt |= MoveSet{1} << i;
      if (expect == kNeverCaptured && !a.robber_moves(s)) opt = a.all_moves(s);
      CHECK(sol.opt_moves[s] == opt);
    }
  }
}

TEST_CASE("greedy CR-optimal plays capture in exactly the solved time by the attributed cop") {
  for (auto& [g, n] : small_arenas()) {
    Arena a(g, n);
    auto sol = solve_modified_cr(a);
    auto low = scar::testing::lowest_selection(a, sol.opt_moves);
    auto high = scar::testing::highest_selection(a, sol.opt_moves);
    for (StateId s : scar::testing::noncapture_states(a)) {
      for (const auto* profile : {&low, &high}) {
        auto play = simulate(a, s, *profile);
        if (sol.finite(s)) {
          REQUIRE(play.capture_time.has_value());
          CHECK(*play.capture_time == sol.capture_time[s]);
          CHECK(play.capturing_cops == std::vector<int>{*sol.capturer(s)});
        } else {
          CHECK_FALSE(play.capture_time.has_value());
        }
      }
      if (sol.finite(s)) {
        auto attribution = capture_attribution(sol, a, s);
        CHECK(attribution.cop == *sol.capturer(s));
        CHECK(attribution.time == sol.capture_time[s]);
      }
    }
  }
}

TEST_CASE("discounted cross-solve of the CR game reproduces capture times and optimal sets") {
  for (auto& [g, n] : small_arenas()) {
    Arena a(g, n);
    auto sol = solve_modified_cr(a);
    for (auto gamma : {Rational(1, 2), Rational(2, 3), Rational(9, 10)}) {
      auto disc = solve_cr_discounted(a, gamma);
      for (StateId s = 0; s < a.state_count(); ++s) {
        Rational expect = sol.finite(s) ? gamma.pow(static_cast<unsigned>(sol.capture_time[s])) : Rational(0);
        CHECK(disc.value[s] == expect);
        CHECK(disc.opt_moves[s] == sol.opt_moves[s]);
      }
    }
  }
}

TEST_CASE("classic cop number") {
  CHECK(classic_cop_win(path_graph(5), 1));
  CHECK_FALSE(classic_cop_win(petersen_graph(), 2));
  CHECK(classic_cop_win(petersen_graph(), 3));
  CHECK_FALSE(classic_cop_win(cycle_graph(4), 1));
  CHECK(classic_cop_number(figure_graph(), 3) == 2);
  CHECK(classic_cop_number(path_graph(2), 3) == 1);
  CHECK(classic_cop_number(dodecahedron_graph(), 3) == 3);
  CHECK_FALSE(classic_cop_number(petersen_graph(), 2).has_value());
  CHECK_THROWS_AS(classic_cop_win(path_graph(3), 0), ValidationError);
}

TEST_CASE("classic cop win is monotone in k and agrees with the placement convention") {
  for (auto g : {path_graph(4), cycle_graph(4), cycle_graph(6), complete_graph(4), star_graph(3), figure_graph(),
                 petersen_graph()}) {
    for (int k = 1; k <= 2; ++k) {
      bool win = classic_cop_win(g, k);
      CHECK(win == classic_cop_win_placement(g, k));
      if (win) CHECK(classic_cop_win(g, k + 1));
    }
  }
}

#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"
#include "scar/arena.hpp"

using namespace scar;

namespace {

std::set<std::string> labels(const Arena& a, const std::vector<StateId>& ids) {
  std::set<std::string> out;
  for (StateId s : ids) out.insert(a.label(s));
  return out;
}

// Naive closure: sweep all states until nothing changes.
std::vector<StateId> closure_by_sweeps(const Arena& a, StateId s0) {
  std::vector<char> in(a.state_count(), 0);
  in[s0] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < a.state_count(); ++s) {
      if (!in[s]) continue;
      for (StateId t : a.successors(s))
        if (!a.is_capture(t) && !in[t]) in[t] = changed = 1;
    }
  }
  std::vector<StateId> out;
  for (StateId s = 0; s < a.state_count(); ++s)
    if (in[s]) out.push_back(s);
  return out;
}

std::vector<StateId> noncapture_states(const Arena& a) {
  std::vector<StateId> out;
  for (StateId s = 0; s < a.state_count(); ++s)
    if (!a.is_capture(s)) out.push_back(s);
  return out;
}

}  // namespace

TEST_CASE("state literals") {
  State s = parse_state("0,2;1;3");
  CHECK(s.cops == std::vector<Vertex>{0, 2});
  CHECK(s.robber == 1);
  CHECK(s.mover == 3);
  CHECK(format_state(s) == "0,2;1;3");
  CHECK_THROWS_AS(parse_state("0,0;1"), ValidationError);
  CHECK_THROWS_AS(parse_state("0,x;1;1"), ValidationError);
  Arena a(path_graph(2), 3);
  CHECK_THROWS_AS(a.parse("0;1;1"), ValidationError);
  CHECK_THROWS_AS(a.parse("0,0;2;1"), ValidationError);
  CHECK_THROWS_AS(a.parse("0,0;1;4"), ValidationError);
}

TEST_CASE("P2 with three tokens") {
  Arena a(path_graph(2), 3);
  CHECK(a.state_count() == 24);
  CHECK(noncapture_states(a).size() == 6);
  // 1-based (1,1,2,n) and (2,2,1,n) are the noncapture states.
  CHECK(labels(a, noncapture_states(a)) ==
        std::set<std::string>{"0,0;1;1", "0,0;1;2", "0,0;1;3", "1,1;0;1", "1,1;0;2", "1,1;0;3"});
  CHECK(labels(a, a.successors(a.parse("0,0;1;1"))) == std::set<std::string>{"0,0;1;2", "1,0;1;2"});
  CHECK(a.is_capture(a.parse("1,0;1;2")));
  CHECK_FALSE(a.is_capture(a.parse("0,0;1;3")));
  CHECK(a.cops_at_robber(a.parse("1,1;1;1")) == 3u);
}

TEST_CASE("arena sizes and cap") {
  CHECK(Arena(petersen_graph(), 3).state_count() == 3000);
  CHECK(Arena(petersen_graph(), 4).state_count() == 40000);
  CHECK_THROWS_AS(Arena(petersen_graph(), 4, 39999), CapacityExceeded);
  CHECK_THROWS_AS(Arena(path_graph(2), 1), ValidationError);
}

TEST_CASE("figure graph capture predicate") {
  auto g = parse_edge_list("0 1\n0 2\n1 3\n2 3\n2 4\n4 5\n5 6\n");
  Arena a(g, 3);
  CHECK_FALSE(a.is_capture(a.parse("2,6;4;3")));
  CHECK(a.is_capture(a.parse("4,6;4;3")));
}

TEST_CASE("successor relation invariants hold exhaustively") {
  for (auto [g, n] : std::vector<std::pair<Graph, int>>{{path_graph(2), 3},
                                                         {path_graph(3), 3},
                                                         {complete_graph(3), 4},
                                                         {star_graph(3), 3},
                                                         {cycle_graph(4), 3},
                                                         {path_graph(2), 5}}) {
    Arena a(g, n);
    CHECK(a.state_count() == static_cast<StateId>(std::pow(g.vertex_count(), n) * n));
    for (StateId s = 0; s < a.state_count(); ++s) {
      State from = a.decode(s);
      CHECK(a.encode(from) == s);
      auto succ = a.successors(s);
      REQUIRE(!succ.empty());
      bool has_stay = false;
      for (StateId t : succ) {
        State to = a.decode(t);
        CHECK(to.mover == from.mover % n + 1);
        for (int token = 1; token <= n; ++token) {
          Vertex x = token < n ? from.cops[token - 1] : from.robber;
          Vertex y = token < n ? to.cops[token - 1] : to.robber;
          if (token == from.mover)
            CHECK((x == y || g.adjacent(x, y)));
          else
            CHECK(x == y);
        }
        if (a.decode(t).cops == from.cops && to.robber == from.robber) has_stay = true;
        // Predecessor enumeration is the inverse relation.
        bool found = false;
        a.for_each_predecessor(t, [&](StateId p, int slot) {
          if (p == s) {
            found = true;
            CHECK(a.successor(p, slot) == t);
          }
        });
        CHECK(found);
      }
      CHECK(has_stay);
    }
  }
}

TEST_CASE("reachable_noncapture on P2") {
  Arena a(path_graph(2), 3);
  auto r = reachable_noncapture(a, a.parse("0,0;1;1"));
  CHECK(labels(a, r) == std::set<std::string>{"0,0;1;1", "0,0;1;2", "0,0;1;3"});
  CHECK(r == closure_by_sweeps(a, a.parse("0,0;1;1")));
  CHECK_THROWS_AS(reachable_noncapture(a, a.parse("1,0;1;1")), ValidationError);
}

TEST_CASE("reachable_noncapture is all of S_nc on non-path graphs") {
  for (auto g : {complete_graph(3), cycle_graph(4), star_graph(3), petersen_graph()}) {
    Arena a(g, 3);
    auto all = noncapture_states(a);
    for (StateId s0 : {all.front(), all[all.size() / 2], all.back()}) CHECK(reachable_noncapture(a, s0) == all);
  }
}

TEST_CASE("reachable_noncapture matches the naive closure and never crosses a cop on paths") {
  for (auto g : {path_graph(3), path_graph(4)}) {
    Arena a(g, 3);
    for (StateId s0 : noncapture_states(a)) {
      auto r = reachable_noncapture(a, s0);
      CHECK(r == closure_by_sweeps(a, s0));
      if (all_cops_one_side(g, a.decode(s0)))
        for (StateId s : r) CHECK(all_cops_one_side(g, a.decode(s)));
    }
  }
  Arena a(path_graph(3), 3);
  auto r = reachable_noncapture(a, a.parse("0,0;2;1"));
  for (StateId s : r) CHECK(all_cops_one_side(path_graph(3), a.decode(s)));
}

TEST_CASE("simulate") {
  Arena a(path_graph(2), 3);
  std::vector<Vertex> stay(a.state_count());
  for (StateId s = 0; s < a.state_count(); ++s) stay[s] = a.position(s, a.mover(s));

  auto capture_by_c1 = stay;
  capture_by_c1[a.parse("0,0;1;1")] = 1;
  auto p = simulate(a, a.parse("0,0;1;1"), capture_by_c1);
  CHECK(p.capture_time == 1);
  CHECK(p.capturing_cops == std::vector<int>{1});

  auto idle = simulate(a, a.parse("0,0;1;3"), stay);
  CHECK_FALSE(idle.capture_time.has_value());
  CHECK(idle.capturing_cops.empty());

  auto run_in = stay;
  run_in[a.parse("0,0;1;3")] = 0;
  auto q = simulate(a, a.parse("0,0;1;3"), run_in);
  CHECK(q.capture_time == 1);
  CHECK(q.capturing_cops == std::vector<int>{1, 2});

  auto illegal = stay;
  Arena a3(path_graph(3), 3);
  std::vector<Vertex> bad(a3.state_count(), 2);
  CHECK_THROWS_AS(simulate(a3, a3.parse("0,0;1;1"), bad), ValidationError);
}

TEST_CASE("all_cops_one_side") {
  CHECK(all_cops_one_side(path_graph(3), parse_state("0,0;2;1")));
  CHECK_FALSE(all_cops_one_side(path_graph(3), parse_state("0,2;1;1")));
  CHECK(all_cops_one_side(path_graph(4), parse_state("1,0;3;1")));
  CHECK(all_cops_one_side(path_graph(4), parse_state("3,2;0;2")));
  CHECK_THROWS_AS(all_cops_one_side(cycle_graph(4), parse_state("0,0;2;1")), ValidationError);
}

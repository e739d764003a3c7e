#include "scar/arena.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace scar {
namespace {

int parse_small_int(std::string_view tok, std::string_view literal) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ValidationError("malformed state literal '" + std::string(literal) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

State parse_state(std::string_view literal) {
  auto parts = split(trim(literal), ';');
  if (parts.size() != 3) throw ValidationError("state literal must look like 'c1,c2;r;n': '" + std::string(literal) + "'");
  State s;
  for (auto tok : split(parts[0], ',')) s.cops.push_back(parse_small_int(trim(tok), literal));
  s.robber = parse_small_int(trim(parts[1]), literal);
  s.mover = parse_small_int(trim(parts[2]), literal);
  return s;
}

std::string format_state(const State& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.cops.size(); ++i) out << (i ? "," : "") << s.cops[i];
  out << ';' << s.robber << ';' << s.mover;
  return out.str();
}

Arena::Arena(Graph graph, int n_players, std::size_t max_states)
    : graph_(std::move(graph)), n_players_(n_players), vertex_count_(graph_.vertex_count()) {
  if (n_players < 2 || n_players > kMaxPlayers)
    throw ValidationError("number of players must be in [2," + std::to_string(kMaxPlayers) + "], got " +
                          std::to_string(n_players));
  if (graph_.max_degree() + 1 > 64) throw ValidationError("maximum degree above 63 is not supported");

  std::size_t cap = std::min<std::size_t>(max_states, std::numeric_limits<StateId>::max());
  std::size_t count = static_cast<std::size_t>(n_players);
  stride_.assign(n_players + 1, 0);
  for (int token = n_players; token >= 1; --token) {
    stride_[token] = static_cast<StateId>(count);
    if (count > cap / static_cast<std::size_t>(vertex_count_))
      throw CapacityExceeded("state space |V|^N * N exceeds the cap of " + std::to_string(max_states) + " states");
    count *= static_cast<std::size_t>(vertex_count_);
  }
  state_count_ = static_cast<StateId>(count);

  capture_mask_.assign(state_count_, 0);
  for (StateId id = 0; id < state_count_; ++id) {
    Vertex r = robber(id);
    std::uint8_t mask = 0;
    for (int cop = 1; cop < n_players_; ++cop)
      if (position(id, cop) == r) mask |= static_cast<std::uint8_t>(1u << (cop - 1));
    capture_mask_[id] = mask;
    if (mask) ++capture_count_;
  }
}

StateId Arena::encode(const State& s) const {
  if (static_cast<int>(s.cops.size()) != cop_count())
    throw ValidationError("state has " + std::to_string(s.cops.size()) + " cops, arena expects " +
                          std::to_string(cop_count()));
  if (s.mover < 1 || s.mover > n_players_)
    throw ValidationError("mover " + std::to_string(s.mover) + " out of range [1," + std::to_string(n_players_) + "]");
  StateId id = static_cast<StateId>(s.mover - 1);
  for (int token = 1; token <= n_players_; ++token) {
    Vertex v = token < n_players_ ? s.cops[token - 1] : s.robber;
    if (v < 0 || v >= vertex_count_)
      throw ValidationError("vertex " + std::to_string(v) + " out of range for a graph with " +
                            std::to_string(vertex_count_) + " vertices");
    id += static_cast<StateId>(v) * stride_[token];
  }
  return id;
}

State Arena::decode(StateId id) const {
  State s;
  for (int cop = 1; cop < n_players_; ++cop) s.cops.push_back(position(id, cop));
  s.robber = robber(id);
  s.mover = mover(id);
  return s;
}

int Arena::move_slot(StateId id, Vertex target) const {
  auto targets = graph_.closed_neighbors(position(id, mover(id)));
  auto it = std::lower_bound(targets.begin(), targets.end(), target);
  if (it == targets.end() || *it != target) return -1;
  return static_cast<int>(it - targets.begin());
}

std::vector<StateId> Arena::successors(StateId id) const {
  std::vector<StateId> out;
  for_each_successor(id, [&](int, StateId next) { out.push_back(next); });
  return out;
}

std::vector<StateId> reachable_noncapture(const Arena& arena, StateId s0) {
  if (arena.is_capture(s0)) throw ValidationError("initial state " + arena.label(s0) + " is a capture state");
  std::vector<char> seen(arena.state_count(), 0);
  std::vector<StateId> order{s0};
  seen[s0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    arena.for_each_successor(order[head], [&](int, StateId next) {
      if (!seen[next] && !arena.is_capture(next)) {
        seen[next] = 1;
        order.push_back(next);
      }
    });
  }
  std::sort(order.begin(), order.end());
  return order;
}

Play simulate(const Arena& arena, StateId s0, std::span<const Vertex> profile, std::size_t max_steps) {
  if (profile.size() != arena.state_count()) throw ValidationError("profile size does not match the arena");
  if (max_steps == 0) max_steps = 2 * static_cast<std::size_t>(arena.state_count());
  Play play;
  play.initial = s0;
  play.states.push_back(s0);
  std::vector<char> visited(arena.state_count(), 0);
  StateId cur = s0;
  for (std::size_t t = 0;; ++t) {
    if (arena.is_capture(cur)) {
      play.capture_time = static_cast<int>(t);
      for (int cop = 1; cop < arena.n_players(); ++cop)
        if (arena.cops_at_robber(cur) & (1u << (cop - 1))) play.capturing_cops.push_back(cop);
      return play;
    }
    if (visited[cur] || t >= max_steps) return play;
    visited[cur] = 1;
    int slot = arena.move_slot(cur, profile[cur]);
    if (slot < 0)
      throw ValidationError("illegal move to vertex " + std::to_string(profile[cur]) + " at state " + arena.label(cur));
    play.moves.push_back(profile[cur]);
    cur = arena.successor(cur, slot);
    play.states.push_back(cur);
  }
}

bool all_cops_one_side(const Graph& g, const State& s) {
  auto order = g.path_order();
  if (!order) throw ValidationError("all_cops_one_side requires a path graph");
  std::vector<int> rank(g.vertex_count());
  for (int i = 0; i < static_cast<int>(order->size()); ++i) rank[(*order)[i]] = i;
  bool all_left = true, all_right = true;
  for (Vertex c : s.cops) {
    all_left = all_left && rank[c] < rank[s.robber];
    all_right = all_right && rank[c] > rank[s.robber];
  }
  return all_left || all_right;
}

}  // namespace scar

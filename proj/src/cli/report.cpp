#include <fstream>

#include "internal.hpp"

namespace scar::cli {

Graph load_graph(const Inputs& in) {
  if (in.graph_file.empty() == in.builtin.empty()) throw ValidationError("exactly one of --graph and --builtin is required");
  if (!in.builtin.empty()) return resolve_graph_recipe(in.builtin);
  std::ifstream file(in.graph_file);
  if (!file) throw GraphError(GraphError::Kind::kMalformed, "cannot open graph file " + in.graph_file);
  return parse_edge_list(file);
}

json graph_json(const Graph& g) {
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"max_degree", g.max_degree()}};
}

json count_or_null(std::optional<int> v) { return v ? json(*v) : json(nullptr); }

json verdict_json(const Arena& a, const PositionalityVerdict& v) {
  json witnesses = json::array();
  for (std::size_t i = 0; i < v.witnesses.size() && i < kWitnessCap; ++i) {
    const auto& w = v.witnesses[i];
    witnesses.push_back({{"n", w.n}, {"m", w.m}, {"state", a.label(w.state)}});
  }
  return {{"positional_exists", v.positional_exists},
          {"nonpositional_exists", v.nonpositional_exists},
          {"witnesses", witnesses},
          {"witness_count", v.witnesses.size()},
          {"gamma", v.params.gamma.str()},
          {"epsilon", v.params.epsilon.str()},
          {"s0", a.label(v.s0)}};
}

json classification_json(const Arena& a, const Classification& c) {
  auto label = [&](std::optional<StateId> s) { return s ? json(a.label(*s)) : json(nullptr); };
  auto flag = [](std::optional<bool> b) { return b ? json(*b) : json(nullptr); };
  return {{"class", to_string(c.klass)},
          {"evidence",
           {{"unbounded_state", label(c.unbounded_witness)},
            {"g1_state", label(c.g1_witness)},
            {"g2prime_state", label(c.g2prime_witness)},
            {"g3prime_state", label(c.g3prime_witness)},
            {"variant_disagreement", label(c.variant_disagreement)}}},
          {"g3_exists_variant", flag(c.g3_exists_variant)},
          {"g3_adversarial_variant", flag(c.g3_adversarial_variant)}};
}

}  // namespace scar::cli

#include "ludoscene/ordering.hpp"

#include <algorithm>
#include <unordered_map>

namespace ludoscene {

std::optional<IdList> linear_order(const OrderingGraph& graph) {
  const std::size_t n = graph.nodes.size();
  std::unordered_map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < n; ++i) position.try_emplace(graph.nodes[i], i);

  std::vector<std::vector<std::size_t>> successors(n);
  std::vector<std::size_t> indegree(n, 0);
  auto add_edge = [&](const ElementId& from, const ElementId& to) {
    auto a = position.find(from);
    auto b = position.find(to);
    if (a == position.end() || b == position.end()) return;
    successors[a->second].push_back(b->second);
    ++indegree[b->second];
  };
  for (const auto& e : graph.edges) add_edge(e.before, e.after);
  for (const auto& g : graph.branches) {
    for (const auto& entry : g.entries) add_edge(g.split, entry);
  }

  // Kahn's algorithm, always taking the ready node that comes first in
  // graph.nodes. n is small (sibling groups), so a linear scan suffices.
  std::vector<bool> placed(n, false);
  IdList order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        pick = i;
        break;
      }
    }
    if (pick == n) return std::nullopt;
    placed[pick] = true;
    order.push_back(graph.nodes[pick]);
    for (auto s : successors[pick]) --indegree[s];
  }
  return order;
}

const OrderingGraph* declared_ordering(const Scenario& scenario, const ElementId& owner) {
  for (const auto& g : scenario.orderings) {
    if (g.owner == owner) return &g;
  }
  return nullptr;
}

namespace {

const LudicElement* find_mission(const Scenario& scenario, const ElementId& id) {
  for (const auto& m : scenario.ludic) {
    if (m.id == id) return &m;
  }
  return nullptr;
}

const std::vector<LudicElement>* children_of(const Scenario& scenario, const ElementId& owner) {
  if (owner.empty()) return &scenario.ludic;
  const auto* mission = find_mission(scenario, owner);
  return mission ? &mission->children : nullptr;
}

}  // namespace

OrderingGraph sibling_graph(const Scenario& scenario, const ElementId& owner) {
  OrderingGraph graph;
  graph.owner = owner;
  const auto* children = children_of(scenario, owner);
  if (children == nullptr) return graph;
  for (const auto& c : *children) graph.nodes.push_back(c.id);
  if (const auto* declared = declared_ordering(scenario, owner)) {
    graph.edges = declared->edges;
    graph.branches = declared->branches;
  }
  return graph;
}

std::optional<std::vector<const LudicElement*>> ordered_children(const Scenario& scenario,
                                                                 const ElementId& owner) {
  const auto* children = children_of(scenario, owner);
  if (children == nullptr) return std::nullopt;
  auto order = linear_order(sibling_graph(scenario, owner));
  if (!order) return std::nullopt;
  std::vector<const LudicElement*> out;
  out.reserve(order->size());
  for (const auto& id : *order) {
    auto it = std::find_if(children->begin(), children->end(),
                           [&](const LudicElement& c) { return c.id == id; });
    out.push_back(&*it);
  }
  return out;
}

}  // namespace ludoscene

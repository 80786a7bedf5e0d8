#pragma once

#include <optional>

#include "ludoscene/model.hpp"

namespace ludoscene {

// Topological order of graph.nodes. Branch groups contribute an edge from the
// split node to each entry. Ties are broken by position in graph.nodes, so a
// graph without edges yields its nodes unchanged. Edges naming unknown nodes
// are ignored. Returns nullopt when the graph has a cycle.
std::optional<IdList> linear_order(const OrderingGraph& graph);

// Ordering graph of one sibling group as the analyses see it: nodes are the
// owner's children in document order (top-level missions for an empty owner),
// edges come from the declared ordering for that owner, if any.
OrderingGraph sibling_graph(const Scenario& scenario, const ElementId& owner);

const OrderingGraph* declared_ordering(const Scenario& scenario, const ElementId& owner);

// linear_order(sibling_graph(...)) as element pointers. nullopt on a cycle or
// when the owner is not a mission.
std::optional<std::vector<const LudicElement*>> ordered_children(const Scenario& scenario,
                                                                 const ElementId& owner);

}  // namespace ludoscene

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "softalldiff/instance.hpp"

namespace softalldiff {

// The bipartite assignment network for one instance: source -> variables ->
// values -> sink, all capacities 1. A value occurring in k domains has k
// parallel arcs to the sink with costs 0, 1, ..., k-1, so routing j variables
// to it costs C(j, 2). The parallel arcs are kept implicit: per-value usage
// counts recover every residual arc cost (the cheapest unused arc costs
// usage[d], the priciest saturated one usage[d] - 1), because arcs saturate
// strictly in cost order.
struct FlowNetwork {
  Instance instance;
  // Per value: number of domains containing it (= its parallel sink arcs).
  std::vector<int> value_degree;

  int var_count() const { return instance.n; }
  int value_count() const { return instance.universe_size(); }

  // Arcs variable -> value; one per domain element, m in total.
  const std::vector<ValueId>& var_arcs(int var) const {
    return instance.domains[var];
  }

  // Node ids shared with the residual view and the explicit residual graph:
  // variables first, then values, then source and sink.
  int var_node(int var) const { return var; }
  int value_node(ValueId d) const { return instance.n + d; }
  int s_node() const { return instance.n + value_count(); }
  int t_node() const { return s_node() + 1; }
  int node_count() const { return t_node() + 1; }
};

// An integer s-t flow, stored as the partial assignment it induces.
struct Flow {
  // Per variable: its value, or kNoValue while unassigned.
  std::vector<ValueId> assigned;
  // Per value: number of variables assigned to it.
  std::vector<int> usage;
  std::int64_t cost = 0;

  // Flow value: number of assigned variables.
  int value() const;
};

struct PathStep {
  int var;
  ValueId old_value;  // kNoValue for the start variable
  ValueId new_value;
};

// One unit of augmentation. Applying it assigns start_var and permutes the
// values of the other touched variables; the unit enters the sink through
// end_value's cheapest unused parallel arc, whose cost is entry_cost.
struct AugmentingPath {
  int start_var = -1;
  ValueId end_value = kNoValue;
  std::vector<PathStep> reassignments;
  std::int64_t entry_cost = 0;
};

FlowNetwork build_network(const Instance& instance);

Flow empty_flow(const FlowNetwork& net);

// Flow induced by a complete assignment; its cost equals violation(...).
Flow flow_from_assignment(const FlowNetwork& net, const Assignment& a);

// Cost of the cheapest unused (d, sink) arc, i.e. usage[d]; nothing when all
// of d's parallel arcs are saturated.
std::optional<std::int64_t> cheapest_entry_cost(const FlowNetwork& net,
                                                const Flow& flow, ValueId d);

// Minimum-cost augmenting path starting at start_var, which must be
// unassigned: zero-cost reachability over the variable/value residual arcs,
// then the cheapest sink entry among the reached values, ties broken by the
// smallest ValueId. Nothing if no reached value has an unused sink arc.
std::optional<AugmentingPath> find_augmenting_path(const FlowNetwork& net,
                                                   const Flow& flow,
                                                   int start_var);

// The same search seeded from every unassigned variable at once, which makes
// the result a minimum-cost source-to-sink path in the whole residual graph.
// Nothing when every variable is assigned.
std::optional<AugmentingPath> find_cheapest_augmenting_path(
    const FlowNetwork& net, const Flow& flow);

// Applies the path: value +1, cost + entry_cost. The path must have been
// computed against exactly this flow.
Flow augment(Flow flow, const AugmentingPath& path);

// Successive cheapest augmenting paths until all n variables are assigned.
// Exactly n augmentations run, every intermediate flow is extreme, and the
// final cost is the minimum violation over all complete assignments.
// on_augment, when set, observes the flow after each augmentation.
Flow min_cost_flow(const FlowNetwork& net,
                   const std::function<void(const Flow&)>& on_augment = {});

// Sum of C(usage[d], 2) over all values; identical to the running cost.
std::int64_t flow_cost(const Flow& flow);

}  // namespace softalldiff

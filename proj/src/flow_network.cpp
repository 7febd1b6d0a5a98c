#include "softalldiff/flow_network.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace softalldiff {

int Flow::value() const {
  return static_cast<int>(
      std::count_if(assigned.begin(), assigned.end(),
                    [](ValueId d) { return d != kNoValue; }));
}

FlowNetwork build_network(const Instance& instance) {
  FlowNetwork net;
  net.instance = instance;
  net.value_degree.assign(instance.universe_size(), 0);
  for (const auto& domain : instance.domains) {
    for (ValueId d : domain) ++net.value_degree[d];
  }
  return net;
}

Flow empty_flow(const FlowNetwork& net) {
  Flow flow;
  flow.assigned.assign(net.var_count(), kNoValue);
  flow.usage.assign(net.value_count(), 0);
  flow.cost = 0;
  return flow;
}

Flow flow_from_assignment(const FlowNetwork& net, const Assignment& a) {
  assert(static_cast<int>(a.size()) == net.var_count());
  Flow flow = empty_flow(net);
  for (int i = 0; i < net.var_count(); ++i) {
    assert(std::binary_search(net.instance.domains[i].begin(),
                              net.instance.domains[i].end(), a[i]));
    flow.assigned[i] = a[i];
    flow.cost += flow.usage[a[i]]++;
  }
  return flow;
}

std::optional<std::int64_t> cheapest_entry_cost(const FlowNetwork& net,
                                                const Flow& flow, ValueId d) {
  if (flow.usage[d] >= net.value_degree[d]) return std::nullopt;
  return flow.usage[d];
}

namespace {

// Zero-cost reachability from the seed variables over the residual arcs among
// variables and values: forward var -> value where the arc is unused,
// backward value -> var where it carries flow. Returns the path to the
// reached value with the cheapest unused sink arc, ties to the smallest
// ValueId. Seeds must be unassigned and listed in ascending index order.
std::optional<AugmentingPath> search_augmenting_path(
    const FlowNetwork& net, const Flow& flow, const std::vector<int>& seeds) {
  const int n = net.var_count();
  const int values = net.value_count();

  std::vector<std::vector<int>> vars_on_value(values);
  for (int i = 0; i < n; ++i) {
    if (flow.assigned[i] != kNoValue) vars_on_value[flow.assigned[i]].push_back(i);
  }

  // Discovering var per reached value / discovering value per reached var.
  std::vector<int> value_parent(values, -1);
  std::vector<ValueId> var_parent(n, -1);
  std::vector<char> var_seen(n, 0), value_seen(values, 0);

  std::vector<int> queue;  // vars as i, values as n + d
  queue.reserve(n + values);
  for (int var : seeds) {
    assert(flow.assigned[var] == kNoValue);
    var_seen[var] = 1;
    queue.push_back(var);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int node = queue[head];
    if (node < n) {
      for (ValueId d : net.var_arcs(node)) {
        if (d == flow.assigned[node] || value_seen[d]) continue;
        value_seen[d] = 1;
        value_parent[d] = node;
        queue.push_back(n + d);
      }
    } else {
      for (int var : vars_on_value[node - n]) {
        if (var_seen[var]) continue;
        var_seen[var] = 1;
        var_parent[var] = node - n;
        queue.push_back(var);
      }
    }
  }

  ValueId best = kNoValue;
  std::int64_t best_cost = 0;
  for (ValueId d = 0; d < values; ++d) {
    if (!value_seen[d] || flow.usage[d] >= net.value_degree[d]) continue;
    if (best == kNoValue || flow.usage[d] < best_cost) {
      best = d;
      best_cost = flow.usage[d];
    }
  }
  if (best == kNoValue) return std::nullopt;

  AugmentingPath path;
  path.end_value = best;
  path.entry_cost = best_cost;
  for (ValueId d = best;;) {
    const int var = value_parent[d];
    const ValueId old = flow.assigned[var];
    path.reassignments.push_back({var, old, d});
    if (old == kNoValue) {
      path.start_var = var;
      break;
    }
    assert(var_parent[var] == old);  // vars are discovered via their own value
    d = old;
  }
  std::reverse(path.reassignments.begin(), path.reassignments.end());
  return path;
}

}  // namespace

std::optional<AugmentingPath> find_augmenting_path(const FlowNetwork& net,
                                                   const Flow& flow,
                                                   int start_var) {
  return search_augmenting_path(net, flow, {start_var});
}

std::optional<AugmentingPath> find_cheapest_augmenting_path(
    const FlowNetwork& net, const Flow& flow) {
  std::vector<int> seeds;
  for (int i = 0; i < net.var_count(); ++i) {
    if (flow.assigned[i] == kNoValue) seeds.push_back(i);
  }
  if (seeds.empty()) return std::nullopt;
  return search_augmenting_path(net, flow, seeds);
}

Flow augment(Flow flow, const AugmentingPath& path) {
  for (const PathStep& step : path.reassignments) {
    assert(flow.assigned[step.var] == step.old_value);
    if (step.old_value != kNoValue) --flow.usage[step.old_value];
    flow.assigned[step.var] = step.new_value;
    ++flow.usage[step.new_value];
  }
  flow.cost += path.entry_cost;
  return flow;
}

Flow min_cost_flow(const FlowNetwork& net,
                   const std::function<void(const Flow&)>& on_augment) {
  Flow flow = empty_flow(net);
  for (int round = 0; round < net.var_count(); ++round) {
    auto path = find_cheapest_augmenting_path(net, flow);
    if (!path) {
      // Unreachable for well-formed instances: an unassigned variable's own
      // domain values always keep one unused sink arc.
      throw std::logic_error("augmenting path missing before full value");
    }
    flow = augment(std::move(flow), *path);
    if (on_augment) on_augment(flow);
  }
  return flow;
}

std::int64_t flow_cost(const Flow& flow) {
  std::int64_t total = 0;
  for (int used : flow.usage) {
    total += static_cast<std::int64_t>(used) * (used - 1) / 2;
  }
  return total;
}

}  // namespace softalldiff

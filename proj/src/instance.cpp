#include "softalldiff/instance.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace softalldiff {

Instance build_instance(const std::vector<VarSpec>& vars, std::int64_t z_min,
                        std::int64_t z_max) {
  if (z_min > z_max) {
    throw MalformedInstance("cost variable has empty interval: z_min (" +
                            std::to_string(z_min) + ") > z_max (" +
                            std::to_string(z_max) + ")");
  }

  Instance instance;
  instance.n = static_cast<int>(vars.size());

  std::unordered_map<std::string, ValueId> id_of;
  for (const VarSpec& var : vars) {
    if (var.values.empty()) {
      throw MalformedInstance("variable '" + var.name + "' has no values");
    }
    std::vector<ValueId> domain;
    domain.reserve(var.values.size());
    for (const std::string& token : var.values) {
      auto [it, inserted] = id_of.try_emplace(
          token, static_cast<ValueId>(instance.value_tokens.size()));
      if (inserted) instance.value_tokens.push_back(token);
      domain.push_back(it->second);
    }
    std::sort(domain.begin(), domain.end());
    domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
    instance.m += static_cast<int>(domain.size());
    instance.var_names.push_back(var.name);
    instance.domains.push_back(std::move(domain));
  }

  const std::int64_t cap = max_violation(instance.n);
  instance.z_min = std::clamp<std::int64_t>(z_min, 0, cap);
  instance.z_max = std::clamp<std::int64_t>(z_max, 0, cap);
  return instance;
}

std::int64_t violation(const Instance& instance, const Assignment& a) {
  assert(static_cast<int>(a.size()) == instance.n);
  std::vector<int> multiplicity(instance.value_tokens.size(), 0);
  std::int64_t pairs = 0;
  for (ValueId d : a) {
    assert(d >= 0 && d < instance.universe_size());
    pairs += multiplicity[d]++;  // each prior occurrence forms one new pair
  }
  return pairs;
}

}  // namespace softalldiff

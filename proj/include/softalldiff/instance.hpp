#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace softalldiff {

// Dense index into an instance's value universe.
using ValueId = int;

inline constexpr ValueId kNoValue = -1;

struct VarSpec {
  std::string name;
  std::vector<std::string> values;
};

class MalformedInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Problem data: n decision variables with finite domains over an interned
// value universe, plus the integer interval [z_min, z_max] for the cost
// variable. Immutable after construction; mutation happens on copies.
struct Instance {
  int n = 0;
  std::vector<std::string> var_names;
  // Per variable, ascending ValueIds without duplicates.
  std::vector<std::vector<ValueId>> domains;
  // ValueId -> external token, in first-seen order.
  std::vector<std::string> value_tokens;
  std::int64_t z_min = 0;
  std::int64_t z_max = 0;
  // Sum of domain cardinalities.
  int m = 0;

  int universe_size() const { return static_cast<int>(value_tokens.size()); }
};

// One value per variable, values[i] drawn from domains[i].
using Assignment = std::vector<ValueId>;

// Largest possible number of violated dis-equalities: n*(n-1)/2.
inline std::int64_t max_violation(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

// Interns value tokens in first-seen order, sorts and deduplicates each
// domain, computes m, and clamps the z interval into [0, n*(n-1)/2].
// Throws MalformedInstance when a variable has no values or z_min > z_max.
Instance build_instance(const std::vector<VarSpec>& vars, std::int64_t z_min,
                        std::int64_t z_max);

// Number of index pairs i < j with a[i] == a[j]; equivalently the sum of
// C(k, 2) over the multiplicities k of the assigned values.
std::int64_t violation(const Instance& instance, const Assignment& a);

}  // namespace softalldiff

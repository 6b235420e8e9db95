#pragma once

#include <functional>

#include "hlctdp/instance.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp {

struct OracleLimits {
  double maxConfigs = 1e6;       // cap on (|L|+1)^|K|
  double maxAssignments = 1e7;   // cap on the per-config option product
  // The origin/destination-must-be-own-hub rule is part of the problem
  // semantics; disabling it exists only to reproduce the value an invalid
  // relaxation would report.
  bool enforceConsistency = true;
};

// Exact optimum by exhaustive search over hub configurations and, per
// configuration, all commodity assignments (depth-first with capacity and
// optimistic-profit pruning, both of which preserve exactness). Refuses
// oversized inputs with SizeError rather than truncating.
Solution brute_force(const Instance& inst, const OracleLimits& limits = {});

// Yields every commodity assignment over the open hubs of the given
// configuration: each commodity is either skipped or assigned any
// (level, first hub, second hub) combination. No capacity, time or
// consistency filtering is applied, so the stream covers infeasible
// candidates for formulation cross-checks. The callback returns false to
// stop early. Candidates share the config's hubLevels; totals are not
// filled in.
void enumerate_candidates(
    const Instance& inst, const HubConfig& config, const OracleLimits& limits,
    const std::function<bool(const Solution&)>& sink);

// All hub configurations of an instance in lexicographic order (level -1 =
// closed), for tests that sweep configs.
void for_each_config(const Instance& inst,
                     const std::function<void(const HubConfig&)>& sink);

}  // namespace hlctdp

#include "hlctdp/solution.hpp"

namespace hlctdp {

const char* solve_status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Feasible: return "feasible";
    case SolveStatus::InfeasibleInput: return "infeasibleInput";
    case SolveStatus::Empty: return "empty";
  }
  return "unknown";
}

ObjectiveParts compute_objective(const Instance& inst,
                                 const std::map<int, int>& hubLevels,
                                 const std::map<int, ServedChoice>& served) {
  ObjectiveParts parts;
  for (const auto& [c, choice] : served) {
    const Commodity& com = inst.commodity(c);
    const DemandLevel& lvl = com.levels[choice.level];
    parts.revenue += lvl.w * lvl.q;
    parts.routing +=
        lvl.w * route_cost(inst, com.i, com.j, choice.route.k, choice.route.m);
  }
  for (const auto& [k, l] : hubLevels) parts.setup += inst.hub(k).G[l];
  parts.objective = parts.revenue - parts.routing - parts.setup;
  return parts;
}

void finalize_totals(const Instance& inst, Solution& sol) {
  ObjectiveParts parts = compute_objective(inst, sol.hubLevels, sol.served);
  sol.revenueTotal = parts.revenue;
  sol.routingCost = parts.routing;
  sol.setupCost = parts.setup;
  sol.objective = parts.objective;
}

}  // namespace hlctdp

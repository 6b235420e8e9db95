#pragma once

#include <map>

#include "hlctdp/instance.hpp"

namespace hlctdp {

enum class SolveStatus { Optimal, Feasible, InfeasibleInput, Empty };

const char* solve_status_name(SolveStatus status);

struct Route {
  int k = -1;
  int m = -1;  // == k for single-hub routes
};

struct ServedChoice {
  int level = 0;  // demand level r, 0-based
  Route route;
};

// Open hubs with their service levels; also the state of one search node.
struct HubConfig {
  std::map<int, int> levels;  // hub -> level, 0-based
};

struct Solution {
  std::map<int, int> hubLevels;         // hub -> activated level
  std::map<int, ServedChoice> served;   // commodity index -> choice
  double objective = 0.0;
  double revenueTotal = 0.0;
  double routingCost = 0.0;
  double setupCost = 0.0;
  SolveStatus status = SolveStatus::Empty;
  double gap = 0.0;  // relative optimality gap (fraction), for Feasible

  // Solver diagnostics.
  long long nodesExplored = 0;
  double bestBound = 0.0;
  double elapsedSeconds = 0.0;
};

struct ObjectiveParts {
  double revenue = 0.0;
  double routing = 0.0;
  double setup = 0.0;
  double objective = 0.0;
};

// Recomputes revenue/routing/setup from first principles, iterating in
// commodity- and hub-index order so identical solutions always produce
// bitwise identical totals.
ObjectiveParts compute_objective(const Instance& inst,
                                 const std::map<int, int>& hubLevels,
                                 const std::map<int, ServedChoice>& served);

// Fills a solution's totals and objective from its hub/served content.
void finalize_totals(const Instance& inst, Solution& sol);

}  // namespace hlctdp

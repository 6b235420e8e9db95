#pragma once

#include <string>
#include <vector>

#include "hlctdp/instance.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp {

enum class ViolationRule {
  OneLevelPerHub,
  OneLevelPerCommodity,
  OpenHubRouting,
  CapacityInterval,
  TimeLimit,
  Consistency,
};

const char* violation_rule_name(ViolationRule rule);

struct SolutionViolation {
  ViolationRule rule;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<SolutionViolation> violations;
};

// First-principles feasibility check; the single semantic authority the
// solver, the oracle and decoded external solutions must all pass.
// Capacity uses the half-open interval (W^{l-1}, W^l] for levels above the
// first, with tolerance 1e-9.
ValidationReport validate(const Instance& inst, const Solution& sol);

// Solution structure report in the style of the benchmark tables: hub counts
// by capacity level, occupancy of installed capacity, service shares by
// revenue level, cost split, and the share of two-hub routes.
struct SolutionStats {
  int numHubs = 0;
  double pctMedium = 0.0;    // share of open hubs at the lowest level
  double pctHigh = 0.0;      // share at upper levels
  double occupancy = 0.0;    // routed inbound flow / installed capacity, in %
  double pctServed = 0.0;
  // Share of served commodities per demand level, highest revenue first
  // (High/Med/Low naming convention per demand_level_names()).
  std::vector<double> pctServedByLevel;
  double profit = 0.0;
  double pctTravelCost = 0.0;   // routing share of total cost
  double pctInstallCost = 0.0;  // setup share of total cost
  double pctTwoHubRoutes = 0.0;
};

// Requires a validated solution.
SolutionStats stats(const Instance& inst, const Solution& sol);

// Percent deviation of a solution value from the best known one, clamped at
// zero for found >= bestKnown. bestKnown must be nonzero.
double deviation(double found, double bestKnown);

std::string stats_csv_header(int Rcount);
std::string stats_csv_row(double alpha, int n, int L, int R,
                          const SolutionStats& s);

}  // namespace hlctdp

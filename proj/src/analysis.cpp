#include "hlctdp/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hlctdp {

namespace {

constexpr double kTol = 1e-9;

std::string routeStr(const Instance& inst, int c, const ServedChoice& choice) {
  const Commodity& com = inst.commodity(c);
  std::ostringstream os;
  os << "(" << com.i + 1 << "," << com.j + 1 << ") via (" << choice.route.k + 1
     << "," << choice.route.m + 1 << ") at level " << choice.level + 1;
  return os.str();
}

// Inbound flow per hub: a two-hub route loads both hubs with the commodity's
// demand, a single-hub route loads its hub once.
std::vector<double> hubLoads(const Instance& inst, const Solution& sol) {
  std::vector<double> load(inst.numHubs(), 0.0);
  for (const auto& [c, choice] : sol.served) {
    double w = inst.commodity(c).levels[choice.level].w;
    load[choice.route.k] += w;
    if (choice.route.m != choice.route.k) load[choice.route.m] += w;
  }
  return load;
}

}  // namespace

const char* violation_rule_name(ViolationRule rule) {
  switch (rule) {
    case ViolationRule::OneLevelPerHub: return "oneLevelPerHub";
    case ViolationRule::OneLevelPerCommodity: return "oneLevelPerCommodity";
    case ViolationRule::OpenHubRouting: return "openHubRouting";
    case ViolationRule::CapacityInterval: return "capacityInterval";
    case ViolationRule::TimeLimit: return "timeLimit";
    case ViolationRule::Consistency: return "consistency";
  }
  return "?";
}

ValidationReport validate(const Instance& inst, const Solution& sol) {
  ValidationReport report;
  auto add = [&](ViolationRule rule, const std::string& detail) {
    report.ok = false;
    report.violations.push_back({rule, detail});
  };

  const int L = inst.serviceLevels();
  const int R = inst.demandLevels();
  for (const auto& [k, l] : sol.hubLevels) {
    if (k < 0 || k >= inst.numHubs() || l < 0 || l >= L)
      add(ViolationRule::OneLevelPerHub,
          "hub " + std::to_string(k + 1) + ": level index out of range");
  }
  for (const auto& [c, choice] : sol.served) {
    if (c < 0 || c >= inst.numCommodities()) {
      add(ViolationRule::OneLevelPerCommodity,
          "served entry references unknown commodity");
      continue;
    }
    if (choice.level < 0 || choice.level >= R)
      add(ViolationRule::OneLevelPerCommodity,
          routeStr(inst, c, choice) + ": demand level out of range");
  }
  if (!report.ok) return report;

  for (const auto& [c, choice] : sol.served) {
    const Commodity& com = inst.commodity(c);
    const int k = choice.route.k, m = choice.route.m;
    if (k < 0 || k >= inst.numHubs() || m < 0 || m >= inst.numHubs() ||
        !sol.hubLevels.count(k) || !sol.hubLevels.count(m)) {
      add(ViolationRule::OpenHubRouting,
          routeStr(inst, c, choice) + ": route uses a closed hub");
      continue;
    }
    double transit = inst.hub(k).h[sol.hubLevels.at(k)];
    if (m != k) transit += inst.hub(m).h[sol.hubLevels.at(m)];
    double total = route_time(inst, com.i, com.j, k, m) + transit;
    if (total > com.levels[choice.level].H + kTol) {
      std::ostringstream os;
      os << routeStr(inst, c, choice) << ": service time " << total
         << " exceeds cap " << com.levels[choice.level].H;
      add(ViolationRule::TimeLimit, os.str());
    }
    if (sol.hubLevels.count(com.i) && k != com.i)
      add(ViolationRule::Consistency,
          routeStr(inst, c, choice) + ": origin is an open hub but not the "
                                      "first hub of its route");
    if (sol.hubLevels.count(com.j) && m != com.j)
      add(ViolationRule::Consistency,
          routeStr(inst, c, choice) + ": destination is an open hub but not "
                                      "the second hub of its route");
  }

  std::vector<double> load = hubLoads(inst, sol);
  for (const auto& [k, l] : sol.hubLevels) {
    const HubData& hub = inst.hub(k);
    if (load[k] > hub.W[l] + kTol) {
      std::ostringstream os;
      os << "hub " << k + 1 << " at level " << l + 1 << ": inbound flow "
         << load[k] << " exceeds capacity " << hub.W[l];
      add(ViolationRule::CapacityInterval, os.str());
    }
    if (l >= 1 && load[k] <= hub.W[l - 1] + kTol) {
      std::ostringstream os;
      os << "hub " << k + 1 << " at level " << l + 1 << ": inbound flow "
         << load[k] << " does not exceed the lower level capacity "
         << hub.W[l - 1];
      add(ViolationRule::CapacityInterval, os.str());
    }
  }
  return report;
}

SolutionStats stats(const Instance& inst, const Solution& sol) {
  ValidationReport report = validate(inst, sol);
  if (!report.ok)
    throw Error("stats: solution is infeasible (" +
                std::string(violation_rule_name(report.violations[0].rule)) +
                ")");

  SolutionStats out;
  out.numHubs = static_cast<int>(sol.hubLevels.size());
  if (out.numHubs > 0) {
    int medium = 0;
    for (const auto& [k, l] : sol.hubLevels)
      if (l == 0) ++medium;
    out.pctMedium = 100.0 * medium / out.numHubs;
    out.pctHigh = 100.0 * (out.numHubs - medium) / out.numHubs;
  }

  std::vector<double> load = hubLoads(inst, sol);
  double installed = 0.0, used = 0.0;
  for (const auto& [k, l] : sol.hubLevels) {
    installed += inst.hub(k).W[l];
    used += load[k];
  }
  if (installed > 0.0) out.occupancy = 100.0 * used / installed;

  const int served = static_cast<int>(sol.served.size());
  if (inst.numCommodities() > 0)
    out.pctServed = 100.0 * served / inst.numCommodities();
  out.pctServedByLevel.assign(inst.demandLevels(), 0.0);
  int twoHub = 0;
  for (const auto& [c, choice] : sol.served) {
    out.pctServedByLevel[choice.level] += 1.0;
    if (choice.route.k != choice.route.m) ++twoHub;
  }
  if (served > 0) {
    for (double& v : out.pctServedByLevel) v = 100.0 * v / served;
    out.pctTwoHubRoutes = 100.0 * twoHub / served;
  }

  ObjectiveParts parts = compute_objective(inst, sol.hubLevels, sol.served);
  out.profit = parts.objective;
  double totalCost = parts.routing + parts.setup;
  if (totalCost > 0.0) {
    out.pctTravelCost = 100.0 * parts.routing / totalCost;
    out.pctInstallCost = 100.0 * parts.setup / totalCost;
  }
  return out;
}

double deviation(double found, double bestKnown) {
  if (bestKnown == 0.0) throw Error("deviation: bestKnown must be nonzero");
  if (found >= bestKnown) return 0.0;
  return 100.0 * (bestKnown - found) / std::abs(bestKnown);
}

std::string stats_csv_header(int Rcount) {
  std::string head = "alpha,n,L,R,numHubs,pctMedium,pctHigh,pctOccupancy,pctServed";
  for (int r = 0; r < Rcount; ++r) head += ",pctServedLevel" + std::to_string(r + 1);
  head += ",profit,pctTravel,pctInstall,pctTwoHub";
  return head;
}

std::string stats_csv_row(double alpha, int n, int L, int R,
                          const SolutionStats& s) {
  std::ostringstream os;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g,%d,%d,%d,%d", alpha, n, L, R, s.numHubs);
  os << buf;
  auto pct = [&](double v) {
    std::snprintf(buf, sizeof(buf), ",%.2f", v);
    os << buf;
  };
  pct(s.pctMedium);
  pct(s.pctHigh);
  pct(s.occupancy);
  pct(s.pctServed);
  for (double v : s.pctServedByLevel) pct(v);
  std::snprintf(buf, sizeof(buf), ",%.6g", s.profit);
  os << buf;
  pct(s.pctTravelCost);
  pct(s.pctInstallCost);
  pct(s.pctTwoHubRoutes);
  return os.str();
}

}  // namespace hlctdp

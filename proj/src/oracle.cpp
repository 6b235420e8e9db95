#include "hlctdp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace hlctdp {

namespace {

constexpr double kTol = 1e-9;

struct RouteOption {
  int r;
  int k;
  int m;
  double w;
  double profit;
};

// Per-config option list for one commodity: routes over open hubs meeting
// the exact time limit (and the consistency rule unless disabled). No profit
// filtering; the oracle's search decides.
std::vector<RouteOption> configOptions(const Instance& inst, int c,
                                       const std::vector<int>& level,
                                       const std::vector<int>& openHubs,
                                       bool enforceConsistency) {
  const Commodity& com = inst.commodity(c);
  std::vector<RouteOption> options;
  bool originOpen = level[com.i] >= 0;
  bool destOpen = level[com.j] >= 0;
  for (int k : openHubs) {
    if (enforceConsistency && originOpen && k != com.i) continue;
    for (int m : openHubs) {
      if (enforceConsistency && destOpen && m != com.j) continue;
      double transit = inst.hub(k).h[level[k]];
      if (m != k) transit += inst.hub(m).h[level[m]];
      double total = route_time(inst, com.i, com.j, k, m) + transit;
      for (int r = 0; r < inst.demandLevels(); ++r) {
        if (total > com.levels[r].H + kTol) continue;
        options.push_back({r, k, m, com.levels[r].w,
                           net_profit(inst, c, k, m, r)});
      }
    }
  }
  return options;
}

// Exhaustive assignment search for one configuration. Returns the best
// valid assignment profit (no setup), or nothing when no assignment meets
// the capacity intervals.
struct ConfigSearch {
  const Instance& inst;
  const std::vector<int>& level;
  const std::vector<int>& openHubs;
  std::vector<std::vector<RouteOption>> options;  // per commodity
  std::vector<double> optimisticSuffix;           // best-case rest profit
  std::vector<double> load;
  std::vector<ServedChoice> chosen;  // per commodity; level<0 when skipped
  double bestProfit = -std::numeric_limits<double>::infinity();
  std::vector<ServedChoice> bestChosen;
  // Prune only strictly non-improving branches against the global best.
  double pruneAt;

  ConfigSearch(const Instance& inst_, const std::vector<int>& level_,
               const std::vector<int>& openHubs_, bool enforceConsistency,
               double pruneAt_)
      : inst(inst_), level(level_), openHubs(openHubs_), pruneAt(pruneAt_) {
    const int C = inst.numCommodities();
    options.resize(C);
    for (int c = 0; c < C; ++c)
      options[c] = configOptions(inst, c, level, openHubs, enforceConsistency);
    optimisticSuffix.assign(C + 1, 0.0);
    for (int c = C - 1; c >= 0; --c) {
      double best = 0.0;
      for (const RouteOption& opt : options[c])
        best = std::max(best, opt.profit);
      optimisticSuffix[c] = optimisticSuffix[c + 1] + best;
    }
    load.assign(inst.numHubs(), 0.0);
    chosen.assign(C, ServedChoice{-1, {-1, -1}});
  }

  bool lowerIntervalsOk() const {
    for (int k : openHubs) {
      int l = level[k];
      if (l >= 1 && load[k] <= inst.hub(k).W[l - 1] + kTol) return false;
    }
    return true;
  }

  void dfs(int c, double profit) {
    if (profit + optimisticSuffix[c] <= std::max(bestProfit, pruneAt))
      return;
    if (c == inst.numCommodities()) {
      if (!lowerIntervalsOk()) return;
      if (profit > bestProfit) {
        bestProfit = profit;
        bestChosen = chosen;
      }
      return;
    }
    for (const RouteOption& opt : options[c]) {
      double capK = inst.hub(opt.k).W[level[opt.k]];
      if (load[opt.k] + opt.w > capK + kTol) continue;
      if (opt.m != opt.k) {
        double capM = inst.hub(opt.m).W[level[opt.m]];
        if (load[opt.m] + opt.w > capM + kTol) continue;
      }
      load[opt.k] += opt.w;
      if (opt.m != opt.k) load[opt.m] += opt.w;
      chosen[c] = {opt.r, {opt.k, opt.m}};
      dfs(c + 1, profit + opt.profit);
      load[opt.k] -= opt.w;
      if (opt.m != opt.k) load[opt.m] -= opt.w;
      chosen[c] = {-1, {-1, -1}};
    }
    dfs(c + 1, profit);  // skip this commodity
  }
};

double optionProductAllOpen(const Instance& inst) {
  // Worst-case per-config candidate count: every hub open at its fastest
  // level, consistency ignored. Every real config's option lists are subsets
  // of these.
  std::vector<int> level(inst.numHubs());
  for (int k = 0; k < inst.numHubs(); ++k) {
    int best = 0;
    for (int l = 1; l < inst.serviceLevels(); ++l)
      if (inst.hub(k).h[l] < inst.hub(k).h[best]) best = l;
    level[k] = best;
  }
  std::vector<int> open(inst.numHubs());
  for (int k = 0; k < inst.numHubs(); ++k) open[k] = k;
  double product = 1.0;
  for (int c = 0; c < inst.numCommodities(); ++c) {
    std::size_t n = configOptions(inst, c, level, open, false).size();
    product *= static_cast<double>(n + 1);
    if (product > 1e18) return product;  // saturate
  }
  return product;
}

}  // namespace

void for_each_config(const Instance& inst,
                     const std::function<void(const HubConfig&)>& sink) {
  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  std::vector<int> level(K, -1);
  while (true) {
    HubConfig config;
    for (int k = 0; k < K; ++k)
      if (level[k] >= 0) config.levels[k] = level[k];
    sink(config);
    int pos = K - 1;
    while (pos >= 0 && level[pos] == L - 1) level[pos--] = -1;
    if (pos < 0) break;
    ++level[pos];
  }
}

Solution brute_force(const Instance& inst, const OracleLimits& limits) {
  if (!structurally_valid(inst)) {
    Solution sol;
    sol.status = SolveStatus::InfeasibleInput;
    return sol;
  }
  Solution best;
  best.status = SolveStatus::Empty;
  if (inst.numCommodities() == 0) return best;

  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  double configCount = std::pow(static_cast<double>(L + 1), K);
  if (configCount > limits.maxConfigs) {
    std::ostringstream os;
    os << "oracle: " << configCount << " hub configurations exceed the limit "
       << limits.maxConfigs;
    throw SizeError(os.str());
  }
  double product = optionProductAllOpen(inst);
  if (product > limits.maxAssignments) {
    std::ostringstream os;
    os << "oracle: per-configuration option product " << product
       << " exceeds the limit " << limits.maxAssignments;
    throw SizeError(os.str());
  }

  best.status = SolveStatus::Optimal;  // empty assignment is always valid
  best.objective = 0.0;

  std::vector<int> level(K, -1);
  while (true) {
    // Setup cost of this configuration.
    double setup = 0.0;
    std::vector<int> openHubs;
    for (int k = 0; k < K; ++k)
      if (level[k] >= 0) {
        setup += inst.hub(k).G[level[k]];
        openHubs.push_back(k);
      }

    ConfigSearch search(inst, level, openHubs, limits.enforceConsistency,
                        best.objective + setup);
    search.dfs(0, 0.0);
    if (search.bestProfit > -std::numeric_limits<double>::infinity()) {
      std::map<int, int> hubLevels;
      for (int k : openHubs) hubLevels[k] = level[k];
      std::map<int, ServedChoice> served;
      for (int c = 0; c < inst.numCommodities(); ++c)
        if (search.bestChosen[c].level >= 0) served[c] = search.bestChosen[c];
      ObjectiveParts parts = compute_objective(inst, hubLevels, served);
      if (parts.objective > best.objective) {
        best.hubLevels = std::move(hubLevels);
        best.served = std::move(served);
        best.revenueTotal = parts.revenue;
        best.routingCost = parts.routing;
        best.setupCost = parts.setup;
        best.objective = parts.objective;
      }
    }

    int pos = K - 1;
    while (pos >= 0 && level[pos] == L - 1) level[pos--] = -1;
    if (pos < 0) break;
    ++level[pos];
  }
  return best;
}

void enumerate_candidates(
    const Instance& inst, const HubConfig& config, const OracleLimits& limits,
    const std::function<bool(const Solution&)>& sink) {
  const int R = inst.demandLevels();
  std::vector<int> openHubs;
  for (const auto& [k, l] : config.levels) {
    if (k < 0 || k >= inst.numHubs() || l < 0 || l >= inst.serviceLevels())
      throw Error("enumerate_candidates: bad hub configuration");
    openHubs.push_back(k);
  }

  const double optionsPer =
      static_cast<double>(openHubs.size()) * openHubs.size() * R + 1;
  double product = 1.0;
  for (int c = 0; c < inst.numCommodities(); ++c) {
    product *= optionsPer;
    if (product > limits.maxAssignments) {
      std::ostringstream os;
      os << "enumerate_candidates: candidate count exceeds the limit "
         << limits.maxAssignments;
      throw SizeError(os.str());
    }
  }

  Solution candidate;
  candidate.hubLevels = config.levels;
  candidate.status = SolveStatus::Feasible;

  // Depth-first product walk over (skip | (r,k,m)) per commodity.
  std::function<bool(int)> walk = [&](int c) -> bool {
    if (c == inst.numCommodities()) return sink(candidate);
    if (!walk(c + 1)) return false;  // skip commodity c
    for (int k : openHubs)
      for (int m : openHubs)
        for (int r = 0; r < R; ++r) {
          candidate.served[c] = {r, {k, m}};
          if (!walk(c + 1)) {
            candidate.served.erase(c);
            return false;
          }
          candidate.served.erase(c);
        }
    return true;
  };
  walk(0);
}

}  // namespace hlctdp

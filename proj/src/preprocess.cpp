#include "hlctdp/preprocess.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace hlctdp {

namespace {

// Shared by the standalone per-rule entry points and preprocess(): the rules
// only mark entries that are still free, so running them in sequence yields
// first-rule attribution.

void run_a1(const Instance& inst, FixMask& mask, AssumptionFixes* out) {
  const int K = inst.numHubs();
  const int R = inst.demandLevels();
  for (int c = 0; c < inst.numCommodities(); ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      if (com.levels[r].w > 0.0) continue;
      if (mask.fixBeta(c, r, FixRule::A1) && out)
        out->beta.push_back({c, r});
      for (int k = 0; k < K; ++k)
        for (int m = 0; m < K; ++m)
          if (mask.fixRoute(c, k, m, r, FixRule::A1) && out)
            out->routes.push_back({com.i, com.j, k, m, r});
    }
  }
}

void run_a2(const Instance& inst, FixMask& mask, AssumptionFixes* out) {
  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  const int R = inst.demandLevels();
  for (int c = 0; c < inst.numCommodities(); ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      double w = com.levels[r].w;
      for (int k = 0; k < K; ++k) {
        if (w <= inst.hub(k).W[L - 1]) continue;
        // Every route with k as first or second hub.
        for (int m = 0; m < K; ++m) {
          if (mask.fixRoute(c, k, m, r, FixRule::A2) && out)
            out->routes.push_back({com.i, com.j, k, m, r});
          if (m != k && mask.fixRoute(c, m, k, r, FixRule::A2) && out)
            out->routes.push_back({com.i, com.j, m, k, r});
        }
      }
    }
  }
}

void run_a3(const Instance& inst, FixMask& mask, AssumptionFixes* out) {
  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  const int R = inst.demandLevels();
  double maxCap = 0.0;
  for (int k = 0; k < K; ++k)
    maxCap = std::max(maxCap, inst.hub(k).W[L - 1]);
  for (int c = 0; c < inst.numCommodities(); ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      if (com.levels[r].w <= maxCap) continue;
      if (mask.fixBeta(c, r, FixRule::A3) && out)
        out->beta.push_back({c, r});
      for (int k = 0; k < K; ++k)
        for (int m = 0; m < K; ++m)
          if (mask.fixRoute(c, k, m, r, FixRule::A3) && out)
            out->routes.push_back({com.i, com.j, k, m, r});
    }
  }
}

void run_c1a(const Instance& inst, FixMask& mask, std::vector<RouteKey>* out) {
  const int n = inst.n();
  const int R = inst.demandLevels();
  const Matrix& c = inst.cost();
  const double alpha = inst.alpha();

  // Commodities grouped by origin and by destination.
  std::vector<std::vector<int>> byOrigin(n), byDest(n);
  for (int ci = 0; ci < inst.numCommodities(); ++ci) {
    byOrigin[inst.commodity(ci).i].push_back(ci);
    byDest[inst.commodity(ci).j].push_back(ci);
  }

  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        if (k == m) continue;
        if (c(i, m) > c(i, k) + alpha * c(k, m)) continue;
        // Reaching m via k is never cheaper than going there directly.
        for (int ci : byOrigin[i]) {
          const Commodity& com = inst.commodity(ci);
          for (int r = 0; r < R; ++r)
            if (mask.fixRoute(ci, k, m, r, FixRule::C1a) && out)
              out->push_back({com.i, com.j, k, m, r});
        }
        // Cost symmetry gives the mirrored fixing on the destination side.
        for (int ci : byDest[i]) {
          const Commodity& com = inst.commodity(ci);
          for (int r = 0; r < R; ++r)
            if (mask.fixRoute(ci, m, k, r, FixRule::C1a) && out)
              out->push_back({com.i, com.j, m, k, r});
        }
      }
    }
  }
}

void run_c1b(const Instance& inst, FixMask& mask, std::vector<RouteKey>* out) {
  const int n = inst.n();
  const int R = inst.demandLevels();
  const Matrix& c = inst.cost();
  for (int ci = 0; ci < inst.numCommodities(); ++ci) {
    const Commodity& com = inst.commodity(ci);
    const int i = com.i, j = com.j;
    for (int k = 0; k < n; ++k) {
      for (int m = k + 1; m < n; ++m) {
        // Exactly one orientation of the unordered pair survives; ties drop
        // the (m,k) orientation.
        bool keepKm = c(i, k) + c(j, m) <= c(i, m) + c(j, k);
        int fk = keepKm ? m : k;
        int fm = keepKm ? k : m;
        for (int r = 0; r < R; ++r)
          if (mask.fixRoute(ci, fk, fm, r, FixRule::C1b) && out)
            out->push_back({i, j, fk, fm, r});
      }
    }
  }
}

void run_c2(const Instance& inst, FixMask& mask, std::vector<RouteKey>* out) {
  const int K = inst.numHubs();
  const int R = inst.demandLevels();
  for (int ci = 0; ci < inst.numCommodities(); ++ci) {
    const Commodity& com = inst.commodity(ci);
    for (int k = 0; k < K; ++k) {
      for (int m = 0; m < K; ++m) {
        double cost = route_cost(inst, com.i, com.j, k, m);
        for (int r = 0; r < R; ++r) {
          if (com.levels[r].q - cost > 0.0) continue;
          if (mask.fixRoute(ci, k, m, r, FixRule::C2) && out)
            out->push_back({com.i, com.j, k, m, r});
        }
      }
    }
  }
}

void run_c3(const Instance& inst, FixMask& mask, std::vector<RouteKey>* out) {
  const int K = inst.numHubs();
  const int R = inst.demandLevels();
  std::vector<double> hmin(K);
  for (int k = 0; k < K; ++k) hmin[k] = min_transit(inst, k);
  for (int ci = 0; ci < inst.numCommodities(); ++ci) {
    const Commodity& com = inst.commodity(ci);
    for (int k = 0; k < K; ++k) {
      for (int m = 0; m < K; ++m) {
        double t = route_time(inst, com.i, com.j, k, m) + hmin[k];
        if (m != k) t += hmin[m];
        for (int r = 0; r < R; ++r) {
          if (t <= com.levels[r].H) continue;  // boundary stays unfixed
          if (mask.fixRoute(ci, k, m, r, FixRule::C3) && out)
            out->push_back({com.i, com.j, k, m, r});
        }
      }
    }
  }
}

}  // namespace

const char* fix_rule_name(FixRule rule) {
  switch (rule) {
    case FixRule::None: return "none";
    case FixRule::A1: return "A1";
    case FixRule::A2: return "A2";
    case FixRule::A3: return "A3";
    case FixRule::C1a: return "C1a";
    case FixRule::C1b: return "C1b";
    case FixRule::C2: return "C2";
    case FixRule::C3: return "C3";
  }
  return "?";
}

FixMask::FixMask(int numCommodities, int numHubs, int numDemandLevels)
    : C_(numCommodities), K_(numHubs), R_(numDemandLevels) {
  routeRules_.assign(totalRoutes(), FixRule::None);
  betaRules_.assign(static_cast<std::size_t>(C_) * R_, FixRule::None);
}

bool FixMask::fixRoute(int c, int k, int m, int r, FixRule rule) {
  FixRule& slot = routeRules_[routeIdx(c, k, m, r)];
  if (slot != FixRule::None) return false;
  slot = rule;
  ++fixedRoutes_;
  ++routeByRule_[static_cast<int>(rule)];
  return true;
}

bool FixMask::fixBeta(int c, int r, FixRule rule) {
  FixRule& slot = betaRules_[betaIdx(c, r)];
  if (slot != FixRule::None) return false;
  slot = rule;
  ++fixedBetas_;
  return true;
}

std::vector<RouteKey> apply_c1(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  std::vector<RouteKey> out;
  run_c1a(inst, mask, &out);
  run_c1b(inst, mask, &out);
  return out;
}

std::vector<RouteKey> apply_c1a(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  std::vector<RouteKey> out;
  run_c1a(inst, mask, &out);
  return out;
}

std::vector<RouteKey> apply_c1b(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  std::vector<RouteKey> out;
  run_c1b(inst, mask, &out);
  return out;
}

std::vector<RouteKey> apply_c2(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  std::vector<RouteKey> out;
  run_c2(inst, mask, &out);
  return out;
}

std::vector<RouteKey> apply_c3(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  std::vector<RouteKey> out;
  run_c3(inst, mask, &out);
  return out;
}

AssumptionFixes apply_assumptions(const Instance& inst) {
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  AssumptionFixes out;
  run_a1(inst, mask, &out);
  run_a2(inst, mask, &out);
  run_a3(inst, mask, &out);
  return out;
}

std::pair<FixMask, FixReport> preprocess(const Instance& inst) {
  auto start = std::chrono::steady_clock::now();
  FixMask mask(inst.numCommodities(), inst.numHubs(), inst.demandLevels());
  run_a1(inst, mask, nullptr);
  run_a2(inst, mask, nullptr);
  run_a3(inst, mask, nullptr);
  run_c1a(inst, mask, nullptr);
  run_c1b(inst, mask, nullptr);
  run_c2(inst, mask, nullptr);
  run_c3(inst, mask, nullptr);
  auto end = std::chrono::steady_clock::now();

  FixReport report;
  double total = static_cast<double>(mask.totalRoutes());
  if (total > 0) {
    report.pctEliminated = 100.0 * mask.fixedRouteCount() / total;
    report.pctC1 = 100.0 *
                   (mask.routeCountByRule(FixRule::C1a) +
                    mask.routeCountByRule(FixRule::C1b)) /
                   total;
    report.pctC2 = 100.0 * mask.routeCountByRule(FixRule::C2) / total;
    report.pctC3 = 100.0 * mask.routeCountByRule(FixRule::C3) / total;
  }
  report.elapsedMs =
      std::chrono::duration<double, std::milli>(end - start).count();
  return {std::move(mask), report};
}

std::string fix_report_csv_header() {
  return "alpha,n,L,R,pctE,pctC1,pctC2,pctC3,elapsed_ms";
}

std::string fix_report_csv_row(double alpha, int n, int L, int R,
                               const FixReport& report) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%g,%d,%d,%d,%.2f,%.2f,%.2f,%.2f,%.3f",
                alpha, n, L, R, report.pctEliminated, report.pctC1,
                report.pctC2, report.pctC3, report.elapsedMs);
  return buf;
}

}  // namespace hlctdp

#pragma once

// Shared test fixtures: the four-node worked example with its known optimal
// and relaxed solutions, plus seeded synthetic CAB-style data for random
// instances at chosen sizes.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hlctdp/generator.hpp"
#include "hlctdp/instance.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp::testing {

// Four nodes on a path 1-2-3-4 with unit costs along the path and cost 10
// elsewhere; commodities (1,2) and (2,4), demand 100, revenue 5, no time
// limit; two service levels with capacities 100/200. Optimal objective 550;
// without consistency constraints a 600 "solution" appears.
inline Instance make_example1() {
  const int n = 4;
  const double big = 10.0;
  Matrix cost(n, big);
  for (int i = 0; i < n; ++i) cost(i, i) = 0.0;
  auto edge = [&](int a, int b, double v) {
    cost(a, b) = v;
    cost(b, a) = v;
  };
  edge(0, 1, 1.0);
  edge(1, 2, 1.0);
  edge(2, 3, 1.0);

  std::vector<HubData> hubs(n);
  for (int k = 0; k < n; ++k) {
    hubs[k].W = {100.0, 200.0};
    hubs[k].h = {0.0, 0.0};
  }
  hubs[0].G = {150.0, 300.0};
  hubs[1].G = {50.0, 150.0};
  hubs[2].G = {50.0, 150.0};
  hubs[3].G = {150.0, 300.0};

  const double noLimit = 1e6;
  std::vector<Commodity> commodities = {
      {0, 1, {{100.0, 5.0, noLimit}}},
      {1, 3, {{100.0, 5.0, noLimit}}},
  };
  return Instance(n, 0.5, 0.5, cost, cost, std::move(hubs),
                  std::move(commodities));
}

// Hubs 2 (high level) and 3 (medium level); (1,2) routed through hub 2 only,
// (2,4) through hubs 2 then 3. Objective 550.
inline Solution example1_optimal(const Instance& inst) {
  Solution sol;
  sol.hubLevels = {{1, 1}, {2, 0}};
  sol.served[0] = {0, {1, 1}};
  sol.served[1] = {0, {1, 2}};
  sol.status = SolveStatus::Optimal;
  finalize_totals(inst, sol);
  return sol;
}

// The capacity-gaming assignment: (2,4) routed through hub 3 alone so hub 2
// stays at the cheap level. Violates the consistency rule; objective 600.
inline Solution example1_invalid600(const Instance& inst) {
  Solution sol;
  sol.hubLevels = {{1, 0}, {2, 0}};
  sol.served[0] = {0, {1, 1}};
  sol.served[1] = {0, {2, 2}};
  sol.status = SolveStatus::Feasible;
  finalize_totals(inst, sol);
  return sol;
}

// Portable uniform double in [lo, hi].
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + static_cast<double>(rng() >> 11) * 0x1.0p-53 * (hi - lo);
}

// Random symmetric point-to-point distances and positive flows for
// `cities` nodes.
inline RawCab synthetic_cab(int cities, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(cities), y(cities);
  for (int i = 0; i < cities; ++i) {
    x[i] = uniform(rng, 0.0, 100.0);
    y[i] = uniform(rng, 0.0, 100.0);
  }
  RawCab raw;
  raw.cityCount = cities;
  raw.dist = Matrix(cities);
  raw.flow = Matrix(cities);
  for (int i = 0; i < cities; ++i)
    for (int j = 0; j < cities; ++j) {
      double dx = x[i] - x[j], dy = y[i] - y[j];
      raw.dist(i, j) = std::sqrt(dx * dx + dy * dy);
    }
  for (int i = 0; i < cities; ++i)
    for (int j = 0; j < cities; ++j)
      raw.flow(i, j) = i == j ? 0.0 : uniform(rng, 50.0, 150.0);
  return raw;
}

inline std::string cab_text(const RawCab& raw) {
  char buf[40];
  std::string out = std::to_string(raw.cityCount) + "\n";
  auto emit = [&](const Matrix& m) {
    for (int i = 0; i < m.size(); ++i) {
      for (int j = 0; j < m.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.17g", m(i, j));
        out += buf;
        out += j + 1 == m.size() ? "\n" : " ";
      }
    }
  };
  emit(raw.dist);
  emit(raw.flow);
  return out;
}

inline std::vector<double> synthetic_hub_costs(int cities,
                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::vector<double> costs(cities);
  for (double& c : costs) c = uniform(rng, 0.5, 3.0);
  return costs;
}

// Capacity scaling that keeps assumptions A2/A3 satisfied at very small n,
// where the benchmark share of total demand would fall below a single
// commodity's demand.
inline double tiny_beta_w(int n) {
  switch (n) {
    case 3: return 0.5;
    case 4: return 0.35;
    default: return 0.25;
  }
}

// Full pipeline for a random tiny instance: synthetic raw data, base
// construction, level expansion. cost == time and gamma == alpha throughout,
// matching the benchmark convention.
inline Instance tiny_instance(std::uint64_t seed, int n, double alpha, int L,
                              int R) {
  RawCab raw = synthetic_cab(n, seed);
  GenParams params;
  params.seed = seed * 1000003 + 17;
  params.betaW = tiny_beta_w(n);
  params.betaG = 40.0;  // keep a few hubs worth opening at this scale
  params.hubCostBase = synthetic_hub_costs(n, seed);
  BaseInstance base = make_base(raw, n, alpha, params);
  return expand(base, L, R);
}

}  // namespace hlctdp::testing

#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "hlctdp/analysis.hpp"
#include "hlctdp/oracle.hpp"
#include "hlctdp/solver.hpp"
#include "support/fixtures.hpp"

using namespace hlctdp;
using namespace hlctdp::testing;

TEST_CASE("solver reproduces the worked example exactly") {
  Instance inst = make_example1();
  Solution sol = solve_exact(inst);
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(sol.objective == doctest::Approx(550.0).epsilon(1e-12));
  REQUIRE(sol.hubLevels.size() == 2);
  CHECK(sol.hubLevels.at(1) == 1);
  CHECK(sol.hubLevels.at(2) == 0);
  REQUIRE(sol.served.size() == 2);
  CHECK(sol.served.at(0).route.k == 1);
  CHECK(sol.served.at(0).route.m == 1);
  CHECK(sol.served.at(1).route.k == 1);
  CHECK(sol.served.at(1).route.m == 2);
  CHECK(validate(inst, sol).ok);
  CHECK(sol.revenueTotal == doctest::Approx(1000.0));
  CHECK(sol.routingCost == doctest::Approx(250.0));
  CHECK(sol.setupCost == doctest::Approx(200.0));
}

TEST_CASE("nothing profitable yields the empty optimum") {
  Instance base = make_example1();
  std::vector<Commodity> commodities = base.commodities();
  for (Commodity& com : commodities)
    for (DemandLevel& lvl : com.levels) lvl.q = 0.01;  // below every route cost
  Instance inst(base.n(), base.alpha(), base.gamma(), base.cost(), base.time(),
                base.hubs(), std::move(commodities));
  Solution sol = solve_exact(inst);
  CHECK(sol.status == SolveStatus::Optimal);
  CHECK(sol.objective == 0.0);
  CHECK(sol.hubLevels.empty());
  CHECK(sol.served.empty());
}

TEST_CASE("solver matches the oracle on random tiny instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    int n = 3 + static_cast<int>(seed % 3);
    int L = 1 + static_cast<int>(seed % 2);
    int R = 1 + static_cast<int>((seed / 2) % 2);
    double alpha = (seed % 3 == 0) ? 0.2 : (seed % 3 == 1 ? 0.5 : 0.8);
    Instance inst = tiny_instance(seed, n, alpha, L, R);
    OracleLimits limits;
    limits.maxAssignments = 1e18;
    Solution expect = brute_force(inst, limits);
    SolverConfig cfg;
    cfg.gapTol = 0.0;
    Solution got = solve_exact(inst, {}, cfg);
    CHECK(got.status == SolveStatus::Optimal);
    CHECK(got.objective == expect.objective);
    CHECK(validate(inst, got).ok);
    ++checked;
  }
  CHECK(checked == 8);
}

TEST_CASE("solver is deterministic") {
  Instance inst = tiny_instance(99, 5, 0.5, 2, 2);
  Solution a = solve_exact(inst);
  Solution b = solve_exact(inst);
  CHECK(a.objective == b.objective);
  CHECK(a.hubLevels == b.hubLevels);
  REQUIRE(a.served.size() == b.served.size());
  for (const auto& [c, choice] : a.served) {
    REQUIRE(b.served.count(c) == 1);
    CHECK(b.served.at(c).level == choice.level);
    CHECK(b.served.at(c).route.k == choice.route.k);
    CHECK(b.served.at(c).route.m == choice.route.m);
  }
}

TEST_CASE("preprocessing mask does not change the optimum") {
  for (std::uint64_t seed : {3u, 7u, 12u, 20u}) {
    Instance inst = tiny_instance(seed, 4 + static_cast<int>(seed % 2), 0.5,
                                  2, 2);
    auto [mask, report] = preprocess(inst);
    SolverConfig cfg;
    cfg.gapTol = 0.0;
    Solution plain = solve_exact(inst, {}, cfg);
    Solution masked = solve_exact(inst, mask, cfg);
    CHECK(masked.objective == plain.objective);
    CHECK(validate(inst, masked).ok);
  }
}

TEST_CASE("greedy warm start solves the worked example configuration") {
  Instance inst = make_example1();
  HubConfig config;
  config.levels[1] = 1;
  config.levels[2] = 0;
  Solution sol = lower_bound_greedy(inst, config);
  CHECK(sol.objective == doctest::Approx(550.0));
  CHECK(validate(inst, sol).ok);
}

TEST_CASE("greedy with no open hubs returns the empty solution") {
  Instance inst = make_example1();
  Solution sol = lower_bound_greedy(inst, HubConfig{});
  CHECK(sol.objective == 0.0);
  CHECK(sol.setupCost == 0.0);
  CHECK(sol.served.empty());
}

TEST_CASE("greedy never beats the oracle") {
  for (std::uint64_t seed : {31u, 32u, 33u}) {
    Instance inst = tiny_instance(seed, 4, 0.5, 2, 1);
    Solution best = brute_force(inst);
    for_each_config(inst, [&](const HubConfig& config) {
      Solution greedy = lower_bound_greedy(inst, config);
      CHECK(greedy.objective <= best.objective + 1e-9);
      CHECK(validate(inst, greedy).ok);
    });
  }
}

TEST_CASE("a tiny time limit still returns a feasible incumbent") {
  Instance inst = tiny_instance(55, 6, 0.2, 2, 3);
  SolverConfig cfg;
  cfg.timeLimit = 1e-4;
  Solution sol = solve_exact(inst, {}, cfg);
  CHECK(validate(inst, sol).ok);
  if (sol.status == SolveStatus::Feasible) {
    CHECK(sol.bestBound >= sol.objective);
    CHECK(sol.gap >= 0.0);
  }
}

TEST_CASE("solver rejects bad inputs") {
  Instance inst = make_example1();
  SolverConfig cfg;
  cfg.timeLimit = 0.0;
  CHECK_THROWS_AS(solve_exact(inst, {}, cfg), Error);

  std::vector<HubData> hubs = inst.hubs();
  hubs[0].h = {1.0, 0.5};  // decreasing transit over levels
  Instance bad(inst.n(), inst.alpha(), inst.gamma(), inst.cost(), inst.time(),
               std::move(hubs), inst.commodities());
  CHECK(solve_exact(bad).status == SolveStatus::InfeasibleInput);

  Instance empty(inst.n(), inst.alpha(), inst.gamma(), inst.cost(),
                 inst.time(), inst.hubs(), {});
  CHECK(solve_exact(empty).status == SolveStatus::Empty);
}

TEST_CASE("solve log emits csv-parsable lines") {
  Instance inst = make_example1();
  std::ostringstream log;
  SolverConfig cfg;
  cfg.log = &log;
  solve_exact(inst, {}, cfg);
  std::istringstream lines(log.str());
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == 4);
    ++rows;
  }
  CHECK(rows >= 1);
}

TEST_CASE("maxHubs caps the search and downgrades the status") {
  Instance inst = tiny_instance(42, 5, 0.2, 1, 1);
  SolverConfig cfg;
  cfg.maxHubs = 1;
  Solution capped = solve_exact(inst, {}, cfg);
  CHECK(capped.status == SolveStatus::Feasible);
  CHECK(capped.hubLevels.size() <= 1);
  CHECK(validate(inst, capped).ok);
  Solution full = solve_exact(inst);
  CHECK(capped.objective <= full.objective + 1e-9);
}

TEST_CASE("solve_via_export round trip on the worked example") {
  Instance inst = make_example1();
  BuildOptions opts;
  auto [model, ix] = build_f2(inst, opts);
  Solution optimal = example1_optimal(inst);
  std::vector<double> assignment = encode_solution(inst, optimal, ix);

  std::ostringstream text;
  text << "=obj= 550\n";
  for (const Variable& v : model.variables())
    if (assignment[v.id] != 0.0)
      text << v.name << " " << assignment[v.id] << "\n";

  Solution decoded = solve_via_export(inst, Formulation::F2, opts, text.str());
  CHECK(decoded.objective == doctest::Approx(550.0).epsilon(1e-9));
  CHECK(decoded.hubLevels == optimal.hubLevels);
  REQUIRE(decoded.served.size() == 2);

  SUBCASE("empty solution file decodes to the empty solution") {
    Solution empty = solve_via_export(inst, Formulation::F2, opts, "");
    CHECK(empty.objective == 0.0);
    CHECK(empty.served.empty());
  }
  SUBCASE("declared objective mismatch is an error") {
    std::string wrong = "=obj= 9999\n" + text.str().substr(11);
    CHECK_THROWS_AS(solve_via_export(inst, Formulation::F2, opts, wrong),
                    Error);
  }
  SUBCASE("infeasible decoded solutions are rejected") {
    Solution invalid = example1_invalid600(inst);
    std::vector<double> bad = encode_solution(inst, invalid, ix);
    std::ostringstream badText;
    for (const Variable& v : model.variables())
      if (bad[v.id] != 0.0) badText << v.name << " " << bad[v.id] << "\n";
    CHECK_THROWS_AS(
        solve_via_export(inst, Formulation::F2, opts, badText.str()), Error);
  }
  SUBCASE("f1 decoding works as well") {
    auto [f1, ix1] = build_f1(inst, opts);
    std::vector<double> a1 = encode_solution(inst, optimal, ix1);
    std::ostringstream t1;
    for (const Variable& v : f1.variables())
      if (a1[v.id] != 0.0) t1 << v.name << " " << a1[v.id] << "\n";
    Solution decoded1 = solve_via_export(inst, Formulation::F1, opts, t1.str());
    CHECK(decoded1.objective == doctest::Approx(550.0).epsilon(1e-9));
  }
}

TEST_CASE("oracle-optimal solutions survive an encode/decode round trip") {
  Instance inst = tiny_instance(64, 4, 0.8, 2, 2);
  Solution best = brute_force(inst);
  BuildOptions opts;
  auto [model, ix] = build_f2(inst, opts);
  std::vector<double> assignment = encode_solution(inst, best, ix);
  std::ostringstream text;
  for (const Variable& v : model.variables())
    if (assignment[v.id] != 0.0)
      text << v.name << " " << assignment[v.id] << "\n";
  Solution decoded = solve_via_export(inst, Formulation::F2, opts, text.str());
  CHECK(decoded.objective == doctest::Approx(best.objective).epsilon(1e-12));
  CHECK(decoded.hubLevels == best.hubLevels);
  CHECK(decoded.served.size() == best.served.size());
}

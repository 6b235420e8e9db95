#include <doctest.h>

#include <cmath>

#include "hlctdp/formulations.hpp"
#include "hlctdp/oracle.hpp"
#include "support/crosscheck.hpp"
#include "support/fixtures.hpp"

using namespace hlctdp;
using namespace hlctdp::testing;

TEST_CASE("worked example achieves 550 in both formulations") {
  Instance inst = make_example1();
  Solution optimal = example1_optimal(inst);
  CHECK(optimal.objective == doctest::Approx(550.0).epsilon(1e-9));

  auto [f1, ix1] = build_f1(inst);
  EvalResult res1 = evaluate(f1, encode_solution(inst, optimal, ix1));
  CHECK(res1.feasible());
  CHECK(res1.objective == doctest::Approx(550.0).epsilon(1e-9));

  auto [f2, ix2] = build_f2(inst);
  EvalResult res2 = evaluate(f2, encode_solution(inst, optimal, ix2));
  CHECK(res2.feasible());
  CHECK(res2.objective == doctest::Approx(550.0).epsilon(1e-9));
}

TEST_CASE("the 600 assignment is cut off exactly by the consistency rows") {
  Instance inst = make_example1();
  Solution invalid = example1_invalid600(inst);
  CHECK(invalid.objective == doctest::Approx(600.0).epsilon(1e-9));

  BuildOptions relaxed;
  relaxed.includeConsistency = false;

  SUBCASE("f2") {
    auto [full, ixFull] = build_f2(inst);
    EvalResult res = evaluate(full, encode_solution(inst, invalid, ixFull));
    CHECK_FALSE(res.feasible());
    bool consistencyHit = false;
    for (const RowViolation& v : res.rowViolations)
      if (full.rows()[v.row].name.starts_with("orig_hub")) consistencyHit = true;
    CHECK(consistencyHit);

    auto [rel, ixRel] = build_f2(inst, relaxed);
    EvalResult resRel = evaluate(rel, encode_solution(inst, invalid, ixRel));
    CHECK(resRel.feasible());
    CHECK(resRel.objective == doctest::Approx(600.0).epsilon(1e-9));
  }
  SUBCASE("f1") {
    auto [full, ixFull] = build_f1(inst);
    CHECK_FALSE(evaluate(full, encode_solution(inst, invalid, ixFull)).feasible());
    auto [rel, ixRel] = build_f1(inst, relaxed);
    EvalResult resRel = evaluate(rel, encode_solution(inst, invalid, ixRel));
    CHECK(resRel.feasible());
    CHECK(resRel.objective == doctest::Approx(600.0).epsilon(1e-9));
  }
}

TEST_CASE("constraint counts match the closed forms") {
  // 4 nodes, 12 commodities, |L|=2, |R|=1: F1 has 2*4 + 12*(6+16+8+16).
  Instance inst = tiny_instance(13, 4, 0.5, 2, 1);
  REQUIRE(inst.numCommodities() == 12);
  auto [f1, ix1] = build_f1(inst);
  CHECK(f1.constraintCount() == 560);
  CHECK(f1.constraintCount() == model_size(inst, Formulation::F1).constraints);

  Instance inst2 = tiny_instance(13, 4, 0.5, 1, 2);
  auto [f2, ix2] = build_f2(inst2);
  CHECK(f2.constraintCount() == 2 * 4 + 12 * (4 + 12 + 2));
  CHECK(f2.constraintCount() ==
        model_size(inst2, Formulation::F2).constraints);

  // Variable counts track the structural formulas as well.
  ModelSize s1 = model_size(inst, Formulation::F1);
  CHECK(f1.binaryCount() == s1.binaries);
  CHECK(f1.continuousCount() == s1.continuous);
  ModelSize s2 = model_size(inst2, Formulation::F2);
  CHECK(f2.binaryCount() == s2.binaries);
  CHECK(f2.continuousCount() == s2.continuous);
}

TEST_CASE("model size reproduces the published binary count at n=30") {
  // |C| = 870, |K| = 30, |L| = |R| = 1.
  ModelSize size = model_size(30, 870, 1, 1, Formulation::F2);
  CHECK(size.binaries == 783900);
  CHECK(size.continuous == 870 * 30);
  ModelSize f1 = model_size(40, 1560, 1, 2, Formulation::F2);
  CHECK(f1.binaries == 4995160);
}

TEST_CASE("empty commodity set leaves only hub activation rows") {
  Instance base = make_example1();
  Instance inst(base.n(), base.alpha(), base.gamma(), base.cost(), base.time(),
                base.hubs(), {});
  auto [f1, ix1] = build_f1(inst);
  CHECK(f1.constraintCount() == 2 * 4);  // hub_level + capacity pairs
  CHECK(f1.binaryCount() == 4 * 2);
  // The all-zero assignment is optimal at objective 0.
  std::vector<double> zero(f1.variableCount(), 0.0);
  EvalResult res = evaluate(f1, zero);
  CHECK(res.feasible());
  CHECK(res.objective == 0.0);
  ModelSize s = model_size(inst, Formulation::F1);
  CHECK(s.binaries == 4 * 2);
  CHECK(s.continuous == 0);
  CHECK(s.constraints == 2 * 4);
}

TEST_CASE("builders reject structurally invalid instances") {
  Instance base = make_example1();
  std::vector<HubData> hubs = base.hubs();
  hubs[0].W = {200.0, 100.0};
  Instance bad(base.n(), base.alpha(), base.gamma(), base.cost(), base.time(),
               std::move(hubs), base.commodities());
  CHECK_THROWS_AS(build_f1(bad), Error);
  CHECK_THROWS_AS(build_f2(bad), Error);
}

TEST_CASE("encode rejects routes through closed hubs") {
  Instance inst = make_example1();
  Solution sol = example1_optimal(inst);
  sol.hubLevels.erase(2);  // close hub 3 while (2,4) still routes through it
  auto [f2, ix2] = build_f2(inst);
  CHECK_THROWS_AS(encode_solution(inst, sol, ix2), Error);
}

TEST_CASE("empty solution encodes to the feasible all-zero assignment") {
  Instance inst = make_example1();
  Solution empty;
  auto [f2, ix] = build_f2(inst);
  std::vector<double> assignment = encode_solution(inst, empty, ix);
  for (double v : assignment) CHECK(v == 0.0);
  EvalResult res = evaluate(f2, assignment);
  CHECK(res.feasible());
  CHECK(res.objective == 0.0);
}

TEST_CASE("exhaustive candidate agreement between validation and both models") {
  // Every candidate over every configuration: direct feasibility iff the
  // encoded assignment has no violations, with matching objectives.
  OracleLimits limits;
  limits.maxAssignments = 2e5;
  for (std::uint64_t seed : {101u, 102u}) {
    Instance inst = tiny_instance(seed, 3, 0.5, seed == 101u ? 1 : 2, 1);
    auto [f1, ix1] = build_f1(inst);
    auto [f2, ix2] = build_f2(inst);
    long long candidates = 0, feasible = 0;
    for_each_candidate(inst, limits, [&](const Solution& cand) {
      ++candidates;
      bool valid = validate(inst, cand).ok;
      if (valid) ++feasible;
      EvalResult r1 = evaluate(f1, encode_solution(inst, cand, ix1));
      EvalResult r2 = evaluate(f2, encode_solution(inst, cand, ix2));
      CHECK(r1.feasible() == valid);
      CHECK(r2.feasible() == valid);
      double objective =
          compute_objective(inst, cand.hubLevels, cand.served).objective;
      CHECK(r1.objective == doctest::Approx(objective).epsilon(1e-9));
      CHECK(r2.objective == doctest::Approx(objective).epsilon(1e-9));
    });
    CHECK(candidates > 100);
    CHECK(feasible > 0);
  }
}

TEST_CASE("adding the transit linking inequality keeps the optimum") {
  Instance inst = tiny_instance(55, 3, 0.5, 2, 1);
  OracleLimits limits;
  limits.maxAssignments = 2e5;
  auto [plain, ixPlain] = build_f2(inst);
  BuildOptions withCut;
  withCut.includeValidInequality = true;
  auto [cut, ixCut] = build_f2(inst, withCut);
  CHECK(cut.constraintCount() ==
        plain.constraintCount() +
            static_cast<std::size_t>(inst.numCommodities()) * inst.n());
  auto optPlain = model_optimum_over_candidates(inst, plain, ixPlain, limits);
  auto optCut = model_optimum_over_candidates(inst, cut, ixCut, limits);
  REQUIRE(optPlain.has_value());
  REQUIRE(optCut.has_value());
  CHECK(*optPlain == doctest::Approx(*optCut).epsilon(1e-12));
  CHECK(*optPlain ==
        doctest::Approx(brute_force(inst, limits).objective).epsilon(1e-9));
}

TEST_CASE("interval capacity boundaries differ between F1 and F2 as specified") {
  // Hub at the high level carrying exactly the low-level capacity: the
  // half-open interval semantics reject it, F1's non-strict lower row
  // accepts it, F2's +1 lower row rejects it.
  Instance inst = make_example1();
  Solution sol;
  sol.hubLevels = {{1, 1}};           // hub 2 at level 2 (capacity 200)
  sol.served[0] = {0, {1, 1}};        // flow 100 == W^1
  finalize_totals(inst, sol);
  CHECK_FALSE(validate(inst, sol).ok);

  auto [f1, ix1] = build_f1(inst);
  CHECK(evaluate(f1, encode_solution(inst, sol, ix1)).feasible());
  auto [f2, ix2] = build_f2(inst);
  EvalResult res2 = evaluate(f2, encode_solution(inst, sol, ix2));
  CHECK_FALSE(res2.feasible());
  bool lowerRow = false;
  for (const RowViolation& v : res2.rowViolations)
    if (f2.rows()[v.row].name == "cap_2_lo") lowerRow = true;
  CHECK(lowerRow);
}

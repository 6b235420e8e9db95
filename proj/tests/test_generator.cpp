#include <doctest.h>

#include <set>

#include "hlctdp/generator.hpp"
#include "support/fixtures.hpp"

using namespace hlctdp;
using namespace hlctdp::testing;

TEST_CASE("load_cab echoes a synthetic file exactly") {
  RawCab source = synthetic_cab(3, 21);
  RawCab parsed = load_cab(cab_text(source));
  CHECK(parsed.cityCount == 3);
  CHECK(parsed.dist == source.dist);
  CHECK(parsed.flow == source.flow);
}

TEST_CASE("load_cab infers the dimension without a header") {
  RawCab source = synthetic_cab(4, 33);
  std::string text = cab_text(source);
  text = text.substr(text.find('\n') + 1);  // drop the declared dimension
  RawCab parsed = load_cab(text);
  CHECK(parsed.cityCount == 4);
  CHECK(parsed.dist == source.dist);
}

TEST_CASE("load_cab rejects bad input") {
  CHECK_THROWS_AS(load_cab(""), ParseError);
  CHECK_THROWS_AS(load_cab("2 1 2 3"), ParseError);        // wrong count
  CHECK_THROWS_AS(load_cab("1 0 x"), ParseError);          // non-numeric
  // A negative flow names the offending cell.
  try {
    load_cab("1 0 -5");
    FAIL("expected rejection");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("flow") != std::string::npos);
    CHECK(std::string(e.what()).find("(1,1)") != std::string::npos);
  }
}

TEST_CASE("load_cab handles a 100-city file") {
  RawCab parsed = load_cab(cab_text(synthetic_cab(100, 5)));
  CHECK(parsed.cityCount == 100);
}

TEST_CASE("make_base is deterministic") {
  RawCab raw = synthetic_cab(8, 42);
  GenParams params;
  params.seed = 7;
  params.hubCostBase = synthetic_hub_costs(8, 42);
  BaseInstance a = make_base(raw, 6, 0.5, params);
  BaseInstance b = make_base(raw, 6, 0.5, params);
  CHECK(a == b);
}

TEST_CASE("make_base selects the highest-demand nodes") {
  RawCab raw;
  raw.cityCount = 4;
  raw.dist = Matrix(4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) raw.dist(i, j) = i == j ? 0.0 : 1.0;
  raw.flow = Matrix(4);
  // City 2 has the largest total flow, city 0 the smallest.
  raw.flow(2, 1) = 50.0;
  raw.flow(1, 2) = 40.0;
  raw.flow(3, 1) = 30.0;
  raw.flow(0, 1) = 1.0;
  GenParams params;
  params.hubCostBase = {1.0, 1.0, 1.0, 1.0};
  BaseInstance base = make_base(raw, 2, 0.5, params);
  CHECK(base.cityIds == std::vector<int>{1, 2});
}

TEST_CASE("make_base revenue matches the hand-computed scaling") {
  // Three nodes, unit costs, phi pinned to 0.3: the revenue collapses to
  // (0.3 * 2.5 / 6) * sum over the six ordered hub pairs.
  RawCab raw;
  raw.cityCount = 3;
  raw.dist = Matrix(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw.dist(i, j) = i == j ? 0.0 : 1.0;
  raw.flow = Matrix(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw.flow(i, j) = i == j ? 0.0 : 10.0;
  GenParams params;
  params.phiLow = params.phiHigh = 0.3;
  params.hubCostBase = {1.0, 1.0, 1.0};
  const double alpha = 0.5;
  BaseInstance base = make_base(raw, 3, alpha, params);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      double sum = 0.0;
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m)
          if (k != m)
            sum += raw.dist(i, k) + alpha * raw.dist(k, m) + raw.dist(m, j);
      CHECK(base.revenue(i, j) ==
            doctest::Approx(0.3 * 2.5 / 6.0 * sum).epsilon(1e-12));
    }
  }
}

TEST_CASE("make_base capacity is the scaled total demand") {
  RawCab raw;
  raw.cityCount = 3;
  raw.dist = Matrix(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw.dist(i, j) = i == j ? 0.0 : 2.0;
  raw.flow = Matrix(3);
  // Total demand 1000 across the six pairs.
  double flows[3][3] = {{0, 100, 200}, {150, 0, 250}, {120, 180, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) raw.flow(i, j) = flows[i][j];
  GenParams params;
  params.hubCostBase = {1.0, 1.0, 1.0};
  BaseInstance base = make_base(raw, 3, 0.2, params);
  for (double W : base.hubCap) CHECK(W == doctest::Approx(150.0));
}

TEST_CASE("make_base validates its inputs") {
  RawCab raw = synthetic_cab(4, 1);
  GenParams params;
  params.hubCostBase = synthetic_hub_costs(4, 1);
  CHECK_THROWS_AS(make_base(raw, 5, 0.5, params), Error);
  GenParams missing;
  CHECK_THROWS_AS(make_base(raw, 3, 0.5, missing), Error);
  RawCab skew = raw;
  skew.dist(0, 1) += 1.0;
  CHECK_THROWS_AS(make_base(skew, 3, 0.5, params), Error);
}

TEST_CASE("expand applies the delta rows") {
  RawCab raw = synthetic_cab(5, 9);
  GenParams params;
  params.hubCostBase = synthetic_hub_costs(5, 9);
  BaseInstance base = make_base(raw, 5, 0.5, params);

  SUBCASE("three demand levels scale w by (0.4, 1.0, 0.6) in H order") {
    Instance inst = expand(base, 1, 3);
    for (const Commodity& com : inst.commodities()) {
      double w0 = base.demand(com.i, com.j);
      double q0 = base.revenue(com.i, com.j);
      double H0 = base.maxTime(com.i, com.j);
      // Sorted by increasing H: High (0.5), Med (1.0), Low (1.5).
      CHECK(com.levels[0].w == doctest::Approx(0.4 * w0).epsilon(1e-12));
      CHECK(com.levels[1].w == doctest::Approx(1.0 * w0).epsilon(1e-12));
      CHECK(com.levels[2].w == doctest::Approx(0.6 * w0).epsilon(1e-12));
      CHECK(com.levels[0].q == doctest::Approx(3.0 * q0).epsilon(1e-12));
      CHECK(com.levels[2].q == doctest::Approx(0.8 * q0).epsilon(1e-12));
      CHECK(com.levels[0].H == doctest::Approx(0.5 * H0).epsilon(1e-12));
      CHECK(com.levels[2].H == doctest::Approx(1.5 * H0).epsilon(1e-12));
    }
  }
  SUBCASE("two service levels scale W, G, h by the service rows") {
    Instance inst = expand(base, 2, 1);
    for (int k = 0; k < inst.n(); ++k) {
      CHECK(inst.hub(k).W[1] == doctest::Approx(2.0 * inst.hub(k).W[0]));
      CHECK(inst.hub(k).G[1] ==
            doctest::Approx(1.7 * inst.hub(k).G[0]).epsilon(1e-12));
      CHECK(inst.hub(k).h[1] ==
            doctest::Approx(1.25 * inst.hub(k).h[0]).epsilon(1e-12));
    }
  }
  SUBCASE("single level instance equals the base numerically") {
    Instance inst = expand(base, 1, 1);
    for (const Commodity& com : inst.commodities()) {
      CHECK(com.levels[0].w == base.demand(com.i, com.j));
      CHECK(com.levels[0].q == base.revenue(com.i, com.j));
      CHECK(com.levels[0].H == base.maxTime(com.i, com.j));
    }
    for (int k = 0; k < inst.n(); ++k) {
      CHECK(inst.hub(k).W[0] == base.hubCap[k]);
      CHECK(inst.hub(k).G[0] == base.hubCost[k]);
      CHECK(inst.hub(k).h[0] == base.hubTransit[k]);
    }
  }
  SUBCASE("unsupported level counts are rejected") {
    CHECK_THROWS_AS(expand(base, 3, 1), Error);
    CHECK_THROWS_AS(expand(base, 1, 4), Error);
    CHECK_THROWS_AS(expand(base, 0, 1), Error);
  }
}

TEST_CASE("expanded instances satisfy every monotonicity invariant") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    RawCab raw = synthetic_cab(6, seed);
    GenParams params;
    params.seed = seed;
    params.hubCostBase = synthetic_hub_costs(6, seed);
    BaseInstance base = make_base(raw, 6, 0.2, params);
    for (int L = 1; L <= 2; ++L)
      for (int R = 1; R <= 3; ++R) {
        Instance inst = expand(base, L, R);
        for (const auto& v : validate_instance(inst))
          CHECK_FALSE(v.structural);
      }
  }
}

TEST_CASE("full sweep yields 54 distinct instances") {
  RawCab raw = synthetic_cab(15, 77);
  GenParams params;
  params.seed = 77;
  params.hubCostBase = synthetic_hub_costs(15, 77);
  std::set<std::string> signatures;
  int count = 0;
  for (double alpha : {0.2, 0.5, 0.8}) {
    for (int n : {8, 10, 12}) {
      BaseInstance base = make_base(raw, n, alpha, params);
      for (int L = 1; L <= 2; ++L) {
        for (int R = 1; R <= 3; ++R) {
          Instance inst = expand(base, L, R);
          ++count;
          std::string sig = std::to_string(alpha) + ":" + std::to_string(n) +
                            ":" + std::to_string(L) + ":" + std::to_string(R) +
                            ":" + std::to_string(inst.commodity(0).levels[0].q);
          signatures.insert(sig);
        }
      }
    }
  }
  CHECK(count == 54);
  CHECK(signatures.size() == 54);
}

TEST_CASE("demand level naming convention") {
  CHECK(demand_level_names(1) == std::vector<std::string>{"Med"});
  CHECK(demand_level_names(2) == std::vector<std::string>{"High", "Med"});
  CHECK(demand_level_names(3) ==
        std::vector<std::string>{"High", "Med", "Low"});
}

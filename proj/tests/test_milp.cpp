#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "hlctdp/milp.hpp"
#include "support/fixtures.hpp"

using namespace hlctdp;

namespace {

// Two binaries, one continuous, one interval capacity pair; enough shape to
// exercise every MPS section.
Model tinyModel() {
  Model m("tiny");
  int x = m.addIndexed("x", std::array{0, 1}, VarKind::Binary, 0.0, 1.0);
  int y = m.addIndexed("Y", std::array{0}, VarKind::Binary, 0.0, 1.0);
  int g = m.addIndexed("g", std::array{0}, VarKind::Continuous, 0.0, 50.0);
  m.addObjectiveTerm(x, 3.5);
  m.addObjectiveTerm(y, -1.25);
  m.addObjectiveTerm(g, 0.125);
  m.setObjectiveConstant(2.0);
  m.addConstraint("choose", {{x, 1.0}, {y, 1.0}}, Sense::LessEq, 1.0);
  m.addConstraint("link", {{g, 1.0}, {x, -50.0}}, Sense::LessEq, 0.0);
  m.addConstraintPair("cap", {{g, 1.0}, {y, -10.0}}, 0.0,
                      {{g, 1.0}, {y, -40.0}}, 0.0);
  m.freeze();
  return m;
}

std::vector<double> randomAssignment(const Model& m, std::mt19937_64& rng) {
  std::vector<double> a(m.variableCount());
  for (const Variable& v : m.variables()) {
    if (v.kind == VarKind::Binary) {
      a[v.id] = (rng() & 1) ? 1.0 : 0.0;
    } else {
      double hi = std::min(v.upper, 100.0);
      a[v.id] = hlctdp::testing::uniform(rng, v.lower, hi);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("evaluate computes objective and residuals") {
  Model m = tinyModel();

  SUBCASE("all-zero assignment") {
    std::vector<double> a(m.variableCount(), 0.0);
    EvalResult res = evaluate(m, a);
    CHECK(res.objective == doctest::Approx(2.0));  // constant only
    CHECK(res.feasible());
  }
  SUBCASE("violated rows are reported with residuals") {
    // x = y = 1 violates "choose"; g = 50 with x = 1 satisfies "link" but
    // overshoots the capacity pair's upper row (50 > 40).
    std::vector<double> a = {1.0, 1.0, 50.0};
    EvalResult res = evaluate(m, a);
    REQUIRE(res.rowViolations.size() == 2);
    CHECK(m.rows()[res.rowViolations[0].row].name == "choose");
    CHECK(res.rowViolations[0].residual == doctest::Approx(1.0));
    CHECK(m.rows()[res.rowViolations[1].row].name == "cap_hi");
    CHECK(res.rowViolations[1].residual == doctest::Approx(10.0));
  }
  SUBCASE("bound violations are reported") {
    std::vector<double> a = {0.0, 0.0, 75.0};
    EvalResult res = evaluate(m, a);
    REQUIRE(res.boundViolations.size() == 1);
    CHECK(res.boundViolations[0].var == 2);
    CHECK(res.boundViolations[0].residual == doctest::Approx(25.0));
  }
  SUBCASE("missing entries are an error") {
    std::vector<double> a(m.variableCount() - 1, 0.0);
    CHECK_THROWS_AS(evaluate(m, a), Error);
  }
}

TEST_CASE("evaluate is linear in the assignment") {
  Model m = tinyModel();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> a = randomAssignment(m, rng);
    std::vector<double> b = randomAssignment(m, rng);
    double lambda = hlctdp::testing::uniform(rng, 0.0, 1.0);
    std::vector<double> mix(m.variableCount());
    for (std::size_t i = 0; i < mix.size(); ++i)
      mix[i] = lambda * a[i] + (1.0 - lambda) * b[i];
    double expect = lambda * evaluate(m, a).objective +
                    (1.0 - lambda) * evaluate(m, b).objective;
    CHECK(evaluate(m, mix).objective == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("constraint terms are aggregated and coefficient-checked") {
  Model m;
  int x = m.addVariable("x", VarKind::Continuous, 0.0, 10.0);
  m.addConstraint("dup", {{x, 1.0}, {x, 2.0}}, Sense::LessEq, 5.0);
  REQUIRE(m.rows()[0].terms.size() == 1);
  CHECK(m.rows()[0].terms[0].coef == 3.0);
  CHECK_THROWS_AS(m.addConstraint("bad", {{7, 1.0}}, Sense::LessEq, 0.0),
                  Error);
  CHECK_THROWS_AS(m.addVariable("x", VarKind::Binary, 0.0, 1.0), Error);
}

TEST_CASE("mps round trip preserves structure and semantics") {
  Model m = tinyModel();
  std::string mps = export_mps(m);
  Model back = parse_mps(mps);

  CHECK(back.variableCount() == m.variableCount());
  CHECK(back.binaryCount() == m.binaryCount());
  CHECK(back.rowCount() == m.rowCount());
  CHECK(back.constraintCount() == m.constraintCount());
  CHECK(back.objectiveConstant() == m.objectiveConstant());
  for (const Variable& v : m.variables()) {
    auto id = back.findVariable(v.name);
    REQUIRE(id.has_value());
    CHECK(back.variables()[*id].kind == v.kind);
    CHECK(back.variables()[*id].lower == v.lower);
    CHECK(back.variables()[*id].upper == v.upper);
  }
  // The family index survives via the naming scheme.
  CHECK(back.lookup("x", std::array{0, 1}).has_value());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a = randomAssignment(m, rng);
    CHECK(evaluate(back, a).objective ==
          doctest::Approx(evaluate(m, a).objective).epsilon(1e-9));
  }
}

TEST_CASE("mps writer truncates and maps oversized names") {
  Model m;
  std::string longName(300, 'v');
  int v = m.addVariable(longName, VarKind::Continuous, 0.0, 1.0);
  m.addObjectiveTerm(v, 1.0);
  NameMap names;
  std::string mps = export_mps(m, &names);
  REQUIRE(names.modelToMps.count(longName) == 1);
  CHECK(names.modelToMps.at(longName).size() <= 255);
  CHECK(mps.find(names.modelToMps.at(longName)) != std::string::npos);
}

TEST_CASE("parse_mps rejects malformed input") {
  CHECK_THROWS_AS(parse_mps(""), ParseError);
  CHECK_THROWS_AS(parse_mps("ROWS\n L  c1\nENDATA\n"), ParseError);
  CHECK_THROWS_AS(
      parse_mps("NAME x\nOBJSENSE\n MIN\nROWS\nCOLUMNS\nENDATA\n"),
      ParseError);
  // Column referencing an unknown row.
  std::string bad =
      "NAME x\nOBJSENSE\n MAX\nROWS\n N  OBJ\n L  c1\nCOLUMNS\n"
      "    v  nosuchrow  1.0\nRHS\nBOUNDS\nENDATA\n";
  CHECK_THROWS_AS(parse_mps(bad), ParseError);
}

TEST_CASE("import_solution fills known variables and warns on unknowns") {
  Model m = tinyModel();

  SUBCASE("empty file yields the all-zero assignment") {
    ImportedSolution sol = import_solution("", m);
    for (double v : sol.values) CHECK(v == 0.0);
    CHECK_FALSE(sol.declaredObjective.has_value());
  }
  SUBCASE("named values and objective line") {
    ImportedSolution sol = import_solution(
        "# comment\nx_1_2 1\ng_1 12.5\n=obj= 4.0\nmystery 3\n", m);
    CHECK(sol.values[0] == 1.0);
    CHECK(sol.values[2] == 12.5);
    REQUIRE(sol.declaredObjective.has_value());
    CHECK(*sol.declaredObjective == 4.0);
    REQUIRE(sol.warnings.size() == 1);
    CHECK(sol.warnings[0].find("mystery") != std::string::npos);
  }
  SUBCASE("unparsable values are an error") {
    CHECK_THROWS_AS(import_solution("x_1_2 notanumber\n", m), ParseError);
  }
  SUBCASE("fuzzed inputs parse or reject without crashing") {
    std::mt19937_64 rng(99);
    const std::string alphabet =
        "abcxyz_0123456789.eE+- \t\n#=";
    for (int trial = 0; trial < 300; ++trial) {
      std::string text;
      int len = static_cast<int>(rng() % 60);
      for (int i = 0; i < len; ++i)
        text += alphabet[rng() % alphabet.size()];
      try {
        ImportedSolution sol = import_solution(text, m);
        CHECK(sol.values.size() == m.variableCount());
      } catch (const ParseError&) {
        // rejection is fine; crashing is not
      }
    }
  }
}

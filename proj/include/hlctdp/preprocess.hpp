#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hlctdp/instance.hpp"

namespace hlctdp {

enum class FixRule : std::uint8_t {
  None = 0,
  A1,
  A2,
  A3,
  C1a,
  C1b,
  C2,
  C3,
};

const char* fix_rule_name(FixRule rule);

// Routing/demand-level variables provably zero in some optimal solution.
// Each entry carries the first rule that fixed it.
class FixMask {
 public:
  FixMask() = default;
  FixMask(int numCommodities, int numHubs, int numDemandLevels);

  bool attached() const { return K_ > 0; }
  int numCommodities() const { return C_; }
  int numHubs() const { return K_; }
  int numDemandLevels() const { return R_; }

  // Structural x-variable count |C| * |K|^2 * |R|, diagonal routes included.
  std::size_t totalRoutes() const {
    return static_cast<std::size_t>(C_) * K_ * K_ * R_;
  }

  bool routeFixed(int c, int k, int m, int r) const {
    return attached() && routeRules_[routeIdx(c, k, m, r)] != FixRule::None;
  }
  FixRule routeRule(int c, int k, int m, int r) const {
    return attached() ? routeRules_[routeIdx(c, k, m, r)] : FixRule::None;
  }
  bool betaFixed(int c, int r) const {
    return attached() && betaRules_[betaIdx(c, r)] != FixRule::None;
  }
  FixRule betaRule(int c, int r) const {
    return attached() ? betaRules_[betaIdx(c, r)] : FixRule::None;
  }

  // First rule wins; returns whether the entry was newly fixed.
  bool fixRoute(int c, int k, int m, int r, FixRule rule);
  bool fixBeta(int c, int r, FixRule rule);

  std::size_t fixedRouteCount() const { return fixedRoutes_; }
  std::size_t fixedBetaCount() const { return fixedBetas_; }
  std::size_t routeCountByRule(FixRule rule) const {
    return routeByRule_[static_cast<int>(rule)];
  }

 private:
  std::size_t routeIdx(int c, int k, int m, int r) const {
    return ((static_cast<std::size_t>(c) * K_ + k) * K_ + m) * R_ + r;
  }
  std::size_t betaIdx(int c, int r) const {
    return static_cast<std::size_t>(c) * R_ + r;
  }

  int C_ = 0, K_ = 0, R_ = 0;
  std::vector<FixRule> routeRules_;
  std::vector<FixRule> betaRules_;
  std::size_t fixedRoutes_ = 0;
  std::size_t fixedBetas_ = 0;
  std::size_t routeByRule_[8] = {};
};

// One row of the preprocessing effectiveness report. Percentages are over
// the structural x count, with first-rule attribution.
struct FixReport {
  double pctEliminated = 0.0;
  double pctC1 = 0.0;  // C1a and C1b combined
  double pctC2 = 0.0;
  double pctC3 = 0.0;
  double elapsedMs = 0.0;
};

// Routing-cost dominance: drops first-leg detours that cannot beat direct
// access (a), and the costlier orientation of every interhub pair (b). Valid
// under the benchmark convention cost == time, gamma == alpha.
std::vector<RouteKey> apply_c1(const Instance& inst);
// The two halves individually, for targeted checks.
std::vector<RouteKey> apply_c1a(const Instance& inst);
std::vector<RouteKey> apply_c1b(const Instance& inst);

// Nonpositive net profit: q_ij^r - C_ijkm <= 0, single-hub case included.
std::vector<RouteKey> apply_c2(const Instance& inst);

// Route time plus best-case hub transit already exceeds the level's cap.
std::vector<RouteKey> apply_c3(const Instance& inst);

struct AssumptionFixes {
  std::vector<std::pair<int, int>> beta;  // (commodity, level)
  std::vector<RouteKey> routes;
};

// A1 (nonpositive demand), A2 (demand exceeds one hub's top capacity),
// A3 (demand exceeds every hub's top capacity).
AssumptionFixes apply_assumptions(const Instance& inst);

// Runs A1-A3, C1a, C1b, C2, C3 in that order with first-rule attribution.
std::pair<FixMask, FixReport> preprocess(const Instance& inst);

std::string fix_report_csv_header();
std::string fix_report_csv_row(double alpha, int n, int L, int R,
                               const FixReport& report);

}  // namespace hlctdp

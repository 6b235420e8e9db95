#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>

#include "hlctdp/formulations.hpp"
#include "hlctdp/instance.hpp"
#include "hlctdp/preprocess.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp {

struct SolverConfig {
  double timeLimit = 7200.0;  // seconds
  double gapTol = 1e-5;       // relative optimality tolerance (0.001%)
  std::uint64_t seed = 0;     // recorded for reproducibility
  // Heuristic cap on simultaneously open hubs; when set the search is no
  // longer exhaustive and the result is reported as feasible.
  std::optional<int> maxHubs;
  // Optional CSV progress log: nodes,incumbent,bound,gap,elapsed_s.
  std::ostream* log = nullptr;
};

// Exact search: branches over hub configurations (hubs in decreasing total
// capacity order, each closed or opened at one level) with an admissible
// profit bound, and solves the commodity-assignment subproblem at the leaves
// by branch-and-bound with per-hub fractional-knapsack bound refinement.
// Every incumbent is feasible; results are deterministic for fixed inputs.
Solution solve_exact(const Instance& inst, const FixMask& mask = {},
                     const SolverConfig& cfg = {});

// Profit-greedy feasible solution for a fixed hub configuration; hubs end up
// trimmed to the levels their realized flows require. Used to warm-start the
// assignment search.
Solution lower_bound_greedy(const Instance& inst, const HubConfig& config);

// Decodes an external solver's solution file for the model exported with the
// same formulation and options, re-validates it, and recomputes the
// objective from first principles. Throws when the decoded solution is
// infeasible or a declared objective disagrees beyond 1e-4 relative.
Solution solve_via_export(const Instance& inst, Formulation which,
                          const BuildOptions& opts,
                          std::string_view solutionText);

}  // namespace hlctdp

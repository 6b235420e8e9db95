#pragma once

// Cross-validation helpers shared by the formulation tests and the
// acceptance suite: sweep every hub configuration, stream every candidate
// assignment, and compare first-principles validation with MILP evaluation.

#include <functional>
#include <optional>

#include "hlctdp/analysis.hpp"
#include "hlctdp/formulations.hpp"
#include "hlctdp/milp.hpp"
#include "hlctdp/oracle.hpp"

namespace hlctdp::testing {

// Streams every candidate of every hub configuration within the limits.
// Configurations whose candidate count would exceed the limits are skipped
// (reported through *skippedConfigs), so callers can bound the work.
inline void for_each_candidate(const Instance& inst,
                               const OracleLimits& limits,
                               const std::function<void(const Solution&)>& sink,
                               int* skippedConfigs = nullptr) {
  for_each_config(inst, [&](const HubConfig& config) {
    try {
      enumerate_candidates(inst, config, limits, [&](const Solution& cand) {
        sink(cand);
        return true;
      });
    } catch (const SizeError&) {
      if (skippedConfigs) ++*skippedConfigs;
    }
  });
}

// Best candidate objective over assignments that the model accepts (zero row
// and bound violations). This is the model's integer optimum restricted to
// the streamed candidate space.
template <typename VarIndex>
std::optional<double> model_optimum_over_candidates(
    const Instance& inst, const Model& model, const VarIndex& index,
    const OracleLimits& limits) {
  std::optional<double> best;
  for_each_candidate(inst, limits, [&](const Solution& cand) {
    std::vector<double> assignment = encode_solution(inst, cand, index);
    if (!evaluate(model, assignment).feasible()) return;
    double objective =
        compute_objective(inst, cand.hubLevels, cand.served).objective;
    if (!best || objective > *best) best = objective;
  });
  return best;
}

}  // namespace hlctdp::testing

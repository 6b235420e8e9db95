#include "hlctdp/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

#include "hlctdp/analysis.hpp"
#include "hlctdp/milp.hpp"

namespace hlctdp {

namespace {

constexpr double kTol = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Option {
  int r, k, m;
  double w;
  double profit;
  double T;  // route travel time excluding hub transit
};

// Positive-profit, unmasked route options of one commodity, profit
// descending. Time and consistency feasibility depend on the hub levels and
// are checked at use.
std::vector<std::vector<Option>> collectOptions(const Instance& inst,
                                                const FixMask& mask) {
  const int K = inst.numHubs();
  const int R = inst.demandLevels();
  std::vector<std::vector<Option>> options(inst.numCommodities());
  for (int c = 0; c < inst.numCommodities(); ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m) {
        double T = route_time(inst, com.i, com.j, k, m);
        for (int r = 0; r < R; ++r) {
          if (mask.attached() &&
              (mask.routeFixed(c, k, m, r) || mask.betaFixed(c, r)))
            continue;
          double profit = net_profit(inst, c, k, m, r);
          if (profit <= 0.0) continue;
          options[c].push_back({r, k, m, com.levels[r].w, profit, T});
        }
      }
    std::stable_sort(options[c].begin(), options[c].end(),
                     [](const Option& a, const Option& b) {
                       return a.profit > b.profit;
                     });
  }
  return options;
}

// Filters a commodity's options down to a fixed configuration: open hubs,
// exact transit times, consistency against open endpoints.
std::vector<Option> leafOptions(const Instance& inst, int c,
                                const std::vector<Option>& all,
                                const std::vector<int>& level) {
  const Commodity& com = inst.commodity(c);
  bool originOpen = level[com.i] >= 0;
  bool destOpen = level[com.j] >= 0;
  std::vector<Option> out;
  for (const Option& opt : all) {
    if (level[opt.k] < 0 || level[opt.m] < 0) continue;
    if (originOpen && opt.k != com.i) continue;
    if (destOpen && opt.m != com.j) continue;
    double transit = inst.hub(opt.k).h[level[opt.k]];
    if (opt.m != opt.k) transit += inst.hub(opt.m).h[level[opt.m]];
    if (opt.T + transit > com.levels[opt.r].H + kTol) continue;
    out.push_back(opt);
  }
  return out;
}

// Close zero-flow hubs and trim each remaining hub to the lowest level whose
// capacity covers its realized inbound flow. Lowering levels only shortens
// transit times, so feasibility is preserved.
void canonicalize(const Instance& inst, Solution& sol) {
  std::vector<double> load(inst.numHubs(), 0.0);
  for (const auto& [c, choice] : sol.served) {
    double w = inst.commodity(c).levels[choice.level].w;
    load[choice.route.k] += w;
    if (choice.route.m != choice.route.k) load[choice.route.m] += w;
  }
  std::map<int, int> trimmed;
  for (const auto& [k, l] : sol.hubLevels) {
    if (load[k] <= kTol) continue;
    int fit = -1;
    for (int cand = 0; cand <= l; ++cand)
      if (load[k] <= inst.hub(k).W[cand] + kTol) {
        fit = cand;
        break;
      }
    if (fit < 0)
      throw Error("canonicalize: hub flow exceeds the configured capacity");
    trimmed[k] = fit;
  }
  sol.hubLevels = std::move(trimmed);
  finalize_totals(inst, sol);
}

// Exact assignment search for one hub configuration. Upper capacity bounds
// only; interval lower bounds are restored by canonicalization.
class InnerSearch {
 public:
  InnerSearch(const Instance& inst, const std::vector<int>& level,
              std::vector<std::pair<int, std::vector<Option>>> items,
              double pruneFloor,
              std::chrono::steady_clock::time_point deadline)
      : inst_(inst), level_(level), items_(std::move(items)),
        pruneFloor_(pruneFloor), deadline_(deadline) {
    const int n = static_cast<int>(items_.size());
    suffixBest_.assign(n + 1, 0.0);
    for (int i = n - 1; i >= 0; --i) {
      double best = items_[i].second.empty() ? 0.0 : items_[i].second[0].profit;
      suffixBest_[i] = suffixBest_[i + 1] + best;
    }
    load_.assign(inst.numHubs(), 0.0);
    decided_.assign(n, false);
    chosen_.assign(n, -1);

    const int K = inst.numHubs();
    bestAvoiding_.assign(static_cast<std::size_t>(n) * K, 0.0);
    minWeightVia_.assign(static_cast<std::size_t>(n) * K, kInf);
    notKSum_.assign(K, 0.0);
    for (int i = 0; i < n; ++i) {
      for (const Option& opt : items_[i].second) {
        for (int k : {opt.k, opt.m})
          minWeightVia_[i * K + k] =
              std::min(minWeightVia_[i * K + k], opt.w);
      }
      for (int k = 0; k < K; ++k) {
        double best = 0.0;
        for (const Option& opt : items_[i].second)
          if (opt.k != k && opt.m != k) {
            best = opt.profit;  // options are profit-sorted
            break;
          }
        bestAvoiding_[i * K + k] = best;
        notKSum_[k] += best;
      }
    }
    // Per-hub knapsack item lists: profit gain of routing via the hub over
    // the best hub-avoiding alternative, by gain density.
    knap_.resize(K);
    for (int k = 0; k < K; ++k) {
      if (level_[k] < 0) continue;
      for (int i = 0; i < n; ++i) {
        double w = minWeightVia_[i * K + k];
        if (w == kInf) continue;
        double bestVia = items_[i].second.empty()
                             ? 0.0
                             : items_[i].second[0].profit;
        double gain = bestVia - bestAvoiding_[i * K + k];
        if (gain <= 0.0) continue;
        knap_[k].push_back({i, gain, w});
      }
      std::stable_sort(knap_[k].begin(), knap_[k].end(),
                       [](const KnapItem& a, const KnapItem& b) {
                         return a.gain * b.weight > b.gain * a.weight;
                       });
    }
    notKSumLive_ = notKSum_;
  }

  void run(double warmProfit, const std::vector<int>& warmChoice) {
    bestProfit_ = warmProfit;
    bestChoice_ = warmChoice;
    dfs(0, 0.0);
  }

  bool aborted() const { return aborted_; }
  double bestProfit() const { return bestProfit_; }
  // Per item: option index taken, or -1.
  const std::vector<int>& bestChoice() const { return bestChoice_; }
  const std::vector<std::pair<int, std::vector<Option>>>& items() const {
    return items_;
  }

 private:
  struct KnapItem {
    int item;
    double gain;
    double weight;
  };

  double cutoff() const { return std::max(bestProfit_, pruneFloor_); }

  // Admissible refinement: for one hub, the optimistic profit cannot exceed
  // the hub-avoiding best plus a fractional knapsack of via-gains into the
  // residual capacity.
  double hubBound(int k, double profit) const {
    double residual = inst_.hub(k).W[level_[k]] - load_[k];
    double bound = profit + notKSumLive_[k];
    for (const KnapItem& item : knap_[k]) {
      if (decided_[item.item]) continue;
      if (residual <= 0.0) break;
      if (item.weight <= residual) {
        bound += item.gain;
        residual -= item.weight;
      } else {
        bound += item.gain * (residual / item.weight);
        break;
      }
    }
    return bound;
  }

  void dfs(int i, double profit) {
    if (aborted_) return;
    if ((++steps_ & 0x3ff) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      aborted_ = true;
      return;
    }
    if (profit + suffixBest_[i] <= cutoff()) return;
    const int n = static_cast<int>(items_.size());
    if (i == n) {
      if (profit > bestProfit_) {
        bestProfit_ = profit;
        bestChoice_ = chosen_;
      }
      return;
    }
    // Capacity-aware refinement on binding hubs.
    for (int k = 0; k < inst_.numHubs(); ++k) {
      if (level_[k] < 0 || knap_[k].empty()) continue;
      if (hubBound(k, profit) <= cutoff()) return;
    }

    const std::vector<Option>& opts = items_[i].second;
    decided_[i] = true;
    for (int k = 0; k < inst_.numHubs(); ++k)
      notKSumLive_[k] -= bestAvoiding_[i * inst_.numHubs() + k];
    for (int o = 0; o < static_cast<int>(opts.size()); ++o) {
      const Option& opt = opts[o];
      if (load_[opt.k] + opt.w > inst_.hub(opt.k).W[level_[opt.k]] + kTol)
        continue;
      if (opt.m != opt.k &&
          load_[opt.m] + opt.w > inst_.hub(opt.m).W[level_[opt.m]] + kTol)
        continue;
      load_[opt.k] += opt.w;
      if (opt.m != opt.k) load_[opt.m] += opt.w;
      chosen_[i] = o;
      dfs(i + 1, profit + opt.profit);
      load_[opt.k] -= opt.w;
      if (opt.m != opt.k) load_[opt.m] -= opt.w;
      chosen_[i] = -1;
    }
    dfs(i + 1, profit);  // leave the commodity unserved
    decided_[i] = false;
    for (int k = 0; k < inst_.numHubs(); ++k)
      notKSumLive_[k] += bestAvoiding_[i * inst_.numHubs() + k];
  }

  const Instance& inst_;
  const std::vector<int>& level_;
  std::vector<std::pair<int, std::vector<Option>>> items_;
  double pruneFloor_;
  std::vector<double> suffixBest_;
  std::vector<double> load_;
  std::vector<bool> decided_;
  std::vector<int> chosen_;
  std::vector<double> bestAvoiding_;  // [item][hub]
  std::vector<double> minWeightVia_;  // [item][hub]
  std::vector<double> notKSum_;
  std::vector<double> notKSumLive_;
  std::vector<std::vector<KnapItem>> knap_;
  double bestProfit_ = 0.0;
  std::vector<int> bestChoice_;
  std::chrono::steady_clock::time_point deadline_;
  long long steps_ = 0;
  bool aborted_ = false;
};

// Greedy insertion in decreasing best-profit order; first fitting option
// wins. Returns per-item option choices.
std::pair<double, std::vector<int>> greedyAssign(
    const Instance& inst, const std::vector<int>& level,
    const std::vector<std::pair<int, std::vector<Option>>>& items) {
  std::vector<double> load(inst.numHubs(), 0.0);
  std::vector<int> choice(items.size(), -1);
  double profit = 0.0;
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    const auto& opts = items[i].second;
    for (int o = 0; o < static_cast<int>(opts.size()); ++o) {
      const Option& opt = opts[o];
      if (load[opt.k] + opt.w > inst.hub(opt.k).W[level[opt.k]] + kTol)
        continue;
      if (opt.m != opt.k &&
          load[opt.m] + opt.w > inst.hub(opt.m).W[level[opt.m]] + kTol)
        continue;
      load[opt.k] += opt.w;
      if (opt.m != opt.k) load[opt.m] += opt.w;
      choice[i] = o;
      profit += opt.profit;
      break;
    }
  }
  return {profit, std::move(choice)};
}

std::vector<std::pair<int, std::vector<Option>>> makeItems(
    const Instance& inst, const std::vector<int>& level,
    const std::vector<std::vector<Option>>& allOptions) {
  std::vector<std::pair<int, std::vector<Option>>> items;
  for (int c = 0; c < inst.numCommodities(); ++c) {
    std::vector<Option> opts = leafOptions(inst, c, allOptions[c], level);
    if (!opts.empty()) items.push_back({c, std::move(opts)});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) {
                     return a.second[0].profit > b.second[0].profit;
                   });
  return items;
}

Solution assignmentToSolution(const Instance& inst,
                              const std::vector<int>& level,
                              const std::vector<std::pair<int, std::vector<Option>>>& items,
                              const std::vector<int>& choice) {
  Solution sol;
  for (int k = 0; k < inst.numHubs(); ++k)
    if (level[k] >= 0) sol.hubLevels[k] = level[k];
  for (int i = 0; i < static_cast<int>(items.size()); ++i) {
    if (choice[i] < 0) continue;
    const Option& opt = items[i].second[choice[i]];
    sol.served[items[i].first] = {opt.r, {opt.k, opt.m}};
  }
  canonicalize(inst, sol);
  return sol;
}

// Lexicographic tie ordering: fewer hubs first, then lower hub index sets.
bool lexBetter(const Solution& a, const Solution& b) {
  if (a.hubLevels.size() != b.hubLevels.size())
    return a.hubLevels.size() < b.hubLevels.size();
  auto ai = a.hubLevels.begin();
  auto bi = b.hubLevels.begin();
  for (; ai != a.hubLevels.end(); ++ai, ++bi) {
    if (ai->first != bi->first) return ai->first < bi->first;
    if (ai->second != bi->second) return ai->second < bi->second;
  }
  return false;
}

class ExactSolver {
 public:
  ExactSolver(const Instance& inst, const FixMask& mask,
              const SolverConfig& cfg)
      : inst_(inst), cfg_(cfg), options_(collectOptions(inst, mask)) {
    const int K = inst.numHubs();
    hubOrder_.resize(K);
    std::iota(hubOrder_.begin(), hubOrder_.end(), 0);
    std::stable_sort(hubOrder_.begin(), hubOrder_.end(), [&](int a, int b) {
      double wa = std::accumulate(inst.hub(a).W.begin(), inst.hub(a).W.end(), 0.0);
      double wb = std::accumulate(inst.hub(b).W.begin(), inst.hub(b).W.end(), 0.0);
      if (wa != wb) return wa > wb;
      return a < b;
    });
    hmin_.resize(K);
    for (int k = 0; k < K; ++k) hmin_[k] = min_transit(inst, k);
    decided_.assign(K, kUndecided);
  }

  Solution run() {
    start_ = std::chrono::steady_clock::now();
    deadline_ = start_ + std::chrono::duration_cast<
                             std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(cfg_.timeLimit));
    incumbent_.status = SolveStatus::Optimal;
    incumbent_.objective = 0.0;  // the empty solution is always feasible
    finalize_totals(inst_, incumbent_);

    rootBound_ = nodeBound();
    dfs(0, rootBound_);

    incumbent_.nodesExplored = nodes_;
    incumbent_.elapsedSeconds = elapsed();
    if (cfg_.maxHubs) {
      // Heuristic cap: the search was not exhaustive.
      incumbent_.status = SolveStatus::Feasible;
      double bound = std::max(skippedBound_, incumbent_.objective);
      incumbent_.bestBound = bound;
      incumbent_.gap = relativeGap(bound, incumbent_.objective);
    } else if (timedOut_) {
      double bound = std::max(skippedBound_, incumbent_.objective);
      incumbent_.bestBound = bound;
      incumbent_.gap = relativeGap(bound, incumbent_.objective);
      incumbent_.status = incumbent_.gap <= cfg_.gapTol
                              ? SolveStatus::Optimal
                              : SolveStatus::Feasible;
    } else {
      incumbent_.status = SolveStatus::Optimal;
      incumbent_.bestBound = incumbent_.objective;
      incumbent_.gap = 0.0;
    }
    logLine(rootBound_);
    return incumbent_;
  }

 private:
  static constexpr int kUndecided = -2;
  static constexpr int kClosed = -1;

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  static double relativeGap(double bound, double value) {
    if (bound <= value) return 0.0;
    return (bound - value) / std::max(std::abs(value), 1e-9);
  }

  // Best profit of commodity c over options compatible with the current
  // partial configuration, optimistically assuming undecided hubs open at
  // their fastest level.
  double bestAvailable(int c) const {
    const Commodity& com = inst_.commodity(c);
    bool originOpen = decided_[com.i] >= 0;
    bool destOpen = decided_[com.j] >= 0;
    for (const Option& opt : options_[c]) {
      if (decided_[opt.k] == kClosed || decided_[opt.m] == kClosed) continue;
      if (originOpen && opt.k != com.i) continue;
      if (destOpen && opt.m != com.j) continue;
      double transit = decided_[opt.k] >= 0 ? inst_.hub(opt.k).h[decided_[opt.k]]
                                            : hmin_[opt.k];
      if (opt.m != opt.k)
        transit += decided_[opt.m] >= 0 ? inst_.hub(opt.m).h[decided_[opt.m]]
                                        : hmin_[opt.m];
      if (opt.T + transit > com.levels[opt.r].H + kTol) continue;
      return opt.profit;  // profit-sorted
    }
    return 0.0;
  }

  double nodeBound() const {
    double bound = -committedSetup_;
    for (int c = 0; c < inst_.numCommodities(); ++c) bound += bestAvailable(c);
    return bound;
  }

  void checkTime() {
    if (timedOut_) return;
    if ((nodes_ & 0x3f) == 0 && elapsed() > cfg_.timeLimit) timedOut_ = true;
  }

  void submit(Solution sol) {
    if (sol.objective > incumbent_.objective + kTol) {
      sol.status = incumbent_.status;
      incumbent_ = std::move(sol);
      logLine(rootBound_);
    } else if (std::abs(sol.objective - incumbent_.objective) <= kTol &&
               lexBetter(sol, incumbent_)) {
      sol.status = incumbent_.status;
      incumbent_ = std::move(sol);
    }
  }

  void solveLeaf(double bound) {
    auto items = makeItems(inst_, decided_, options_);
    if (items.empty()) return;
    auto [greedyProfit, greedyChoice] = greedyAssign(inst_, decided_, items);
    // Anything at or below the incumbent (minus the tie window) is useless.
    double floor = incumbent_.objective + committedSetup_ - kTol;
    InnerSearch search(inst_, decided_, items, floor, deadline_);
    search.run(greedyProfit, greedyChoice);
    if (search.aborted()) {
      timedOut_ = true;
      skippedBound_ = std::max(skippedBound_, bound);
    }
    if (search.bestProfit() <= 0.0) return;
    Solution sol = assignmentToSolution(inst_, decided_, search.items(),
                                        search.bestChoice());
    submit(std::move(sol));
  }

  void dfs(int depth, double bound) {
    ++nodes_;
    checkTime();
    if (timedOut_) {
      skippedBound_ = std::max(skippedBound_, bound);
      return;
    }
    if (bound <= incumbent_.objective + kTol) return;
    if (depth == inst_.numHubs()) {
      solveLeaf(bound);
      return;
    }
    int hub = hubOrder_[depth];
    std::vector<std::pair<double, int>> children;  // (bound, choice)
    bool capReached = cfg_.maxHubs && openCount_ >= *cfg_.maxHubs;
    for (int choice = kClosed;
         choice < (capReached ? 0 : inst_.serviceLevels()); ++choice) {
      decided_[hub] = choice;
      if (choice >= 0) committedSetup_ += inst_.hub(hub).G[choice];
      double childBound = nodeBound();
      if (choice >= 0) committedSetup_ -= inst_.hub(hub).G[choice];
      decided_[hub] = kUndecided;
      children.push_back({childBound, choice});
    }
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& b) {
                       return a.first > b.first;
                     });
    for (const auto& [childBound, choice] : children) {
      if (timedOut_) {
        skippedBound_ = std::max(skippedBound_, childBound);
        continue;
      }
      if (childBound <= incumbent_.objective + kTol) continue;
      decided_[hub] = choice;
      if (choice >= 0) {
        committedSetup_ += inst_.hub(hub).G[choice];
        ++openCount_;
      }
      dfs(depth + 1, childBound);
      if (choice >= 0) {
        committedSetup_ -= inst_.hub(hub).G[choice];
        --openCount_;
      }
      decided_[hub] = kUndecided;
    }
  }

  void logLine(double bound) {
    if (!cfg_.log) return;
    *cfg_.log << nodes_ << "," << incumbent_.objective << "," << bound << ","
              << relativeGap(bound, incumbent_.objective) << "," << elapsed()
              << "\n";
  }

  const Instance& inst_;
  SolverConfig cfg_;
  std::vector<std::vector<Option>> options_;
  std::vector<int> hubOrder_;
  std::vector<double> hmin_;
  std::vector<int> decided_;
  double committedSetup_ = 0.0;
  int openCount_ = 0;
  Solution incumbent_;
  long long nodes_ = 0;
  double rootBound_ = 0.0;
  double skippedBound_ = -kInf;
  bool timedOut_ = false;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

Solution solve_exact(const Instance& inst, const FixMask& mask,
                     const SolverConfig& cfg) {
  if (cfg.timeLimit <= 0.0) throw Error("solve_exact: timeLimit must be positive");
  if (!structurally_valid(inst)) {
    Solution sol;
    sol.status = SolveStatus::InfeasibleInput;
    return sol;
  }
  if (inst.numCommodities() == 0) {
    Solution sol;
    sol.status = SolveStatus::Empty;
    return sol;
  }
  ExactSolver solver(inst, mask, cfg);
  return solver.run();
}

Solution lower_bound_greedy(const Instance& inst, const HubConfig& config) {
  std::vector<int> level(inst.numHubs(), -1);
  for (const auto& [k, l] : config.levels) {
    if (k < 0 || k >= inst.numHubs() || l < 0 || l >= inst.serviceLevels())
      throw Error("lower_bound_greedy: bad hub configuration");
    level[k] = l;
  }
  FixMask empty;
  auto all = collectOptions(inst, empty);
  auto items = makeItems(inst, level, all);
  auto [profit, choice] = greedyAssign(inst, level, items);
  Solution sol = assignmentToSolution(inst, level, items, choice);
  sol.status = SolveStatus::Feasible;
  return sol;
}

Solution solve_via_export(const Instance& inst, Formulation which,
                          const BuildOptions& opts,
                          std::string_view solutionText) {
  Solution sol;
  ImportedSolution imported;
  if (which == Formulation::F2) {
    auto [model, ix] = build_f2(inst, opts);
    imported = import_solution(solutionText, model);
    for (int k = 0; k < ix.K; ++k)
      for (int l = 0; l < ix.L; ++l)
        if (imported.values[ix.yId(k, l)] > 0.5) {
          if (sol.hubLevels.count(k))
            throw Error("decode: hub activated at two levels");
          sol.hubLevels[k] = l;
        }
    for (int c = 0; c < ix.C; ++c)
      for (int k = 0; k < ix.K; ++k)
        for (int m = 0; m < ix.K; ++m)
          for (int r = 0; r < ix.R; ++r)
            if (imported.values[ix.xId(c, k, m, r)] > 0.5) {
              if (sol.served.count(c))
                throw Error("decode: commodity served twice");
              sol.served[c] = {r, {k, m}};
            }
  } else {
    auto [model, ix] = build_f1(inst, opts);
    imported = import_solution(solutionText, model);
    for (int k = 0; k < ix.K; ++k)
      for (int l = 0; l < ix.L; ++l)
        if (imported.values[ix.yId(k, l)] > 0.5) {
          if (sol.hubLevels.count(k))
            throw Error("decode: hub activated at two levels");
          sol.hubLevels[k] = l;
        }
    for (int c = 0; c < ix.C; ++c) {
      int level = -1;
      for (int r = 0; r < ix.R; ++r)
        if (imported.values[ix.betaId(c, r)] > 0.5) {
          if (level >= 0) throw Error("decode: commodity served twice");
          level = r;
        }
      for (int k = 0; k < ix.K; ++k)
        for (int m = 0; m < ix.K; ++m)
          if (imported.values[ix.xId(c, k, m)] > 0.5) {
            if (sol.served.count(c))
              throw Error("decode: commodity routed twice");
            if (level < 0)
              throw Error("decode: route selected without a demand level");
            sol.served[c] = {level, {k, m}};
          }
    }
  }

  ValidationReport report = validate(inst, sol);
  if (!report.ok) {
    std::ostringstream os;
    os << "decode: solution infeasible:";
    for (const auto& v : report.violations)
      os << " [" << violation_rule_name(v.rule) << "] " << v.detail;
    throw Error(os.str());
  }
  finalize_totals(inst, sol);
  sol.status = SolveStatus::Feasible;
  if (imported.declaredObjective) {
    double declared = *imported.declaredObjective;
    double scale = std::max(1.0, std::abs(sol.objective));
    if (std::abs(declared - sol.objective) > 1e-4 * scale) {
      std::ostringstream os;
      os << "decode: declared objective " << declared
         << " disagrees with recomputed value " << sol.objective;
      throw Error(os.str());
    }
  }
  return sol;
}

}  // namespace hlctdp

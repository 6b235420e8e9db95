#include "hlctdp/formulations.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>

namespace hlctdp {

namespace {

std::string tag(const char* stem, std::initializer_list<int> subs) {
  std::ostringstream os;
  os << stem;
  for (int s : subs) os << '_' << s + 1;
  return os.str();
}

void checkInstance(const Instance& inst) {
  if (!structurally_valid(inst))
    throw Error("formulation: instance fails structural validation");
}

bool maskedAllLevels(const FixMask* mask, int c, int k, int m, int R) {
  if (!mask || !mask->attached()) return false;
  for (int r = 0; r < R; ++r)
    if (!mask->routeFixed(c, k, m, r)) return false;
  return true;
}

}  // namespace

const char* formulation_name(Formulation which) {
  return which == Formulation::F1 ? "f1" : "f2";
}

std::pair<Model, F1VarIndex> build_f1(const Instance& inst,
                                      const BuildOptions& opts) {
  checkInstance(inst);
  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  const int C = inst.numCommodities();
  const int R = inst.demandLevels();
  const FixMask* mask = opts.fixMask;

  Model model("hlctdp_f1");
  F1VarIndex ix;
  ix.K = K;
  ix.L = L;
  ix.C = C;
  ix.R = R;
  ix.Y.resize(static_cast<std::size_t>(K) * L);
  ix.beta.resize(static_cast<std::size_t>(C) * R);
  ix.x.resize(static_cast<std::size_t>(C) * K * K);
  ix.f.resize(static_cast<std::size_t>(C) * K * L);
  ix.s.resize(static_cast<std::size_t>(C) * K * L);
  ix.o.resize(static_cast<std::size_t>(C) * K * L);
  ix.g.resize(static_cast<std::size_t>(C) * K * K);

  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l)
      ix.Y[k * L + l] =
          model.addIndexed("Y", std::array{k, l}, VarKind::Binary, 0.0, 1.0);

  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      double ub = mask && mask->attached() && mask->betaFixed(c, r) ? 0.0 : 1.0;
      ix.beta[c * R + r] = model.addIndexed("beta", std::array{com.i, com.j, r},
                                            VarKind::Binary, 0.0, ub);
    }
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m) {
        double ub = maskedAllLevels(mask, c, k, m, R) ? 0.0 : 1.0;
        ix.x[(c * K + k) * K + m] = model.addIndexed(
            "x", std::array{com.i, com.j, k, m}, VarKind::Binary, 0.0, ub);
      }
  }
  auto addLegFamily = [&](const char* family, std::vector<int>& slot) {
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      for (int k = 0; k < K; ++k)
        for (int l = 0; l < L; ++l)
          slot[(c * K + k) * L + l] = model.addIndexed(
              family, std::array{com.i, com.j, k, l}, VarKind::Binary, 0.0, 1.0);
    }
  };
  addLegFamily("f", ix.f);
  addLegFamily("s", ix.s);
  addLegFamily("o", ix.o);
  const double inf = std::numeric_limits<double>::infinity();
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        ix.g[(c * K + k) * K + m] = model.addIndexed(
            "g", std::array{com.i, com.j, k, m}, VarKind::Continuous, 0.0, inf);
  }
  ix.totalVars = model.variableCount();

  // Objective: level revenues minus flow routing costs minus setup costs.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r)
      model.addObjectiveTerm(ix.betaId(c, r),
                             com.levels[r].q * com.levels[r].w);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        model.addObjectiveTerm(ix.gId(c, k, m),
                               -route_cost(inst, com.i, com.j, k, m));
  }
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l)
      model.addObjectiveTerm(ix.yId(k, l), -inst.hub(k).G[l]);

  // At most one service level per hub.
  for (int k = 0; k < K; ++k) {
    std::vector<Term> terms;
    for (int l = 0; l < L; ++l) terms.push_back({ix.yId(k, l), 1.0});
    model.addConstraint(tag("hub_level", {k}), std::move(terms), Sense::LessEq,
                        1.0);
  }
  // At most one demand level per commodity.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int r = 0; r < R; ++r) terms.push_back({ix.betaId(c, r), 1.0});
    model.addConstraint(tag("one_demand", {com.i, com.j}), std::move(terms),
                        Sense::LessEq, 1.0);
  }
  // A served commodity uses exactly one routing path.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int r = 0; r < R; ++r) terms.push_back({ix.betaId(c, r), 1.0});
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m) terms.push_back({ix.xId(c, k, m), -1.0});
    model.addConstraint(tag("route_choice", {com.i, com.j}), std::move(terms),
                        Sense::Equal, 0.0);
  }
  // Leg identification: first, second and only hubs of each path.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      for (int l = 0; l < L; ++l) terms.push_back({ix.fId(c, k, l), 1.0});
      for (int m = 0; m < K; ++m)
        if (m != k) terms.push_back({ix.xId(c, k, m), -1.0});
      model.addConstraint(tag("first_leg", {com.i, com.j, k}), std::move(terms),
                          Sense::Equal, 0.0);
    }
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      for (int l = 0; l < L; ++l) terms.push_back({ix.sId(c, k, l), 1.0});
      for (int m = 0; m < K; ++m)
        if (m != k) terms.push_back({ix.xId(c, m, k), -1.0});
      model.addConstraint(tag("second_leg", {com.i, com.j, k}),
                          std::move(terms), Sense::Equal, 0.0);
    }
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      for (int l = 0; l < L; ++l) terms.push_back({ix.oId(c, k, l), 1.0});
      terms.push_back({ix.xId(c, k, k), -1.0});
      model.addConstraint(tag("only_leg", {com.i, com.j, k}), std::move(terms),
                          Sense::Equal, 0.0);
    }
  }
  // Paths may only traverse open hubs.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      terms.push_back({ix.xId(c, k, k), 1.0});
      for (int m = 0; m < K; ++m)
        if (m != k) {
          terms.push_back({ix.xId(c, k, m), 1.0});
          terms.push_back({ix.xId(c, m, k), 1.0});
        }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(k, l), -1.0});
      model.addConstraint(tag("hub_open", {com.i, com.j, k}), std::move(terms),
                          Sense::LessEq, 0.0);
    }
  }
  // Leg endpoints agree with the hub's activated level.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < L; ++l)
        model.addConstraint(tag("leg_level", {com.i, com.j, k, l}),
                            {{ix.fId(c, k, l), 1.0},
                             {ix.sId(c, k, l), 1.0},
                             {ix.oId(c, k, l), 1.0},
                             {ix.yId(k, l), -1.0}},
                            Sense::LessEq, 0.0);
  }
  // Flow only on selected paths, big-M = max_r w.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    double maxW = 0.0;
    for (int r = 0; r < R; ++r) maxW = std::max(maxW, com.levels[r].w);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        model.addConstraint(
            tag("flow_link", {com.i, com.j, k, m}),
            {{ix.gId(c, k, m), 1.0}, {ix.xId(c, k, m), -maxW}}, Sense::LessEq,
            0.0);
  }
  // Total flow equals the served level's demand.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m) terms.push_back({ix.gId(c, k, m), 1.0});
    for (int r = 0; r < R; ++r)
      terms.push_back({ix.betaId(c, r), -com.levels[r].w});
    model.addConstraint(tag("flow_total", {com.i, com.j}), std::move(terms),
                        Sense::Equal, 0.0);
  }
  // Inbound flow within the capacity interval of the activated level.
  for (int k = 0; k < K; ++k) {
    std::vector<Term> flow;
    for (int c = 0; c < C; ++c) {
      flow.push_back({ix.gId(c, k, k), 1.0});
      for (int m = 0; m < K; ++m)
        if (m != k) {
          flow.push_back({ix.gId(c, k, m), 1.0});
          flow.push_back({ix.gId(c, m, k), 1.0});
        }
    }
    std::vector<Term> lower = flow;
    for (int l = 0; l < L; ++l) {
      double prevW = l == 0 ? 0.0 : inst.hub(k).W[l - 1];
      lower.push_back({ix.yId(k, l), -prevW});
    }
    std::vector<Term> upper = std::move(flow);
    for (int l = 0; l < L; ++l)
      upper.push_back({ix.yId(k, l), -inst.hub(k).W[l]});
    model.addConstraintPair(tag("cap", {k}), std::move(lower), 0.0,
                            std::move(upper), 0.0);
  }
  // Travel plus hub transit within the served level's time cap.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        terms.push_back(
            {ix.xId(c, k, m), route_time(inst, com.i, com.j, k, m)});
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < L; ++l) {
        double h = inst.hub(k).h[l];
        terms.push_back({ix.fId(c, k, l), h});
        terms.push_back({ix.sId(c, k, l), h});
        terms.push_back({ix.oId(c, k, l), h});
      }
    for (int r = 0; r < R; ++r)
      terms.push_back({ix.betaId(c, r), -com.levels[r].H});
    model.addConstraint(tag("time", {com.i, com.j}), std::move(terms),
                        Sense::LessEq, 0.0);
  }
  if (opts.includeConsistency) {
    // An origin (destination) that is itself an open hub must be the first
    // (second) hub of its own route.
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      std::vector<Term> terms;
      for (int k = 0; k < K; ++k) {
        if (k == com.i) continue;
        for (int m = 0; m < K; ++m) terms.push_back({ix.xId(c, k, m), 1.0});
      }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(com.i, l), 1.0});
      model.addConstraint(tag("orig_hub", {com.i, com.j}), std::move(terms),
                          Sense::LessEq, 1.0);
    }
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      std::vector<Term> terms;
      for (int k = 0; k < K; ++k)
        for (int m = 0; m < K; ++m) {
          if (m == com.j) continue;
          terms.push_back({ix.xId(c, k, m), 1.0});
        }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(com.j, l), 1.0});
      model.addConstraint(tag("dest_hub", {com.i, com.j}), std::move(terms),
                          Sense::LessEq, 1.0);
    }
  }
  model.freeze();
  return {std::move(model), std::move(ix)};
}

std::pair<Model, F2VarIndex> build_f2(const Instance& inst,
                                      const BuildOptions& opts) {
  checkInstance(inst);
  const int K = inst.numHubs();
  const int L = inst.serviceLevels();
  const int C = inst.numCommodities();
  const int R = inst.demandLevels();
  const FixMask* mask = opts.fixMask;

  Model model("hlctdp_f2");
  F2VarIndex ix;
  ix.K = K;
  ix.L = L;
  ix.C = C;
  ix.R = R;
  ix.Y.resize(static_cast<std::size_t>(K) * L);
  ix.beta.resize(static_cast<std::size_t>(C) * R);
  ix.x.resize(static_cast<std::size_t>(C) * K * K * R);
  ix.tbar.resize(static_cast<std::size_t>(C) * K);

  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l)
      ix.Y[k * L + l] =
          model.addIndexed("Y", std::array{k, l}, VarKind::Binary, 0.0, 1.0);
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      double ub = mask && mask->attached() && mask->betaFixed(c, r) ? 0.0 : 1.0;
      ix.beta[c * R + r] = model.addIndexed("beta", std::array{com.i, com.j, r},
                                            VarKind::Binary, 0.0, ub);
    }
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        for (int r = 0; r < R; ++r) {
          bool fixed = mask && mask->attached() && mask->routeFixed(c, k, m, r);
          ix.x[((c * K + k) * K + m) * R + r] =
              model.addIndexed("x", std::array{com.i, com.j, k, m, r},
                               VarKind::Binary, 0.0, fixed ? 0.0 : 1.0);
        }
  }
  const double inf = std::numeric_limits<double>::infinity();
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k)
      ix.tbar[c * K + k] = model.addIndexed("t", std::array{com.i, com.j, k},
                                            VarKind::Continuous, 0.0, inf);
  }
  ix.totalVars = model.variableCount();

  // Objective: net route profits minus setup costs.
  for (int c = 0; c < C; ++c)
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m)
        for (int r = 0; r < R; ++r)
          model.addObjectiveTerm(ix.xId(c, k, m, r),
                                 net_profit(inst, c, k, m, r));
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < L; ++l)
      model.addObjectiveTerm(ix.yId(k, l), -inst.hub(k).G[l]);

  for (int k = 0; k < K; ++k) {
    std::vector<Term> terms;
    for (int l = 0; l < L; ++l) terms.push_back({ix.yId(k, l), 1.0});
    model.addConstraint(tag("hub_level", {k}), std::move(terms), Sense::LessEq,
                        1.0);
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int r = 0; r < R; ++r) terms.push_back({ix.betaId(c, r), 1.0});
    model.addConstraint(tag("one_demand", {com.i, com.j}), std::move(terms),
                        Sense::LessEq, 1.0);
  }
  // Serving at level r selects exactly one route at that level.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int r = 0; r < R; ++r) {
      std::vector<Term> terms;
      terms.push_back({ix.betaId(c, r), 1.0});
      for (int k = 0; k < K; ++k)
        for (int m = 0; m < K; ++m)
          terms.push_back({ix.xId(c, k, m, r), -1.0});
      model.addConstraint(tag("route_choice", {com.i, com.j, r}),
                          std::move(terms), Sense::Equal, 0.0);
    }
  }
  // Traversed hubs must be activated.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      for (int r = 0; r < R; ++r) {
        terms.push_back({ix.xId(c, k, k, r), 1.0});
        for (int m = 0; m < K; ++m)
          if (m != k) {
            terms.push_back({ix.xId(c, k, m, r), 1.0});
            terms.push_back({ix.xId(c, m, k, r), 1.0});
          }
      }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(k, l), -1.0});
      model.addConstraint(tag("hub_open", {com.i, com.j, k}), std::move(terms),
                          Sense::LessEq, 0.0);
    }
  }
  // Capacity interval of the activated level; the lower side uses
  // W^{l-1} + 1 for levels above the first.
  for (int k = 0; k < K; ++k) {
    std::vector<Term> flow;
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      for (int r = 0; r < R; ++r) {
        double w = com.levels[r].w;
        flow.push_back({ix.xId(c, k, k, r), w});
        for (int m = 0; m < K; ++m)
          if (m != k) {
            flow.push_back({ix.xId(c, k, m, r), w});
            flow.push_back({ix.xId(c, m, k, r), w});
          }
      }
    }
    std::vector<Term> lower = flow;
    for (int l = 1; l < L; ++l)
      lower.push_back({ix.yId(k, l), -(inst.hub(k).W[l - 1] + 1.0)});
    std::vector<Term> upper = std::move(flow);
    for (int l = 0; l < L; ++l)
      upper.push_back({ix.yId(k, l), -inst.hub(k).W[l]});
    model.addConstraintPair(tag("cap", {k}), std::move(lower), 0.0,
                            std::move(upper), 0.0);
  }
  // Service time: travel plus accumulated hub transit within the cap.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    std::vector<Term> terms;
    for (int k = 0; k < K; ++k)
      for (int m = 0; m < K; ++m) {
        double T = route_time(inst, com.i, com.j, k, m);
        for (int r = 0; r < R; ++r)
          terms.push_back({ix.xId(c, k, m, r), T});
      }
    for (int k = 0; k < K; ++k) terms.push_back({ix.tbarId(c, k), 1.0});
    for (int r = 0; r < R; ++r)
      terms.push_back({ix.betaId(c, r), -com.levels[r].H});
    model.addConstraint(tag("time", {com.i, com.j}), std::move(terms),
                        Sense::LessEq, 0.0);
  }
  // Transit time at hub k: forced up to the activated level's transit when
  // the route traverses k, deactivated by h_k^{|L|} otherwise.
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      double hTop = inst.hub(k).h[L - 1];
      std::vector<Term> terms;
      terms.push_back({ix.tbarId(c, k), 1.0});
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(k, l), -inst.hub(k).h[l]});
      for (int r = 0; r < R; ++r) {
        terms.push_back({ix.xId(c, k, k, r), -hTop});
        for (int m = 0; m < K; ++m)
          if (m != k) {
            terms.push_back({ix.xId(c, k, m, r), -hTop});
            terms.push_back({ix.xId(c, m, k, r), -hTop});
          }
      }
      model.addConstraint(tag("transit_lb", {com.i, com.j, k}),
                          std::move(terms), Sense::GreaterEq, -hTop);
    }
  }
  for (int c = 0; c < C; ++c) {
    const Commodity& com = inst.commodity(c);
    for (int k = 0; k < K; ++k) {
      std::vector<Term> terms;
      terms.push_back({ix.tbarId(c, k), 1.0});
      for (int l = 0; l < L; ++l)
        terms.push_back({ix.yId(k, l), -inst.hub(k).h[l]});
      model.addConstraint(tag("transit_ub", {com.i, com.j, k}),
                          std::move(terms), Sense::LessEq, 0.0);
    }
  }
  if (opts.includeConsistency) {
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      std::vector<Term> terms;
      for (int k = 0; k < K; ++k) {
        if (k == com.i) continue;
        for (int m = 0; m < K; ++m)
          for (int r = 0; r < R; ++r)
            terms.push_back({ix.xId(c, k, m, r), 1.0});
      }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(com.i, l), 1.0});
      model.addConstraint(tag("orig_hub", {com.i, com.j}), std::move(terms),
                          Sense::LessEq, 1.0);
    }
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      std::vector<Term> terms;
      for (int k = 0; k < K; ++k)
        for (int m = 0; m < K; ++m) {
          if (m == com.j) continue;
          for (int r = 0; r < R; ++r)
            terms.push_back({ix.xId(c, k, m, r), 1.0});
        }
      for (int l = 0; l < L; ++l) terms.push_back({ix.yId(com.j, l), 1.0});
      model.addConstraint(tag("dest_hub", {com.i, com.j}), std::move(terms),
                          Sense::LessEq, 1.0);
    }
  }
  if (opts.includeValidInequality) {
    for (int c = 0; c < C; ++c) {
      const Commodity& com = inst.commodity(c);
      for (int k = 0; k < K; ++k) {
        double hMax = *std::max_element(inst.hub(k).h.begin(),
                                        inst.hub(k).h.end());
        std::vector<Term> terms;
        terms.push_back({ix.tbarId(c, k), 1.0});
        for (int r = 0; r < R; ++r) {
          terms.push_back({ix.xId(c, k, k, r), -hMax});
          for (int m = 0; m < K; ++m)
            if (m != k) {
              terms.push_back({ix.xId(c, k, m, r), -hMax});
              terms.push_back({ix.xId(c, m, k, r), -hMax});
            }
        }
        model.addConstraint(tag("transit_link", {com.i, com.j, k}),
                            std::move(terms), Sense::LessEq, 0.0);
      }
    }
  }
  model.freeze();
  return {std::move(model), std::move(ix)};
}

namespace {

void encodeHubs(const Instance& inst, const Solution& sol,
                std::vector<double>& a, const std::vector<int>& yIds, int L) {
  for (const auto& [k, l] : sol.hubLevels) {
    if (k < 0 || k >= inst.numHubs() || l < 0 || l >= L)
      throw Error("encode: hub or level index out of range");
    a[yIds[k * L + l]] = 1.0;
  }
}

void checkRouteOpen(const Solution& sol, const Route& route) {
  if (!sol.hubLevels.count(route.k) || !sol.hubLevels.count(route.m))
    throw Error("encode: route references a hub the solution does not open");
}

}  // namespace

std::vector<double> encode_solution(const Instance& inst, const Solution& sol,
                                    const F1VarIndex& ix) {
  std::vector<double> a(ix.totalVars, 0.0);
  encodeHubs(inst, sol, a, ix.Y, ix.L);
  for (const auto& [c, choice] : sol.served) {
    checkRouteOpen(sol, choice.route);
    const int k = choice.route.k, m = choice.route.m;
    a[ix.betaId(c, choice.level)] = 1.0;
    a[ix.xId(c, k, m)] = 1.0;
    a[ix.gId(c, k, m)] = inst.commodity(c).levels[choice.level].w;
    if (k == m) {
      a[ix.oId(c, k, sol.hubLevels.at(k))] = 1.0;
    } else {
      a[ix.fId(c, k, sol.hubLevels.at(k))] = 1.0;
      a[ix.sId(c, m, sol.hubLevels.at(m))] = 1.0;
    }
  }
  return a;
}

std::vector<double> encode_solution(const Instance& inst, const Solution& sol,
                                    const F2VarIndex& ix) {
  std::vector<double> a(ix.totalVars, 0.0);
  encodeHubs(inst, sol, a, ix.Y, ix.L);
  for (const auto& [c, choice] : sol.served) {
    checkRouteOpen(sol, choice.route);
    const int k = choice.route.k, m = choice.route.m;
    a[ix.betaId(c, choice.level)] = 1.0;
    a[ix.xId(c, k, m, choice.level)] = 1.0;
    a[ix.tbarId(c, k)] = inst.hub(k).h[sol.hubLevels.at(k)];
    if (m != k) a[ix.tbarId(c, m)] = inst.hub(m).h[sol.hubLevels.at(m)];
  }
  return a;
}

ModelSize model_size(int K, int C, int L, int R, Formulation which) {
  ModelSize size;
  std::size_t k = K, c = C, l = L, r = R;
  if (which == Formulation::F1) {
    size.binaries = c * k * k + 3 * c * k * l + k * l + c * r;
    size.continuous = c * k * k;
    size.constraints = 2 * k + c * (6 + 4 * k + k * l + k * k);
  } else {
    size.binaries = c * k * k * r + k * l + c * r;
    size.continuous = c * k;
    size.constraints = 2 * k + c * (4 + 3 * k + r);
  }
  return size;
}

ModelSize model_size(const Instance& inst, Formulation which) {
  return model_size(inst.numHubs(), inst.numCommodities(),
                    inst.serviceLevels(), inst.demandLevels(), which);
}

}  // namespace hlctdp

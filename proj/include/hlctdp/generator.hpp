#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hlctdp/instance.hpp"

namespace hlctdp {

// Raw CAB-style data: intercity distances and an origin/destination flow
// matrix, both cityCount x cityCount.
struct RawCab {
  int cityCount = 0;
  Matrix dist;
  Matrix flow;
};

// Scaling parameters for base-instance construction. The defaults are the
// published benchmark settings.
struct GenParams {
  double betaQ = 2.5;
  double phiLow = 0.25;
  double phiHigh = 0.35;
  double betaH = 0.4;
  double betaG = 3000.0;
  double betaHhub = 0.04;
  double betaW = 0.15;
  std::uint64_t seed = 0;
  // Pre-scaling hub setup costs, one per raw city. External data; the tests
  // use synthetic values.
  std::vector<double> hubCostBase;
};

struct DemandDeltaRow {
  double w, q, H;
};
struct ServiceDeltaRow {
  double W, G, h;
};

// Level scaling factors. Row order is Low/Med/High for demand and Med/High
// for service.
struct DeltaTable {
  DemandDeltaRow demandLow{0.6, 0.8, 1.5};
  DemandDeltaRow demandMed{1.0, 1.0, 1.0};
  DemandDeltaRow demandHigh{0.4, 3.0, 0.5};
  ServiceDeltaRow serviceMed{1.0, 1.0, 1.0};
  ServiceDeltaRow serviceHigh{2.0, 1.7, 1.25};
};

// Parses whitespace-separated distance and flow matrices. The city count may
// be declared as a leading integer or inferred from the token count.
RawCab load_cab(std::string_view text);

// Builds a single-level base instance from raw data: picks the n nodes with
// the largest total (inbound + outbound) flow, ties broken by lower city
// index, and derives revenues, time caps, hub costs, transit times and
// capacities with the GenParams scalings. gamma is set equal to alpha.
//
// phi values are drawn from mt19937_64(seed) as 53-bit uniform doubles in
// [phiLow, phiHigh], in lexicographic (i,j) commodity order, so results are
// platform-independent.
BaseInstance make_base(const RawCab& raw, int n, double alpha,
                       const GenParams& params);

// Expands a base instance into Lcount service levels and Rcount demand
// levels using the delta table. Demand level sets are Med / {Med,High} /
// {Low,Med,High} for Rcount 1/2/3; service level sets are Med / {Med,High}.
// Levels are stored sorted by increasing H (demand) and increasing W
// (service).
Instance expand(const BaseInstance& base, int Lcount, int Rcount,
                const DeltaTable& deltas = {});

// Conventional level names for reporting, matching expand()'s ordering:
// highest-revenue level first. Rcount 1 -> {Med}; 2 -> {High,Med};
// 3 -> {High,Med,Low}.
std::vector<std::string> demand_level_names(int Rcount);

}  // namespace hlctdp

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlctdp {

// Base error for everything the library throws on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed file contents (CAB text, JSON, MPS, solution files).
struct ParseError : Error {
  using Error::Error;
};

// Enumeration size guard tripped (oracle refusing oversized inputs).
struct SizeError : Error {
  using Error::Error;
};

// Dense square matrix of doubles, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n, double fill = 0.0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }
  double operator()(int i, int j) const {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  double& operator()(int i, int j) {
    return data_[static_cast<std::size_t>(i) * n_ + j];
  }
  const std::vector<double>& raw() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  int n_ = 0;
  std::vector<double> data_;
};

// One demand level of a commodity: amount shipped, unit revenue, and the
// service-time cap that applies when that level is selected.
struct DemandLevel {
  double w = 0.0;
  double q = 0.0;
  double H = 0.0;

  bool operator==(const DemandLevel&) const = default;
};

struct Commodity {
  int i = 0;
  int j = 0;
  std::vector<DemandLevel> levels;  // sorted by increasing H

  bool operator==(const Commodity&) const = default;
};

// Per-hub service-level data, all vectors of length L.
// Level l covers inbound flow in (W[l-1], W[l]], with W[-1] taken as 0.
struct HubData {
  std::vector<double> W;  // capacity, strictly increasing
  std::vector<double> G;  // setup cost
  std::vector<double> h;  // transit time, nondecreasing

  bool operator==(const HubData&) const = default;
};

// Single-level instance as produced from raw CAB-style data, before
// expansion into demand/service levels.
struct BaseInstance {
  int n = 0;
  double alpha = 0.0;
  double gamma = 0.0;
  Matrix dist;
  Matrix cost;  // == dist
  Matrix time;  // == dist
  Matrix demand;
  Matrix revenue;
  Matrix maxTime;
  std::vector<double> hubCost;
  std::vector<double> hubTransit;
  std::vector<double> hubCap;
  std::vector<int> cityIds;  // original city index of each node

  bool operator==(const BaseInstance&) const = default;
};

// Full multi-level problem data. Immutable after construction; every node is
// a potential hub. Node and level indices are 0-based here and 1-based in all
// file formats and reports.
class Instance {
 public:
  Instance() = default;
  Instance(int n, double alpha, double gamma, Matrix cost, Matrix time,
           std::vector<HubData> hubs, std::vector<Commodity> commodities);

  int n() const { return n_; }
  int numHubs() const { return n_; }                       // |K|
  int serviceLevels() const { return L_; }                 // |L|
  int demandLevels() const { return R_; }                  // |R|
  int numCommodities() const { return static_cast<int>(commodities_.size()); }

  double alpha() const { return alpha_; }
  double gamma() const { return gamma_; }
  const Matrix& cost() const { return cost_; }
  const Matrix& time() const { return time_; }
  const std::vector<HubData>& hubs() const { return hubs_; }
  const HubData& hub(int k) const { return hubs_[k]; }
  const std::vector<Commodity>& commodities() const { return commodities_; }
  const Commodity& commodity(int c) const { return commodities_[c]; }

  // Index of commodity (i,j), or -1 when the pair carries no demand.
  int commodityIndex(int i, int j) const {
    return pairToCommodity_[static_cast<std::size_t>(i) * n_ + j];
  }

 private:
  int n_ = 0;
  int L_ = 0;
  int R_ = 0;
  double alpha_ = 0.0;
  double gamma_ = 0.0;
  Matrix cost_;
  Matrix time_;
  std::vector<HubData> hubs_;
  std::vector<Commodity> commodities_;
  std::vector<int> pairToCommodity_;
};

// Identifies one routing variable: commodity (i,j) served at demand level r
// through first hub k and second hub m (k == m is the single-hub route).
struct RouteKey {
  int i = 0;
  int j = 0;
  int k = 0;
  int m = 0;
  int r = 0;

  auto operator<=>(const RouteKey&) const = default;
};

// C_ijkm = c_ik + alpha*c_km + c_mj. The middle term vanishes for k == m
// because the cost matrix has a zero diagonal.
double route_cost(const Instance& inst, int i, int j, int k, int m);

// T_ijkm = t_ik + gamma*t_km + t_mj. Hub transit times are not included.
double route_time(const Instance& inst, int i, int j, int k, int m);

// Net profit w*(q - C) of serving commodity (i,j) at demand level r via
// hubs k,m. (i,j) must be a listed commodity.
double net_profit(const Instance& inst, int i, int j, int k, int m, int r);
double net_profit(const Instance& inst, int c, int k, int m, int r);

// Smallest transit time over the service levels of hub k.
double min_transit(const Instance& inst, int k);

struct InstanceViolation {
  // A1/A2/A3 or the violated structural rule (monotonicity, symmetry, ...).
  std::string rule;
  std::string detail;
  // Structural violations make the instance unusable; A1-A3 violations only
  // trigger extra variable fixings in preprocessing.
  bool structural = false;
};

// Checks the type invariants plus assumptions A1-A3. Violations are data,
// not failures; an empty result means the instance is fully clean.
std::vector<InstanceViolation> validate_instance(const Instance& inst);

// True when no structural violation is present (A1-A3 may still fire).
bool structurally_valid(const Instance& inst);

}  // namespace hlctdp

#include "hlctdp/instance.hpp"

#include <cmath>
#include <sstream>

namespace hlctdp {

namespace {

constexpr double kTol = 1e-9;

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(msg);
}

std::string pos(int i, int j) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << ")";
  return os.str();
}

}  // namespace

Instance::Instance(int n, double alpha, double gamma, Matrix cost, Matrix time,
                   std::vector<HubData> hubs, std::vector<Commodity> commodities)
    : n_(n),
      alpha_(alpha),
      gamma_(gamma),
      cost_(std::move(cost)),
      time_(std::move(time)),
      hubs_(std::move(hubs)),
      commodities_(std::move(commodities)) {
  require(n_ > 0, "instance: node count must be positive");
  require(cost_.size() == n_ && time_.size() == n_,
          "instance: cost/time matrices must be n x n");
  require(static_cast<int>(hubs_.size()) == n_,
          "instance: expected one hub record per node");
  L_ = hubs_.empty() ? 0 : static_cast<int>(hubs_[0].W.size());
  require(L_ >= 1, "instance: at least one service level required");
  for (const auto& hub : hubs_) {
    require(static_cast<int>(hub.W.size()) == L_ &&
                static_cast<int>(hub.G.size()) == L_ &&
                static_cast<int>(hub.h.size()) == L_,
            "instance: ragged hub level data");
  }
  R_ = commodities_.empty() ? 1 : static_cast<int>(commodities_[0].levels.size());
  pairToCommodity_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int c = 0; c < static_cast<int>(commodities_.size()); ++c) {
    const Commodity& com = commodities_[c];
    require(com.i >= 0 && com.i < n_ && com.j >= 0 && com.j < n_,
            "instance: commodity endpoint out of range");
    require(com.i != com.j, "instance: commodity with i == j");
    require(static_cast<int>(com.levels.size()) == R_,
            "instance: ragged commodity level data");
    std::size_t key = static_cast<std::size_t>(com.i) * n_ + com.j;
    require(pairToCommodity_[key] == -1, "instance: duplicate commodity");
    pairToCommodity_[key] = c;
  }
}

double route_cost(const Instance& inst, int i, int j, int k, int m) {
  const int n = inst.n();
  if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n || m < 0 || m >= n)
    throw Error("route_cost: index out of range");
  const Matrix& c = inst.cost();
  return c(i, k) + inst.alpha() * c(k, m) + c(m, j);
}

double route_time(const Instance& inst, int i, int j, int k, int m) {
  const int n = inst.n();
  if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n || m < 0 || m >= n)
    throw Error("route_time: index out of range");
  const Matrix& t = inst.time();
  return t(i, k) + inst.gamma() * t(k, m) + t(m, j);
}

double net_profit(const Instance& inst, int i, int j, int k, int m, int r) {
  int c = inst.commodityIndex(i, j);
  if (c < 0) throw Error("net_profit: (i,j) is not a commodity");
  return net_profit(inst, c, k, m, r);
}

double net_profit(const Instance& inst, int c, int k, int m, int r) {
  if (c < 0 || c >= inst.numCommodities() || r < 0 || r >= inst.demandLevels())
    throw Error("net_profit: index out of range");
  const Commodity& com = inst.commodity(c);
  const DemandLevel& lvl = com.levels[r];
  return lvl.w * (lvl.q - route_cost(inst, com.i, com.j, k, m));
}

double min_transit(const Instance& inst, int k) {
  const HubData& hub = inst.hub(k);
  double best = hub.h[0];
  for (double v : hub.h) best = std::min(best, v);
  return best;
}

std::vector<InstanceViolation> validate_instance(const Instance& inst) {
  std::vector<InstanceViolation> out;
  auto add = [&](const std::string& rule, const std::string& detail,
                 bool structural) {
    out.push_back({rule, detail, structural});
  };

  const int n = inst.n();
  const Matrix& c = inst.cost();
  const Matrix& t = inst.time();
  for (int i = 0; i < n; ++i) {
    if (std::abs(c(i, i)) > kTol)
      add("diagonal", "cost" + pos(i, i) + " must be zero", true);
    if (std::abs(t(i, i)) > kTol)
      add("diagonal", "time" + pos(i, i) + " must be zero", true);
    for (int j = 0; j < n; ++j) {
      if (c(i, j) < 0.0)
        add("negative", "cost" + pos(i, j) + " is negative", true);
      if (t(i, j) < 0.0)
        add("negative", "time" + pos(i, j) + " is negative", true);
      if (j > i) {
        if (std::abs(c(i, j) - c(j, i)) > kTol)
          add("symmetry", "cost" + pos(i, j) + " != cost" + pos(j, i), true);
        if (std::abs(t(i, j) - t(j, i)) > kTol)
          add("symmetry", "time" + pos(i, j) + " != time" + pos(j, i), true);
      }
    }
  }
  if (inst.alpha() < 0.0 || inst.alpha() > 1.0)
    add("discount", "alpha outside [0,1]", true);
  if (inst.gamma() < 0.0 || inst.gamma() > 1.0)
    add("discount", "gamma outside [0,1]", true);

  const int L = inst.serviceLevels();
  for (int k = 0; k < n; ++k) {
    const HubData& hub = inst.hub(k);
    double prevW = 0.0;  // implicit W^0 = 0
    for (int l = 0; l < L; ++l) {
      if (hub.W[l] <= prevW + kTol) {
        std::ostringstream os;
        os << "hub " << k + 1 << ": W not strictly increasing at level "
           << l + 1;
        add("W-monotonic", os.str(), true);
      }
      prevW = hub.W[l];
      if (hub.G[l] < 0.0)
        add("negative", "hub " + std::to_string(k + 1) + ": negative setup cost",
            true);
      if (hub.h[l] < 0.0)
        add("negative",
            "hub " + std::to_string(k + 1) + ": negative transit time", true);
      if (l > 0 && hub.h[l] < hub.h[l - 1] - kTol) {
        std::ostringstream os;
        os << "hub " << k + 1 << ": h decreasing at level " << l + 1;
        add("h-monotonic", os.str(), true);
      }
    }
  }

  // Largest capacity over all hubs, for A3.
  double maxCap = 0.0;
  for (int k = 0; k < n; ++k) maxCap = std::max(maxCap, inst.hub(k).W[L - 1]);

  const int R = inst.demandLevels();
  for (int ci = 0; ci < inst.numCommodities(); ++ci) {
    const Commodity& com = inst.commodity(ci);
    double prevH = 0.0;  // implicit H^0 = 0
    for (int r = 0; r < R; ++r) {
      const DemandLevel& lvl = com.levels[r];
      if (lvl.H <= prevH + kTol) {
        std::ostringstream os;
        os << "commodity " << pos(com.i, com.j)
           << ": H not strictly increasing at level " << r + 1;
        add("H-monotonic", os.str(), true);
      }
      prevH = lvl.H;
      if (r > 0 && lvl.q > com.levels[r - 1].q + kTol) {
        std::ostringstream os;
        os << "commodity " << pos(com.i, com.j)
           << ": q increasing with H at level " << r + 1;
        add("q-monotonic", os.str(), true);
      }
      if (lvl.q < 0.0)
        add("negative", "commodity " + pos(com.i, com.j) + ": negative revenue",
            true);
      if (lvl.w < 0.0)
        add("negative", "commodity " + pos(com.i, com.j) + ": negative demand",
            true);
      if (lvl.w <= 0.0) {
        std::ostringstream os;
        os << "commodity " << pos(com.i, com.j) << " level " << r + 1
           << ": demand not positive";
        add("A1", os.str(), false);
      }
      for (int k = 0; k < n; ++k) {
        if (lvl.w > inst.hub(k).W[L - 1] + kTol) {
          std::ostringstream os;
          os << "commodity " << pos(com.i, com.j) << " level " << r + 1
             << ": demand exceeds top capacity of hub " << k + 1;
          add("A2", os.str(), false);
        }
      }
      if (lvl.w > maxCap + kTol) {
        std::ostringstream os;
        os << "commodity " << pos(com.i, com.j) << " level " << r + 1
           << ": demand exceeds every hub's top capacity";
        add("A3", os.str(), false);
      }
    }
  }
  return out;
}

bool structurally_valid(const Instance& inst) {
  for (const auto& v : validate_instance(inst))
    if (v.structural) return false;
  return true;
}

}  // namespace hlctdp

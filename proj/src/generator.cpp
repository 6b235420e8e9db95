#include "hlctdp/generator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace hlctdp {

namespace {

struct Token {
  double value;
  int line;
  int col;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
      continue;
    }
    std::size_t start = i;
    int startCol = col;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++col;
    }
    std::string word(text.substr(start, i - start));
    try {
      std::size_t used = 0;
      double v = std::stod(word, &used);
      if (used != word.size()) throw std::invalid_argument(word);
      tokens.push_back({v, line, startCol});
    } catch (const std::exception&) {
      std::ostringstream os;
      os << "cab: non-numeric token '" << word << "' at line " << line
         << ", column " << startCol;
      throw ParseError(os.str());
    }
  }
  return tokens;
}

Matrix fillMatrix(const std::vector<Token>& tokens, std::size_t offset, int n,
                  const char* what) {
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Token& tok = tokens[offset + static_cast<std::size_t>(i) * n + j];
      if (tok.value < 0.0) {
        std::ostringstream os;
        os << "cab: negative " << what << " entry (" << i + 1 << "," << j + 1
           << ") at line " << tok.line << ", column " << tok.col;
        throw ParseError(os.str());
      }
      m(i, j) = tok.value;
    }
  }
  return m;
}

// Portable uniform double in [lo, hi] from the top 53 bits of the generator.
double uniform53(std::mt19937_64& rng, double lo, double hi) {
  double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

}  // namespace

RawCab load_cab(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("cab: empty input");

  auto isSquarePair = [](std::size_t count, int& n) {
    double root = std::sqrt(static_cast<double>(count) / 2.0);
    n = static_cast<int>(std::lround(root));
    return n > 0 && 2 * static_cast<std::size_t>(n) * n == count;
  };

  int n = 0;
  std::size_t offset = 0;
  double first = tokens[0].value;
  int declared = static_cast<int>(std::lround(first));
  if (declared > 0 && first == static_cast<double>(declared) &&
      tokens.size() - 1 == 2 * static_cast<std::size_t>(declared) * declared) {
    n = declared;
    offset = 1;
  } else if (!isSquarePair(tokens.size(), n)) {
    std::ostringstream os;
    os << "cab: token count " << tokens.size()
       << " does not form two square matrices (with or without a leading "
          "dimension)";
    throw ParseError(os.str());
  }

  RawCab raw;
  raw.cityCount = n;
  raw.dist = fillMatrix(tokens, offset, n, "distance");
  raw.flow = fillMatrix(tokens, offset + static_cast<std::size_t>(n) * n, n,
                        "flow");
  return raw;
}

BaseInstance make_base(const RawCab& raw, int n, double alpha,
                       const GenParams& params) {
  if (n < 2 || n > raw.cityCount) {
    std::ostringstream os;
    os << "make_base: n must be in [2," << raw.cityCount << "], got " << n;
    throw Error(os.str());
  }
  if (static_cast<int>(params.hubCostBase.size()) < raw.cityCount)
    throw Error("make_base: hubCostBase must cover every raw city");
  for (int i = 0; i < raw.cityCount; ++i)
    for (int j = i + 1; j < raw.cityCount; ++j)
      if (std::abs(raw.dist(i, j) - raw.dist(j, i)) > 1e-9)
        throw Error("make_base: distance matrix is not symmetric");

  // Total demand = outbound + inbound flow; ties broken by lower city index.
  std::vector<int> order(raw.cityCount);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> score(raw.cityCount, 0.0);
  for (int i = 0; i < raw.cityCount; ++i)
    for (int j = 0; j < raw.cityCount; ++j)
      score[i] += raw.flow(i, j) + raw.flow(j, i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return score[a] > score[b];
    return a < b;
  });
  std::vector<int> selected(order.begin(), order.begin() + n);
  std::sort(selected.begin(), selected.end());

  BaseInstance base;
  base.n = n;
  base.alpha = alpha;
  base.gamma = alpha;
  base.cityIds = selected;
  base.dist = Matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      base.dist(i, j) = raw.dist(selected[i], selected[j]);
  base.cost = base.dist;
  base.time = base.dist;
  base.demand = Matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      base.demand(i, j) = i == j ? 0.0 : raw.flow(selected[i], selected[j]);

  const double numArcs = static_cast<double>(n) * n - n;  // |A|
  const Matrix& c = base.cost;
  const Matrix& t = base.time;

  // q~_ij = (phi_ij * betaQ / |A|) * sum_{(k,m) in A} C_ijkm, phi drawn in
  // lexicographic (i,j) order.
  std::mt19937_64 rng(params.seed);
  base.revenue = Matrix(n);
  base.maxTime = Matrix(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double phi = uniform53(rng, params.phiLow, params.phiHigh);
      double sumC = 0.0, sumT = 0.0;
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          if (k == m) continue;
          sumC += c(i, k) + alpha * c(k, m) + c(m, j);
          sumT += t(i, k) + alpha * t(k, m) + t(m, j);
        }
      }
      base.revenue(i, j) = phi * params.betaQ / numArcs * sumC;
      base.maxTime(i, j) = params.betaH / numArcs * sumT;
    }
  }

  // h~ is a single network-wide value: the betaHhub-scaled mean access plus
  // distribution time over all hubs and commodities.
  double sumAccess = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) sumAccess += t(i, k) + t(k, j);
  double transit = params.betaHhub * sumAccess / (static_cast<double>(n) * numArcs);

  double totalDemand = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) totalDemand += base.demand(i, j);
  double cap = params.betaW * totalDemand;

  base.hubCost.resize(n);
  base.hubTransit.assign(n, transit);
  base.hubCap.assign(n, cap);
  for (int k = 0; k < n; ++k)
    base.hubCost[k] = params.betaG * params.hubCostBase[selected[k]];
  return base;
}

Instance expand(const BaseInstance& base, int Lcount, int Rcount,
                const DeltaTable& deltas) {
  if (Lcount < 1 || Lcount > 2)
    throw Error("expand: service level count must be 1 or 2");
  if (Rcount < 1 || Rcount > 3)
    throw Error("expand: demand level count must be between 1 and 3");

  // Demand rows selected per Rcount, then sorted by increasing H. High
  // revenue has the smallest H factor, so it always comes first.
  std::vector<DemandDeltaRow> demandRows;
  switch (Rcount) {
    case 1: demandRows = {deltas.demandMed}; break;
    case 2: demandRows = {deltas.demandMed, deltas.demandHigh}; break;
    default:
      demandRows = {deltas.demandLow, deltas.demandMed, deltas.demandHigh};
  }
  std::stable_sort(demandRows.begin(), demandRows.end(),
                   [](const DemandDeltaRow& a, const DemandDeltaRow& b) {
                     return a.H < b.H;
                   });

  std::vector<ServiceDeltaRow> serviceRows = {deltas.serviceMed};
  if (Lcount == 2) serviceRows.push_back(deltas.serviceHigh);
  std::stable_sort(serviceRows.begin(), serviceRows.end(),
                   [](const ServiceDeltaRow& a, const ServiceDeltaRow& b) {
                     return a.W < b.W;
                   });

  const int n = base.n;
  std::vector<HubData> hubs(n);
  for (int k = 0; k < n; ++k) {
    for (const ServiceDeltaRow& row : serviceRows) {
      hubs[k].W.push_back(row.W * base.hubCap[k]);
      hubs[k].G.push_back(row.G * base.hubCost[k]);
      hubs[k].h.push_back(row.h * base.hubTransit[k]);
    }
  }

  std::vector<Commodity> commodities;
  commodities.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Commodity com;
      com.i = i;
      com.j = j;
      for (const DemandDeltaRow& row : demandRows) {
        com.levels.push_back({row.w * base.demand(i, j),
                              row.q * base.revenue(i, j),
                              row.H * base.maxTime(i, j)});
      }
      commodities.push_back(std::move(com));
    }
  }

  return Instance(n, base.alpha, base.gamma, base.cost, base.time,
                  std::move(hubs), std::move(commodities));
}

std::vector<std::string> demand_level_names(int Rcount) {
  switch (Rcount) {
    case 1: return {"Med"};
    case 2: return {"High", "Med"};
    default: return {"High", "Med", "Low"};
  }
}

}  // namespace hlctdp

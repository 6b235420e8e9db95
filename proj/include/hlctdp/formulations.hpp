#pragma once

#include <utility>
#include <vector>

#include "hlctdp/instance.hpp"
#include "hlctdp/milp.hpp"
#include "hlctdp/preprocess.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp {

enum class Formulation { F1, F2 };

const char* formulation_name(Formulation which);

struct BuildOptions {
  bool includeConsistency = true;
  // F2 only: transit-time linking cuts that may tighten the LP relaxation.
  bool includeValidInequality = false;
  // Variables fixed by the mask are created with upper bound 0; structural
  // counts are unaffected.
  const FixMask* fixMask = nullptr;
};

// Variable ids of the 4-index formulation, dense over the structural index
// space. Routing is by commodity c with hub pair (k,m); f/s/o mark the
// first/second/only hub of the path at a given service level, g carries the
// routed flow.
struct F1VarIndex {
  int K = 0, L = 0, C = 0, R = 0;
  std::vector<int> Y;     // [k][l]
  std::vector<int> beta;  // [c][r]
  std::vector<int> x;     // [c][k][m]
  std::vector<int> f;     // [c][k][l]
  std::vector<int> s;     // [c][k][l]
  std::vector<int> o;     // [c][k][l]
  std::vector<int> g;     // [c][k][m]
  std::size_t totalVars = 0;

  int yId(int k, int l) const { return Y[k * L + l]; }
  int betaId(int c, int r) const { return beta[c * R + r]; }
  int xId(int c, int k, int m) const { return x[(c * K + k) * K + m]; }
  int fId(int c, int k, int l) const { return f[(c * K + k) * L + l]; }
  int sId(int c, int k, int l) const { return s[(c * K + k) * L + l]; }
  int oId(int c, int k, int l) const { return o[(c * K + k) * L + l]; }
  int gId(int c, int k, int m) const { return g[(c * K + k) * K + m]; }
};

// Variable ids of the 5-index formulation: routing variables carry the
// demand level, tbar tracks the transit time spent at each hub.
struct F2VarIndex {
  int K = 0, L = 0, C = 0, R = 0;
  std::vector<int> Y;     // [k][l]
  std::vector<int> beta;  // [c][r]
  std::vector<int> x;     // [c][k][m][r]
  std::vector<int> tbar;  // [c][k]
  std::size_t totalVars = 0;

  int yId(int k, int l) const { return Y[k * L + l]; }
  int betaId(int c, int r) const { return beta[c * R + r]; }
  int xId(int c, int k, int m, int r) const {
    return x[((c * K + k) * K + m) * R + r];
  }
  int tbarId(int c, int k) const { return tbar[c * K + k]; }
};

std::pair<Model, F1VarIndex> build_f1(const Instance& inst,
                                      const BuildOptions& opts = {});
std::pair<Model, F2VarIndex> build_f2(const Instance& inst,
                                      const BuildOptions& opts = {});

// Maps a combinatorial solution onto a full variable assignment of the
// corresponding model. Throws when a route references a hub the solution
// does not open.
std::vector<double> encode_solution(const Instance& inst, const Solution& sol,
                                    const F1VarIndex& index);
std::vector<double> encode_solution(const Instance& inst, const Solution& sol,
                                    const F2VarIndex& index);

struct ModelSize {
  std::size_t binaries = 0;
  std::size_t continuous = 0;
  std::size_t constraints = 0;
};

// Closed-form structural counts from the instance dimensions (consistency
// constraints included, valid inequality and fixing masks ignored).
ModelSize model_size(int K, int C, int L, int R, Formulation which);
ModelSize model_size(const Instance& inst, Formulation which);

}  // namespace hlctdp

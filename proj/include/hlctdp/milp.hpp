#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hlctdp/instance.hpp"

namespace hlctdp {

enum class VarKind { Binary, Continuous };
enum class Sense { LessEq, Equal, GreaterEq };

struct Variable {
  int id = 0;
  std::string name;
  VarKind kind = VarKind::Continuous;
  double lower = 0.0;
  double upper = 0.0;
};

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;  // sorted by variable id, coefficients aggregated
  Sense sense = Sense::LessEq;
  double rhs = 0.0;
};

// Solver-agnostic maximization MILP. Rows are single-sense; a two-sided
// source constraint (interval capacity) is stored as a lower/upper row pair
// and counted as one constraint, matching how such constraints are counted
// in closed-form model-size formulas. Immutable once frozen.
class Model {
 public:
  explicit Model(std::string name = "model") : name_(std::move(name)) {}

  int addVariable(std::string name, VarKind kind, double lower, double upper);
  // Adds a variable registered in the family index; the name is
  // "<family>_<s1>_<s2>..." with 1-based subscripts.
  int addIndexed(const std::string& family, std::span<const int> subs,
                 VarKind kind, double lower, double upper);

  void addConstraint(std::string name, std::vector<Term> terms, Sense sense,
                     double rhs);
  // Lower and upper rows of one two-sided constraint; contributes two rows
  // but a single unit to constraintCount().
  void addConstraintPair(std::string name, std::vector<Term> lowerTerms,
                         double lowerRhs, std::vector<Term> upperTerms,
                         double upperRhs);

  void addObjectiveTerm(int var, double coef);
  void setObjectiveConstant(double c) { objConstant_ = c; }
  void freeze() { frozen_ = true; }

  const std::string& name() const { return name_; }
  const std::vector<Variable>& variables() const { return vars_; }
  const std::vector<Constraint>& rows() const { return rows_; }
  double objectiveCoef(int var) const { return objCoef_[var]; }
  double objectiveConstant() const { return objConstant_; }

  std::size_t variableCount() const { return vars_.size(); }
  std::size_t binaryCount() const { return binCount_; }
  std::size_t continuousCount() const { return vars_.size() - binCount_; }
  std::size_t rowCount() const { return rows_.size(); }
  // Paper-level constraint count: row pairs from two-sided constraints
  // count once.
  std::size_t constraintCount() const { return rows_.size() - pairedRows_; }
  std::size_t pairedRowCount() const { return pairedRows_; }
  void setPairedRows(std::size_t pairs) { pairedRows_ = pairs; }

  std::optional<int> findVariable(std::string_view name) const;
  std::optional<int> lookup(const std::string& family,
                            std::span<const int> subs) const;
  // Clamps the variable's upper bound (used to apply fixing masks).
  void restrictUpper(int var, double upper);

  const std::map<std::string, std::map<std::vector<int>, int>>& varIndex()
      const {
    return index_;
  }
  void registerIndexed(const std::string& family, std::vector<int> subs,
                       int var);

 private:
  void checkMutable() const;

  std::string name_;
  std::vector<Variable> vars_;
  std::vector<Constraint> rows_;
  std::vector<double> objCoef_;
  double objConstant_ = 0.0;
  std::size_t binCount_ = 0;
  std::size_t pairedRows_ = 0;
  bool frozen_ = false;
  std::map<std::string, int> byName_;
  std::map<std::string, std::map<std::vector<int>, int>> index_;
};

struct RowViolation {
  int row = 0;
  double residual = 0.0;
};
struct BoundViolation {
  int var = 0;
  double residual = 0.0;
};

struct EvalResult {
  double objective = 0.0;
  std::vector<RowViolation> rowViolations;
  std::vector<BoundViolation> boundViolations;

  bool feasible() const {
    return rowViolations.empty() && boundViolations.empty();
  }
};

// Objective value and all constraint/bound residuals above tol for a full
// assignment (one value per variable, in id order).
EvalResult evaluate(const Model& model, std::span<const double> assignment,
                    double tol = 1e-6);

// Renamings applied by the MPS writer when a name had to be truncated or
// uniquified; empty for the short names generated by the formulations.
struct NameMap {
  std::map<std::string, std::string> modelToMps;
};

// Free-form MPS text with OBJSENSE MAX, binaries inside INTORG/INTEND
// markers, rows and columns in declaration order. Coefficients are printed
// with 17 significant digits so a round trip is value-exact.
std::string export_mps(const Model& model, NameMap* nameMap = nullptr);

// Parses MPS produced by export_mps. The family index is rebuilt from the
// variable names.
Model parse_mps(std::string_view text);

struct ImportedSolution {
  std::vector<double> values;  // dense, defaults to 0
  std::optional<double> declaredObjective;
  std::vector<std::string> warnings;
};

// Reads "<variableName> <value>" lines; '#' starts a comment, "=obj=" lines
// declare the solver's objective value, unknown names produce warnings.
ImportedSolution import_solution(std::string_view text, const Model& model);

}  // namespace hlctdp

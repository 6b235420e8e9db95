#include "hlctdp/milp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace hlctdp {

namespace {

std::vector<Term> aggregate(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().var == t.var)
      out.back().coef += t.coef;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0.0; });
  return out;
}

}  // namespace

void Model::checkMutable() const {
  if (frozen_) throw Error("model: frozen, no further edits allowed");
}

int Model::addVariable(std::string name, VarKind kind, double lower,
                       double upper) {
  checkMutable();
  if (byName_.count(name)) throw Error("model: duplicate variable name " + name);
  if (kind == VarKind::Binary && (lower < 0.0 || upper > 1.0))
    throw Error("model: binary variable bounds must lie in [0,1]");
  int id = static_cast<int>(vars_.size());
  byName_.emplace(name, id);
  vars_.push_back({id, std::move(name), kind, lower, upper});
  objCoef_.push_back(0.0);
  if (kind == VarKind::Binary) ++binCount_;
  return id;
}

int Model::addIndexed(const std::string& family, std::span<const int> subs,
                      VarKind kind, double lower, double upper) {
  std::ostringstream os;
  os << family;
  for (int s : subs) os << '_' << s + 1;
  int id = addVariable(os.str(), kind, lower, upper);
  registerIndexed(family, std::vector<int>(subs.begin(), subs.end()), id);
  return id;
}

void Model::registerIndexed(const std::string& family, std::vector<int> subs,
                            int var) {
  auto [it, inserted] = index_[family].emplace(std::move(subs), var);
  if (!inserted) throw Error("model: duplicate index entry in family " + family);
}

void Model::addConstraint(std::string name, std::vector<Term> terms,
                          Sense sense, double rhs) {
  checkMutable();
  std::vector<Term> agg = aggregate(std::move(terms));
  for (const Term& t : agg)
    if (t.var < 0 || t.var >= static_cast<int>(vars_.size()))
      throw Error("model: constraint references unknown variable");
  rows_.push_back({std::move(name), std::move(agg), sense, rhs});
}

void Model::addConstraintPair(std::string name, std::vector<Term> lowerTerms,
                              double lowerRhs, std::vector<Term> upperTerms,
                              double upperRhs) {
  addConstraint(name + "_lo", std::move(lowerTerms), Sense::GreaterEq, lowerRhs);
  addConstraint(name + "_hi", std::move(upperTerms), Sense::LessEq, upperRhs);
  ++pairedRows_;
}

void Model::addObjectiveTerm(int var, double coef) {
  checkMutable();
  if (var < 0 || var >= static_cast<int>(vars_.size()))
    throw Error("model: objective references unknown variable");
  objCoef_[var] += coef;
}

std::optional<int> Model::findVariable(std::string_view name) const {
  auto it = byName_.find(std::string(name));
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Model::lookup(const std::string& family,
                                 std::span<const int> subs) const {
  auto fam = index_.find(family);
  if (fam == index_.end()) return std::nullopt;
  auto it = fam->second.find(std::vector<int>(subs.begin(), subs.end()));
  if (it == fam->second.end()) return std::nullopt;
  return it->second;
}

void Model::restrictUpper(int var, double upper) {
  checkMutable();
  vars_[var].upper = std::min(vars_[var].upper, upper);
}

EvalResult evaluate(const Model& model, std::span<const double> assignment,
                    double tol) {
  if (assignment.size() != model.variableCount())
    throw Error("evaluate: assignment must cover every variable");

  EvalResult res;
  res.objective = model.objectiveConstant();
  for (std::size_t v = 0; v < model.variableCount(); ++v)
    res.objective += model.objectiveCoef(static_cast<int>(v)) * assignment[v];

  const auto& rows = model.rows();
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const Constraint& row = rows[r];
    double lhs = 0.0;
    for (const Term& t : row.terms) lhs += t.coef * assignment[t.var];
    double residual = 0.0;
    switch (row.sense) {
      case Sense::LessEq: residual = lhs - row.rhs; break;
      case Sense::GreaterEq: residual = row.rhs - lhs; break;
      case Sense::Equal: residual = std::abs(lhs - row.rhs); break;
    }
    if (residual > tol) res.rowViolations.push_back({r, residual});
  }
  for (const Variable& v : model.variables()) {
    double x = assignment[v.id];
    double residual = std::max(v.lower - x, x - v.upper);
    if (residual > tol) res.boundViolations.push_back({v.id, residual});
  }
  return res;
}

// ---------------------------------------------------------------------------
// MPS writer / reader
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kMaxName = 255;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class NameTable {
 public:
  // Returns the emitted name, truncating and uniquifying when needed.
  std::string intern(const std::string& name, NameMap* map) {
    std::string out = name;
    if (out.size() > kMaxName) out.resize(kMaxName - 8);
    int suffix = 0;
    while (used_.count(out)) {
      std::ostringstream os;
      os << name.substr(0, kMaxName - 12) << "~" << ++suffix;
      out = os.str();
    }
    used_.insert(out);
    if (out != name && map) map->modelToMps[name] = out;
    return out;
  }

 private:
  std::set<std::string> used_;
};

}  // namespace

std::string export_mps(const Model& model, NameMap* nameMap) {
  std::ostringstream os;
  NameTable names;
  os << "NAME          " << model.name() << "\n";
  os << "OBJSENSE\n    MAX\n";
  os << "ROWS\n";
  os << " N  OBJ\n";
  std::vector<std::string> rowNames;
  rowNames.reserve(model.rowCount());
  for (const Constraint& row : model.rows()) {
    char sense = row.sense == Sense::LessEq   ? 'L'
                 : row.sense == Sense::Equal ? 'E'
                                             : 'G';
    rowNames.push_back(names.intern(row.name, nameMap));
    os << " " << sense << "  " << rowNames.back() << "\n";
  }

  // COLUMNS is column-major: gather each variable's row entries first.
  std::vector<std::vector<std::pair<int, double>>> colEntries(
      model.variableCount());
  for (int r = 0; r < static_cast<int>(model.rowCount()); ++r)
    for (const Term& t : model.rows()[r].terms)
      colEntries[t.var].push_back({r, t.coef});

  std::vector<std::string> colNames;
  colNames.reserve(model.variableCount());
  for (const Variable& v : model.variables())
    colNames.push_back(names.intern(v.name, nameMap));

  os << "COLUMNS\n";
  bool inInteger = false;
  int markerCount = 0;
  for (const Variable& v : model.variables()) {
    bool wantInteger = v.kind == VarKind::Binary;
    if (wantInteger != inInteger) {
      os << "    MARKER" << markerCount++ << "  'MARKER'  "
         << (wantInteger ? "'INTORG'" : "'INTEND'") << "\n";
      inInteger = wantInteger;
    }
    const std::string& cn = colNames[v.id];
    double obj = model.objectiveCoef(v.id);
    bool wroteAny = false;
    if (obj != 0.0) {
      os << "    " << cn << "  OBJ  " << num(obj) << "\n";
      wroteAny = true;
    }
    for (auto [row, coef] : colEntries[v.id]) {
      os << "    " << cn << "  " << rowNames[row] << "  " << num(coef) << "\n";
      wroteAny = true;
    }
    if (!wroteAny) os << "    " << cn << "  OBJ  0\n";
  }
  if (inInteger)
    os << "    MARKER" << markerCount++ << "  'MARKER'  'INTEND'\n";

  os << "RHS\n";
  // Objective constant rides on the objective row, negated per convention.
  if (model.objectiveConstant() != 0.0)
    os << "    RHS  OBJ  " << num(-model.objectiveConstant()) << "\n";
  for (int r = 0; r < static_cast<int>(model.rowCount()); ++r) {
    double rhs = model.rows()[r].rhs;
    if (rhs != 0.0) os << "    RHS  " << rowNames[r] << "  " << num(rhs) << "\n";
  }

  os << "BOUNDS\n";
  for (const Variable& v : model.variables()) {
    const std::string& cn = colNames[v.id];
    if (v.kind == VarKind::Binary && v.lower == 0.0 && v.upper == 1.0) {
      os << " BV BND  " << cn << "\n";
      continue;
    }
    if (v.lower == v.upper) {
      os << " FX BND  " << cn << "  " << num(v.lower) << "\n";
      continue;
    }
    if (v.lower != 0.0)
      os << " LO BND  " << cn << "  " << num(v.lower) << "\n";
    if (v.upper != std::numeric_limits<double>::infinity())
      os << " UP BND  " << cn << "  " << num(v.upper) << "\n";
  }
  os << "ENDATA\n";
  return os.str();
}

namespace {

std::vector<std::string> splitFields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream is(line);
  std::string f;
  while (is >> f) fields.push_back(f);
  return fields;
}

double parseNum(const std::string& s, int lineNo) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("mps: bad number '" + s + "' on line " +
                     std::to_string(lineNo));
  }
}

// Rebuilds the family index entry for a name of the form fam_i_j_... with
// 1-based subscripts.
void reindexFromName(Model& model, const std::string& name, int var) {
  std::size_t us = name.find('_');
  if (us == std::string::npos || us == 0) return;
  std::string family = name.substr(0, us);
  std::vector<int> subs;
  std::size_t pos = us;
  while (pos != std::string::npos && pos < name.size()) {
    std::size_t next = name.find('_', pos + 1);
    std::string part = name.substr(pos + 1, next == std::string::npos
                                                ? std::string::npos
                                                : next - pos - 1);
    if (part.empty()) return;
    for (char ch : part)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return;
    subs.push_back(std::stoi(part) - 1);
    pos = next;
  }
  model.registerIndexed(family, std::move(subs), var);
}

}  // namespace

Model parse_mps(std::string_view text) {
  enum class Section { None, Rows, Columns, Rhs, Ranges, Bounds, Done };
  Section section = Section::None;
  Model model;
  bool sawObjSense = false;
  bool expectObjSenseValue = false;
  bool inInteger = false;

  struct RowDraft {
    std::string name;
    Sense sense;
    double rhs = 0.0;
    std::vector<Term> terms;
  };
  std::vector<RowDraft> rows;
  std::map<std::string, int> rowByName;
  std::map<std::string, int> colByName;
  struct ColDraft {
    std::string name;
    VarKind kind;
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    bool loSet = false, upSet = false;
    double objCoef = 0.0;
  };
  std::vector<ColDraft> cols;
  double objConstant = 0.0;

  auto getCol = [&](const std::string& name, int lineNo) -> int {
    auto it = colByName.find(name);
    if (it == colByName.end())
      throw ParseError("mps: unknown column '" + name + "' on line " +
                       std::to_string(lineNo));
    return it->second;
  };

  std::istringstream stream{std::string(text)};
  std::string line;
  int lineNo = 0;
  std::string modelName = "model";
  while (std::getline(stream, line)) {
    ++lineNo;
    if (line.empty() || line[0] == '*') continue;
    std::vector<std::string> f = splitFields(line);
    if (f.empty()) continue;

    bool headerLine = !std::isspace(static_cast<unsigned char>(line[0]));
    if (headerLine) {
      expectObjSenseValue = false;
      const std::string& head = f[0];
      if (head == "NAME") {
        if (f.size() > 1) modelName = f[1];
      } else if (head == "OBJSENSE") {
        sawObjSense = true;
        expectObjSenseValue = true;
        if (f.size() > 1 && f[1] != "MAX" && f[1] != "MAXIMIZE")
          throw ParseError("mps: only maximization models are supported");
        if (f.size() > 1) expectObjSenseValue = false;
      } else if (head == "ROWS") {
        section = Section::Rows;
      } else if (head == "COLUMNS") {
        if (section != Section::Rows)
          throw ParseError("mps: COLUMNS before ROWS");
        section = Section::Columns;
      } else if (head == "RHS") {
        if (section != Section::Columns)
          throw ParseError("mps: RHS before COLUMNS");
        section = Section::Rhs;
      } else if (head == "RANGES") {
        section = Section::Ranges;
      } else if (head == "BOUNDS") {
        section = Section::Bounds;
      } else if (head == "ENDATA") {
        section = Section::Done;
        break;
      } else {
        throw ParseError("mps: unknown section '" + head + "' on line " +
                         std::to_string(lineNo));
      }
      continue;
    }

    if (expectObjSenseValue) {
      if (f[0] != "MAX" && f[0] != "MAXIMIZE")
        throw ParseError("mps: only maximization models are supported");
      expectObjSenseValue = false;
      continue;
    }

    switch (section) {
      case Section::Rows: {
        if (f.size() != 2)
          throw ParseError("mps: malformed ROWS line " + std::to_string(lineNo));
        if (f[0] == "N") {
          if (f[1] != "OBJ" && !rowByName.empty())
            throw ParseError("mps: multiple objective rows");
          break;  // objective row
        }
        Sense sense = f[0] == "L"   ? Sense::LessEq
                      : f[0] == "G" ? Sense::GreaterEq
                      : f[0] == "E" ? Sense::Equal
                                    : throw ParseError(
                                          "mps: bad row sense on line " +
                                          std::to_string(lineNo));
        rowByName.emplace(f[1], static_cast<int>(rows.size()));
        rows.push_back({f[1], sense, 0.0, {}});
        break;
      }
      case Section::Columns: {
        if (f.size() >= 3 && f[1] == "'MARKER'") {
          if (f[2] == "'INTORG'")
            inInteger = true;
          else if (f[2] == "'INTEND'")
            inInteger = false;
          else
            throw ParseError("mps: bad marker on line " + std::to_string(lineNo));
          break;
        }
        if (f.size() != 3 && f.size() != 5)
          throw ParseError("mps: malformed COLUMNS line " +
                           std::to_string(lineNo));
        const std::string& colName = f[0];
        if (!colByName.count(colName)) {
          colByName.emplace(colName, static_cast<int>(cols.size()));
          ColDraft draft;
          draft.name = colName;
          draft.kind = inInteger ? VarKind::Binary : VarKind::Continuous;
          cols.push_back(draft);
        }
        int col = colByName[colName];
        for (std::size_t p = 1; p + 1 < f.size(); p += 2) {
          double coef = parseNum(f[p + 1], lineNo);
          if (f[p] == "OBJ") {
            cols[col].objCoef += coef;
          } else {
            auto it = rowByName.find(f[p]);
            if (it == rowByName.end())
              throw ParseError("mps: unknown row '" + f[p] + "' on line " +
                               std::to_string(lineNo));
            rows[it->second].terms.push_back({col, coef});
          }
        }
        break;
      }
      case Section::Rhs: {
        if (f.size() != 3 && f.size() != 5)
          throw ParseError("mps: malformed RHS line " + std::to_string(lineNo));
        for (std::size_t p = 1; p + 1 < f.size(); p += 2) {
          double value = parseNum(f[p + 1], lineNo);
          if (f[p] == "OBJ") {
            objConstant = -value;
          } else {
            auto it = rowByName.find(f[p]);
            if (it == rowByName.end())
              throw ParseError("mps: unknown row '" + f[p] + "' on line " +
                               std::to_string(lineNo));
            rows[it->second].rhs = value;
          }
        }
        break;
      }
      case Section::Ranges:
        throw ParseError("mps: RANGES entries are not supported");
      case Section::Bounds: {
        if (f.size() < 3)
          throw ParseError("mps: malformed BOUNDS line " + std::to_string(lineNo));
        const std::string& btype = f[0];
        int col = getCol(f[2], lineNo);
        double value = f.size() > 3 ? parseNum(f[3], lineNo) : 0.0;
        if (btype == "BV") {
          cols[col].kind = VarKind::Binary;
          cols[col].lower = 0.0;
          cols[col].upper = 1.0;
          cols[col].loSet = cols[col].upSet = true;
        } else if (btype == "UP") {
          cols[col].upper = value;
          cols[col].upSet = true;
        } else if (btype == "LO") {
          cols[col].lower = value;
          cols[col].loSet = true;
        } else if (btype == "FX") {
          cols[col].lower = cols[col].upper = value;
          cols[col].loSet = cols[col].upSet = true;
        } else {
          throw ParseError("mps: unsupported bound type '" + btype + "'");
        }
        break;
      }
      default:
        throw ParseError("mps: data outside any section on line " +
                         std::to_string(lineNo));
    }
  }
  if (section != Section::Done) throw ParseError("mps: missing ENDATA");
  if (!sawObjSense)
    throw ParseError("mps: missing OBJSENSE (only MAX models supported)");

  Model out(modelName);
  for (ColDraft& draft : cols) {
    double lo = draft.lower;
    double up = draft.upper;
    if (draft.kind == VarKind::Binary) {
      if (!draft.loSet) lo = 0.0;
      if (!draft.upSet) up = 1.0;
    }
    int id = out.addVariable(draft.name, draft.kind, lo, up);
    if (draft.objCoef != 0.0) out.addObjectiveTerm(id, draft.objCoef);
    reindexFromName(out, draft.name, id);
  }
  out.setObjectiveConstant(objConstant);
  for (RowDraft& draft : rows) {
    // Recover two-sided pairs from the writer's _lo/_hi naming.
    out.addConstraint(draft.name, std::move(draft.terms), draft.sense,
                      draft.rhs);
  }
  // Count writer-produced interval pairs so constraintCount survives a round
  // trip: adjacent rows "<stem>_lo", "<stem>_hi".
  const auto& parsedRows = out.rows();
  std::size_t pairs = 0;
  for (std::size_t r = 0; r + 1 < parsedRows.size(); ++r) {
    const std::string& a = parsedRows[r].name;
    const std::string& b = parsedRows[r + 1].name;
    if (a.size() > 3 && b.size() > 3 && a.ends_with("_lo") &&
        b.ends_with("_hi") &&
        a.compare(0, a.size() - 3, b, 0, b.size() - 3) == 0)
      ++pairs;
  }
  out.setPairedRows(pairs);
  return out;
}

ImportedSolution import_solution(std::string_view text, const Model& model) {
  ImportedSolution out;
  out.values.assign(model.variableCount(), 0.0);
  std::istringstream stream{std::string(text)};
  std::string line;
  int lineNo = 0;
  while (std::getline(stream, line)) {
    ++lineNo;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::vector<std::string> f = splitFields(line);
    if (f.empty()) continue;
    if (f.size() != 2)
      throw ParseError("solution: expected '<name> <value>' on line " +
                       std::to_string(lineNo));
    double value = parseNum(f[1], lineNo);
    if (f[0] == "=obj=") {
      out.declaredObjective = value;
      continue;
    }
    std::optional<int> var = model.findVariable(f[0]);
    if (!var) {
      out.warnings.push_back("unknown variable '" + f[0] + "' on line " +
                             std::to_string(lineNo) + " ignored");
      continue;
    }
    out.values[*var] = value;
  }
  return out;
}

}  // namespace hlctdp

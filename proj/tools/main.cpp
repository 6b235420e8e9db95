// Command-line driver for instance generation, model export, preprocessing,
// solving, validation and report aggregation.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlctdp/analysis.hpp"
#include "hlctdp/formulations.hpp"
#include "hlctdp/generator.hpp"
#include "hlctdp/io.hpp"
#include "hlctdp/milp.hpp"
#include "hlctdp/oracle.hpp"
#include "hlctdp/preprocess.hpp"
#include "hlctdp/solver.hpp"

namespace fs = std::filesystem;
using namespace hlctdp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSizeRefusal = 3;
constexpr int kExitInput = 4;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string joinArgs(int argc, char** argv) {
  std::ostringstream os;
  for (int i = 0; i < argc; ++i) {
    if (i) os << ' ';
    os << argv[i];
  }
  return os.str();
}

void writeManifest(const fs::path& path, const std::string& command,
                   const std::string& argLine, std::uint64_t seed,
                   std::vector<std::string> inputs,
                   std::vector<std::string> outputs, double wallMs) {
  RunManifest manifest;
  manifest.command = command;
  manifest.configHash = config_hash(argLine);
  manifest.seed = seed;
  manifest.inputs = std::move(inputs);
  manifest.outputs = std::move(outputs);
  manifest.wallMs = wallMs;
  write_file(path, manifest_to_json(manifest));
}

std::vector<double> parseHubCosts(const std::string& text) {
  std::vector<double> costs;
  std::istringstream is(text);
  double v;
  while (is >> v) costs.push_back(v);
  if (!is.eof() && !is.fail()) throw ParseError("hub-costs: trailing garbage");
  if (costs.empty()) throw ParseError("hub-costs: no numeric entries");
  return costs;
}

std::string instanceStem(double alpha, int n, int L, int R) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "hlctdp_a%g_n%d_L%d_R%d", alpha, n, L, R);
  return buf;
}

Instance loadInstanceChecked(const fs::path& path) {
  Instance inst = instance_from_json(read_file(path));
  if (!structurally_valid(inst)) {
    std::ostringstream os;
    os << "instance " << path.string() << " fails structural validation:";
    for (const auto& v : validate_instance(inst))
      if (v.structural) os << "\n  [" << v.rule << "] " << v.detail;
    throw Error(os.str());
  }
  return inst;
}

struct SweepParams {
  double alpha;
  int n, L, R;
};

int cmdGenerate(const std::string& cabPath, const std::string& hubCostPath,
                const std::string& outDir, bool sweep,
                const std::vector<double>& alphas, const std::vector<int>& sizes,
                int n, double alpha, int levels, int demandLevels,
                std::uint64_t seed, const std::string& argLine) {
  Stopwatch watch;
  RawCab raw = load_cab(read_file(cabPath));
  GenParams params;
  params.seed = seed;
  params.hubCostBase = parseHubCosts(read_file(hubCostPath));

  std::vector<SweepParams> cells;
  if (sweep) {
    for (double a : alphas)
      for (int size : sizes)
        for (int L = 1; L <= 2; ++L)
          for (int R = 1; R <= 3; ++R) cells.push_back({a, size, L, R});
  } else {
    cells.push_back({alpha, n, levels, demandLevels});
  }

  fs::create_directories(outDir);
  std::vector<std::string> outputs;
  // One base instance per (alpha, n) pair; the level expansions share it.
  std::map<std::pair<double, int>, BaseInstance> bases;
  for (const SweepParams& cell : cells) {
    auto key = std::make_pair(cell.alpha, cell.n);
    if (!bases.count(key))
      bases.emplace(key, make_base(raw, cell.n, cell.alpha, params));
    Instance inst = expand(bases.at(key), cell.L, cell.R);
    fs::path out = fs::path(outDir) /
                   (instanceStem(cell.alpha, cell.n, cell.L, cell.R) + ".json");
    write_file(out, instance_to_json(inst));
    outputs.push_back(out.string());
  }
  writeManifest(fs::path(outDir) / "generate.manifest.json", "generate",
                argLine, seed, {cabPath, hubCostPath}, outputs, watch.ms());
  std::cout << "generated " << outputs.size() << " instance file(s) in "
            << outDir << "\n";
  return kExitOk;
}

int cmdBuild(const std::string& instancePath, const std::string& formulation,
             bool noConsistency, bool validIneq, bool usePreprocess,
             const std::string& outPath, const std::string& argLine) {
  Stopwatch watch;
  Instance inst = loadInstanceChecked(instancePath);
  Formulation which = formulation == "f1" ? Formulation::F1 : Formulation::F2;

  BuildOptions opts;
  opts.includeConsistency = !noConsistency;
  opts.includeValidInequality = validIneq;
  FixMask mask;
  if (usePreprocess) {
    auto [m, report] = preprocess(inst);
    mask = std::move(m);
    opts.fixMask = &mask;
    std::cout << fix_report_csv_header() << "\n"
              << fix_report_csv_row(inst.alpha(), inst.n(),
                                    inst.serviceLevels(), inst.demandLevels(),
                                    report)
              << "\n";
  }

  Model model = which == Formulation::F1 ? build_f1(inst, opts).first
                                         : build_f2(inst, opts).first;
  NameMap nameMap;
  write_file(outPath, export_mps(model, &nameMap));

  {
    std::ostringstream os;
    os << "{\n  \"renamed\": {";
    bool first = true;
    for (const auto& [from, to] : nameMap.modelToMps) {
      os << (first ? "" : ",") << "\n    \"" << from << "\": \"" << to << "\"";
      first = false;
    }
    os << (first ? "" : "\n  ") << "}\n}\n";
    write_file(outPath + ".names.json", os.str());
  }

  ModelSize size = model_size(inst, which);
  std::cout << "formulation " << formulation_name(which)
            << (noConsistency ? " (no consistency)" : "")
            << (validIneq ? " (valid inequality)" : "") << "\n"
            << "binaries    " << model.binaryCount() << " (structural "
            << size.binaries << ")\n"
            << "continuous  " << model.continuousCount() << " (structural "
            << size.continuous << ")\n"
            << "constraints " << model.constraintCount()
            << " (closed form with consistency " << size.constraints << ")\n";
  writeManifest(outPath + ".manifest.json", "build", argLine, 0,
                {instancePath}, {outPath, outPath + ".names.json"}, watch.ms());
  return kExitOk;
}

int cmdSolve(const std::string& instancePath, double timeLimit, double gap,
             std::uint64_t seed, const std::string& preprocessMode,
             const std::string& outDir, const std::string& argLine) {
  Stopwatch watch;
  Instance inst = loadInstanceChecked(instancePath);
  fs::create_directories(outDir);
  std::string stem = fs::path(instancePath).stem().string();
  auto outFile = [&](const std::string& suffix) {
    return fs::path(outDir) / (stem + suffix);
  };

  FixMask mask;
  std::vector<std::string> outputs;
  if (preprocessMode == "on") {
    auto [m, report] = preprocess(inst);
    mask = std::move(m);
    std::string csv = fix_report_csv_header() + "\n" +
                      fix_report_csv_row(inst.alpha(), inst.n(),
                                         inst.serviceLevels(),
                                         inst.demandLevels(), report) +
                      "\n";
    write_file(outFile(".preproc.csv"), csv);
    outputs.push_back(outFile(".preproc.csv").string());
  }

  SolverConfig cfg;
  cfg.timeLimit = timeLimit;
  cfg.gapTol = gap;
  cfg.seed = seed;
  std::ofstream log(outFile(".solvelog.csv"));
  log << "nodes,incumbent,bound,gap,elapsed_s\n";
  cfg.log = &log;
  Solution sol = solve_exact(inst, mask, cfg);
  log.close();
  outputs.push_back(outFile(".solvelog.csv").string());

  write_file(outFile(".solution.json"), solution_to_json(inst, sol));
  outputs.push_back(outFile(".solution.json").string());

  ValidationReport report = validate(inst, sol);
  write_file(outFile(".validation.json"), validation_to_json(report));
  outputs.push_back(outFile(".validation.json").string());

  if (report.ok) {
    SolutionStats solStats = stats(inst, sol);
    std::string csv = stats_csv_header(inst.demandLevels()) + "\n" +
                      stats_csv_row(inst.alpha(), inst.n(),
                                    inst.serviceLevels(), inst.demandLevels(),
                                    solStats) +
                      "\n";
    write_file(outFile(".stats.csv"), csv);
    outputs.push_back(outFile(".stats.csv").string());
  }

  writeManifest(outFile(".manifest.json"), "solve", argLine, seed,
                {instancePath}, outputs, watch.ms());
  std::cout << "status " << solve_status_name(sol.status) << " objective "
            << sol.objective << " nodes " << sol.nodesExplored << " elapsed "
            << sol.elapsedSeconds << "s\n";
  if (!report.ok) {
    std::cerr << "solver output failed validation\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmdOracle(const std::string& instancePath, double maxConfigs,
              double maxAssignments, bool noConsistency,
              const std::string& outPath, const std::string& argLine) {
  Stopwatch watch;
  Instance inst = loadInstanceChecked(instancePath);
  OracleLimits limits;
  limits.maxConfigs = maxConfigs;
  limits.maxAssignments = maxAssignments;
  limits.enforceConsistency = !noConsistency;
  Solution sol = brute_force(inst, limits);
  std::string json = solution_to_json(inst, sol);
  if (outPath.empty()) {
    std::cout << json;
  } else {
    write_file(outPath, json);
    writeManifest(outPath + ".manifest.json", "oracle", argLine, 0,
                  {instancePath}, {outPath}, watch.ms());
    std::cout << "objective " << sol.objective << "\n";
  }
  return kExitOk;
}

int cmdValidate(const std::string& instancePath,
                const std::string& solutionPath, const std::string& outPath,
                const std::string& argLine) {
  Stopwatch watch;
  Instance inst = loadInstanceChecked(instancePath);
  Solution sol = solution_from_json(inst, read_file(solutionPath));
  ValidationReport report = validate(inst, sol);
  if (!outPath.empty()) {
    write_file(outPath, validation_to_json(report));
    writeManifest(outPath + ".manifest.json", "validate", argLine, 0,
                  {instancePath, solutionPath}, {outPath}, watch.ms());
  }
  if (report.ok) {
    std::cout << "ok\n";
    return kExitOk;
  }
  for (const auto& v : report.violations)
    std::cout << "[" << violation_rule_name(v.rule) << "] " << v.detail << "\n";
  return kExitValidation;
}

// Concatenates the per-instance preprocessing and stats rows of a sweep
// directory and checks the directional observations.
int cmdReport(const std::string& dir, const std::string& argLine) {
  Stopwatch watch;
  std::vector<fs::path> preprocFiles, statsFiles;
  for (const auto& entry : fs::directory_iterator(dir)) {
    std::string name = entry.path().filename().string();
    if (name.ends_with(".preproc.csv")) preprocFiles.push_back(entry.path());
    if (name.ends_with(".stats.csv") && name != "stats.csv")
      statsFiles.push_back(entry.path());
  }
  std::sort(preprocFiles.begin(), preprocFiles.end());
  std::sort(statsFiles.begin(), statsFiles.end());
  if (statsFiles.empty() && preprocFiles.empty())
    throw Error("report: no .stats.csv or .preproc.csv rows found in " + dir);

  auto concatenate = [](const std::vector<fs::path>& files,
                        std::vector<std::map<std::string, double>>* rows) {
    std::string combined;
    for (std::size_t f = 0; f < files.size(); ++f) {
      std::ifstream in(files[f]);
      std::string header, row;
      if (!std::getline(in, header) || !std::getline(in, row)) continue;
      if (combined.empty()) combined = header + "\n";
      combined += row + "\n";
      if (rows) {
        std::vector<std::string> names, values;
        std::istringstream hs(header), rs(row);
        std::string tok;
        while (std::getline(hs, tok, ',')) names.push_back(tok);
        while (std::getline(rs, tok, ',')) values.push_back(tok);
        std::map<std::string, double> parsed;
        for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
          try {
            parsed[names[i]] = std::stod(values[i]);
          } catch (const std::exception&) {
          }
        }
        rows->push_back(std::move(parsed));
      }
    }
    return combined;
  };

  std::vector<std::string> outputs;
  std::vector<std::map<std::string, double>> preprocRows, statsRows;
  if (!preprocFiles.empty()) {
    write_file(fs::path(dir) / "preproc.csv",
               concatenate(preprocFiles, &preprocRows));
    outputs.push_back((fs::path(dir) / "preproc.csv").string());
  }
  if (!statsFiles.empty()) {
    write_file(fs::path(dir) / "stats.csv",
               concatenate(statsFiles, &statsRows));
    outputs.push_back((fs::path(dir) / "stats.csv").string());
  }

  // Directional observations. These hold robustly at benchmark scale;
  // desk-scale runs get an explicit noise allowance and WARN rather than
  // fail.
  std::ostringstream obs;
  if (!preprocRows.empty()) {
    double c1 = 0, c2 = 0, c3 = 0;
    for (const auto& row : preprocRows) {
      c1 += row.count("pctC1") ? row.at("pctC1") : 0;
      c2 += row.count("pctC2") ? row.at("pctC2") : 0;
      c3 += row.count("pctC3") ? row.at("pctC3") : 0;
    }
    c1 /= preprocRows.size();
    c2 /= preprocRows.size();
    c3 /= preprocRows.size();
    bool ok = c1 > c2 && c1 > c3;
    obs << (ok ? "PASS" : "WARN")
        << " elimination-dominance: mean %C1=" << c1 << " vs %C2=" << c2
        << " %C3=" << c3 << "\n";
  }
  if (!statsRows.empty()) {
    std::map<double, std::pair<double, int>> byAlpha;  // alpha -> (sum, count)
    for (const auto& row : statsRows) {
      if (!row.count("alpha") || !row.count("pctTwoHub")) continue;
      auto& cell = byAlpha[row.at("alpha")];
      cell.first += row.at("pctTwoHub");
      ++cell.second;
    }
    constexpr double kAllowancePp = 5.0;  // small-instance noise allowance
    bool ok = true;
    double prev = -1;
    bool first = true;
    obs << "two-hub route share by alpha:";
    for (const auto& [alpha, cell] : byAlpha) {
      double mean = cell.first / cell.second;
      obs << " a=" << alpha << ":" << mean << "%";
      if (!first && mean > prev + kAllowancePp) ok = false;
      prev = mean;
      first = false;
    }
    obs << "\n"
        << (ok ? "PASS" : "WARN")
        << " two-hub-share-decreasing-in-alpha (allowance " << kAllowancePp
        << "pp)\n";
  }
  write_file(fs::path(dir) / "observations.txt", obs.str());
  outputs.push_back((fs::path(dir) / "observations.txt").string());
  std::cout << obs.str();

  writeManifest(fs::path(dir) / "report.manifest.json", "report", argLine, 0,
                {dir}, outputs, watch.ms());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hub location with congestion and time-sensitive demand"};
  app.require_subcommand(1);
  std::string argLine = joinArgs(argc, argv);

  auto* gen = app.add_subcommand("generate", "Generate benchmark instances");
  std::string cabPath, hubCostPath, genOut = ".";
  bool sweep = false;
  std::vector<double> alphas = {0.2, 0.5, 0.8};
  std::vector<int> sizes = {8, 10, 12};
  int genN = 10, genL = 1, genR = 1;
  double genAlpha = 0.5;
  std::uint64_t seed = 0;
  gen->add_option("--cab", cabPath, "CAB-style raw data file")->required();
  gen->add_option("--hub-costs", hubCostPath, "per-city setup cost file")
      ->required();
  gen->add_option("--out", genOut, "output directory");
  gen->add_flag("--sweep", sweep, "emit the full alpha x n x L x R grid");
  gen->add_option("--alphas", alphas, "sweep discount factors")
      ->delimiter(',');
  gen->add_option("--sizes", sizes, "sweep node counts")->delimiter(',');
  gen->add_option("--n", genN, "node count (single instance)");
  gen->add_option("--alpha", genAlpha, "discount factor (single instance)");
  gen->add_option("--levels", genL, "service levels (single instance)");
  gen->add_option("--demand-levels", genR, "demand levels (single instance)");
  gen->add_option("--seed", seed, "RNG seed");

  auto* build = app.add_subcommand("build", "Export a MILP model as MPS");
  std::string buildInstance, formulation = "f2", buildOut = "model.mps";
  bool noConsistency = false, validIneq = false, buildPreprocess = false;
  build->add_option("instance", buildInstance, "instance JSON")->required();
  build->add_option("--formulation", formulation, "f1 or f2")
      ->check(CLI::IsMember({"f1", "f2"}));
  build->add_flag("--no-consistency", noConsistency,
                  "omit the origin/destination hub consistency constraints");
  build->add_flag("--valid-ineq", validIneq,
                  "add the transit-time linking inequalities (f2 only)");
  build->add_flag("--preprocess", buildPreprocess,
                  "apply the variable-fixing mask as bounds");
  build->add_option("--out", buildOut, "MPS output path");

  auto* solve = app.add_subcommand("solve", "Run the built-in exact solver");
  std::string solveInstance, preprocessMode = "on", solveOut = ".";
  double timeLimit = 7200.0, gapTol = 1e-5;
  std::uint64_t solveSeed = 0;
  solve->add_option("instance", solveInstance, "instance JSON")->required();
  solve->add_option("--time-limit", timeLimit, "seconds");
  solve->add_option("--gap", gapTol, "relative optimality tolerance");
  solve->add_option("--seed", solveSeed, "seed (recorded)");
  solve->add_option("--preprocess", preprocessMode, "on or off")
      ->check(CLI::IsMember({"on", "off"}));
  solve->add_option("--out-dir", solveOut, "output directory");

  auto* oracle = app.add_subcommand("oracle", "Brute-force exact optimum");
  std::string oracleInstance, oracleOut;
  double maxConfigs = 1e6, maxAssignments = 1e7;
  bool oracleNoConsistency = false;
  oracle->add_option("instance", oracleInstance, "instance JSON")->required();
  oracle->add_option("--max-configs", maxConfigs, "configuration cap");
  oracle->add_option("--max-assignments", maxAssignments,
                     "per-configuration candidate cap");
  oracle->add_flag("--no-consistency", oracleNoConsistency,
                   "drop the consistency rule (diagnostic relaxation)");
  oracle->add_option("--out", oracleOut, "solution JSON path (default stdout)");

  auto* val = app.add_subcommand("validate", "Check a solution file");
  std::string valInstance, valSolution, valOut;
  val->add_option("instance", valInstance, "instance JSON")->required();
  val->add_option("solution", valSolution, "solution JSON")->required();
  val->add_option("--out", valOut, "validation report path");

  auto* report = app.add_subcommand("report", "Aggregate sweep outputs");
  std::string reportDir;
  report->add_option("--dir", reportDir, "directory of solve outputs")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (gen->parsed())
      return cmdGenerate(cabPath, hubCostPath, genOut, sweep, alphas, sizes,
                         genN, genAlpha, genL, genR, seed, argLine);
    if (build->parsed())
      return cmdBuild(buildInstance, formulation, noConsistency, validIneq,
                      buildPreprocess, buildOut, argLine);
    if (solve->parsed())
      return cmdSolve(solveInstance, timeLimit, gapTol, solveSeed,
                      preprocessMode, solveOut, argLine);
    if (oracle->parsed())
      return cmdOracle(oracleInstance, maxConfigs, maxAssignments,
                       oracleNoConsistency, oracleOut, argLine);
    if (val->parsed())
      return cmdValidate(valInstance, valSolution, valOut, argLine);
    if (report->parsed()) return cmdReport(reportDir, argLine);
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeRefusal;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::string what = e.what();
    std::cerr << "error: " << what << "\n";
    return what.find("fails structural validation") != std::string::npos
               ? kExitValidation
               : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

#include "hlctdp/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hlctdp {

using nlohmann::json;

namespace {

json matrixToJson(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrixFromJson(const json& rows, int n, const char* what) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    throw ParseError(std::string("instance: ") + what + " must have " +
                     std::to_string(n) + " rows");
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw ParseError(std::string("instance: ragged ") + what + " at row " +
                       std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (!row[j].is_number())
        throw ParseError(std::string("instance: non-numeric ") + what +
                         " entry");
      m(i, j) = row[j].get<double>();
    }
  }
  return m;
}

json parse(std::string_view text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw ParseError(std::string(what) + ": malformed JSON");
  return doc;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  json doc;
  doc["n"] = inst.n();
  doc["alpha"] = inst.alpha();
  doc["gamma"] = inst.gamma();
  doc["cost"] = matrixToJson(inst.cost());
  doc["time"] = matrixToJson(inst.time());
  json hubs = json::array();
  for (int k = 0; k < inst.numHubs(); ++k) {
    const HubData& hub = inst.hub(k);
    hubs.push_back({{"id", k + 1}, {"W", hub.W}, {"G", hub.G}, {"h", hub.h}});
  }
  doc["hubs"] = std::move(hubs);
  json commodities = json::array();
  for (const Commodity& com : inst.commodities()) {
    json levels = json::array();
    for (const DemandLevel& lvl : com.levels)
      levels.push_back({{"w", lvl.w}, {"q", lvl.q}, {"H", lvl.H}});
    commodities.push_back(
        {{"i", com.i + 1}, {"j", com.j + 1}, {"levels", std::move(levels)}});
  }
  doc["commodities"] = std::move(commodities);
  return doc.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
  json doc = parse(text, "instance");
  for (const char* key : {"n", "alpha", "gamma", "cost", "time", "hubs",
                          "commodities"})
    if (!doc.contains(key))
      throw ParseError(std::string("instance: missing key '") + key + "'");

  int n = doc["n"].get<int>();
  if (n <= 0) throw ParseError("instance: n must be positive");
  Matrix cost = matrixFromJson(doc["cost"], n, "cost");
  Matrix time = matrixFromJson(doc["time"], n, "time");

  const json& hubsJson = doc["hubs"];
  if (!hubsJson.is_array() || static_cast<int>(hubsJson.size()) != n)
    throw ParseError("instance: expected one hub entry per node");
  std::vector<HubData> hubs(n);
  std::vector<bool> seen(n, false);
  for (const json& entry : hubsJson) {
    int id = entry.at("id").get<int>();
    if (id < 1 || id > n || seen[id - 1])
      throw ParseError("instance: hub ids must be a permutation of 1..n");
    seen[id - 1] = true;
    HubData& hub = hubs[id - 1];
    hub.W = entry.at("W").get<std::vector<double>>();
    hub.G = entry.at("G").get<std::vector<double>>();
    hub.h = entry.at("h").get<std::vector<double>>();
    if (hub.W.empty() || hub.W.size() != hub.G.size() ||
        hub.W.size() != hub.h.size())
      throw ParseError("instance: ragged hub level arrays for hub " +
                       std::to_string(id));
  }

  std::vector<Commodity> commodities;
  for (const json& entry : doc["commodities"]) {
    Commodity com;
    com.i = entry.at("i").get<int>() - 1;
    com.j = entry.at("j").get<int>() - 1;
    for (const json& lvl : entry.at("levels"))
      com.levels.push_back({lvl.at("w").get<double>(),
                            lvl.at("q").get<double>(),
                            lvl.at("H").get<double>()});
    if (com.levels.empty())
      throw ParseError("instance: commodity without demand levels");
    commodities.push_back(std::move(com));
  }
  try {
    return Instance(n, doc["alpha"].get<double>(), doc["gamma"].get<double>(),
                    std::move(cost), std::move(time), std::move(hubs),
                    std::move(commodities));
  } catch (const Error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
}

std::string solution_to_json(const Instance& inst, const Solution& sol) {
  json doc;
  doc["status"] = solve_status_name(sol.status);
  doc["objective"] = sol.objective;
  doc["revenue"] = sol.revenueTotal;
  doc["routingCost"] = sol.routingCost;
  doc["setupCost"] = sol.setupCost;
  doc["gap"] = sol.gap;
  doc["nodes"] = sol.nodesExplored;
  doc["elapsedSeconds"] = sol.elapsedSeconds;
  json hubs = json::array();
  for (const auto& [k, l] : sol.hubLevels)
    hubs.push_back({{"k", k + 1}, {"level", l + 1}});
  doc["hubs"] = std::move(hubs);
  json served = json::array();
  for (const auto& [c, choice] : sol.served) {
    const Commodity& com = inst.commodity(c);
    served.push_back({{"i", com.i + 1},
                      {"j", com.j + 1},
                      {"r", choice.level + 1},
                      {"k", choice.route.k + 1},
                      {"m", choice.route.m + 1}});
  }
  doc["served"] = std::move(served);
  return doc.dump(2) + "\n";
}

Solution solution_from_json(const Instance& inst, std::string_view text) {
  json doc = parse(text, "solution");
  Solution sol;
  std::string status = doc.value("status", "feasible");
  if (status == "optimal")
    sol.status = SolveStatus::Optimal;
  else if (status == "feasible")
    sol.status = SolveStatus::Feasible;
  else if (status == "empty")
    sol.status = SolveStatus::Empty;
  else if (status == "infeasibleInput")
    sol.status = SolveStatus::InfeasibleInput;
  else
    throw ParseError("solution: unknown status '" + status + "'");
  sol.gap = doc.value("gap", 0.0);
  for (const json& entry : doc.value("hubs", json::array())) {
    int k = entry.at("k").get<int>() - 1;
    int l = entry.at("level").get<int>() - 1;
    if (k < 0 || k >= inst.numHubs())
      throw ParseError("solution: hub index out of range");
    if (sol.hubLevels.count(k))
      throw ParseError("solution: duplicate hub entry");
    sol.hubLevels[k] = l;
  }
  for (const json& entry : doc.value("served", json::array())) {
    int i = entry.at("i").get<int>() - 1;
    int j = entry.at("j").get<int>() - 1;
    int c = (i >= 0 && i < inst.n() && j >= 0 && j < inst.n())
                ? inst.commodityIndex(i, j)
                : -1;
    if (c < 0) throw ParseError("solution: served pair is not a commodity");
    if (sol.served.count(c))
      throw ParseError("solution: commodity served twice");
    sol.served[c] = {entry.at("r").get<int>() - 1,
                     {entry.at("k").get<int>() - 1,
                      entry.at("m").get<int>() - 1}};
  }
  finalize_totals(inst, sol);
  return sol;
}

std::string validation_to_json(const ValidationReport& report) {
  json doc;
  doc["ok"] = report.ok;
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(
        {{"rule", violation_rule_name(v.rule)}, {"detail", v.detail}});
  doc["violations"] = std::move(violations);
  return doc.dump(2) + "\n";
}

std::string manifest_to_json(const RunManifest& manifest) {
  json doc;
  doc["command"] = manifest.command;
  doc["configHash"] = manifest.configHash;
  doc["seed"] = manifest.seed;
  doc["inputs"] = manifest.inputs;
  doc["outputs"] = manifest.outputs;
  doc["toolVersion"] = manifest.toolVersion;
  doc["wallMs"] = manifest.wallMs;
  return doc.dump(2) + "\n";
}

std::string config_hash(const std::string& canonicalArgs) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char ch : canonicalArgs) {
    hash ^= ch;
    hash *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path.string());
  out << content;
  if (!out) throw Error("write failed: " + path.string());
}

}  // namespace hlctdp

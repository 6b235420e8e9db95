#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "hlctdp/analysis.hpp"
#include "hlctdp/instance.hpp"
#include "hlctdp/solution.hpp"

namespace hlctdp {

inline constexpr const char* kToolVersion = "hlctdp 0.1.0";

// Instance JSON: n, alpha, gamma, cost/time as row-major matrices, hubs as
// {id, W, G, h} with 1-based ids, commodities as {i, j, levels:[{w,q,H}]}
// with 1-based endpoints. The loader rejects ragged matrices and level
// arrays.
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(std::string_view text);

std::string solution_to_json(const Instance& inst, const Solution& sol);
Solution solution_from_json(const Instance& inst, std::string_view text);

std::string validation_to_json(const ValidationReport& report);

struct RunManifest {
  std::string command;
  std::string configHash;
  std::uint64_t seed = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::string toolVersion = kToolVersion;
  double wallMs = 0.0;
};

std::string manifest_to_json(const RunManifest& manifest);

// FNV-1a over the canonical argument string.
std::string config_hash(const std::string& canonicalArgs);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace hlctdp

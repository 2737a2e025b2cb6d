#pragma once

#include "jetapprox/countable.hpp"
#include "jetapprox/engine.hpp"
#include "jetapprox/geometry.hpp"
#include "jetapprox/jet.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <random>
#include <string>

namespace jetapprox {

/// Exit codes of the batch front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 2,
  kExitNumerical = 3,
  kExitDefect = 4,
};

struct RunOptions {
  std::filesystem::path scenario;
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  bool verbose = false;
};

/// Reads the scenario, runs `command` (approx-jet, countable, gamma-check,
/// metric, winding), writes the CSV table and a JSON summary, and returns
/// the exit code. Errors are reported as one JSON object per line on `err`.
int run(const std::string& command, const RunOptions& opt, std::ostream& err);

// Scenario parsing pieces, exposed for tests.
Complex parse_complex(const nlohmann::json& j);
CompactSetDescriptor parse_set(const nlohmann::json& j);
FunctionOracle parse_oracle(const nlohmann::json& j, const CompactSetDescriptor* set, std::mt19937_64* rng);
Jet parse_jet(const nlohmann::json& j, const CompactSetDescriptor* set, std::mt19937_64* rng);

}  // namespace jetapprox

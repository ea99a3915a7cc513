#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace thv {

struct CommandResult {
  int code = 0;       // 0 success, 1 verification/arithmetic failure, 2 usage/parse error
  std::string text;   // what gets printed (JSON dump in --json mode)
  std::optional<nlohmann::json> doc;  // structured document when --json
};

/// Executes one CLI invocation (argv without the program name). Never throws;
/// all errors are folded into the exit-code contract.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace thv

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affchar/rat.hpp"

namespace affchar {

// One CLI invocation; all state lives in flags, no configuration files.
struct RunConfig {
  std::string command;  // root-data | macdonald | norm | demazure | bgg-table | verify
  std::string type_label;
  std::vector<Int> weight;
  Rat shift = 0;
  int trunc = 12;
  std::string format = "json";  // json | csv
  bool verify_truncation = false;
  std::optional<Rat> range_bound;
  Rat level_bound = 2;  // root listing depth for root-data
};

struct RunResult {
  int exit_code = 0;  // 0 success, 1 verification mismatch, 2 usage error
  std::string document;
};

RunResult run(const RunConfig& config);

std::vector<Int> parse_weight_list(const std::string& csv);

}  // namespace affchar

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace gammalat::cli {

enum ExitStatus : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

// One output record; field order is the CSV column order.
using Row = std::vector<std::pair<std::string, std::string>>;

// Everything a command reports. JSON output is this object with sorted
// keys, so serialization is canonical.
struct OutputEnvelope {
  std::string command;
  std::map<std::string, std::string> params;
  std::vector<Row> rows;
  std::vector<std::string> warnings;
  int exit_status = kSuccess;
};

nlohmann::json to_json(const OutputEnvelope& env);
OutputEnvelope from_json(const nlohmann::json& j);

// Header is the union of row fields in first-seen order; absent fields are
// empty.
std::string to_csv(const OutputEnvelope& env);

// Entry point shared by the executable and the tests. `args` excludes the
// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammalat::cli

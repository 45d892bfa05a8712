#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace miv::cli {

using Json = nlohmann::ordered_json;

/// One analysis result. `findings` holds scalar conclusions, `witnesses`
/// the proposals and (1-based) index sets backing them.
struct AnalysisReport {
  std::string command;
  std::size_t n = 0;
  std::size_t t = 0;
  std::string mode;
  Json findings = Json::object();
  Json witnesses = Json::object();

  Json to_json() const;
  static AnalysisReport from_json(const Json& doc);
  /// "key=value" lines derived only from to_json().
  std::string to_text() const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

enum ExitCode : int { kOk = 0, kUnsafe = 1, kInputError = 2, kCapExceeded = 3 };

/// Runs one command line (without the program name). `-` as a file name
/// reads `in`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace miv::cli

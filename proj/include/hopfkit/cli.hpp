#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfkit/presentation_file.hpp"

namespace hopfkit::cli {

inline constexpr const char* kVersion = "0.3.0";
inline constexpr int kDefaultDepth = 6;

enum ExitCode : int {
  kOk = 0,
  kValidation = 1,
  kRefused = 2,
  kInternal = 3,
  kCheckFailed = 4,
};

struct Verdict {
  std::string name;
  std::string status;
  std::string detail;
};

struct Report {
  std::string command;
  std::string input;
  std::string digest;
  std::vector<Verdict> verdicts;
  nlohmann::json tables = nlohmann::json::object();
  std::vector<std::string> warnings;
  /// Human-readable body.
  std::string text;
  int exit_code = kOk;
};

nlohmann::json to_json(const Report& r);
std::string render_text(const Report& r);

struct Input {
  std::string name;
  LoadedPresentation loaded;

  const HopfPresentation& hopf() const;
};

/// Family spec (see build_family) or a presentation file path.
Input load_input(const std::string& spec);

Report cmd_check(const std::string& input, int bound);
Report cmd_growth(const std::string& input, const std::string& grading, int depth);
Report cmd_primitives(const std::string& input, int depth);
Report cmd_coradical(const std::string& input, int levels, int depth);
Report cmd_gr(const std::string& input, int depth);
Report cmd_findz(const std::string& input, const std::string& x, const std::string& y, int depth);
Report cmd_cobar(const std::string& input, int n, int max_weight);
Report cmd_invariants(const std::string& input, int depth);
Report cmd_compare(const std::string& a, const std::string& b, int depth);
Report cmd_zoo_list();
Report cmd_zoo_emit(const std::string& family, std::string& file_text);

/// Full command-line driver. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfkit::cli

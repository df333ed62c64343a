#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toricmirror/report.hpp"
#include "toricmirror/toric_data.hpp"

namespace toricmirror {

const std::vector<std::string>& command_names();

struct RunRequest {
  std::string command;
  std::string input;  // fixture name or path to a JSON document
  Int kmax = 6;
  std::vector<std::string> q;  // empty: all ones; a single value is used for every q_a
  std::uint64_t seed = 0;
  std::size_t starts = 0;
  std::optional<Int> degree_cap;
  std::size_t factor = 1;       // 1-based factor index for `tropical`
  std::vector<std::string> xi;  // empty: the origin
  std::optional<std::string> svg_path;
};

struct RunResult {
  int exit_code = 0;  // 0 all checks pass, 1 a check failed, 2 error
  Json report;
  std::string summary;
};

/// Registered fixture or JSON document with fields name, n, rays and optional
/// lambda_monomials, kbasis (list of l columns of length d), lambda_numeric.
ToricFanoData load_input(const std::string& source);

/// Parses the JSON document form; `origin` is used in diagnostics.
ToricFanoData parse_input(const std::string& text, const std::string& origin = "<input>");

/// q_1 = 7/10, q_a = 1/5 for a > 1: the sample used when q = 1 is degenerate.
std::vector<mpq_class> generic_q(std::size_t l);

RunResult run(const RunRequest& request);

}  // namespace toricmirror

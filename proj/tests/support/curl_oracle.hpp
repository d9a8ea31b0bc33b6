// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "echo_server.hpp"

namespace apibind::testing {

struct OracleVerdict {
  bool agrees = false;
  std::string detail;  // first disagreement, empty on agreement
};

/// Non-empty, non-comment lines of a fixture file; a trailing backslash
/// continues a command on the next line.
std::vector<std::string> load_curl_lines(const std::filesystem::path& path);

/// Runs `line` with the system curl binary against `server` and compares
/// what arrived with parse_curl's reading of the same line. Headers curl adds
/// on its own (Host, User-Agent, Accept, Content-Length, and Content-Type for
/// bodies without one) are not held against the parser.
OracleVerdict check_curl_line(const std::string& line, EchoServer& server);

bool curl_available();

}  // namespace apibind::testing

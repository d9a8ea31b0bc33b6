// SPDX-License-Identifier: Apache-2.0
#include "fixtures.hpp"

#include <unistd.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace apibind::testing {

namespace fs = std::filesystem;

fs::path source_dir() { return fs::path(APIBIND_SOURCE_DIR); }
fs::path data_dir() { return source_dir() / "tests" / "data"; }
fs::path golden_dir() { return data_dir() / "golden"; }

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::map<std::string, std::string> read_tree(const fs::path& root) {
  std::map<std::string, std::string> out;
  if (!fs::exists(root)) return out;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) out[fs::relative(entry.path(), root).generic_string()] = read_file(entry.path());
  }
  return out;
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("apibind-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_tree(const fs::path& dest, const std::map<std::string, std::string>& files) {
  fs::remove_all(dest);
  for (const auto& [rel, content] : files) {
    auto path = dest / rel;
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
}

std::string diff_trees(const std::map<std::string, std::string>& want, const std::map<std::string, std::string>& got) {
  for (const auto& [path, content] : want) {
    auto it = got.find(path);
    if (it == got.end()) return "missing " + path;
    if (it->second != content) {
      std::size_t i = 0;
      while (i < content.size() && i < it->second.size() && content[i] == it->second[i]) ++i;
      return path + " differs at byte " + std::to_string(i);
    }
  }
  for (const auto& [path, content] : got) {
    if (!want.contains(path)) return "unexpected " + path;
  }
  return "";
}

}  // namespace apibind::testing

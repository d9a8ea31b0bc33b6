// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace apibind::testing {

std::filesystem::path source_dir();
std::filesystem::path data_dir();
std::filesystem::path golden_dir();

std::string read_file(const std::filesystem::path& path);

/// Relative generic path -> content for every regular file below `root`.
std::map<std::string, std::string> read_tree(const std::filesystem::path& root);

/// Fresh empty directory below the system temp dir.
std::filesystem::path scratch_dir(const std::string& name);

/// Replaces `dest` with a copy of the tree in `files`.
void write_tree(const std::filesystem::path& dest, const std::map<std::string, std::string>& files);

/// Lists the first differing file, or empty when equal.
std::string diff_trees(const std::map<std::string, std::string>& want, const std::map<std::string, std::string>& got);

}  // namespace apibind::testing

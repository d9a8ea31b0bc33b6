// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "apibind/identifiers.hpp"
#include "apibind/templates.hpp"

namespace apibind {

struct RenderedFile {
  std::filesystem::path path;  // relative to the package root
  std::string content;
};

/// Spells a type through the set's type_spelling table.
std::string spell_type(const InferredType& t, const TemplateSet& templates);

/// Manifest plus one module per group, sorted by path. Every function stub
/// must mention its doc URL; a template set that drops it fails here.
std::vector<RenderedFile> render_files(const NamedIr& ir, const TemplateSet& templates);

/// Writes render_files() below out_dir, manifest last, and returns the
/// relative paths written in sorted order.
std::vector<std::filesystem::path> render_package(const NamedIr& ir, const TemplateSet& templates,
                                                  const std::filesystem::path& out_dir);

}  // namespace apibind

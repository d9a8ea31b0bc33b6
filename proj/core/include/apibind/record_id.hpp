// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace apibind {

/// Identity of a record: a non-empty, duplicate-free, ordered set of opaque
/// atoms. Merging concatenates and drops repeats, keeping first-seen order.
class RecordId {
 public:
  explicit RecordId(std::string atom);
  explicit RecordId(std::vector<std::string> atoms);

  const std::vector<std::string>& atoms() const { return atoms_; }
  RecordId merged_with(const RecordId& other) const;

  /// Single atoms are written verbatim unless they start with `[`; merged ids
  /// are written as a JSON array of strings.
  std::string to_cell() const;
  static RecordId from_cell(std::string_view cell);

  /// Atoms joined with `+`, for display only.
  std::string display() const;

  friend bool operator==(const RecordId&, const RecordId&) = default;

 private:
  std::vector<std::string> atoms_;
};

}  // namespace apibind

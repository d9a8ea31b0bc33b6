// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "apibind/parameters.hpp"
#include "apibind/record.hpp"
#include "apibind/types.hpp"

namespace apibind {

struct ParameterType {
  InferredType type;
  std::vector<Issue> issues;
};

/// An example, when present, decides the type (tagging W_PARAM_TYPE_CONFLICT
/// if the declared type disagrees); otherwise the declared type string is
/// mapped, defaulting to string.
ParameterType type_of_parameter(const Parameter& p);

/// Maps a documented type name ("integer", "number", ...) to a lattice type.
std::optional<InferredType> declared_type_of(std::string_view declared);

/// Attaches parameter, request and response types in finalized form.
/// Records already carrying inferred artifacts are returned unchanged.
ApiCallRecord infer_record(ApiCallRecord rec);

}  // namespace apibind

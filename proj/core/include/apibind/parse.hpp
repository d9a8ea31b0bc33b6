// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "apibind/record.hpp"

namespace apibind {

/// Runs the path, curl and parameter-table parsers on whichever raw fields
/// are present and attaches the results. Sub-parsers are independent: a
/// failure in one never changes another's output. Records that already carry
/// parse artifacts are returned unchanged.
ApiCallRecord parse_record(ApiCallRecord rec);

}  // namespace apibind

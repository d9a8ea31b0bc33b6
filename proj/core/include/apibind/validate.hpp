// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bitset>
#include <vector>

#include "apibind/record.hpp"

namespace apibind {

enum class Check {
  PathVariablesDeclared,  // E_PATHVAR_UNDECLARED
  PathParametersUsed,     // E_PARAM_PATH_UNUSED
  UniqueParameterNames,   // E_DUP_PARAM
  CurlMethodMatches,      // E_METHOD_MISMATCH
  NoBodyOnGet,            // W_BODY_ON_GET
  HasPayloadExample,      // W_NO_EXAMPLE
};
inline constexpr std::size_t kCheckCount = 6;

class CheckSet {
 public:
  static CheckSet all() { return CheckSet(std::bitset<kCheckCount>().set()); }
  static CheckSet none() { return CheckSet({}); }
  static CheckSet from_mask(unsigned mask) { return CheckSet(std::bitset<kCheckCount>(mask)); }

  bool contains(Check c) const { return bits_.test(static_cast<std::size_t>(c)); }
  CheckSet without(Check c) const {
    auto b = bits_;
    b.reset(static_cast<std::size_t>(c));
    return CheckSet(b);
  }

 private:
  explicit CheckSet(std::bitset<kCheckCount> bits) : bits_(bits) {}
  std::bitset<kCheckCount> bits_;
};

/// Runs every selected consistency check, independent of earlier failures,
/// appending one issue per finding.
ApiCallRecord cross_validate(ApiCallRecord rec, CheckSet checks = CheckSet::all());

struct Routed {
  std::vector<ApiCallRecord> valid;
  std::vector<ApiCallRecord> rejected;
};

/// Valid records carry no Error issue; in strict mode they carry no issue at
/// all. Relative order is preserved within each side.
bool passes_gate(const ApiCallRecord& rec, bool strict = false);
Routed route(std::vector<ApiCallRecord> records, bool strict = false);

}  // namespace apibind

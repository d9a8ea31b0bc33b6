// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared across modules.
namespace apibind::text {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);
bool iequals(std::string_view a, std::string_view b);
std::vector<std::string_view> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Splits an identifier-ish string into words: non-alphanumeric characters
/// separate words, as do lower-to-upper and digit-to-upper transitions and the
/// last capital of an acronym run ("HTTPServer" -> HTTP, Server).
std::vector<std::string> split_words(std::string_view s);

/// "user-info" -> "UserInfo"; empty input yields empty output.
std::string upper_camel(std::string_view s);

}  // namespace apibind::text

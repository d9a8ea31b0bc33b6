// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string_view>

namespace apibind {

enum class HttpMethod { GET, POST, PUT, PATCH, DELETE, HEAD, OPTIONS };

inline constexpr HttpMethod kAllMethods[] = {HttpMethod::GET,    HttpMethod::POST, HttpMethod::PUT,
                                             HttpMethod::PATCH,  HttpMethod::DELETE,
                                             HttpMethod::HEAD,   HttpMethod::OPTIONS};

std::string_view to_string(HttpMethod method);

/// Case-insensitive; surrounding whitespace ignored.
std::optional<HttpMethod> parse_http_method(std::string_view text);

}  // namespace apibind

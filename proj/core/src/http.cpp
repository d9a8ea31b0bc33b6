// SPDX-License-Identifier: Apache-2.0
#include "apibind/http.hpp"

#include <stdexcept>

#include "apibind/text.hpp"

namespace apibind {

std::string_view to_string(HttpMethod method) {
  switch (method) {
    case HttpMethod::GET: return "GET";
    case HttpMethod::POST: return "POST";
    case HttpMethod::PUT: return "PUT";
    case HttpMethod::PATCH: return "PATCH";
    case HttpMethod::DELETE: return "DELETE";
    case HttpMethod::HEAD: return "HEAD";
    case HttpMethod::OPTIONS: return "OPTIONS";
  }
  throw std::logic_error("unknown HTTP method");
}

std::optional<HttpMethod> parse_http_method(std::string_view text) {
  auto trimmed = text::trim(text);
  for (HttpMethod m : kAllMethods) {
    if (text::iequals(trimmed, to_string(m))) return m;
  }
  return std::nullopt;
}

}  // namespace apibind

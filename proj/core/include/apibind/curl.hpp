// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apibind/http.hpp"
#include "apibind/issue.hpp"

namespace apibind {

using NameValue = std::pair<std::string, std::string>;

enum class BodyKind { Json, Text, UrlEncoded };
std::string_view to_string(BodyKind kind);

struct CurlBody {
  BodyKind kind;
  std::string content;
  friend bool operator==(const CurlBody&, const CurlBody&) = default;
};

/// What a documented `curl ...` usage example asks for.
struct CurlRequest {
  HttpMethod method = HttpMethod::GET;
  std::string url;                 // verbatim, `{var}` placeholders untouched
  std::vector<NameValue> headers;  // in command-line order
  std::vector<NameValue> cookies;
  std::optional<CurlBody> body;
  std::vector<NameValue> query;    // URL query pairs, then `-G` data pairs; not decoded
  std::optional<std::string> auth_user;

  friend bool operator==(const CurlRequest&, const CurlRequest&) = default;
};

struct TokenizeResult {
  std::optional<std::vector<std::string>> words;
  std::vector<Issue> issues;
};

/// POSIX-like word splitting without expansion: single quotes are literal,
/// double quotes honour `\"` and `\\`, backslash-newline is removed.
TokenizeResult tokenize_shell(std::string_view raw);

struct CurlParseResult {
  std::optional<CurlRequest> value;  // absent whenever an error was tagged
  std::vector<Issue> issues;
};

CurlParseResult parse_curl(std::string_view raw);

struct UrlParts {
  std::string scheme;     // empty when the URL has none
  std::string authority;
  std::string path;       // raw, may be empty
  std::string query;      // raw text after `?`, fragment excluded
};

UrlParts split_url(std::string_view url);

/// `a=1&b&c=` -> (a,1) (b,"") (c,""); empty pieces are skipped.
std::vector<NameValue> split_query(std::string_view query);

/// Percent-encodes everything except ALPHA / DIGIT / `-._~`, as curl's
/// `--data-urlencode` does.
std::string url_encode_component(std::string_view s);

}  // namespace apibind

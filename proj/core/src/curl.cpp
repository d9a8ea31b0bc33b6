// SPDX-License-Identifier: Apache-2.0
#include "apibind/curl.hpp"

#include <algorithm>
#include <array>

#include "apibind/json.hpp"
#include "apibind/text.hpp"

namespace apibind {

std::string_view to_string(BodyKind kind) {
  switch (kind) {
    case BodyKind::Json: return "json";
    case BodyKind::Text: return "text";
    case BodyKind::UrlEncoded: return "urlencoded";
  }
  return "text";
}

TokenizeResult tokenize_shell(std::string_view raw) {
  TokenizeResult result;
  std::vector<std::string> words;
  std::string current;
  bool in_word = false;

  auto fail = [&](std::size_t offset, std::string_view what) {
    result.issues.push_back(make_issue(IssueCode::E_CURL_TOKENIZE, Stage::Parse,
                                       std::string(what) + " at offset " + std::to_string(offset),
                                       "curl_example"));
    return result;
  };

  std::size_t i = 0;
  while (i < raw.size()) {
    char c = raw[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      if (in_word) {
        words.push_back(std::move(current));
        current.clear();
        in_word = false;
      }
      ++i;
    } else if (c == '\\') {
      if (i + 1 < raw.size() && raw[i + 1] == '\n') {
        i += 2;
      } else if (i + 2 < raw.size() && raw[i + 1] == '\r' && raw[i + 2] == '\n') {
        i += 3;
      } else if (i + 1 < raw.size()) {
        current += raw[i + 1];
        in_word = true;
        i += 2;
      } else {
        current += '\\';
        in_word = true;
        ++i;
      }
    } else if (c == '\'') {
      auto close = raw.find('\'', i + 1);
      if (close == std::string_view::npos) return fail(i, "unterminated single quote");
      current.append(raw.substr(i + 1, close - i - 1));
      in_word = true;
      i = close + 1;
    } else if (c == '"') {
      std::size_t open = i++;
      bool closed = false;
      while (i < raw.size()) {
        char d = raw[i];
        if (d == '"') {
          closed = true;
          ++i;
          break;
        }
        if (d == '\\' && i + 1 < raw.size()) {
          char e = raw[i + 1];
          if (e == '"' || e == '\\' || e == '$' || e == '`') {
            current += e;
            i += 2;
            continue;
          }
          if (e == '\n') {
            i += 2;
            continue;
          }
        }
        current += d;
        ++i;
      }
      if (!closed) return fail(open, "unterminated double quote");
      in_word = true;
    } else {
      current += c;
      in_word = true;
      ++i;
    }
  }
  if (in_word) words.push_back(std::move(current));
  result.words = std::move(words);
  return result;
}

std::string url_encode_component(std::string_view s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                      c == '-' || c == '.' || c == '_' || c == '~';
    if (unreserved) {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 0xF];
    }
  }
  return out;
}

UrlParts split_url(std::string_view url) {
  UrlParts parts;
  std::string_view rest = url;
  if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
  if (auto scheme_end = rest.find("://"); scheme_end != std::string_view::npos &&
                                          rest.substr(0, scheme_end).find_first_of("/?") ==
                                              std::string_view::npos) {
    parts.scheme = std::string(rest.substr(0, scheme_end));
    rest.remove_prefix(scheme_end + 3);
  }
  if (!parts.scheme.empty() || (!rest.empty() && rest.front() != '/')) {
    auto end = rest.find_first_of("/?");
    parts.authority = std::string(rest.substr(0, end));
    rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
  }
  auto q = rest.find('?');
  parts.path = std::string(rest.substr(0, q));
  if (q != std::string_view::npos) parts.query = std::string(rest.substr(q + 1));
  return parts;
}

std::vector<NameValue> split_query(std::string_view query) {
  std::vector<NameValue> out;
  for (auto piece : text::split(query, '&')) {
    if (piece.empty()) continue;
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) {
      out.emplace_back(std::string(piece), std::string());
    } else {
      out.emplace_back(std::string(piece.substr(0, eq)), std::string(piece.substr(eq + 1)));
    }
  }
  return out;
}

namespace {

enum class Action {
  Request,
  Header,
  Data,          // -d, --data, --data-ascii
  DataRaw,
  DataBinary,
  DataUrlencode,
  Get,
  Cookie,
  User,
  Url,
  Form,          // multipart: unsupported
  IgnoredArg,
  IgnoredFlag,
};

struct OptionSpec {
  std::string_view long_name;
  char short_name;
  Action action;
};

bool takes_argument(Action a) { return a != Action::Get && a != Action::IgnoredFlag; }

constexpr std::array kOptions{
    OptionSpec{"request", 'X', Action::Request},
    OptionSpec{"header", 'H', Action::Header},
    OptionSpec{"data", 'd', Action::Data},
    OptionSpec{"data-ascii", '\0', Action::Data},
    OptionSpec{"data-raw", '\0', Action::DataRaw},
    OptionSpec{"data-binary", '\0', Action::DataBinary},
    OptionSpec{"data-urlencode", '\0', Action::DataUrlencode},
    OptionSpec{"get", 'G', Action::Get},
    OptionSpec{"cookie", 'b', Action::Cookie},
    OptionSpec{"user", 'u', Action::User},
    OptionSpec{"url", '\0', Action::Url},
    OptionSpec{"form", 'F', Action::Form},
    OptionSpec{"form-string", '\0', Action::Form},
    // Display and transport options that carry an argument; skipped whole.
    OptionSpec{"user-agent", 'A', Action::IgnoredArg},
    OptionSpec{"cookie-jar", 'c', Action::IgnoredArg},
    OptionSpec{"continue-at", 'C', Action::IgnoredArg},
    OptionSpec{"dump-header", 'D', Action::IgnoredArg},
    OptionSpec{"referer", 'e', Action::IgnoredArg},
    OptionSpec{"cert", 'E', Action::IgnoredArg},
    OptionSpec{"config", 'K', Action::IgnoredArg},
    OptionSpec{"max-time", 'm', Action::IgnoredArg},
    OptionSpec{"output", 'o', Action::IgnoredArg},
    OptionSpec{"ftp-port", 'P', Action::IgnoredArg},
    OptionSpec{"quote", 'Q', Action::IgnoredArg},
    OptionSpec{"range", 'r', Action::IgnoredArg},
    OptionSpec{"telnet-option", 't', Action::IgnoredArg},
    OptionSpec{"upload-file", 'T', Action::IgnoredArg},
    OptionSpec{"proxy-user", 'U', Action::IgnoredArg},
    OptionSpec{"write-out", 'w', Action::IgnoredArg},
    OptionSpec{"proxy", 'x', Action::IgnoredArg},
    OptionSpec{"speed-time", 'y', Action::IgnoredArg},
    OptionSpec{"speed-limit", 'Y', Action::IgnoredArg},
    OptionSpec{"time-cond", 'z', Action::IgnoredArg},
    OptionSpec{"connect-timeout", '\0', Action::IgnoredArg},
    OptionSpec{"retry", '\0', Action::IgnoredArg},
    OptionSpec{"retry-delay", '\0', Action::IgnoredArg},
    OptionSpec{"retry-max-time", '\0', Action::IgnoredArg},
    OptionSpec{"cacert", '\0', Action::IgnoredArg},
    OptionSpec{"capath", '\0', Action::IgnoredArg},
    OptionSpec{"cert-type", '\0', Action::IgnoredArg},
    OptionSpec{"key", '\0', Action::IgnoredArg},
    OptionSpec{"key-type", '\0', Action::IgnoredArg},
    OptionSpec{"pass", '\0', Action::IgnoredArg},
    OptionSpec{"resolve", '\0', Action::IgnoredArg},
    OptionSpec{"connect-to", '\0', Action::IgnoredArg},
    OptionSpec{"interface", '\0', Action::IgnoredArg},
    OptionSpec{"limit-rate", '\0', Action::IgnoredArg},
    OptionSpec{"max-redirs", '\0', Action::IgnoredArg},
    OptionSpec{"oauth2-bearer", '\0', Action::IgnoredArg},
    OptionSpec{"noproxy", '\0', Action::IgnoredArg},
    OptionSpec{"request-target", '\0', Action::IgnoredArg},
    OptionSpec{"trace", '\0', Action::IgnoredArg},
    OptionSpec{"trace-ascii", '\0', Action::IgnoredArg},
    OptionSpec{"stderr", '\0', Action::IgnoredArg},
    OptionSpec{"unix-socket", '\0', Action::IgnoredArg},
    OptionSpec{"aws-sigv4", '\0', Action::IgnoredArg},
    OptionSpec{"ciphers", '\0', Action::IgnoredArg},
    OptionSpec{"dns-servers", '\0', Action::IgnoredArg},
    OptionSpec{"local-port", '\0', Action::IgnoredArg},
    OptionSpec{"max-filesize", '\0', Action::IgnoredArg},
    OptionSpec{"proto", '\0', Action::IgnoredArg},
    OptionSpec{"proto-redir", '\0', Action::IgnoredArg},
    OptionSpec{"socks5", '\0', Action::IgnoredArg},
    OptionSpec{"socks5-hostname", '\0', Action::IgnoredArg},
    OptionSpec{"expect100-timeout", '\0', Action::IgnoredArg},
    OptionSpec{"keepalive-time", '\0', Action::IgnoredArg},
};

const OptionSpec* find_long(std::string_view name) {
  auto it = std::find_if(kOptions.begin(), kOptions.end(),
                         [&](const OptionSpec& o) { return o.long_name == name; });
  return it == kOptions.end() ? nullptr : &*it;
}

const OptionSpec* find_short(char c) {
  auto it = std::find_if(kOptions.begin(), kOptions.end(),
                         [&](const OptionSpec& o) { return o.short_name == c; });
  return it == kOptions.end() ? nullptr : &*it;
}

struct CurlState {
  std::optional<std::string> explicit_method;
  bool get_flag = false;
  std::vector<std::string> data;
  std::vector<NameValue> headers;
  std::vector<NameValue> cookies;
  std::vector<std::string> urls;
  std::optional<std::string> user;
  std::vector<Issue> issues;

  void error(IssueCode code, std::string message) {
    issues.push_back(make_issue(code, Stage::Parse, std::move(message), "curl_example"));
  }
  void ignored(std::string message) {
    issues.push_back(make_issue(IssueCode::W_CURL_OPT_IGNORED, Stage::Parse, std::move(message),
                                "curl_example"));
  }
};

// curl form-encodes these: space becomes '+'.
std::string form_encode(std::string_view s) {
  std::string out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto sp = s.find(' ', start);
    if (sp == std::string_view::npos) sp = s.size();
    out += url_encode_component(s.substr(start, sp - start));
    if (sp < s.size()) out += '+';
    start = sp + 1;
  }
  return out;
}

void encode_urlencoded_data(CurlState& st, std::string_view arg) {
  auto eq = arg.find('=');
  auto at = arg.find('@');
  if (eq != std::string_view::npos && (at == std::string_view::npos || eq < at)) {
    std::string_view name = arg.substr(0, eq);
    std::string encoded = form_encode(arg.substr(eq + 1));
    st.data.push_back(name.empty() ? encoded : std::string(name) + "=" + encoded);
  } else if (at != std::string_view::npos) {
    st.error(IssueCode::E_CURL_UNSUPPORTED, "--data-urlencode reading from a file is unsupported");
  } else {
    st.data.push_back(form_encode(arg));
  }
}

void apply(CurlState& st, const OptionSpec& spec, std::string_view shown, std::string_view arg) {
  switch (spec.action) {
    case Action::Request:
      st.explicit_method = std::string(arg);
      break;
    case Action::Header: {
      auto colon = arg.find(':');
      if (colon == std::string_view::npos) {
        if (!arg.empty() && arg.back() == ';') {
          st.headers.emplace_back(std::string(text::trim(arg.substr(0, arg.size() - 1))), "");
        } else {
          st.ignored("malformed header '" + std::string(arg) + "' ignored");
        }
        break;
      }
      std::string name(text::trim(arg.substr(0, colon)));
      std::string value(text::trim(arg.substr(colon + 1)));
      if (value.empty()) {
        st.ignored("header removal '" + std::string(arg) + "' ignored");
        break;
      }
      st.headers.emplace_back(std::move(name), std::move(value));
      break;
    }
    case Action::Data:
    case Action::DataBinary:
      if (!arg.empty() && arg.front() == '@') {
        st.error(IssueCode::E_CURL_UNSUPPORTED,
                 std::string(shown) + " reading from a file is unsupported");
        break;
      }
      st.data.emplace_back(arg);
      break;
    case Action::DataRaw:
      st.data.emplace_back(arg);
      break;
    case Action::DataUrlencode:
      encode_urlencoded_data(st, arg);
      break;
    case Action::Get:
      st.get_flag = true;
      break;
    case Action::Cookie:
      if (arg.find('=') == std::string_view::npos) {
        st.error(IssueCode::E_CURL_UNSUPPORTED, "cookie file '" + std::string(arg) + "' is unsupported");
        break;
      }
      for (auto piece : text::split(arg, ';')) {
        piece = text::trim(piece);
        if (piece.empty()) continue;
        auto eq = piece.find('=');
        if (eq == std::string_view::npos) {
          st.cookies.emplace_back(std::string(piece), "");
        } else {
          st.cookies.emplace_back(std::string(piece.substr(0, eq)), std::string(piece.substr(eq + 1)));
        }
      }
      break;
    case Action::User:
      st.user = std::string(arg);
      break;
    case Action::Url:
      st.urls.emplace_back(arg);
      break;
    case Action::Form:
      st.error(IssueCode::E_CURL_UNSUPPORTED, "multipart form option " + std::string(shown) + " is unsupported");
      break;
    case Action::IgnoredArg:
      st.ignored("option " + std::string(shown) + " ignored");
      break;
    case Action::IgnoredFlag:
      st.ignored("option " + std::string(shown) + " ignored");
      break;
  }
}

std::optional<BodyKind> kind_from_content_type(const std::vector<NameValue>& headers) {
  for (const auto& [name, value] : headers) {
    if (!text::iequals(name, "Content-Type")) continue;
    std::string v = text::to_lower(value);
    if (v.find("json") != std::string::npos) return BodyKind::Json;
    if (v.find("application/x-www-form-urlencoded") != std::string::npos) return BodyKind::UrlEncoded;
    return BodyKind::Text;
  }
  return std::nullopt;
}

}  // namespace

CurlParseResult parse_curl(std::string_view raw) {
  CurlParseResult result;
  auto tokens = tokenize_shell(raw);
  if (!tokens.words) {
    result.issues = std::move(tokens.issues);
    return result;
  }
  std::vector<std::string>& words = *tokens.words;
  std::size_t i = 0;
  if (i < words.size() && words[i] == "$") ++i;
  if (i >= words.size() || !(words[i] == "curl" || words[i].ends_with("/curl"))) {
    result.issues.push_back(make_issue(IssueCode::E_CURL_UNSUPPORTED, Stage::Parse,
                                       "example is not a curl command", "curl_example"));
    return result;
  }
  ++i;

  CurlState st;
  bool options_done = false;
  auto next_arg = [&](std::string_view shown) -> std::optional<std::string> {
    if (i + 1 < words.size()) return words[++i];
    st.error(IssueCode::E_CURL_UNSUPPORTED, "option " + std::string(shown) + " requires an argument");
    return std::nullopt;
  };

  for (; i < words.size(); ++i) {
    const std::string& tok = words[i];
    if (options_done || tok.size() < 2 || tok.front() != '-') {
      st.urls.push_back(tok);
      continue;
    }
    if (tok == "--") {
      options_done = true;
      continue;
    }
    if (tok.starts_with("--")) {
      std::string_view name = std::string_view(tok).substr(2);
      const OptionSpec* spec = find_long(name);
      if (!spec) {
        st.ignored("option " + tok + " ignored");
        continue;
      }
      std::string arg;
      if (takes_argument(spec->action)) {
        auto v = next_arg(tok);
        if (!v) break;
        arg = std::move(*v);
      }
      apply(st, *spec, tok, arg);
      continue;
    }
    // Short options may be clustered (-sS) and may carry an attached value (-XPOST).
    for (std::size_t j = 1; j < tok.size(); ++j) {
      char c = tok[j];
      std::string shown = std::string("-") + c;
      const OptionSpec* spec = find_short(c);
      if (!spec) {
        st.ignored("option " + shown + " ignored");
        continue;
      }
      if (!takes_argument(spec->action)) {
        apply(st, *spec, shown, {});
        continue;
      }
      std::string arg;
      if (j + 1 < tok.size()) {
        arg = tok.substr(j + 1);
      } else {
        auto v = next_arg(shown);
        if (!v) break;
        arg = std::move(*v);
      }
      apply(st, *spec, shown, arg);
      break;
    }
  }

  if (st.urls.empty()) {
    st.error(IssueCode::E_CURL_NO_URL, "curl example has no URL");
  } else if (st.urls.size() > 1) {
    for (std::size_t k = 1; k < st.urls.size(); ++k) st.ignored("extra URL '" + st.urls[k] + "' ignored");
  }

  CurlRequest req;
  if (st.explicit_method) {
    auto m = parse_http_method(*st.explicit_method);
    if (!m) {
      st.error(IssueCode::E_CURL_UNSUPPORTED, "request method '" + *st.explicit_method + "' is unsupported");
    } else {
      req.method = *m;
    }
  } else if (!st.data.empty()) {
    req.method = HttpMethod::POST;
  }
  if (st.get_flag) req.method = HttpMethod::GET;

  result.issues = std::move(st.issues);
  if (std::any_of(result.issues.begin(), result.issues.end(), [](const Issue& x) { return x.is_error(); })) {
    return result;
  }

  req.url = st.urls.front();
  req.headers = std::move(st.headers);
  req.cookies = std::move(st.cookies);
  req.auth_user = std::move(st.user);
  req.query = split_query(split_url(req.url).query);

  std::vector<std::string> data = std::move(st.data);
  if (!data.empty()) {
    std::string joined = text::join(data, "&");
    if (st.get_flag) {
      auto extra = split_query(joined);
      req.query.insert(req.query.end(), extra.begin(), extra.end());
    } else {
      BodyKind kind = BodyKind::UrlEncoded;
      if (auto declared = kind_from_content_type(req.headers)) {
        kind = *declared;
      } else if (parse_json(joined)) {
        kind = BodyKind::Json;
      }
      req.body = CurlBody{kind, std::move(joined)};
    }
  }
  result.value = std::move(req);
  return result;
}

}  // namespace apibind

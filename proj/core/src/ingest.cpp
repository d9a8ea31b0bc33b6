// SPDX-License-Identifier: Apache-2.0
#include "apibind/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "apibind/csv.hpp"
#include "apibind/text.hpp"

namespace apibind {

namespace {

enum Column { kRecordId, kSourceUrl, kMethod, kPath, kCurl, kParams, kRequest, kResponse, kDescription, kGroup };

std::optional<std::string> optional_cell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return cell;
}

Issue ingest_issue(IssueCode code, std::string message, std::string field) {
  return make_issue(code, Stage::Ingest, std::move(message), std::move(field));
}

std::vector<Issue> issues_from_cell(std::string_view cell) {
  std::vector<Issue> out;
  if (cell.empty()) return out;
  auto parsed = parse_json(cell);
  if (!parsed || !parsed.value->is_array()) {
    out.push_back(ingest_issue(IssueCode::E_JSON_CELL, "issues cell is not a JSON array", "issues"));
    return out;
  }
  for (const auto& item : *parsed.value) {
    std::optional<IssueCode> code;
    std::optional<Stage> stage;
    if (item.is_object() && item.contains("code") && item["code"].is_string()) {
      code = issue_code_from_string(item["code"].get<std::string>());
    }
    if (item.is_object() && item.contains("stage") && item["stage"].is_string()) {
      stage = stage_from_string(item["stage"].get<std::string>());
    }
    if (!code || !stage) {
      out.push_back(ingest_issue(IssueCode::E_JSON_CELL, "unrecognized issue entry " + item.dump(), "issues"));
      continue;
    }
    Issue issue{*code, *stage, "", std::nullopt};
    if (item.contains("message") && item["message"].is_string()) issue.message = item["message"].get<std::string>();
    if (item.contains("field") && item["field"].is_string()) issue.field = item["field"].get<std::string>();
    out.push_back(std::move(issue));
  }
  return out;
}

bool json_equivalent(const std::string& a, const std::string& b) {
  if (a == b) return true;
  auto pa = parse_json(a);
  auto pb = parse_json(b);
  return pa && pb && *pa.value == *pb.value;
}

std::vector<std::string> record_row(const ApiCallRecord& r, bool with_issues) {
  auto opt = [](const std::optional<std::string>& s) { return s.value_or(std::string()); };
  std::vector<std::string> row{r.id.to_cell(), r.source_url,       r.http_method,          r.raw_path,
                               opt(r.raw_curl), opt(r.raw_parameters), opt(r.request_example),
                               opt(r.response_example), opt(r.description), opt(r.group)};
  if (with_issues) row.push_back(issues_to_json(r.issues).dump());
  return row;
}

std::string records_csv(const std::vector<ApiCallRecord>& records, bool with_issues) {
  csv::Table table;
  for (auto name : kInputColumns) table.header.emplace_back(name);
  if (with_issues) table.header.emplace_back(kIssuesColumn);
  for (const auto& r : records) table.rows.push_back(record_row(r, with_issues));
  return csv::write(table);
}

}  // namespace

JsonValue issues_to_json(const std::vector<Issue>& issues) {
  JsonValue arr = JsonValue::array();
  for (const auto& i : issues) {
    JsonValue obj = JsonValue::object();
    obj["code"] = to_string(i.code);
    obj["severity"] = to_string(i.severity());
    obj["stage"] = to_string(i.stage);
    obj["message"] = i.message;
    if (i.field) obj["field"] = *i.field;
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::vector<Issue> check_cells(const ApiCallRecord& rec) {
  std::vector<Issue> out;
  static const std::regex kAbsoluteUrl(R"(^[A-Za-z][A-Za-z0-9+.\-]*://[^/\s?#]+([/?#]\S*)?$)");
  if (!std::regex_match(rec.source_url, kAbsoluteUrl)) {
    out.push_back(ingest_issue(IssueCode::E_SOURCE_URL,
                               "source_url '" + rec.source_url + "' is not an absolute URL", "source_url"));
  }
  if (!rec.method()) {
    out.push_back(ingest_issue(IssueCode::E_HTTP_METHOD,
                               "http_method '" + rec.http_method + "' is not recognized", "http_method"));
  }
  auto check_json = [&](const std::optional<std::string>& cell, const char* column) {
    if (!cell) return;
    auto parsed = parse_json(*cell);
    if (!parsed) {
      out.push_back(ingest_issue(IssueCode::E_JSON_CELL,
                                 std::string(column) + " is not JSON (offset " +
                                     std::to_string(parsed.error->offset) + ")",
                                 column));
    }
  };
  check_json(rec.raw_parameters, "parameters");
  check_json(rec.request_example, "request_example");
  check_json(rec.response_example, "response_example");
  return out;
}

std::vector<ApiCallRecord> load_corpus_text(std::string_view csv_text, std::string_view stem) {
  csv::Table table;
  try {
    table = csv::parse(csv_text);
  } catch (const csv::CsvError& e) {
    throw CorpusError(std::string(stem) + ": malformed CSV: " + e.what());
  }

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    std::string name(text::trim(table.header[c]));
    if (!index.emplace(name, c).second) throw CorpusError(std::string(stem) + ": duplicate column '" + name + "'");
  }
  for (auto required : {"source_url", "http_method", "path"}) {
    if (!index.contains(required)) {
      throw CorpusError(std::string(stem) + ": missing required column '" + required + "'");
    }
  }
  std::vector<std::optional<std::size_t>> columns;
  for (auto name : kInputColumns) {
    auto it = index.find(name);
    columns.push_back(it == index.end() ? std::nullopt : std::optional(it->second));
  }
  auto issues_col = index.find(kIssuesColumn);

  std::vector<ApiCallRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    auto cell = [&](Column c) -> std::string {
      return columns[c] ? row[*columns[c]] : std::string();
    };
    ApiCallRecord rec;
    std::string id_cell = cell(kRecordId);
    rec.id = id_cell.empty() ? RecordId(std::string(stem) + ":" + std::to_string(r + 1))
                             : RecordId::from_cell(id_cell);
    rec.source_url = cell(kSourceUrl);
    rec.http_method = cell(kMethod);
    if (auto m = parse_http_method(rec.http_method)) rec.http_method = std::string(to_string(*m));
    rec.raw_path = cell(kPath);
    rec.raw_curl = optional_cell(cell(kCurl));
    rec.raw_parameters = optional_cell(cell(kParams));
    rec.request_example = optional_cell(cell(kRequest));
    rec.response_example = optional_cell(cell(kResponse));
    rec.description = optional_cell(cell(kDescription));
    rec.group = optional_cell(cell(kGroup));
    if (issues_col != index.end()) rec.add_issues(issues_from_cell(row[issues_col->second]));
    rec.add_issues(check_cells(rec));
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<ApiCallRecord> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot read input file '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw CorpusError("error while reading '" + path.string() + "'");
  return load_corpus_text(buffer.str(), path.stem().string());
}

MergeKey merge_key(const ApiCallRecord& rec) {
  auto canonical = canonical_path(rec.raw_path);
  return MergeKey{rec.http_method, canonical.value_or(std::string(text::trim(rec.raw_path)))};
}

ApiCallRecord merge_records(const ApiCallRecord& a, const ApiCallRecord& b) {
  ApiCallRecord out = a;
  if (!a.method() || merge_key(a) != merge_key(b)) {
    out.add_issue(ingest_issue(IssueCode::E_MERGE_KEY_MISMATCH,
                               "cannot merge with record " + b.id.display() + ": different method or path",
                               "record_id"));
    return out;
  }
  out.id = a.id.merged_with(b.id);
  out.add_issues(b.issues);

  auto conflict = [&](const char* field) {
    out.add_issue(ingest_issue(IssueCode::W_MERGE_CONFLICT,
                               std::string(field) + " differs in merged record " + b.id.display() +
                                   "; first value kept",
                               field));
  };
  auto merge_text = [&](std::optional<std::string>& mine, const std::optional<std::string>& theirs,
                        const char* field, bool json) {
    if (!theirs) return;
    if (!mine) {
      mine = theirs;
      return;
    }
    bool same = json ? json_equivalent(*mine, *theirs) : *mine == *theirs;
    if (!same) conflict(field);
  };

  if (out.source_url.empty()) {
    out.source_url = b.source_url;
  } else if (!b.source_url.empty() && out.source_url != b.source_url) {
    conflict("source_url");
  }
  merge_text(out.raw_curl, b.raw_curl, "curl_example", false);
  merge_text(out.raw_parameters, b.raw_parameters, "parameters", true);
  merge_text(out.request_example, b.request_example, "request_example", true);
  merge_text(out.response_example, b.response_example, "response_example", true);
  merge_text(out.description, b.description, "description", false);
  merge_text(out.group, b.group, "group", false);
  if (!out.parsed) out.parsed = b.parsed;
  if (!out.inferred) out.inferred = b.inferred;
  return out;
}

std::vector<ApiCallRecord> merge_corpus(std::vector<ApiCallRecord> records) {
  std::vector<ApiCallRecord> out;
  std::vector<MergeKey> keys;
  for (auto& rec : records) {
    if (rec.method()) {
      MergeKey key = merge_key(rec);
      auto it = std::find(keys.begin(), keys.end(), key);
      if (it != keys.end()) {
        auto& target = out[static_cast<std::size_t>(it - keys.begin())];
        target = merge_records(target, rec);
        continue;
      }
      keys.push_back(std::move(key));
    } else {
      keys.push_back(MergeKey{});  // unmergeable; lookups only use keys with a method
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string stage_csv(const std::vector<ApiCallRecord>& records) { return records_csv(records, true); }

std::string source_csv(const std::vector<ApiCallRecord>& records) { return records_csv(records, false); }

void write_stage(const std::vector<ApiCallRecord>& records, const std::filesystem::path& path) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw CorpusError("cannot write '" + path.string() + "'");
  out << stage_csv(records);
  if (!out) throw CorpusError("error while writing '" + path.string() + "'");
}

}  // namespace apibind

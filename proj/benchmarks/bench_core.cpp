// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "apibind/curl.hpp"
#include "apibind/infer.hpp"
#include "apibind/ingest.hpp"
#include "apibind/parse.hpp"
#include "apibind/path_template.hpp"
#include "apibind/types.hpp"
#include "apibind/validate.hpp"

namespace {

using namespace apibind;

std::vector<JsonValue> sample_docs(int n) {
  std::vector<JsonValue> docs;
  for (int i = 0; i < n; ++i) {
    JsonValue d = {{"id", "u" + std::to_string(i)}, {"age", i}, {"tags", JsonValue::array({"a", "b"})}};
    if (i % 3 == 0) d["score"] = i / 7.0;
    if (i % 5 == 0) d["manager"] = {{"id", "m"}, {"level", i % 4}};
    if (i % 7 == 0) d["age"] = nullptr;
    docs.push_back(std::move(d));
  }
  return docs;
}

void BM_InferFromExamples(benchmark::State& state) {
  auto docs = sample_docs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(infer_from_examples(docs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_InferFromExamples)->Arg(8)->Arg(64)->Arg(512);

void BM_Unify(benchmark::State& state) {
  auto docs = sample_docs(16);
  auto a = infer_from_examples(std::vector<JsonValue>(docs.begin(), docs.begin() + 8));
  auto b = infer_from_examples(std::vector<JsonValue>(docs.begin() + 8, docs.end()));
  for (auto _ : state) benchmark::DoNotOptimize(unify(a, b));
}
BENCHMARK(BM_Unify);

void BM_ParseCurl(benchmark::State& state) {
  const std::string line =
      "curl -X POST 'https://api.example.com/v1.0/users/{user-id}/messages?$select=id,subject' "
      "-H 'Authorization: Bearer TOKEN' -H 'Content-Type: application/json' "
      "-d '{\"subject\":\"hi\",\"body\":{\"content\":\"x\"},\"to\":[\"a@example.com\"]}'";
  for (auto _ : state) benchmark::DoNotOptimize(parse_curl(line));
}
BENCHMARK(BM_ParseCurl);

void BM_ParsePathTemplate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_path_template("/v1.0/drives/{drive-id}/items/:item-id/children"));
}
BENCHMARK(BM_ParsePathTemplate);

void BM_RecordPipeline(benchmark::State& state) {
  ApiCallRecord rec;
  rec.id = RecordId("bench");
  rec.source_url = "https://docs.example.com/bench";
  rec.http_method = "GET";
  rec.raw_path = "/users/{user-id}";
  rec.raw_curl = "curl https://api.example.com/users/u1 -H 'Authorization: Bearer T'";
  rec.raw_parameters = R"([{"name":"user-id","in":"path","type":"string"},{"name":"$top","in":"query","example":5}])";
  rec.response_example = sample_docs(4)[1].dump();
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(infer_record(parse_record(rec))));
}
BENCHMARK(BM_RecordPipeline);

void BM_StageCsvRoundTrip(benchmark::State& state) {
  std::vector<ApiCallRecord> recs;
  for (int i = 0; i < state.range(0); ++i) {
    ApiCallRecord r;
    r.id = RecordId("r" + std::to_string(i));
    r.source_url = "https://docs.example.com/r";
    r.http_method = "POST";
    r.raw_path = "/r";
    r.request_example = R"({"a":"x, \"y\"","b":[1,2]})";
    r.description = "multi\nline, quoted \"text\"";
    recs.push_back(std::move(r));
  }
  for (auto _ : state) benchmark::DoNotOptimize(load_corpus_text(stage_csv(recs), "bench"));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_StageCsvRoundTrip)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();

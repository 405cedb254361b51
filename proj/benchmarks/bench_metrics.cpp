#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "sumeval/bertscore.hpp"
#include "sumeval/evaluator.hpp"
#include "sumeval/extractive.hpp"
#include "sumeval/fixtures.hpp"
#include "sumeval/rouge.hpp"
#include "sumeval/textproc.hpp"

using namespace sumeval;

namespace {

text::TokenSeq random_tokens(std::size_t n, std::size_t alphabet, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet - 1);
  text::TokenSeq out(n);
  for (auto& t : out) t = "w" + std::to_string(pick(rng));
  return out;
}

bertscore::EmbeddingMatrix random_matrix(std::size_t rows, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<std::vector<double>> v(rows, std::vector<double>(dim));
  std::vector<std::string> labels(rows, "t");
  for (auto& r : v) {
    for (auto& x : r) x = g(rng);
  }
  return bertscore::EmbeddingMatrix("m", labels, v, dim);
}

void BM_LcsLength(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_tokens(n, 50, 1);
  const auto b = random_tokens(n, 50, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rouge::lcs_length(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LcsLength)->RangeMultiplier(2)->Range(16, 512)->Complexity(benchmark::oNSquared);

void BM_RougeN(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_tokens(n, 200, 3);
  const auto b = random_tokens(n, 200, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rouge::rouge_n(a, b, 2));
}
BENCHMARK(BM_RougeN)->RangeMultiplier(4)->Range(16, 1024);

void BM_GreedyMatch(benchmark::State& state) {
  const auto rows = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(rows, 768, 5);
  const auto b = random_matrix(rows, 768, 6);
  for (auto _ : state) benchmark::DoNotOptimize(bertscore::greedy_match_score(a, b));
}
BENCHMARK(BM_GreedyMatch)->RangeMultiplier(2)->Range(16, 128);

void BM_Tokenize(benchmark::State& state) {
  const auto article = fixtures::load_fixture(8).article;
  for (auto _ : state) benchmark::DoNotOptimize(text::tokenize(article));
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * article.size()));
}
BENCHMARK(BM_Tokenize);

void BM_TextRankAppendix(benchmark::State& state) {
  std::vector<std::string> articles;
  for (int n = 1; n <= fixtures::kExampleCount; ++n) articles.push_back(fixtures::load_fixture(n).article);
  for (auto _ : state) {
    for (const auto& a : articles) benchmark::DoNotOptimize(extractive::textrank_summarize(a, 1));
  }
}
BENCHMARK(BM_TextRankAppendix);

void BM_EvaluateAppendix(benchmark::State& state) {
  const auto corpus = fixtures::appendix_corpus();
  std::vector<corpus::SystemOutput> outputs;
  for (auto key : fixtures::kSystemKeys) outputs.push_back(fixtures::appendix_outputs(key));
  const std::vector<eval::MetricSpec> metrics = {eval::MetricSpec::rouge(eval::MetricKind::Rouge1),
                                                 eval::MetricSpec::rouge(eval::MetricKind::Rouge2),
                                                 eval::MetricSpec::rouge(eval::MetricKind::RougeL)};
  eval::EvaluateOptions options;
  options.jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval::evaluate(corpus, outputs, metrics, corpus::Split::Test, options));
  }
}
BENCHMARK(BM_EvaluateAppendix)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();

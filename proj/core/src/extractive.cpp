#include "sumeval/extractive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace sumeval::extractive {
namespace {

std::string join_sentences(const text::SentenceList& sentences,
                           std::span<const std::size_t> indices) {
  std::string out;
  for (std::size_t i : indices) {
    if (!out.empty()) out.push_back(' ');
    out += sentences[i].text;
  }
  return out;
}

}  // namespace

void TextRankParams::validate() const {
  if (!(damping > 0.0 && damping < 1.0)) {
    throw std::invalid_argument("damping must lie strictly between 0 and 1");
  }
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be at least 1");
}

SentenceGraph::SentenceGraph(std::size_t nodes) : n_(nodes), w_(nodes * nodes, 0.0) {}

void SentenceGraph::set_weight(std::size_t i, std::size_t j, double w) {
  if (i >= n_ || j >= n_) throw std::out_of_range("SentenceGraph: node index out of range");
  if (i == j) throw std::invalid_argument("SentenceGraph: self loops are not allowed");
  if (!(w >= 0.0) || !std::isfinite(w)) {
    throw std::invalid_argument("SentenceGraph: weights must be finite and non-negative");
  }
  w_[i * n_ + j] = w;
  w_[j * n_ + i] = w;
}

std::string lead_n(std::string_view article, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lead_n: n must be at least 1");
  const auto sentences = text::split_sentences(article);
  std::vector<std::size_t> first(std::min(n, sentences.size()));
  for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
  return join_sentences(sentences, first);
}

double sentence_similarity(std::span<const std::string> si,
                           std::span<const std::string> sj) {
  if (si.empty() || sj.empty()) return 0.0;
  const double denom = std::log(static_cast<double>(si.size())) +
                       std::log(static_cast<double>(sj.size()));
  if (denom <= 0.0) return 0.0;

  const std::unordered_set<std::string_view> left(si.begin(), si.end());
  std::unordered_set<std::string_view> shared;
  for (const auto& tok : sj) {
    if (left.count(tok) != 0) shared.insert(tok);
  }
  return static_cast<double>(shared.size()) / denom;
}

SentenceGraph build_graph(std::span<const text::TokenSeq> sentences) {
  SentenceGraph graph(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    for (std::size_t j = i + 1; j < sentences.size(); ++j) {
      graph.set_weight(i, j, sentence_similarity(sentences[i], sentences[j]));
    }
  }
  return graph;
}

PageRankResult pagerank(const SentenceGraph& graph, const TextRankParams& params) {
  params.validate();
  const std::size_t n = graph.size();
  const double d = params.damping;

  std::vector<double> out_weight(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) out_weight[j] += graph.weight(j, k);
  }

  PageRankResult result;
  result.scores.assign(n, 1.0);
  std::vector<double> next(n);
  for (int it = 1; it <= params.max_iterations; ++it) {
    double max_change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double incoming = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = graph.weight(j, i);
        if (w > 0.0 && out_weight[j] > 0.0) {
          incoming += w / out_weight[j] * result.scores[j];
        }
      }
      next[i] = (1.0 - d) + d * incoming;
      max_change = std::max(max_change, std::abs(next[i] - result.scores[i]));
    }
    result.scores.swap(next);
    result.iterations = it;
    if (max_change < params.epsilon) {
      result.converged = true;
      break;
    }
  }
  return result;
}

TextRankResult textrank_summarize(std::string_view article, std::size_t k,
                                  const TextRankParams& params) {
  if (k == 0) throw std::invalid_argument("textrank_summarize: k must be at least 1");
  params.validate();

  TextRankResult result;
  result.sentences = text::split_sentences(article);
  if (result.sentences.empty()) return result;

  std::vector<text::TokenSeq> tokens;
  tokens.reserve(result.sentences.size());
  for (const auto& s : result.sentences) tokens.push_back(text::tokenize(s.text));

  result.pagerank = pagerank(build_graph(tokens), params);
  auto& ranking = result.ranked.ranking;
  for (std::size_t i = 0; i < result.pagerank.scores.size(); ++i) {
    ranking.emplace_back(i, result.pagerank.scores[i]);
  }
  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });

  auto& selection = result.ranked.selection;
  for (std::size_t i = 0; i < std::min(k, ranking.size()); ++i) {
    selection.push_back(ranking[i].first);
  }
  std::sort(selection.begin(), selection.end());
  result.summary = join_sentences(result.sentences, selection);
  return result;
}

}  // namespace sumeval::extractive

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumeval/textproc.hpp"

/// Extractive baselines: LEAD-N and sentence-level TextRank.
namespace sumeval::extractive {

struct TextRankParams {
  double damping = 0.85;
  /// Convergence threshold on the largest absolute score change.
  double epsilon = 1e-6;
  int max_iterations = 100;

  /// Throws std::invalid_argument unless 0 < damping < 1, epsilon > 0 and
  /// max_iterations >= 1.
  void validate() const;
};

/// Undirected weighted sentence graph: symmetric, non-negative, zero diagonal.
class SentenceGraph {
 public:
  SentenceGraph() = default;
  explicit SentenceGraph(std::size_t nodes);

  std::size_t size() const { return n_; }
  double weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }

  /// Sets both (i, j) and (j, i). Throws std::invalid_argument for i == j
  /// or a negative or non-finite weight.
  void set_weight(std::size_t i, std::size_t j, double w);

 private:
  std::size_t n_ = 0;
  std::vector<double> w_;
};

struct PageRankResult {
  std::vector<double> scores;
  int iterations = 0;
  bool converged = false;
};

struct RankedSentences {
  /// (sentence index, score), best first; equal scores keep document order.
  std::vector<std::pair<std::size_t, double>> ranking;
  /// Chosen sentence indices, ascending.
  std::vector<std::size_t> selection;
};

struct TextRankResult {
  std::string summary;
  RankedSentences ranked;
  text::SentenceList sentences;
  PageRankResult pagerank;
};

/// First min(n, sentence count) sentences joined by single spaces.
/// Throws std::invalid_argument when n == 0.
std::string lead_n(std::string_view article, std::size_t n);

/// Distinct shared tokens over ln|si| + ln|sj|; 0 when either side is empty
/// or the denominator is not positive.
double sentence_similarity(std::span<const std::string> si,
                           std::span<const std::string> sj);

SentenceGraph build_graph(std::span<const text::TokenSeq> sentences);

/// Weighted TextRank iteration from all-ones:
///   S(i) = (1 - d) + d * sum_j w(j,i) / sum_k w(j,k) * S(j)
/// over neighbours j with positive total weight, until the largest change
/// drops below epsilon or max_iterations is reached.
PageRankResult pagerank(const SentenceGraph& graph, const TextRankParams& params = {});

/// Top-k sentences by TextRank score in document order. An empty article
/// yields an empty summary; k == 0 throws std::invalid_argument.
TextRankResult textrank_summarize(std::string_view article, std::size_t k = 1,
                                  const TextRankParams& params = {});

}  // namespace sumeval::extractive

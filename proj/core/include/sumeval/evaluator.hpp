#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumeval/corpus.hpp"
#include "sumeval/extractive.hpp"

namespace sumeval::eval {

enum class MetricKind { Rouge1, Rouge2, RougeL, BertScore };

/// Report order: ROUGE-1, ROUGE-2, ROUGE-L, BERTScore.
inline constexpr MetricKind kAllMetrics[] = {MetricKind::Rouge1, MetricKind::Rouge2,
                                             MetricKind::RougeL, MetricKind::BertScore};

/// "rouge1", "rouge2", "rougeL", "bertscore".
std::string_view to_string(MetricKind kind);
/// "ROUGE-1", "ROUGE-2", "ROUGE-L", "BERTScore".
std::string_view display_name(MetricKind kind);
std::optional<MetricKind> parse_metric(std::string_view name);

struct MetricSpec {
  MetricKind kind = MetricKind::Rouge1;
  /// Required for BERTScore only.
  std::filesystem::path candidate_embeddings;
  std::filesystem::path reference_embeddings;

  static MetricSpec rouge(MetricKind kind) { return {kind, {}, {}}; }
  static MetricSpec bertscore(std::filesystem::path candidates,
                              std::filesystem::path references) {
    return {MetricKind::BertScore, std::move(candidates), std::move(references)};
  }

  /// Throws std::invalid_argument when a BERTScore spec lacks a store path.
  void validate() const;
};

/// Macro averages in percent over the scored pairs.
struct MetricResult {
  MetricKind kind = MetricKind::Rouge1;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t pairs = 0;
  /// Reference ids absent from the system output, sorted.
  std::vector<std::string> missing;

  friend bool operator==(const MetricResult&, const MetricResult&) = default;
};

struct SystemResult {
  std::string name;
  std::vector<MetricResult> metrics;

  const MetricResult* find(MetricKind kind) const;
  friend bool operator==(const SystemResult&, const SystemResult&) = default;
};

struct MetricReport {
  std::vector<SystemResult> systems;

  /// Metrics present in any row, in report order.
  std::vector<MetricKind> columns() const;
  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

struct EvaluateOptions {
  /// Score ids missing from a system output as 0 instead of excluding them.
  bool strict_missing = false;
  /// Worker threads for per-pair scoring; results do not depend on it.
  std::size_t jobs = 1;
};

/// Scores every system against the references of `split`.
///
/// ROUGE runs over text::tokenize of both sides. BERTScore looks up the
/// reference under the record id and the candidate under "<system>/<id>",
/// falling back to the bare id when a single system is evaluated.
/// Aggregation sums sorted per-pair values, so the report is independent
/// of record order and of the number of workers.
///
/// Throws DataError for an empty split or an embedding store that lacks a
/// required id, std::invalid_argument for an invalid MetricSpec.
MetricReport evaluate(const corpus::Corpus& corpus,
                      std::span<const corpus::SystemOutput> outputs,
                      std::span<const MetricSpec> metrics, corpus::Split split,
                      const EvaluateOptions& options = {});

struct Baseline {
  enum class Kind { Lead, TextRank };

  Kind kind = Kind::Lead;
  /// N for LEAD-N, k for TextRank.
  std::size_t count = 1;
  extractive::TextRankParams params;

  static Baseline lead(std::size_t n) { return {Kind::Lead, n, {}}; }
  static Baseline textrank(std::size_t k, extractive::TextRankParams params = {}) {
    return {Kind::TextRank, k, params};
  }

  /// "LEAD-1", "TextRank", ...
  std::string default_name() const;
};

/// One candidate per record of `split`, in corpus order. Throws DataError
/// for an empty split.
corpus::SystemOutput run_baseline(const corpus::Corpus& corpus, const Baseline& baseline,
                                  corpus::Split split, std::size_t jobs = 1);

}  // namespace sumeval::eval

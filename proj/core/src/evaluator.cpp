#include "sumeval/evaluator.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

#include "parallel.hpp"
#include "sumeval/bertscore.hpp"
#include "sumeval/rouge.hpp"
#include "sumeval/textproc.hpp"

namespace sumeval::eval {
namespace {

using corpus::DocumentRecord;

double sorted_sum(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

struct PairScores {
  bool missing = false;
  std::vector<Prf> per_metric;
};

struct StorePair {
  std::shared_ptr<const bertscore::EmbeddingStore> candidates;
  std::shared_ptr<const bertscore::EmbeddingStore> references;
};

// Opens each distinct store once.
class StoreCache {
 public:
  std::shared_ptr<const bertscore::EmbeddingStore> get(const std::filesystem::path& path) {
    const auto key = path.lexically_normal().string();
    auto it = stores_.find(key);
    if (it == stores_.end()) {
      auto store = std::make_shared<const bertscore::EmbeddingStore>(
          bertscore::EmbeddingStore::open(path));
      it = stores_.emplace(key, std::move(store)).first;
    }
    return it->second;
  }

 private:
  std::map<std::string, std::shared_ptr<const bertscore::EmbeddingStore>> stores_;
};

std::string candidate_key(const std::string& system, const std::string& id,
                          const bertscore::EmbeddingProvider& store,
                          bool allow_bare_id) {
  std::string qualified = system + "/" + id;
  if (store.contains(qualified)) return qualified;
  if (allow_bare_id && store.contains(id)) return id;
  throw DataError("embedding store " + store.source() + " has no entry for '" +
                  qualified + "'" + (allow_bare_id ? " or '" + id + "'" : std::string{}));
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::Rouge1: return "rouge1";
    case MetricKind::Rouge2: return "rouge2";
    case MetricKind::RougeL: return "rougeL";
    case MetricKind::BertScore: return "bertscore";
  }
  return "rouge1";
}

std::string_view display_name(MetricKind kind) {
  switch (kind) {
    case MetricKind::Rouge1: return "ROUGE-1";
    case MetricKind::Rouge2: return "ROUGE-2";
    case MetricKind::RougeL: return "ROUGE-L";
    case MetricKind::BertScore: return "BERTScore";
  }
  return "ROUGE-1";
}

std::optional<MetricKind> parse_metric(std::string_view name) {
  for (MetricKind k : kAllMetrics) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

void MetricSpec::validate() const {
  if (kind == MetricKind::BertScore &&
      (candidate_embeddings.empty() || reference_embeddings.empty())) {
    throw std::invalid_argument(
        "bertscore requires both a candidate and a reference embedding store");
  }
}

const MetricResult* SystemResult::find(MetricKind kind) const {
  for (const auto& m : metrics) {
    if (m.kind == kind) return &m;
  }
  return nullptr;
}

std::vector<MetricKind> MetricReport::columns() const {
  std::vector<MetricKind> out;
  for (MetricKind k : kAllMetrics) {
    const bool present = std::any_of(systems.begin(), systems.end(),
                                     [k](const SystemResult& s) { return s.find(k) != nullptr; });
    if (present) out.push_back(k);
  }
  return out;
}

MetricReport evaluate(const corpus::Corpus& corpus,
                      std::span<const corpus::SystemOutput> outputs,
                      std::span<const MetricSpec> metrics, corpus::Split split,
                      const EvaluateOptions& options) {
  for (const auto& m : metrics) m.validate();
  const auto records = corpus.in_split(split);
  if (records.empty()) {
    throw DataError("split '" + std::string(corpus::to_string(split)) + "' has no records");
  }

  StoreCache cache;
  std::vector<StorePair> stores(metrics.size());
  bool needs_tokens = false;
  for (std::size_t m = 0; m < metrics.size(); ++m) {
    if (metrics[m].kind == MetricKind::BertScore) {
      stores[m] = {cache.get(metrics[m].candidate_embeddings),
                   cache.get(metrics[m].reference_embeddings)};
      for (const auto* r : records) {
        if (!stores[m].references->contains(r->id)) {
          throw DataError("embedding store " + stores[m].references->source() +
                          " has no entry for reference '" + r->id + "'");
        }
      }
    } else {
      needs_tokens = true;
    }
  }

  std::vector<text::TokenSeq> reference_tokens(needs_tokens ? records.size() : 0);
  if (needs_tokens) {
    detail::parallel_for(records.size(), options.jobs, [&](std::size_t i) {
      reference_tokens[i] = text::tokenize(records[i]->summary);
    });
  }

  const bool single_system = outputs.size() == 1;
  MetricReport report;
  for (const auto& output : outputs) {
    std::vector<PairScores> pairs(records.size());
    detail::parallel_for(records.size(), options.jobs, [&](std::size_t i) {
      const DocumentRecord& record = *records[i];
      PairScores& scores = pairs[i];
      scores.per_metric.assign(metrics.size(), Prf{});
      const std::string* candidate = output.find(record.id);
      if (candidate == nullptr) {
        scores.missing = true;
        return;
      }
      text::TokenSeq candidate_tokens;
      if (needs_tokens) candidate_tokens = text::tokenize(*candidate);
      for (std::size_t m = 0; m < metrics.size(); ++m) {
        switch (metrics[m].kind) {
          case MetricKind::Rouge1:
            scores.per_metric[m] = rouge::rouge_n(candidate_tokens, reference_tokens[i], 1);
            break;
          case MetricKind::Rouge2:
            scores.per_metric[m] = rouge::rouge_n(candidate_tokens, reference_tokens[i], 2);
            break;
          case MetricKind::RougeL:
            scores.per_metric[m] = rouge::rouge_l(candidate_tokens, reference_tokens[i]);
            break;
          case MetricKind::BertScore: {
            const auto& cand_store = *stores[m].candidates;
            const auto key = candidate_key(output.name(), record.id, cand_store, single_system);
            scores.per_metric[m] = bertscore::bertscore_pair(cand_store, key,
                                                             *stores[m].references, record.id);
            break;
          }
        }
      }
    });

    std::vector<std::string> missing;
    for (std::size_t i = 0; i < records.size(); ++i) {
      if (pairs[i].missing) missing.push_back(records[i]->id);
    }
    std::sort(missing.begin(), missing.end());

    SystemResult row;
    row.name = output.name();
    for (std::size_t m = 0; m < metrics.size(); ++m) {
      std::vector<double> p, r, f;
      for (const auto& s : pairs) {
        if (s.missing && !options.strict_missing) continue;
        p.push_back(s.per_metric[m].precision);
        r.push_back(s.per_metric[m].recall);
        f.push_back(s.per_metric[m].f1);
      }
      MetricResult result;
      result.kind = metrics[m].kind;
      result.pairs = f.size();
      result.missing = missing;
      if (!f.empty()) {
        const auto n = static_cast<double>(f.size());
        result.precision = sorted_sum(std::move(p)) / n * 100.0;
        result.recall = sorted_sum(std::move(r)) / n * 100.0;
        result.f1 = sorted_sum(std::move(f)) / n * 100.0;
      }
      row.metrics.push_back(std::move(result));
    }
    report.systems.push_back(std::move(row));
  }
  return report;
}

std::string Baseline::default_name() const {
  if (kind == Kind::Lead) return "LEAD-" + std::to_string(count);
  return count == 1 ? "TextRank" : "TextRank-" + std::to_string(count);
}

corpus::SystemOutput run_baseline(const corpus::Corpus& corpus, const Baseline& baseline,
                                  corpus::Split split, std::size_t jobs) {
  const auto records = corpus.in_split(split);
  if (records.empty()) {
    throw DataError("split '" + std::string(corpus::to_string(split)) + "' has no records");
  }
  if (baseline.count == 0) throw std::invalid_argument("baseline size must be at least 1");
  if (baseline.kind == Baseline::Kind::TextRank) baseline.params.validate();

  std::vector<std::string> summaries(records.size());
  detail::parallel_for(records.size(), jobs, [&](std::size_t i) {
    const auto& article = records[i]->article;
    summaries[i] = baseline.kind == Baseline::Kind::Lead
                       ? extractive::lead_n(article, baseline.count)
                       : extractive::textrank_summarize(article, baseline.count,
                                                        baseline.params)
                             .summary;
  });

  corpus::SystemOutput out(baseline.default_name());
  for (std::size_t i = 0; i < records.size(); ++i) {
    out.add(records[i]->id, std::move(summaries[i]));
  }
  return out;
}

}  // namespace sumeval::eval

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumeval/prf.hpp"

/// Greedy cosine matching over token embeddings. The embeddings come from an
/// EmbeddingProvider, so scoring never depends on a model runtime.
namespace sumeval::bertscore {

/// Token-embedding rows for one text. Rows are L2-normalized on
/// construction; a zero row or a row of the wrong width throws DataError.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix(std::string text_id, std::size_t dim);
  EmbeddingMatrix(std::string text_id, std::vector<std::string> token_labels,
                  const std::vector<std::vector<double>>& rows, std::size_t dim);

  const std::string& text_id() const { return text_id_; }
  const std::vector<std::string>& token_labels() const { return labels_; }
  std::size_t dim() const { return dim_; }
  std::size_t rows() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }

  friend bool operator==(const EmbeddingMatrix&, const EmbeddingMatrix&) = default;

 private:
  std::string text_id_;
  std::vector<std::string> labels_;
  std::size_t dim_;
  std::vector<double> values_;
};

/// Source of embedding matrices keyed by text identifier. Implementations
/// must return equal matrices for repeated lookups of one id and must be
/// safe for concurrent const access.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  /// Throws DataError for an unknown id.
  virtual const EmbeddingMatrix& lookup(std::string_view id) const = 0;
  virtual bool contains(std::string_view id) const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::string source() const = 0;
};

struct StoreHeader {
  std::size_t dim = 0;
  std::string model;
  bool normalized = false;
  bool special_tokens_excluded = true;
};

/// File-backed provider over the JSON Lines embedding store: a header
/// object on line 1, then one {"id","tokens","vectors"} object per line.
/// Immutable once loaded.
class EmbeddingStore final : public EmbeddingProvider {
 public:
  /// Throws IoError when unreadable, DataError on malformed content
  /// (messages carry the 1-based line number).
  static EmbeddingStore open(const std::filesystem::path& path);
  static EmbeddingStore read(std::istream& in, std::string source_name);

  const EmbeddingMatrix& lookup(std::string_view id) const override;
  bool contains(std::string_view id) const override;
  std::size_t dimension() const override { return header_.dim; }
  std::string source() const override;

  const StoreHeader& header() const { return header_; }
  std::size_t size() const { return matrices_.size(); }
  std::vector<std::string> ids() const;

 private:
  EmbeddingStore() = default;

  std::string source_name_;
  StoreHeader header_;
  std::vector<EmbeddingMatrix> matrices_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Cosine similarity clamped to [-1, 1]. Throws std::invalid_argument on a
/// dimension mismatch or a zero vector.
double cosine(std::span<const double> u, std::span<const double> v);

/// recall = mean over reference rows of the best cosine against any
/// candidate row; precision symmetrically. An empty side scores all zeros.
/// Throws std::invalid_argument on a dimension mismatch.
Prf greedy_match_score(const EmbeddingMatrix& candidate,
                       const EmbeddingMatrix& reference);

Prf bertscore_pair(const EmbeddingProvider& provider,
                   std::string_view candidate_id, std::string_view reference_id);

/// Candidate and reference embeddings held by separate stores.
Prf bertscore_pair(const EmbeddingProvider& candidates,
                   std::string_view candidate_id,
                   const EmbeddingProvider& references,
                   std::string_view reference_id);

}  // namespace sumeval::bertscore

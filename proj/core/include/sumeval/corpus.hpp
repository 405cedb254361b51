#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sumeval/error.hpp"

/// Article/reference corpora, system outputs, and descriptive statistics.
namespace sumeval::corpus {

enum class Split { Train, Validation, Test };

std::string_view to_string(Split split);
std::optional<Split> parse_split(std::string_view label);

struct DocumentRecord {
  std::string id;
  std::string article;
  std::string summary;
  std::optional<std::string> title;
  std::optional<std::string> topic;
  Split split = Split::Test;

  friend bool operator==(const DocumentRecord&, const DocumentRecord&) = default;
};

/// Ordered, id-indexed collection of records. Immutable after construction.
class Corpus {
 public:
  Corpus() = default;
  /// Throws DataError on a duplicate or empty id.
  explicit Corpus(std::vector<DocumentRecord> records);

  const std::vector<DocumentRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const DocumentRecord* find(std::string_view id) const;
  std::vector<const DocumentRecord*> in_split(Split split) const;

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.records_ == b.records_;
  }

 private:
  std::vector<DocumentRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Candidate summaries of one system, keyed by record id, in file order.
class SystemOutput {
 public:
  struct Entry {
    std::string id;
    std::string summary;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SystemOutput() = default;
  explicit SystemOutput(std::string system_name) : name_(std::move(system_name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const std::string* find(std::string_view id) const;

  /// Throws DataError when the id is already present.
  void add(std::string id, std::string summary);

  friend bool operator==(const SystemOutput& a, const SystemOutput& b) {
    return a.name_ == b.name_ && a.entries_ == b.entries_;
  }

 private:
  std::string name_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

enum class RecordFormat { JsonLines, Csv };

/// Source field (JSON key or CSV column) for each record field.
struct FieldMapping {
  std::string id = "id";
  std::string article = "article";
  std::string summary = "summary";
  std::string title = "title";
  std::string topic = "topic";
  std::string split = "split";
};

struct FormatDescriptor {
  RecordFormat format = RecordFormat::JsonLines;
  FieldMapping fields;

  /// CSV for a ".csv" extension, JSON Lines otherwise.
  static FormatDescriptor for_path(const std::filesystem::path& path);
};

/// One load problem, tied to the 1-based line where the record starts.
struct Diagnostic {
  std::size_t line = 0;
  std::string field;
  std::string message;

  std::string to_string() const;
};

class CorpusError : public DataError {
 public:
  explicit CorpusError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct LoadOptions {
  /// Skip invalid records (reporting them as warnings) instead of failing.
  bool permissive = false;
};

/// Parses every record, collecting all diagnostics. Throws CorpusError
/// listing them unless options.permissive is set, in which case invalid
/// records are dropped and their diagnostics appended to `skipped`.
Corpus load_corpus(std::istream& in, const FormatDescriptor& format = {},
                   const LoadOptions& options = {},
                   std::vector<Diagnostic>* skipped = nullptr);

/// As load_corpus; throws IoError when the file cannot be opened.
Corpus load_corpus_file(const std::filesystem::path& path,
                        const LoadOptions& options = {},
                        std::vector<Diagnostic>* skipped = nullptr);

/// Writes JSON Lines in the corpus schema. Absent optional fields are omitted.
void write_corpus(std::ostream& out, const Corpus& corpus);

/// Reads {"id","summary"} JSON Lines. Empty summaries are kept. Throws
/// CorpusError on malformed lines or duplicate ids.
SystemOutput load_system_outputs(std::istream& in, std::string system_name);
SystemOutput load_system_outputs_file(const std::filesystem::path& path,
                                      std::string system_name);

void write_system_outputs(std::ostream& out, const SystemOutput& output);

struct SplitStats {
  std::size_t records = 0;
  double mean_summary_words = 0.0;
  /// Over records that carry a title; empty when none does.
  std::optional<double> mean_title_words;
  double mean_summary_sentences = 0.0;
};

struct CorpusStats {
  std::size_t total_records = 0;
  SplitStats overall;
  std::map<Split, SplitStats> per_split;
};

/// Word counts use text::tokenize, sentence counts text::split_sentences.
/// Throws DataError on an empty corpus.
CorpusStats compute_stats(const Corpus& corpus);

/// Warnings when a corpus with more than one split deviates from the
/// reference 87/6.5/6.5 train/validation/test proportions by more than
/// `tolerance_points` percentage points.
std::vector<std::string> check_split_proportions(const Corpus& corpus,
                                                 double tolerance_points = 2.0);

}  // namespace sumeval::corpus

#include "sumeval/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "csv.hpp"
#include "sumeval/textproc.hpp"

namespace sumeval::corpus {
namespace {

using nlohmann::json;

// Field values pulled out of one JSON object or CSV row before validation.
struct RawRecord {
  std::size_t line = 0;
  std::optional<std::string> id, article, summary, title, topic, split;
};

class RecordValidator {
 public:
  explicit RecordValidator(const FieldMapping& fields) : fields_(fields) {}

  // Returns the record, or records its problems in `diagnostics`.
  std::optional<DocumentRecord> validate(const RawRecord& raw,
                                         std::vector<Diagnostic>& diagnostics) {
    const std::size_t before = diagnostics.size();
    auto require = [&](const std::optional<std::string>& value,
                       const std::string& name) {
      if (!value) {
        diagnostics.push_back({raw.line, name, "missing required field"});
      } else if (text::is_blank(*value)) {
        diagnostics.push_back({raw.line, name, "field is empty"});
      }
    };
    require(raw.id, fields_.id);
    require(raw.article, fields_.article);
    require(raw.summary, fields_.summary);

    std::optional<Split> split;
    if (!raw.split) {
      diagnostics.push_back({raw.line, fields_.split, "missing required field"});
    } else if (!(split = parse_split(*raw.split))) {
      diagnostics.push_back({raw.line, fields_.split,
                             "unknown split label '" + *raw.split +
                                 "' (expected train, validation or test)"});
    }

    if (raw.id && !text::is_blank(*raw.id)) {
      const auto [it, inserted] = first_seen_.emplace(*raw.id, raw.line);
      if (!inserted) {
        diagnostics.push_back({raw.line, fields_.id,
                               "duplicate id '" + *raw.id +
                                   "' (first seen on line " +
                                   std::to_string(it->second) + ")"});
      }
    }

    if (diagnostics.size() != before) return std::nullopt;
    DocumentRecord record;
    record.id = *raw.id;
    record.article = *raw.article;
    record.summary = *raw.summary;
    record.title = raw.title;
    record.topic = raw.topic;
    record.split = *split;
    return record;
  }

 private:
  const FieldMapping& fields_;
  std::unordered_map<std::string, std::size_t> first_seen_;
};

std::optional<std::string> string_field(const json& obj, const std::string& key,
                                        std::size_t line,
                                        std::vector<Diagnostic>& diagnostics) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    diagnostics.push_back({line, key, "expected a string"});
    return std::nullopt;
  }
  return it->get<std::string>();
}

template <typename Sink>
void for_each_json_line(std::istream& in, std::vector<Diagnostic>& diagnostics,
                        Sink&& sink) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::is_blank(line)) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      diagnostics.push_back({line_no, "", std::string("malformed JSON: ") + e.what()});
      continue;
    }
    if (!obj.is_object()) {
      diagnostics.push_back({line_no, "", "expected a JSON object"});
      continue;
    }
    sink(line_no, obj);
  }
}

std::vector<RawRecord> read_json_lines(std::istream& in, const FieldMapping& f,
                                       std::vector<Diagnostic>& diagnostics) {
  std::vector<RawRecord> out;
  for_each_json_line(in, diagnostics, [&](std::size_t line, const json& obj) {
    RawRecord raw;
    raw.line = line;
    raw.id = string_field(obj, f.id, line, diagnostics);
    raw.article = string_field(obj, f.article, line, diagnostics);
    raw.summary = string_field(obj, f.summary, line, diagnostics);
    raw.title = string_field(obj, f.title, line, diagnostics);
    raw.topic = string_field(obj, f.topic, line, diagnostics);
    raw.split = string_field(obj, f.split, line, diagnostics);
    out.push_back(std::move(raw));
  });
  return out;
}

std::vector<RawRecord> read_csv(std::istream& in, const FieldMapping& f,
                                std::vector<Diagnostic>& diagnostics) {
  std::vector<RawRecord> out;
  detail::CsvReader reader(in);
  try {
    auto header = reader.next();
    if (!header) return out;

    auto column = [&](const std::string& name) -> std::optional<std::size_t> {
      const auto& cols = header->fields;
      const auto it = std::find(cols.begin(), cols.end(), name);
      if (it == cols.end()) return std::nullopt;
      return static_cast<std::size_t>(it - cols.begin());
    };
    const auto id_col = column(f.id);
    const auto article_col = column(f.article);
    const auto summary_col = column(f.summary);
    const auto title_col = column(f.title);
    const auto topic_col = column(f.topic);
    const auto split_col = column(f.split);
    for (const auto& [col, name] : {std::pair{id_col, f.id},
                                    {article_col, f.article},
                                    {summary_col, f.summary},
                                    {split_col, f.split}}) {
      if (!col) diagnostics.push_back({header->line, name, "header lacks required column"});
    }
    if (!diagnostics.empty()) return out;

    while (auto row = reader.next()) {
      if (row->fields.size() == 1 && row->fields[0].empty()) continue;
      if (row->fields.size() != header->fields.size()) {
        diagnostics.push_back({row->line, "",
                               "expected " + std::to_string(header->fields.size()) +
                                   " columns, found " +
                                   std::to_string(row->fields.size())});
        continue;
      }
      bool utf8_ok = true;
      for (const auto& field : row->fields) {
        if (!text::is_valid_utf8(field)) utf8_ok = false;
      }
      if (!utf8_ok) {
        diagnostics.push_back({row->line, "", "invalid UTF-8"});
        continue;
      }
      auto get = [&](const std::optional<std::size_t>& col) -> std::optional<std::string> {
        if (!col) return std::nullopt;
        return row->fields[*col];
      };
      auto optional_get = [&](const std::optional<std::size_t>& col) -> std::optional<std::string> {
        auto v = get(col);
        if (v && v->empty()) return std::nullopt;
        return v;
      };
      RawRecord raw;
      raw.line = row->line;
      raw.id = get(id_col);
      raw.article = get(article_col);
      raw.summary = get(summary_col);
      raw.title = optional_get(title_col);
      raw.topic = optional_get(topic_col);
      raw.split = get(split_col);
      out.push_back(std::move(raw));
    }
  } catch (const std::runtime_error& e) {
    diagnostics.push_back({0, "", e.what()});
  }
  return out;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

SplitStats summarize(const std::vector<const DocumentRecord*>& records) {
  SplitStats stats;
  stats.records = records.size();
  if (records.empty()) return stats;
  std::size_t summary_words = 0;
  std::size_t summary_sentences = 0;
  std::size_t title_words = 0;
  std::size_t titled = 0;
  for (const auto* r : records) {
    summary_words += text::tokenize(r->summary).size();
    summary_sentences += text::split_sentences(r->summary).size();
    if (r->title) {
      title_words += text::tokenize(*r->title).size();
      ++titled;
    }
  }
  const auto n = static_cast<double>(records.size());
  stats.mean_summary_words = static_cast<double>(summary_words) / n;
  stats.mean_summary_sentences = static_cast<double>(summary_sentences) / n;
  if (titled > 0) {
    stats.mean_title_words =
        static_cast<double>(title_words) / static_cast<double>(titled);
  }
  return stats;
}

}  // namespace

std::string_view to_string(Split split) {
  switch (split) {
    case Split::Train: return "train";
    case Split::Validation: return "validation";
    case Split::Test: return "test";
  }
  return "test";
}

std::optional<Split> parse_split(std::string_view label) {
  if (label == "train") return Split::Train;
  if (label == "validation") return Split::Validation;
  if (label == "test") return Split::Test;
  return std::nullopt;
}

Corpus::Corpus(std::vector<DocumentRecord> records) : records_(std::move(records)) {
  index_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].id.empty()) throw DataError("record " + std::to_string(i) + " has an empty id");
    if (!index_.emplace(records_[i].id, i).second) {
      throw DataError("duplicate id '" + records_[i].id + "'");
    }
  }
}

const DocumentRecord* Corpus::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

std::vector<const DocumentRecord*> Corpus::in_split(Split split) const {
  std::vector<const DocumentRecord*> out;
  for (const auto& r : records_) {
    if (r.split == split) out.push_back(&r);
  }
  return out;
}

const std::string* SystemOutput::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &entries_[it->second].summary;
}

void SystemOutput::add(std::string id, std::string summary) {
  if (index_.count(id) != 0) {
    throw DataError("system '" + name_ + "': duplicate id '" + id + "'");
  }
  index_.emplace(id, entries_.size());
  entries_.push_back({std::move(id), std::move(summary)});
}

FormatDescriptor FormatDescriptor::for_path(const std::filesystem::path& path) {
  FormatDescriptor out;
  auto ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (ext == ".csv") out.format = RecordFormat::Csv;
  return out;
}

std::string Diagnostic::to_string() const {
  std::string out = "line " + std::to_string(line) + ": ";
  if (!field.empty()) out += "field '" + field + "': ";
  return out + message;
}

namespace {
std::string join_diagnostics(const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    if (!out.empty()) out += "\n";
    out += d.to_string();
  }
  return out;
}
}  // namespace

CorpusError::CorpusError(std::vector<Diagnostic> diagnostics)
    : DataError(join_diagnostics(diagnostics)), diagnostics_(std::move(diagnostics)) {}

Corpus load_corpus(std::istream& in, const FormatDescriptor& format,
                   const LoadOptions& options, std::vector<Diagnostic>* skipped) {
  std::vector<Diagnostic> diagnostics;
  const auto raw = format.format == RecordFormat::Csv
                       ? read_csv(in, format.fields, diagnostics)
                       : read_json_lines(in, format.fields, diagnostics);

  RecordValidator validator(format.fields);
  std::vector<DocumentRecord> records;
  records.reserve(raw.size());
  for (const auto& r : raw) {
    if (auto record = validator.validate(r, diagnostics)) {
      records.push_back(std::move(*record));
    }
  }

  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  if (!diagnostics.empty()) {
    if (!options.permissive) throw CorpusError(std::move(diagnostics));
    if (skipped) skipped->insert(skipped->end(), diagnostics.begin(), diagnostics.end());
  }
  return Corpus(std::move(records));
}

Corpus load_corpus_file(const std::filesystem::path& path, const LoadOptions& options,
                        std::vector<Diagnostic>* skipped) {
  auto in = open_for_read(path);
  return load_corpus(in, FormatDescriptor::for_path(path), options, skipped);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& r : corpus.records()) {
    json obj = json::object();
    obj["id"] = r.id;
    obj["article"] = r.article;
    obj["summary"] = r.summary;
    if (r.title) obj["title"] = *r.title;
    if (r.topic) obj["topic"] = *r.topic;
    obj["split"] = std::string(to_string(r.split));
    out << obj.dump() << '\n';
  }
}

SystemOutput load_system_outputs(std::istream& in, std::string system_name) {
  SystemOutput output(std::move(system_name));
  std::vector<Diagnostic> diagnostics;
  std::unordered_map<std::string, std::size_t> first_seen;
  for_each_json_line(in, diagnostics, [&](std::size_t line, const json& obj) {
    const std::size_t before = diagnostics.size();
    auto id = string_field(obj, "id", line, diagnostics);
    auto summary = string_field(obj, "summary", line, diagnostics);
    if (diagnostics.size() != before) return;
    if (!id || id->empty()) {
      diagnostics.push_back({line, "id", "missing required field"});
      return;
    }
    if (!summary) {
      diagnostics.push_back({line, "summary", "missing required field"});
      return;
    }
    const auto [it, inserted] = first_seen.emplace(*id, line);
    if (!inserted) {
      diagnostics.push_back({line, "id",
                             "duplicate id '" + *id + "' (first seen on line " +
                                 std::to_string(it->second) + ")"});
      return;
    }
    output.add(std::move(*id), std::move(*summary));
  });
  if (!diagnostics.empty()) throw CorpusError(std::move(diagnostics));
  return output;
}

SystemOutput load_system_outputs_file(const std::filesystem::path& path,
                                      std::string system_name) {
  auto in = open_for_read(path);
  return load_system_outputs(in, std::move(system_name));
}

void write_system_outputs(std::ostream& out, const SystemOutput& output) {
  for (const auto& e : output.entries()) {
    json obj = json::object();
    obj["id"] = e.id;
    obj["summary"] = e.summary;
    out << obj.dump() << '\n';
  }
}

CorpusStats compute_stats(const Corpus& corpus) {
  if (corpus.empty()) throw DataError("cannot compute statistics of an empty corpus");
  CorpusStats stats;
  stats.total_records = corpus.size();
  std::vector<const DocumentRecord*> all;
  all.reserve(corpus.size());
  for (const auto& r : corpus.records()) all.push_back(&r);
  stats.overall = summarize(all);
  for (Split s : {Split::Train, Split::Validation, Split::Test}) {
    auto subset = corpus.in_split(s);
    if (!subset.empty()) stats.per_split.emplace(s, summarize(subset));
  }
  return stats;
}

std::vector<std::string> check_split_proportions(const Corpus& corpus,
                                                 double tolerance_points) {
  std::vector<std::string> warnings;
  if (corpus.empty()) return warnings;
  std::map<Split, std::size_t> counts;
  for (const auto& r : corpus.records()) ++counts[r.split];
  if (counts.size() < 2) return warnings;

  const std::pair<Split, double> expected[] = {
      {Split::Train, 87.0}, {Split::Validation, 6.5}, {Split::Test, 6.5}};
  for (const auto& [split, percent] : expected) {
    const double actual = 100.0 * static_cast<double>(counts[split]) /
                          static_cast<double>(corpus.size());
    if (std::abs(actual - percent) > tolerance_points) {
      std::ostringstream msg;
      msg.setf(std::ios::fixed);
      msg.precision(2);
      msg << "split '" << to_string(split) << "' holds " << actual
          << "% of records (reference proportion " << percent << "%)";
      warnings.push_back(msg.str());
    }
  }
  return warnings;
}

}  // namespace sumeval::corpus

#include "sumeval_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sumeval/corpus.hpp"
#include "sumeval/error.hpp"
#include "sumeval/evaluator.hpp"
#include "sumeval/report.hpp"

namespace sumeval::cli {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string shell_quote(const std::string& s) {
  const bool plain = !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || std::string_view("-_./=,:+@%").find(c) != std::string_view::npos ||
           c >= 0x80;
  });
  if (plain) return s;
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

/// Replayable command line for the run, printed to the error stream.
class EffectiveConfig {
 public:
  explicit EffectiveConfig(std::string subcommand) : line_("sumeval " + std::move(subcommand)) {}
  EffectiveConfig& flag(const std::string& name) {
    line_ += " " + name;
    return *this;
  }
  EffectiveConfig& opt(const std::string& name, const std::string& value) {
    line_ += " " + name + " " + shell_quote(value);
    return *this;
  }
  void print(std::ostream& err) const { err << "# effective config: " << line_ << "\n"; }

 private:
  std::string line_;
};

void require_readable(const fs::path& path, const std::string& what) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe || fs::is_directory(path)) {
    throw IoError("cannot read " + what + " '" + path.string() + "'");
  }
}

corpus::Split require_split(const std::string& label) {
  auto split = corpus::parse_split(label);
  if (!split) throw UsageError("unknown split '" + label + "' (expected train, validation or test)");
  return *split;
}

void write_output(const std::optional<std::string>& path, const std::string& content,
                  std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + *path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + *path + "'");
}

void print_diagnostics(const std::vector<corpus::Diagnostic>& diagnostics, std::ostream& err,
                       const std::string& source) {
  for (const auto& d : diagnostics) err << source << ": " << d.to_string() << "\n";
}

// --- validate --------------------------------------------------------------

struct ValidateArgs {
  std::string corpus;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out, std::ostream& err) {
  EffectiveConfig("validate").opt("--corpus", a.corpus).print(err);
  require_readable(a.corpus, "corpus");
  corpus::Corpus c;
  try {
    c = corpus::load_corpus_file(a.corpus);
  } catch (const corpus::CorpusError& e) {
    print_diagnostics(e.diagnostics(), err, a.corpus);
    err << "invalid: " << e.diagnostics().size() << " problem(s)\n";
    return kExitDataError;
  }
  if (c.empty()) {
    err << a.corpus << ": no records\n";
    return kExitDataError;
  }
  for (const auto& w : corpus::check_split_proportions(c)) err << "warning: " << w << "\n";
  std::map<corpus::Split, std::size_t> counts;
  for (const auto& r : c.records()) ++counts[r.split];
  out << "ok: " << c.size() << " records";
  const char* sep = " (";
  for (const auto& [split, n] : counts) {
    out << sep << corpus::to_string(split) << " " << n;
    sep = ", ";
  }
  out << (counts.empty() ? "" : ")") << "\n";
  return kExitOk;
}

// --- stats -----------------------------------------------------------------

struct StatsArgs {
  std::string corpus;
  std::optional<std::string> out_path;
};

nlohmann::ordered_json stats_json(const corpus::SplitStats& s) {
  nlohmann::ordered_json j;
  j["records"] = s.records;
  j["mean_summary_words"] = s.mean_summary_words;
  j["mean_summary_sentences"] = s.mean_summary_sentences;
  j["mean_title_words"] =
      s.mean_title_words ? nlohmann::ordered_json(*s.mean_title_words) : nlohmann::ordered_json();
  return j;
}

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  EffectiveConfig cfg("stats");
  cfg.opt("--corpus", a.corpus);
  if (a.out_path) cfg.opt("--out", *a.out_path);
  cfg.print(err);
  require_readable(a.corpus, "corpus");
  const auto c = corpus::load_corpus_file(a.corpus);
  const auto stats = corpus::compute_stats(c);
  for (const auto& w : corpus::check_split_proportions(c)) err << "warning: " << w << "\n";

  nlohmann::ordered_json j;
  j["total_records"] = stats.total_records;
  j["overall"] = stats_json(stats.overall);
  nlohmann::ordered_json splits = nlohmann::ordered_json::object();
  for (const auto& [split, s] : stats.per_split) {
    splits[std::string(corpus::to_string(split))] = stats_json(s);
  }
  j["splits"] = std::move(splits);
  write_output(a.out_path, j.dump(2) + "\n", out);
  return kExitOk;
}

// --- baseline --------------------------------------------------------------

struct BaselineArgs {
  std::string corpus;
  std::string split = "test";
  std::string kind = "lead";
  std::size_t lead_n = 1;
  std::size_t topk = 1;
  double damping = extractive::TextRankParams{}.damping;
  double epsilon = extractive::TextRankParams{}.epsilon;
  int max_iter = extractive::TextRankParams{}.max_iterations;
  std::size_t jobs = 1;
  std::optional<std::string> out_path;
};

int cmd_baseline(const BaselineArgs& a, std::ostream& out, std::ostream& err) {
  const auto split = require_split(a.split);
  eval::Baseline baseline;
  EffectiveConfig cfg("baseline");
  cfg.opt("--corpus", a.corpus).opt("--split", a.split).opt("--kind", a.kind);
  if (a.kind == "lead") {
    baseline = eval::Baseline::lead(a.lead_n);
    cfg.opt("--lead-n", std::to_string(a.lead_n));
  } else if (a.kind == "textrank") {
    extractive::TextRankParams params{a.damping, a.epsilon, a.max_iter};
    baseline = eval::Baseline::textrank(a.topk, params);
    cfg.opt("--topk", std::to_string(a.topk))
        .opt("--damping", shortest(a.damping))
        .opt("--epsilon", shortest(a.epsilon))
        .opt("--max-iter", std::to_string(a.max_iter));
  } else {
    throw UsageError("unknown baseline kind '" + a.kind + "' (expected lead or textrank)");
  }
  cfg.opt("--jobs", std::to_string(a.jobs));
  if (a.out_path) cfg.opt("--out", *a.out_path);
  cfg.print(err);

  require_readable(a.corpus, "corpus");
  const auto c = corpus::load_corpus_file(a.corpus);
  const auto output = eval::run_baseline(c, baseline, split, a.jobs);
  std::ostringstream buf;
  corpus::write_system_outputs(buf, output);
  write_output(a.out_path, buf.str(), out);
  err << "wrote " << output.size() << " " << output.name() << " summaries\n";
  return kExitOk;
}

// --- score -----------------------------------------------------------------

struct ScoreArgs {
  std::string corpus;
  std::string split = "test";
  std::vector<std::string> systems;
  std::string metrics = "rouge1,rouge2,rougeL";
  std::optional<std::string> cand_embeddings;
  std::optional<std::string> ref_embeddings;
  std::string format = "table";
  std::optional<std::string> out_path;
  bool strict_missing = false;
  std::size_t jobs = 1;
};

std::vector<eval::MetricKind> parse_metric_list(const std::string& list) {
  std::vector<eval::MetricKind> kinds;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto kind = eval::parse_metric(item);
    if (!kind) {
      throw UsageError("unknown metric '" + item +
                       "' (expected rouge1, rouge2, rougeL or bertscore)");
    }
    if (std::find(kinds.begin(), kinds.end(), *kind) != kinds.end()) {
      throw UsageError("metric '" + item + "' listed twice");
    }
    kinds.push_back(*kind);
  }
  if (kinds.empty()) throw UsageError("--metrics is empty");
  return kinds;
}

int cmd_score(const ScoreArgs& a, std::ostream& out, std::ostream& err) {
  const auto split = require_split(a.split);
  const auto format = eval::parse_report_format(a.format);
  if (!format) {
    throw UsageError("unknown format '" + a.format + "' (expected table, csv, json or markdown)");
  }
  const auto kinds = parse_metric_list(a.metrics);
  const bool wants_bertscore =
      std::find(kinds.begin(), kinds.end(), eval::MetricKind::BertScore) != kinds.end();
  if (wants_bertscore && (!a.cand_embeddings || !a.ref_embeddings)) {
    throw UsageError("bertscore requires --cand-embeddings and --ref-embeddings");
  }
  if (!wants_bertscore && (a.cand_embeddings || a.ref_embeddings)) {
    throw UsageError("embedding stores given but bertscore is not in --metrics");
  }

  std::vector<std::pair<std::string, std::string>> systems;
  std::set<std::string> names;
  for (const auto& spec : a.systems) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
      throw UsageError("--system expects NAME=PATH, got '" + spec + "'");
    }
    std::string name = spec.substr(0, eq);
    if (!names.insert(name).second) throw UsageError("system '" + name + "' given twice");
    systems.emplace_back(std::move(name), spec.substr(eq + 1));
  }

  EffectiveConfig cfg("score");
  cfg.opt("--corpus", a.corpus).opt("--split", a.split);
  for (const auto& [name, path] : systems) cfg.opt("--system", name + "=" + path);
  std::string metric_list;
  for (auto k : kinds) metric_list += (metric_list.empty() ? "" : ",") + std::string(to_string(k));
  cfg.opt("--metrics", metric_list);
  if (a.cand_embeddings) cfg.opt("--cand-embeddings", *a.cand_embeddings);
  if (a.ref_embeddings) cfg.opt("--ref-embeddings", *a.ref_embeddings);
  cfg.opt("--format", a.format);
  if (a.out_path) cfg.opt("--out", *a.out_path);
  if (a.strict_missing) cfg.flag("--strict-missing");
  cfg.opt("--jobs", std::to_string(a.jobs));
  cfg.print(err);

  require_readable(a.corpus, "corpus");
  for (const auto& [name, path] : systems) require_readable(path, "system output");
  if (a.cand_embeddings) require_readable(*a.cand_embeddings, "embedding store");
  if (a.ref_embeddings) require_readable(*a.ref_embeddings, "embedding store");

  const auto c = corpus::load_corpus_file(a.corpus);
  std::vector<corpus::SystemOutput> outputs;
  for (const auto& [name, path] : systems) {
    outputs.push_back(corpus::load_system_outputs_file(path, name));
  }
  std::vector<eval::MetricSpec> specs;
  for (auto k : kinds) {
    specs.push_back(k == eval::MetricKind::BertScore
                        ? eval::MetricSpec::bertscore(*a.cand_embeddings, *a.ref_embeddings)
                        : eval::MetricSpec::rouge(k));
  }
  eval::EvaluateOptions options;
  options.strict_missing = a.strict_missing;
  options.jobs = a.jobs;
  const auto report = eval::evaluate(c, outputs, specs, split, options);

  for (const auto& s : report.systems) {
    if (!s.metrics.empty() && !s.metrics.front().missing.empty()) {
      err << "warning: system '" << s.name << "' lacks " << s.metrics.front().missing.size()
          << " id(s)" << (a.strict_missing ? ", scored as 0" : ", excluded") << "\n";
    }
  }
  out << eval::render_report(report, eval::ReportFormat::Table);
  if (a.out_path) write_output(a.out_path, eval::render_report(report, *format), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Summarization evaluation toolkit: corpora, baselines, ROUGE and BERTScore"};
  app.name(args.empty() ? "sumeval" : fs::path(args.front()).filename().string());
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "Check a corpus file and list every problem");
  validate->add_option("--corpus", va.corpus, "Corpus file (.jsonl or .csv)")->required();

  StatsArgs sa;
  auto* stats = app.add_subcommand("stats", "Print corpus length statistics as JSON");
  stats->add_option("--corpus", sa.corpus, "Corpus file (.jsonl or .csv)")->required();
  stats->add_option("--out", sa.out_path, "Write the JSON here instead of standard output");

  BaselineArgs ba;
  auto* baseline = app.add_subcommand("baseline", "Run an extractive baseline over a split");
  baseline->add_option("--corpus", ba.corpus, "Corpus file (.jsonl or .csv)")->required();
  baseline->add_option("--split", ba.split, "train, validation or test")->capture_default_str();
  baseline->add_option("--kind", ba.kind, "lead or textrank")->capture_default_str();
  baseline->add_option("--lead-n", ba.lead_n, "Sentences taken by LEAD-N")->capture_default_str();
  baseline->add_option("--topk", ba.topk, "Sentences selected by TextRank")->capture_default_str();
  baseline->add_option("--damping", ba.damping, "PageRank damping factor")->capture_default_str();
  baseline->add_option("--epsilon", ba.epsilon, "PageRank convergence threshold")
      ->capture_default_str();
  baseline->add_option("--max-iter", ba.max_iter, "PageRank iteration cap")->capture_default_str();
  baseline->add_option("--jobs", ba.jobs, "Worker threads")->capture_default_str()
      ->check(CLI::PositiveNumber);
  baseline->add_option("--out", ba.out_path, "System-output file; standard output if omitted");

  ScoreArgs sc;
  auto* score = app.add_subcommand("score", "Score system outputs against corpus references");
  score->add_option("--corpus", sc.corpus, "Corpus file (.jsonl or .csv)")->required();
  score->add_option("--split", sc.split, "train, validation or test")->capture_default_str();
  score->add_option("--system", sc.systems, "NAME=PATH of a system-output file (repeatable)")
      ->required()
      ->take_all();
  score->add_option("--metrics", sc.metrics, "Comma-separated: rouge1,rouge2,rougeL,bertscore")
      ->capture_default_str();
  score->add_option("--cand-embeddings", sc.cand_embeddings, "Candidate embedding store");
  score->add_option("--ref-embeddings", sc.ref_embeddings, "Reference embedding store");
  score->add_option("--format", sc.format, "Format of --out: table, csv, json or markdown")
      ->capture_default_str();
  score->add_option("--out", sc.out_path, "Report file");
  score->add_flag("--strict-missing", sc.strict_missing, "Score missing outputs as 0");
  score->add_option("--jobs", sc.jobs, "Worker threads")->capture_default_str()
      ->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rest(args.empty() ? args.end() : args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  }

  try {
    if (validate->parsed()) return cmd_validate(va, out, err);
    if (stats->parsed()) return cmd_stats(sa, out, err);
    if (baseline->parsed()) return cmd_baseline(ba, out, err);
    if (score->parsed()) return cmd_score(sc, out, err);
  } catch (const corpus::CorpusError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d.to_string() << "\n";
    return kExitDataError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsageOrIo;
  }
  return kExitUsageOrIo;
}

}  // namespace sumeval::cli

#include "sumeval/fixtures.hpp"

#include <sstream>
#include <stdexcept>

#include "fixtures_data.hpp"

namespace sumeval::fixtures {
namespace {

corpus::SystemOutput parse_outputs(std::string_view key) {
  for (const auto& file : detail::kSystems) {
    if (file.key == key) {
      std::istringstream in{std::string(file.jsonl)};
      return corpus::load_system_outputs(in, std::string(key));
    }
  }
  throw std::out_of_range("unknown fixture system '" + std::string(key) + "'");
}

}  // namespace

const std::string& AppendixExample::output(std::string_view system_key) const {
  for (const auto& [key, text] : outputs) {
    if (key == system_key) return text;
  }
  throw std::out_of_range("example " + std::to_string(number) + " has no output for '" +
                          std::string(system_key) + "'");
}

corpus::Corpus appendix_corpus() {
  std::istringstream in{std::string(detail::kCorpus)};
  return corpus::load_corpus(in);
}

corpus::SystemOutput appendix_outputs(std::string_view system_key) {
  return parse_outputs(system_key);
}

AppendixExample load_fixture(int number) {
  if (number < 1 || number > kExampleCount) {
    throw std::out_of_range("appendix example number must be in 1.." +
                            std::to_string(kExampleCount) + ", got " + std::to_string(number));
  }
  const auto corpus = appendix_corpus();
  AppendixExample ex;
  ex.number = number;
  ex.id = "appendix-" + std::to_string(number);
  const auto* record = corpus.find(ex.id);
  if (record == nullptr) throw std::logic_error("fixture data lacks " + ex.id);
  ex.article = record->article;
  ex.human_summary = record->summary;
  for (std::string_view key : kSystemKeys) {
    const auto outputs = parse_outputs(key);
    const std::string* text = outputs.find(ex.id);
    if (text == nullptr) throw std::logic_error("fixture " + std::string(key) + " lacks " + ex.id);
    ex.outputs.emplace_back(std::string(key), *text);
  }
  return ex;
}

}  // namespace sumeval::fixtures

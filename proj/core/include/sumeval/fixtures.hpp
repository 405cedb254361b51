#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sumeval/corpus.hpp"

/// Nine article/summary pairs with the generated outputs of five systems,
/// transcribed from published example tables of Greek news summaries.
/// Texts are kept verbatim, typesetting artifacts included; see
/// testdata/appendix/NOTES.md.
namespace sumeval::fixtures {

inline constexpr int kExampleCount = 9;

/// Output keys in table order.
inline constexpr std::string_view kSystemKeys[] = {"mt5-small", "umt5-small", "umt5-base",
                                                   "greekbart", "textrank"};

struct AppendixExample {
  int number = 0;
  std::string id;
  std::string article;
  std::string human_summary;
  /// (system key, output text) in kSystemKeys order.
  std::vector<std::pair<std::string, std::string>> outputs;

  /// Throws std::out_of_range for an unknown key.
  const std::string& output(std::string_view system_key) const;
  const std::string& textrank() const { return output("textrank"); }
};

/// Throws std::out_of_range unless 1 <= number <= 9.
AppendixExample load_fixture(int number);

/// All nine examples as a test-split corpus with ids "appendix-1".."appendix-9".
corpus::Corpus appendix_corpus();

/// The named system's outputs over appendix_corpus().
corpus::SystemOutput appendix_outputs(std::string_view system_key);

}  // namespace sumeval::fixtures

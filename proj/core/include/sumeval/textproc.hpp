#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

/// Unicode text processing shared by every metric and baseline: NFC
/// normalization with full case folding, letter/digit word tokenization,
/// sentence splitting tuned for Greek news text, and n-gram counting.
namespace sumeval::text {

struct NormalizedText {
  std::string original;
  std::string normalized;
};

using TokenSeq = std::vector<std::string>;

/// A sentence and its half-open byte span [begin, end) into the UTF-8 source.
/// The span never starts or ends on whitespace.
struct Sentence {
  std::string text;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

using SentenceList = std::vector<Sentence>;

using Ngram = std::vector<std::string>;

struct NgramMultiset {
  std::size_t n = 1;
  std::map<Ngram, std::size_t> counts;

  /// Number of windows, counting repeats.
  std::size_t total() const;
};

struct SplitterOptions {
  /// Tokens (including their final period) after which a period never ends
  /// a sentence. Compared after normalization, so case does not matter.
  std::vector<std::string> abbreviations = default_abbreviations();

  static std::vector<std::string> default_abbreviations();
};

/// NFC, then full Unicode case folding, then NFC again. Diacritics are kept;
/// both Greek sigma forms fold to U+03C3.
NormalizedText normalize(std::string_view text);

/// Maximal runs of letters or decimal digits. Combining marks continue a
/// run but never start one; everything else separates tokens.
TokenSeq word_tokenize(const NormalizedText& text);
TokenSeq word_tokenize(std::string_view normalized);

/// Shorthand for word_tokenize(normalize(text)).
TokenSeq tokenize(std::string_view text);

/// Splits raw (un-normalized) text into sentences. A run of terminators
/// ('.', '!', '…', ';' or U+037E) plus any trailing closing quotes or
/// brackets ends a sentence when followed by end of text, or by whitespace
/// and then an uppercase letter or an opening quote. A period ending a
/// listed abbreviation does not end a sentence.
SentenceList split_sentences(std::string_view text,
                             const SplitterOptions& options = {});

/// Contiguous n-token windows. Throws std::invalid_argument when n == 0.
NgramMultiset ngrams(std::span<const std::string> tokens, std::size_t n);

bool is_valid_utf8(std::string_view text);

/// True when the text is empty or holds only Unicode whitespace.
bool is_blank(std::string_view text);

}  // namespace sumeval::text

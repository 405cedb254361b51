#include "sumeval/textproc.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <stdexcept>

namespace sumeval::text {
namespace {

struct CodePoint {
  UChar32 value;
  std::size_t begin;
  std::size_t end;
};

// Decodes the code point starting at byte offset `pos`. Ill-formed bytes
// decode as a negative value and advance by one byte.
CodePoint decode_at(std::string_view s, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  int32_t i = static_cast<int32_t>(pos);
  const auto length = static_cast<int32_t>(s.size());
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  return {c, pos, static_cast<std::size_t>(i)};
}

bool is_word_start(UChar32 c) {
  const auto mask = U_GET_GC_MASK(c);
  return (mask & (U_GC_L_MASK | U_GC_ND_MASK)) != 0;
}

bool is_mark(UChar32 c) { return (U_GET_GC_MASK(c) & U_GC_M_MASK) != 0; }

bool is_space(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

bool is_terminator(UChar32 c) {
  switch (c) {
    case U'.':
    case U'!':
    case U'\u2026':  // horizontal ellipsis
    case U';':
    case U'\u037E':  // Greek question mark
      return true;
    default:
      return false;
  }
}

bool is_closer(UChar32 c) {
  switch (c) {
    case U'"':
    case U'\'':
    case U')':
    case U']':
    case U'\u00BB':  // right guillemet
    case U'\u201D':
    case U'\u2019':
      return true;
    default:
      return false;
  }
}

bool is_opener(UChar32 c) {
  switch (c) {
    case U'"':
    case U'\u00AB':  // left guillemet
    case U'\u201C':
      return true;
    default:
      return false;
  }
}

bool is_upper(UChar32 c) {
  return c >= 0 && (u_isUUppercase(c) || u_istitle(c));
}

// Strips characters that may open a token, e.g. "(Α.Ε." -> "Α.Ε.".
std::string_view strip_leading_openers(std::string_view word) {
  std::size_t pos = 0;
  while (pos < word.size()) {
    const CodePoint cp = decode_at(word, pos);
    if (!(is_opener(cp.value) || cp.value == U'(' || cp.value == U'[' ||
          cp.value == U'\'' || cp.value == U'\u2018')) {
      break;
    }
    pos = cp.end;
  }
  return word.substr(pos);
}

class AbbreviationSet {
 public:
  explicit AbbreviationSet(const std::vector<std::string>& entries) {
    normalized_.reserve(entries.size());
    for (const auto& e : entries) normalized_.push_back(normalize(e).normalized);
    std::sort(normalized_.begin(), normalized_.end());
  }

  bool contains(std::string_view word) const {
    const std::string key = normalize(word).normalized;
    return std::binary_search(normalized_.begin(), normalized_.end(), key);
  }

 private:
  std::vector<std::string> normalized_;
};

}  // namespace

std::size_t NgramMultiset::total() const {
  std::size_t sum = 0;
  for (const auto& [gram, count] : counts) sum += count;
  return sum;
}

std::vector<std::string> SplitterOptions::default_abbreviations() {
  return {"κ.", "π.χ.", "δισ.", "εκατ.", "Α.Ε.", "χιλ.", "τρισ.", "βλ.",
          "κ.λπ.", "κλπ.", "δηλ.", "αρ.", "σελ.", "Ο.Ε.", "Ε.Π.Ε."};
}

NormalizedText normalize(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU NFC normalizer unavailable");
  }
  icu::UnicodeString u = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  u = nfc->normalize(u, status);
  u.foldCase(U_FOLD_CASE_DEFAULT);
  u = nfc->normalize(u, status);
  if (U_FAILURE(status)) {
    throw std::runtime_error("ICU normalization failed");
  }
  NormalizedText out;
  out.original = std::string(text);
  u.toUTF8String(out.normalized);
  return out;
}

TokenSeq word_tokenize(const NormalizedText& text) {
  return word_tokenize(text.normalized);
}

TokenSeq word_tokenize(std::string_view normalized) {
  TokenSeq tokens;
  std::size_t pos = 0;
  std::size_t start = std::string_view::npos;
  while (pos < normalized.size()) {
    const CodePoint cp = decode_at(normalized, pos);
    const bool in_token = start != std::string_view::npos;
    if (is_word_start(cp.value) || (in_token && is_mark(cp.value))) {
      if (!in_token) start = cp.begin;
    } else if (in_token) {
      tokens.emplace_back(normalized.substr(start, cp.begin - start));
      start = std::string_view::npos;
    }
    pos = cp.end;
  }
  if (start != std::string_view::npos) {
    tokens.emplace_back(normalized.substr(start));
  }
  return tokens;
}

TokenSeq tokenize(std::string_view text) {
  return word_tokenize(normalize(text).normalized);
}

SentenceList split_sentences(std::string_view text,
                             const SplitterOptions& options) {
  const AbbreviationSet abbreviations(options.abbreviations);
  SentenceList out;

  auto skip_space = [&](std::size_t pos) {
    while (pos < text.size()) {
      const CodePoint cp = decode_at(text, pos);
      if (!is_space(cp.value)) break;
      pos = cp.end;
    }
    return pos;
  };

  // Byte offset just past the last non-space code point in [from, to).
  auto trim_end = [&](std::size_t from, std::size_t to) {
    std::size_t last = from;
    std::size_t pos = from;
    while (pos < to) {
      const CodePoint cp = decode_at(text, pos);
      if (!is_space(cp.value)) last = cp.end;
      pos = cp.end;
    }
    return last;
  };

  auto emit = [&](std::size_t begin, std::size_t end) {
    out.push_back({std::string(text.substr(begin, end - begin)), begin, end});
  };

  // The whitespace-delimited word that ends just before `period_end`.
  auto word_before = [&](std::size_t sentence_begin, std::size_t period_end) {
    std::size_t begin = sentence_begin;
    std::size_t pos = sentence_begin;
    while (pos < period_end) {
      const CodePoint cp = decode_at(text, pos);
      if (is_space(cp.value)) begin = cp.end;
      pos = cp.end;
    }
    return strip_leading_openers(text.substr(begin, period_end - begin));
  };

  std::size_t sentence_begin = skip_space(0);
  std::size_t pos = sentence_begin;
  while (pos < text.size()) {
    const CodePoint cp = decode_at(text, pos);
    if (!is_terminator(cp.value)) {
      pos = cp.end;
      continue;
    }

    const bool is_period = cp.value == U'.';
    const std::size_t first_terminator_end = cp.end;
    std::size_t run_end = cp.end;
    while (run_end < text.size()) {
      const CodePoint next = decode_at(text, run_end);
      if (!is_terminator(next.value) && !is_closer(next.value)) break;
      run_end = next.end;
    }

    bool boundary = false;
    std::size_t next_begin = run_end;
    if (run_end >= text.size()) {
      boundary = true;
    } else {
      const CodePoint after = decode_at(text, run_end);
      if (is_space(after.value)) {
        next_begin = skip_space(run_end);
        if (next_begin >= text.size()) {
          boundary = true;
        } else {
          const CodePoint follower = decode_at(text, next_begin);
          boundary = is_upper(follower.value) || is_opener(follower.value);
        }
      }
    }

    if (boundary && is_period &&
        abbreviations.contains(word_before(sentence_begin, first_terminator_end))) {
      boundary = false;
    }

    if (boundary) {
      emit(sentence_begin, run_end);
      sentence_begin = skip_space(run_end);
      pos = sentence_begin;
    } else {
      pos = run_end;
    }
  }

  if (sentence_begin < text.size()) {
    const std::size_t end = trim_end(sentence_begin, text.size());
    if (end > sentence_begin) emit(sentence_begin, end);
  }
  return out;
}

NgramMultiset ngrams(std::span<const std::string> tokens, std::size_t n) {
  if (n == 0) throw std::invalid_argument("ngrams: n must be at least 1");
  NgramMultiset out;
  out.n = n;
  if (tokens.size() < n) return out;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++out.counts[Ngram(tokens.begin() + i, tokens.begin() + i + n)];
  }
  return out;
}

bool is_valid_utf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = decode_at(text, pos);
    if (cp.value < 0) return false;
    pos = cp.end;
  }
  return true;
}

bool is_blank(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const CodePoint cp = decode_at(text, pos);
    if (!is_space(cp.value)) return false;
    pos = cp.end;
  }
  return true;
}

}  // namespace sumeval::text

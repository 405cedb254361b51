#include "csv.hpp"

#include <stdexcept>

namespace sumeval::detail {

std::optional<CsvReader::Row> CsvReader::next() {
  Row row;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  bool field_was_quoted = false;
  row.line = line_;

  int ch;
  while ((ch = in_.get()) != std::char_traits<char>::eof()) {
    any = true;
    const char c = static_cast<char>(ch);
    if (in_quotes) {
      if (c == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line_;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty() && !field_was_quoted) {
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == ',') {
      row.fields.push_back(std::move(field));
      field.clear();
      field_was_quoted = false;
    } else if (c == '\n') {
      ++line_;
      if (!field.empty() && field.back() == '\r' && !field_was_quoted) field.pop_back();
      row.fields.push_back(std::move(field));
      return row;
    } else if (c == '\r' && field_was_quoted) {
      // CR of a CRLF after a closing quote.
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw std::runtime_error("unterminated quoted field starting on line " +
                             std::to_string(row.line));
  }
  if (!any) return std::nullopt;
  if (!field.empty() && field.back() == '\r' && !field_was_quoted) field.pop_back();
  row.fields.push_back(std::move(field));
  return row;
}

}  // namespace sumeval::detail

#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace sumeval::detail {

// RFC 4180 reader: comma separated, double-quote escaping, quoted fields may
// span lines. Tracks the physical line each row starts on.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  struct Row {
    std::size_t line = 0;
    std::vector<std::string> fields;
  };

  // Throws std::runtime_error on an unterminated quoted field.
  std::optional<Row> next();

 private:
  std::istream& in_;
  std::size_t line_ = 1;
};

}  // namespace sumeval::detail

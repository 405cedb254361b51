#pragma once

#include <stdexcept>
#include <string>

namespace sumeval {

/// Input data violates a domain invariant (bad record, duplicate id, missing
/// embedding, empty split). Maps to exit status 1 in the CLI.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read, or written. Maps to exit status 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sumeval

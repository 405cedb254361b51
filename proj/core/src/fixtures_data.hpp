#pragma once

#include <array>
#include <string_view>

namespace sumeval::fixtures::detail {

struct SystemFile {
  std::string_view key;
  std::string_view jsonl;
};

extern const std::string_view kCorpus;
extern const std::array<SystemFile, 5> kSystems;

}  // namespace sumeval::fixtures::detail

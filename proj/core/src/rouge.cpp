#include "sumeval/rouge.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sumeval/textproc.hpp"

namespace sumeval::rouge {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

Prf rouge_n(std::span<const std::string> candidate,
            std::span<const std::string> reference, std::size_t n) {
  if (n == 0) throw std::invalid_argument("rouge_n: n must be at least 1");
  const auto cand = text::ngrams(candidate, n);
  const auto ref = text::ngrams(reference, n);

  // Both maps are ordered by key, so a merge walk finds the shared grams.
  std::size_t overlap = 0;
  auto c = cand.counts.begin();
  auto r = ref.counts.begin();
  while (c != cand.counts.end() && r != ref.counts.end()) {
    if (c->first < r->first) {
      ++c;
    } else if (r->first < c->first) {
      ++r;
    } else {
      overlap += std::min(c->second, r->second);
      ++c;
      ++r;
    }
  }
  return Prf::from(ratio(overlap, cand.total()), ratio(overlap, ref.total()));
}

std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return 0;

  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                     : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

Prf rouge_l(std::span<const std::string> candidate,
            std::span<const std::string> reference) {
  const std::size_t lcs = lcs_length(candidate, reference);
  return Prf::from(ratio(lcs, candidate.size()), ratio(lcs, reference.size()));
}

}  // namespace sumeval::rouge

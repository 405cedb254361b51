#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "sumeval/prf.hpp"

namespace sumeval::rouge {

/// Clipped n-gram overlap. precision = overlap / candidate windows,
/// recall = overlap / reference windows; a zero denominator yields 0.
/// Throws std::invalid_argument when n == 0.
Prf rouge_n(std::span<const std::string> candidate,
            std::span<const std::string> reference, std::size_t n);

/// Length of the longest common (not necessarily contiguous) subsequence.
/// O(|a|*|b|) time, O(min(|a|,|b|)) memory.
std::size_t lcs_length(std::span<const std::string> a,
                       std::span<const std::string> b);

/// LCS over the whole summary treated as one sequence (no sentence union).
Prf rouge_l(std::span<const std::string> candidate,
            std::span<const std::string> reference);

}  // namespace sumeval::rouge

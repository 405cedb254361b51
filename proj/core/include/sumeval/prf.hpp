#pragma once

namespace sumeval {

/// Precision/recall/F1 triple. f1 is the harmonic mean of precision and
/// recall when their sum is positive and 0 otherwise.
struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static Prf from(double precision, double recall) {
    Prf out{precision, recall, 0.0};
    if (precision + recall > 0.0) {
      out.f1 = 2.0 * precision * recall / (precision + recall);
    }
    return out;
  }

  friend bool operator==(const Prf&, const Prf&) = default;
};

}  // namespace sumeval

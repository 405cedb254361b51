#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "sumeval/rouge.hpp"

using namespace sumeval;
using sumeval::testing::Tokens;

TEST_CASE("rouge_n examples") {
  const Tokens abc{"α", "β", "γ"};
  CHECK(rouge::rouge_n(abc, abc, 1) == Prf{1.0, 1.0, 1.0});
  const auto p = rouge::rouge_n(abc, Tokens{"α", "β", "δ"}, 1);
  CHECK(p.precision == doctest::Approx(2.0 / 3.0));
  CHECK(p.recall == doctest::Approx(2.0 / 3.0));
  CHECK(p.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(rouge::rouge_n(Tokens{}, Tokens{"α"}, 1) == Prf{});
  CHECK(rouge::rouge_n(Tokens{"α"}, Tokens{}, 1) == Prf{});
  CHECK_THROWS_AS(rouge::rouge_n(abc, abc, 0), std::invalid_argument);
}

TEST_CASE("rouge_n clips repeated n-grams") {
  const auto p = rouge::rouge_n(Tokens{"το", "το", "το"}, Tokens{"το", "σπίτι"}, 1);
  CHECK(p.precision == doctest::Approx(1.0 / 3.0));
  CHECK(p.recall == doctest::Approx(0.5));
}

TEST_CASE("rouge_n bigrams") {
  const auto p = rouge::rouge_n(Tokens{"a", "b", "c"}, Tokens{"a", "b", "d"}, 2);
  CHECK(p.precision == doctest::Approx(0.5));
  CHECK(p.recall == doctest::Approx(0.5));
  CHECK(rouge::rouge_n(Tokens{"a"}, Tokens{"a"}, 2) == Prf{});
}

TEST_CASE("lcs_length examples") {
  CHECK(rouge::lcs_length(Tokens{"a", "b", "c", "d", "e"}, Tokens{"a", "c", "e"}) == 3);
  const Tokens x{"a", "b", "a", "c"};
  CHECK(rouge::lcs_length(x, x) == x.size());
  CHECK(rouge::lcs_length(x, Tokens{}) == 0);
  CHECK(rouge::lcs_length(Tokens{}, Tokens{}) == 0);
}

TEST_CASE("rouge_l examples") {
  const auto p = rouge::rouge_l(Tokens{"a", "b", "c", "d"}, Tokens{"a", "c", "d"});
  CHECK(p.precision == doctest::Approx(0.75));
  CHECK(p.recall == doctest::Approx(1.0));
  CHECK(p.f1 == doctest::Approx(6.0 / 7.0));
  CHECK(rouge::rouge_l(Tokens{"a", "b"}, Tokens{"a", "b"}) == Prf{1.0, 1.0, 1.0});
  CHECK(rouge::rouge_l(Tokens{"a", "b"}, Tokens{"c", "d"}) == Prf{});
  CHECK(rouge::rouge_l(Tokens{}, Tokens{"c"}) == Prf{});
}

TEST_CASE("rouge matches the brute-force oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = testing::random_tokens(rng, 0, 12, 5);
    const auto b = testing::random_tokens(rng, 0, 12, 5);
    for (std::size_t n : {1u, 2u, 3u}) {
      const auto got = rouge::rouge_n(a, b, n);
      const auto want = testing::rouge_n_oracle(a, b, n);
      CHECK(got.precision == want.p);
      CHECK(got.recall == want.r);
      CHECK(got.f1 == want.f);
    }
    if (a.size() <= 10 && b.size() <= 10) {
      CHECK(rouge::lcs_length(a, b) == testing::lcs_oracle(a, b));
    }
  }
}

TEST_CASE("rouge properties") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = testing::random_tokens(rng, 0, 10, 4);
    const auto b = testing::random_tokens(rng, 0, 10, 4);
    for (std::size_t n : {1u, 2u}) {
      const auto ab = rouge::rouge_n(a, b, n);
      const auto ba = rouge::rouge_n(b, a, n);
      CHECK(ab.precision == ba.recall);
      CHECK(ab.recall == ba.precision);
      for (double v : {ab.precision, ab.recall, ab.f1}) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
      }
      // Appending a token absent from the reference.
      auto longer = a;
      longer.push_back("zz");
      const auto grown = rouge::rouge_n(longer, b, n);
      CHECK(grown.recall <= ab.recall);
      const double hits_before = ab.precision * static_cast<double>(a.size() >= n ? a.size() - n + 1 : 0);
      const double hits_after =
          grown.precision * static_cast<double>(longer.size() >= n ? longer.size() - n + 1 : 0);
      CHECK(hits_after <= hits_before + 1e-9);
    }
    const auto l = rouge::rouge_l(a, b);
    CHECK(l.f1 >= 0.0);
    CHECK(l.f1 <= 1.0);
    CHECK(rouge::lcs_length(a, b) == rouge::lcs_length(b, a));
  }
}

TEST_CASE("Prf::from follows the harmonic mean") {
  CHECK(Prf::from(0.0, 0.0) == Prf{});
  const auto p = Prf::from(0.5, 1.0);
  CHECK(p.f1 == doctest::Approx(2.0 / 3.0));
}

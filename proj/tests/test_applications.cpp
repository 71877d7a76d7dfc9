#include "doctest.h"

#include "betti/applications.hpp"
#include "betti/bounds.hpp"

using namespace betti;

TEST_CASE("pull-back is a multi-degree closed-set bound with s' = m + s") {
  for (std::int64_t s = 0; s <= 2; ++s)
    for (std::int64_t m = 1; m <= 2; ++m) {
      const auto pb = pull_back_bound({2, m, 3, 2, s});
      if (m + s >= 1) CHECK(pb.value == multi_semi_bound({3, 2}, {2, m}, m + s, std::nullopt).value);
      CHECK(pb.value > 0);
    }
  // Swapping the roles of (d, k) and (D, m) is not a symmetry.
  CHECK(pull_back_bound({1, 2, 3, 2, 1}).value != pull_back_bound({2, 1, 2, 3, 1}).value);
  CHECK_THROWS_AS(pull_back_bound({2, 1, 2, 1, 1}), HypothesisError);
}

TEST_CASE("image") {
  // i = 0: one fibered power, blocks (k, m) with α₀ = k + m.
  const auto i0 = image_bound({2, 2, 3, 2, 1, 0});
  CHECK(i0.value == multi_semi_bound({3, 2}, {2, 2}, 3, std::nullopt).value);
  Rational prev = 0;
  for (std::int64_t i = 0; i <= 2; ++i) {
    const Rational v = image_bound({1, 2, 2, 2, 1, i}).value;
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(image_bound({2, 1, 3, 2, 1, 2}), HypothesisError);
  CHECK_THROWS_AS(image_bound({2, 1, 2, 3, 1, 0}), HypothesisError);
  CHECK_THROWS_AS(image_bound({0, 0, 2, 2, 1, 0}), HypothesisError);
}

TEST_CASE("Fourier-Mukai: literal triple sum") {
  // Second evaluator: expand the h sum into multiplicities (α - l + 1).
  auto oracle = [](std::int64_t k, std::int64_t m, std::int64_t d, std::int64_t D, std::int64_t s, std::int64_t i) {
    Rational total = 0;
    for (std::int64_t j = 0; j <= i; ++j) {
      IntVector dv(static_cast<std::size_t>(j + 1), d), kv(static_cast<std::size_t>(j + 1), k);
      dv.push_back(D);
      kv.push_back(m);
      const std::int64_t alpha = (j + 1) * (k + m) + k;
      for (std::int64_t l = 1; l <= alpha; ++l)
        total += Rational((alpha - l + 1) * binomial((j + 1) * s + 1, l) * ipow(Integer(6), l)) * g_min(dv, kv, l).value;
    }
    return total;
  };
  CHECK(fourier_mukai_bound({1, 1, 2, 2, 1, 0, 1}).value == oracle(1, 1, 2, 2, 1, 1));
  CHECK(fourier_mukai_bound({2, 1, 3, 2, 0, 1, 0}).value == oracle(2, 1, 3, 2, 1, 0));
  // s1 = s2 = 0 leaves only l = 1: Σ_h over α₀ = k + m + k terms.
  const Rational zero = fourier_mukai_bound({1, 1, 2, 2, 0, 0, 0}).value;
  CHECK(zero == Rational(3 * 6) * g_min({2, 2}, {1, 1}, 1).value);
  CHECK_THROWS_AS(fourier_mukai_bound({1, 1, 2, 2, 1, 1, 2}), HypothesisError);
  CHECK_THROWS_AS(fourier_mukai_bound({0, 0, 2, 2, 1, 1, 0}), HypothesisError);  // nothing to fiber over
}

TEST_CASE("transversals") {
  for (std::int64_t k = 1; k <= 10; ++k) CHECK(transversal_m(k) == (k + 1) * (k + 2) / 2 - 1);
  CHECK(transversal_m(3) == 9);
  const auto r = transversal_bound({2, 1, 2, 1, 0});
  CHECK(r.value > 0);
  {
    // k=2, k'=1, d=2, s=1, i=0: m = 5, α₀ = 7, polynomial count 1 + 5 + 6 = 12.
    Rational want = 0;
    for (std::int64_t l = 1; l <= 7; ++l)
      want += Rational((7 - l + 1) * binomial(13, l) * ipow(Integer(6), l)) * g_min({2, 2}, {2, 5}, l).value;
    CHECK(r.value == want);
  }
  CHECK(transversal_bound({2, 1, 5, 1, 0}).value > r.value);
  CHECK_THROWS_AS(transversal_bound({2, 3, 2, 1, 0}), HypothesisError);
  CHECK_THROWS_AS(transversal_bound({2, 1, 1, 1, 0}), HypothesisError);
}

TEST_CASE("scenario dispatch") {
  const MapScenario sc = Image{1, 1, 2, 2, 1, 0};
  CHECK(application_bound(sc).value == image_bound({1, 1, 2, 2, 1, 0}).value);
  CHECK(application_bound(sc).citation == "image");
}

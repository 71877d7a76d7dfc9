#include "doctest.h"

#include "betti/bounds.hpp"
#include "betti/generic_chi.hpp"

using namespace betti;

namespace {

Integer Z(long v) { return Integer(v); }

// G_gen with binom(k, j-1)/multinomial(k; k) rewritten as Π k_i! / ((j-1)! (k-j+1)!).
Rational g_gen_oracle(const IntVector& d, const IntVector& kv, std::int64_t j) {
  std::int64_t k = 0;
  for (auto v : kv) k += v;
  const auto p = static_cast<long>(kv.size());
  Rational out = 1 + sign_pow(k - j + 1);
  if (j - 1 > k) return out;
  Integer num = ipow(Z(k - j + 2), 2);
  for (std::size_t i = 0; i < kv.size(); ++i) num *= factorial(kv[i]) * ipow(Z(d[i]), kv[i]);
  Rational t = ratio(num, factorial(j - 1) * factorial(k - j + 1));
  t *= ipow(Rational(1 + p), 3 * k - j + 1);
  t /= Rational(p * (p + 2));
  return out + t;
}

}  // namespace

TEST_CASE("classic bounds") {
  CHECK(optm_bound(2, 3).value == 18);
  CHECK(optm_bound(1, 7).value == 1);
  for (std::int64_t s = 1; s <= 3; ++s)
    for (std::int64_t d = 1; d <= 3; ++d)
      for (std::int64_t k = 1; k <= 4; ++k) {
        // Σ_i Σ_{j<=k-i} collapses to Σ_j (k-j+1) binom(s+1, j) 6^j.
        Integer w = 0;
        for (std::int64_t j = 0; j <= k; ++j) w += (k - j + 1) * binomial(s + 1, j) * ipow(Z(6), j);
        CHECK(b99_bound(s, d, k).value == Rational(w * d * ipow(Z(2 * d - 1), k - 1)));
        CHECK(gv07_bound(s, d, k).value >= b99_bound(s, d, k).value);
      }
  CHECK(basu_kettner_bound(1, 2, 0).value == Rational(7, 2));
  CHECK(safey_el_din_bound({2}, 2, 1, SafeyVariant::Radical).value == 6);
  CHECK(safey_el_din_bound({2}, 2, 1, SafeyVariant::RegularSequence).value == 4);
  CHECK_THROWS_AS(safey_el_din_bound({2}, 3, 3, SafeyVariant::Radical), HypothesisError);
  CHECK_THROWS_AS(b99_bound(0, 2, 2), HypothesisError);
}

TEST_CASE("total degree bound") {
  const auto one = total_degree_variety_bound(1, 4, 2);
  CHECK(one.value == 1);
  CHECK(one.branch == "(1 + (2d-1)^k)/2");
  for (std::int64_t d = 2; d <= 6; ++d)
    for (std::int64_t k = 2; k <= 6; ++k) {
      const auto r = total_degree_variety_bound(d, k, 1);
      CHECK(r.value <= ratio(1 + ipow(Z(2 * d - 1), k), 2));
      CHECK(r.value < optm_bound(d, k).value);
    }
  CHECK_THROWS_AS(f1(3, 3, 1), HypothesisError);
  CHECK(f2(2, 2, 1) == Z(2 + 1 * (4 + 1)));
}

TEST_CASE("multi-degree: G_gen against a rearranged evaluation") {
  for (const auto& [d, kv] : std::vector<std::pair<IntVector, IntVector>>{{{2}, {3}}, {{2, 4}, {1, 2}}, {{3, 2, 2}, {2, 1, 1}}, {{2, 2}, {0, 2}}})
    for (std::int64_t j = 1; j <= 6; ++j) CHECK(g_gen(d, kv, j) == g_gen_oracle(d, kv, j));
  CHECK(g_gen({2, 2}, {1, 1}, 1) == betti_blocks_bound({1, 1}, {2, 2}, 1));
  CHECK_THROWS_AS(g_min({1, 2}, {1, 1}, 1), HypothesisError);
  CHECK_THROWS_AS(g_gen({2}, {1, 1}, 1), ShapeError);
}

TEST_CASE("per-i sums do not increase with i") {
  for (std::int64_t s = 1; s <= 3; ++s) {
    Rational prev_m, prev_b, prev_h;
    for (std::int64_t i = 0; i <= 2; ++i) {
      const Rational m = multi_semi_bound({2, 3}, {1, 2}, s, i).value;
      const Rational b = box_semi_bound(IntMatrix::from_rows({{2, 2, 3}}), s, i).value;
      const Rational h = partially_quadratic_semi_bound(3, 1, 2, s, i).value;
      if (i > 0) {
        CHECK(m <= prev_m);
        CHECK(b <= prev_b);
        CHECK(h <= prev_h);
      }
      prev_m = m, prev_b = b, prev_h = h;
    }
  }
  CHECK_THROWS_AS(multi_semi_bound({2, 3}, {1, 2}, 1, 3), HypothesisError);
}

TEST_CASE("boxes") {
  CHECK(k_gen(IntMatrix::from_rows({{2}, {2}})) == 0);  // more rows than columns
  const IntMatrix d = IntMatrix::from_rows({{2, 2}, {3, 3}});
  CHECK(k_gen(d) == betti_boxes_generic(d));  // r = k: 1 + (-1)^1 = 0
  CHECK(box_variety_bound(IntMatrix::from_rows({{2, 3}})).value > 0);
  CHECK_THROWS_AS(box_variety_bound(IntMatrix::from_rows({{1, 3}})), HypothesisError);
}

TEST_CASE("partially quadratic") {
  CHECK(h_gen(2, 1, 2, 1) == 27);
  CHECK(h_full(2, 1, 2, 1) == 3 + 2 * (h_gen(2, 1, 2, 1) + h_gen(2, 1, 2, 2)));
  CHECK_THROWS_AS(partially_quadratic_variety_bound(1, 1, 1, 1), HypothesisError);
  CHECK(m_gen({2}, 1, 1, 1) == betti_several_blocks_mixed_bound({2}, 1, 1, 1));
  CHECK_THROWS_AS(m_gen({2, 2}, 1, 1, 1), ShapeError);
}

TEST_CASE("H'_gen shares its inner sum with quadrics_B") {
  for (std::int64_t k = 2; k <= 9; ++k)
    for (std::int64_t i = 1; i <= k; ++i) {
      // (-2)^h Σ (-1)^{j+1} binom(j, h) = (-1)^h B(h, k, i)
      Integer inner = k - i + 1;
      for (std::int64_t h = 0; h < i; ++h) inner += sign_pow(h) * quadrics_B(h, k, i);
      const Integer want = Z((1 + sign_pow(k - i + 1)) * (k - i + 1)) + sign_pow(k - i) * inner;
      CHECK(h_gen_prime(k, i) == want);
    }
}

TEST_CASE("projective quadrics bound dominates the exact generic value") {
  for (std::int64_t k = 2; k <= 8; ++k)
    for (std::int64_t l = 1; l <= std::min<std::int64_t>(3, k - 1); ++l)
      CHECK(projective_quadrics_bound(k, l).value >= quadrics_projective(k, l).betti_sum);
}

TEST_CASE("BP'R new") {
  // Per-i value rebuilt from the (j1, j2) pairs directly.
  {
    const std::int64_t s = 1, m = 1, d = 4, k1 = 3, k2 = 2, k = 5;
    for (std::int64_t i = 0; i < k; ++i) {
      Integer want = 0;
      for (std::int64_t j1 = 0; j1 <= std::min(s, k1); ++j1)
        for (std::int64_t j2 = 0; j2 <= std::min(m + 1, k - j1); ++j2)
          if (j1 + j2 >= 1 && j1 + j2 <= k - i)
            want += binomial(s, j1) * binomial(m + 1, j2) * ipow(Z(5), j1 + j2) * h_full(2 * d, k1, k2, j2 + 1);
      CHECK(bpr_new_bound(s, m, d, k1, k2, i).value == Rational(want));
    }
  }
  const auto closed = bpr_new_bound(1, 1, 2, 1, 1, std::nullopt);
  const auto per_i = bpr_new_bound(1, 1, 2, 1, 1, 0);
  CHECK(closed.value > per_i.value);
  CHECK_THROWS_AS(bpr_new_bound(1, 2, 2, 1, 1, std::nullopt), HypothesisError);
}

TEST_CASE("two degrees") {
  CHECK(refined_F(2, 2, 2) == 22);
  CHECK(refined_F(2, 2, 1) == 2);
  CHECK(two_degree_variety_bound(2, 2, 2).value == 25);
  CHECK(two_degree_simple_bound(2, 2, 2) == 32);
  CHECK_THROWS_AS(two_degree_variety_bound(3, 2, 2), HypothesisError);
  CHECK(barone_basu_bound(1, 2, 1, 0, 1, BBReading::D2).value == 6);
  CHECK(barone_basu_bound(2, 3, 3, 2, 1, BBReading::D1).value < barone_basu_bound(2, 3, 3, 2, 1, BBReading::Max2D1D2).value);
  // With s = 1 the j = 2 term carries binom(1, 2) = 0, so i = 0 and i = 1 agree.
  CHECK(bb_new_bound(2, 3, 3, 2, 1, 0).value == bb_new_bound(2, 3, 3, 2, 1, 1).value);
  CHECK(bb_new_bound(2, 3, 3, 2, 2, 0).value > bb_new_bound(2, 3, 3, 2, 2, 1).value);
  CHECK_THROWS_AS(bb_new_bound(2, 3, 3, 2, 1, 2), HypothesisError);
}

TEST_CASE("leading coefficients") {
  const auto [ours, blr] = leading_coefficient_comparison(2);
  CHECK(ours == 16);
  CHECK(blr == Rational(3, 2));
  for (std::int64_t l = 9; l <= 20; ++l) {
    const auto [a, b] = leading_coefficient_comparison(l);
    CHECK(a < b);
  }
  const auto [a8, b8] = leading_coefficient_comparison(8);
  CHECK(a8 > b8);
}

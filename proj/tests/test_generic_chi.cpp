#include "doctest.h"

#include "betti/generic_chi.hpp"

using namespace betti;

namespace {

Integer Z(long v) { return Integer(v); }

std::size_t sz(std::int64_t v) { return static_cast<std::size_t>(v); }

}  // namespace

TEST_CASE("Khovanskii face sum on textbook cases") {
  CHECK(chi_khovanskii(GenericSystem::simplices(3, {2, 2})) == -4);
  for (std::int64_t k = 1; k <= 5; ++k)
    for (std::int64_t d = 1; d <= 4; ++d)
      CHECK(chi_khovanskii(GenericSystem::simplices(sz(k), {d})) == Rational(1 + sign_pow(k - 1) * ipow(Z(d - 1), k)));
  // ℓ = k: the number of solutions, Π d_i.
  CHECK(chi_khovanskii(GenericSystem::simplices(3, {2, 3, 4})) == 24);
  CHECK(chi_khovanskii(GenericSystem::boxes(IntMatrix::from_rows({{2, 1}, {1, 3}}))) == 7);  // 2·3 + 1·1
}

TEST_CASE("chi to b conversions") {
  const auto r = betti_generic(GenericSystem::simplices(4, {2, 2}), Setting::Affine);
  CHECK(r.betti_sum == 8);
  CHECK(r.kind == ValueKind::Exact);
  CHECK(affine_betti_from_chi(r.chi, 4, 2) == r.betti_sum);
  const auto p = betti_generic(GenericSystem::simplices(3, {2, 2}), Setting::Projective);
  CHECK(p.chi == 0);
  CHECK(p.betti_sum == 4);
  CHECK(projective_betti_from_chi(p.chi, 3, 2) == 4);
}

TEST_CASE("projective setting needs simplices") {
  CHECK_THROWS_AS(betti_generic(GenericSystem::boxes(IntMatrix::from_rows({{2, 2}})), Setting::Projective), UnsupportedFamilyError);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(chi_khovanskii(GenericSystem::boxes(IntMatrix::from_rows({{2, 0}}))), HypothesisError);
  CHECK_THROWS(chi_khovanskii(GenericSystem::simplices(1, {2, 2})));
}

TEST_CASE("closed forms at known values") {
  CHECK(betti_one_multi({2, 2}) == 6);
  for (std::int64_t d = 1; d <= 6; ++d) {
    CHECK(betti_one_multi({d, d}) == Rational(Z(2 * d * d - 2 * d + 2)));
    CHECK(betti_one_multi({d}) == d);
  }
  CHECK(betti_ci_total_distinct(3, {2, 3, 5}) == 30);
  CHECK(betti_ci_total_distinct(4, {3}) == 17);
  for (std::int64_t k = 2; k <= 8; ++k) CHECK(quadrics_affine_chi(k, 2) == Rational(1 + sign_pow(k + 1) * (1 - 2 * k)));
}

TEST_CASE("generic complex bounds, direct evaluation") {
  // 2 + 9 · (1/2) · 3^6 / 8 · 4
  CHECK(betti_blocks_bound({1, 1}, {2, 2}, 1) == Rational(6569, 4));
  CHECK(betti_partially_quadratic_bound(2, 1, 2, 1) == 27);
  // 2 + 1 + 1·2·1!·1·5·2
  CHECK(betti_several_blocks_mixed_bound({2}, 1, 1, 1) == 23);
  CHECK(betti_several_blocks_mixed_bound({}, 0, 3, 2) == betti_partially_quadratic_bound(1, 0, 3, 2));
}

TEST_CASE("inner_F at l = 1 is the binomial theorem") {
  for (std::int64_t k2 = 0; k2 <= 8; ++k2) CHECK(inner_F(0, k2, 1) == Z(sign_pow(k2)));
}

TEST_CASE("projective quadrics") {
  const auto r = quadrics_projective(3, 2);
  CHECK(r.chi == 0);
  CHECK(r.betti_sum == 4);
  CHECK(r.setting == Setting::Projective);
  CHECK(quadrics_projective(2, 1).betti_sum == 2);  // a conic is a circle
  CHECK_THROWS_AS(quadrics_projective(3, 3), HypothesisError);
  CHECK(quadrics_B(0, 3, 2) == 0);  // -1 + 1 over j = 2, 3
}

TEST_CASE("boxes: column permutation symmetry") {
  const IntMatrix d = IntMatrix::from_rows({{2, 3, 1}, {1, 2, 2}});
  const std::vector<std::size_t> perm{2, 0, 1};
  CHECK(betti_boxes_generic(d) == betti_boxes_generic(d.select_columns(perm)));
  CHECK(betti_boxes_generic(IntMatrix::from_rows({{2, 2}, {3, 3}})) == 12);
}

TEST_CASE("Chern classes") {
  CHECK(chern_chi_projective(3, {2}) == 4);  // P^1 × P^1
  CHECK(chern_chi_projective(2, {3}) == 0);  // plane cubic
  CHECK(lefschetz_chi_affine(3, {2, 2}) == -4);
  CHECK_THROWS_AS(lefschetz_chi_affine(2, {2, 2}), HypothesisError);
}

TEST_CASE("boxes: literal column-subset sum against the face-sum engine") {
  auto engine = [](const IntMatrix& d) { return betti_generic(GenericSystem::boxes(d), Setting::Affine).betti_sum; };
  // Square systems: every multiplicity is 1 and the two agree.
  for (const auto& rows : std::vector<std::vector<IntVector>>{{{2, 2}, {3, 3}}, {{2, 3}, {4, 5}}, {{2, 3, 2}, {1, 2, 4}, {3, 1, 2}}}) {
    const IntMatrix d = IntMatrix::from_rows(rows);
    CHECK(betti_boxes_generic(d) == engine(d));
  }
  // Fewer polynomials than variables: the literal sum lacks the Π α_i! weights.
  // Recorded, not asserted equal.
  const IntMatrix curve = IntMatrix::from_rows({{2, 2}});
  CHECK(engine(curve) == 6);
  CHECK(betti_boxes_generic(curve) == 2);
  const IntMatrix surf = IntMatrix::from_rows({{2, 2, 2}, {3, 3, 3}});
  CHECK(engine(surf) == 146);
  CHECK(betti_boxes_generic(surf) == 56);
}

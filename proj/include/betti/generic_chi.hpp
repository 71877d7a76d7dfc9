#pragma once

#include <string>
#include <vector>

#include "betti/polytope.hpp"
#include "betti/result.hpp"

namespace betti {

enum class Setting { Affine, Projective };

std::string to_string(Setting s);

/// ℓ polynomials in k variables with generic coefficients and the given
/// Newton polytopes, all living on the coordinates {0..k-1}.
struct GenericSystem {
  std::size_t k = 0;
  std::vector<Polytope> supports;

  std::size_t ell() const { return supports.size(); }

  static GenericSystem shared(std::size_t k, const Polytope& support, std::size_t ell);
  static GenericSystem simplices(std::size_t k, const IntVector& degrees);
  static GenericSystem boxes(const IntMatrix& d);  // one row per polynomial
};

struct ChiReport {
  Rational chi;
  Rational betti_sum;
  std::size_t k = 0;
  std::size_t ell = 0;
  Setting setting = Setting::Affine;
  std::string conversion;
  ValueKind kind = ValueKind::Exact;
  bool real_upper_bound = true;
};

/// χ of a generic affine complete intersection (Khovanskii's face sum).
/// Throws HypothesisError if a support misses a coordinate axis,
/// UnsupportedFamilyError if the faces leave the supported classes.
Rational chi_khovanskii(const GenericSystem& sys);

/// Number of coordinate faces the face sum visits (after symmetry).
std::size_t khovanskii_face_classes(const GenericSystem& sys);

/// b from χ for a smooth affine / projective complete intersection.
Rational affine_betti_from_chi(const Rational& chi, std::size_t k, std::size_t ell);
Rational projective_betti_from_chi(const Rational& chi, std::size_t k, std::size_t ell);

/// χ and b. The projective setting needs total-degree (simplex) supports;
/// projective χ is the sum of affine χ over the slices C^n, n = ℓ..k.
ChiReport betti_generic(const GenericSystem& sys, Setting setting);

Rational betti_ci_total_distinct(std::int64_t k, const IntVector& d);
Rational betti_one_multi(const IntVector& d);
Rational betti_blocks_bound(const IntVector& k, const IntVector& d, std::int64_t ell);
Rational betti_partially_quadratic_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
Rational betti_several_blocks_mixed_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell);

/// Σ_{j2} binom(j1+j2, j2) binom(j1+j2-1, ℓ-1) binom(k2, j2) (-2)^{j2}, with
/// the upper index -1 read as a generalized binomial.
Integer inner_F(std::int64_t j1, std::int64_t k2, std::int64_t ell);

/// Exact χ for ℓ generic polynomials of degree <= d in k1 variables and
/// <= 2 in k2 further variables, and its per-variable degree variant.
Rational partially_quadratic_chi(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
Rational several_blocks_chi(const IntVector& d, std::int64_t k2, std::int64_t ell);

/// ℓ generic quadrics: affine χ in C^k, projective χ/b in P^k (ℓ < k).
Rational quadrics_affine_chi(std::int64_t k, std::int64_t ell);
ChiReport quadrics_projective(std::int64_t k, std::int64_t ell);
Integer quadrics_B(std::int64_t h, std::int64_t k, std::int64_t ell);

/// 1 + (-1)^{k-ℓ+1} + Σ_{j=ℓ}^{k} Σ_{|J|=j} (-1)^{k-j} Σ_{α>0,|α|=j} n_refined(d_J, α).
Rational betti_boxes_generic(const IntMatrix& d);

/// χ of a smooth complete intersection in P^k from its Chern classes.
Integer chern_chi_projective(std::int64_t k, const IntVector& d);
/// χ of the affine part, by removing the hyperplane section at infinity.
Integer lefschetz_chi_affine(std::int64_t k, const IntVector& d);

}  // namespace betti

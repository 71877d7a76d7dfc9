#pragma once

#include <optional>
#include <utility>

#include "betti/combinat.hpp"
#include "betti/result.hpp"

namespace betti {

// Total degree, varieties.
Integer f1(std::int64_t dp, std::int64_t k, std::int64_t j);
Integer f2(std::int64_t dp, std::int64_t k, std::int64_t j);
BoundResult total_degree_variety_bound(std::int64_t d, std::int64_t k, std::int64_t ell);

// Earlier bounds, kept for comparison.
BoundResult optm_bound(std::int64_t d, std::int64_t k);
BoundResult b99_bound(std::int64_t s, std::int64_t d, std::int64_t k);
BoundResult gv07_bound(std::int64_t s, std::int64_t d, std::int64_t k);
BoundResult basu_kettner_bound(std::int64_t s, std::int64_t k, std::int64_t i);
enum class SafeyVariant { Radical, RegularSequence };
BoundResult safey_el_din_bound(const IntVector& degrees, std::int64_t k, std::int64_t kp, SafeyVariant v);

// Multi-degree (blocks of variables).
Rational g_gen(const IntVector& d, const IntVector& k, std::int64_t j);
BoundResult g_min(const IntVector& d, const IntVector& k, std::int64_t ell);
/// Per-i sign-condition sum when i is given, closed-set bound otherwise.
BoundResult multi_semi_bound(const IntVector& d, const IntVector& k, std::int64_t s, std::optional<std::int64_t> i);

// Different boxes per polynomial.
Integer k_gen(const IntMatrix& d);
BoundResult box_variety_bound(const IntMatrix& d);
BoundResult box_semi_bound(const IntMatrix& d, std::int64_t s, std::optional<std::int64_t> i);

// Partially quadratic systems.
Integer h_gen(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t j);
Integer h_full(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
BoundResult partially_quadratic_variety_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
BoundResult partially_quadratic_semi_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t s, std::optional<std::int64_t> i);
Integer h_gen_prime(std::int64_t k, std::int64_t i);
BoundResult projective_quadrics_bound(std::int64_t k, std::int64_t ell);
BoundResult bpr_new_bound(std::int64_t s, std::int64_t m, std::int64_t d, std::int64_t k1, std::int64_t k2, std::optional<std::int64_t> i);

// Partially quadratic with one degree per non-quadratic variable.
Integer m_gen(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t j);
Integer m_full(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
BoundResult partially_quadratic_multi_variety_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell);
BoundResult partially_quadratic_multi_semi_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t s, std::optional<std::int64_t> i);

// Two degrees (Barone-Basu regime).
/// How to read the undefined symbol d in the d^j factor.
enum class BBReading { D2, D1, Max2D1D2 };
std::string to_string(BBReading r);
BoundResult barone_basu_bound(std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t kp, std::int64_t s, BBReading reading);
Rational refined_F(std::int64_t d1, std::int64_t d2, std::int64_t k);
Integer two_degree_simple_bound(std::int64_t d1, std::int64_t d2, std::int64_t k);
BoundResult two_degree_variety_bound(std::int64_t d1, std::int64_t d2, std::int64_t k);
BoundResult bb_new_bound(std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t kp, std::int64_t s, std::int64_t i);

/// (ℓ(3^ℓ-1)/(ℓ-1)!, (ℓ+1)/2): leading coefficients in d^k of the total
/// degree bound and of the Basu-Lerario-Rizzie bound.
std::pair<Rational, Rational> leading_coefficient_comparison(std::int64_t ell);

}  // namespace betti

#include "betti/bounds.hpp"

#include <algorithm>

#include "betti/generic_chi.hpp"

namespace betti {

namespace {

Integer Z(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require(bool ok, const std::string& clause) {
  if (!ok) throw HypothesisError("hypothesis violated: " + clause);
}

Integer signed_term(std::int64_t exp, const Integer& v) { return sign_pow(exp) > 0 ? v : Integer(-v); }

IntVector round_up_even_all(const IntVector& d) {
  IntVector out(d);
  for (auto& v : out) v = betti::round_up_even(v);
  return out;
}

std::int64_t sum(const IntVector& v) {
  std::int64_t s = 0;
  for (auto x : v) s += x;
  return s;
}

Integer product(const IntVector& d) {
  Integer p = 1;
  for (auto v : d) p *= Z(v);
  return p;
}

BoundResult make(Rational value, std::string id, std::vector<std::string> assumptions, std::string branch) {
  BoundResult r;
  r.value = std::move(value);
  r.citation = std::move(id);
  r.assumptions = std::move(assumptions);
  r.branch = std::move(branch);
  return r;
}

// Σ_j c_j · X(j) for the two semi-algebraic wrappers: per-i uses
// binom(s, j) 4^j over j = 1..k-i; the closed-set form sums
// binom(s+1, j) 6^j over i = 0..k, j = 1..k-i.
template <class Term>
Rational semi_wrap(std::int64_t k, std::int64_t s, std::optional<std::int64_t> i, Term term, std::string& branch) {
  Rational total = 0;
  if (i) {
    require(*i >= 0 && *i <= k - 1, "0 <= i <= k-1");
    for (std::int64_t j = 1; j <= k - *i; ++j) total += Rational(binomial(s, j) * ipow(Z(4), j)) * term(j);
    branch = "sign conditions, i=" + std::to_string(*i);
  } else {
    std::vector<Rational> cache(static_cast<std::size_t>(k) + 1);
    for (std::int64_t j = 1; j <= k; ++j) cache[static_cast<std::size_t>(j)] = term(j);
    for (std::int64_t ii = 0; ii <= k; ++ii)
      for (std::int64_t j = 1; j <= k - ii; ++j) total += Rational(binomial(s + 1, j) * ipow(Z(6), j)) * cache[static_cast<std::size_t>(j)];
    branch = "closed semi-algebraic set";
  }
  return total;
}

}  // namespace

Integer f1(std::int64_t dp, std::int64_t k, std::int64_t j) {
  require(dp >= 2 && dp % 2 == 0, "d' even and >= 2");
  require(j >= 1 && j <= k - 1, "1 <= j <= k-1");
  Integer s = 0;
  for (std::int64_t h = 0; h <= k - j; ++h)
    for (std::int64_t i = 0; i <= h; ++i)
      s += signed_term(k - j + h, binomial(k, h + j) * generalized_binomial(j + i - 2, i) * ipow(Z(2), h - i) * ipow(Z(dp), i));
  return Z(1 + sign_pow(k - j + 1)) + 2 * ipow(Z(dp), j - 1) * s;
}

Integer f2(std::int64_t dp, std::int64_t k, std::int64_t j) {
  require(dp >= 2 && dp % 2 == 0, "d' even and >= 2");
  require(j >= 1 && j <= k - 1, "1 <= j <= k-1");
  return Z(1 + sign_pow(k - j + 1)) + binomial(k - 1, j - 1) * (ipow(Z(dp), k) + Z(k - 1));
}

BoundResult total_degree_variety_bound(std::int64_t d, std::int64_t k, std::int64_t ell) {
  require(d >= 1, "d >= 1");
  require(k >= 1, "k >= 1");
  require(ell >= 1, "l >= 1");
  const std::int64_t dp = round_up_even(d);
  Integer first = 3 + binomial(ell, k) * ipow(Z(2), k) * ipow(Z(dp), k);
  for (std::int64_t j = 1; j <= k - 1; ++j) first += binomial(ell, j) * ipow(Z(2), j) * (f1(dp, k, j) + f2(dp, k, j));
  const Rational second = ratio(1 + ipow(Z(2 * d - 1), k), 2);
  const bool take_first = Rational(first) <= second;
  return make(take_first ? Rational(first) : second, "total-degree", {"d >= 1", "k >= 1", "l >= 1", "d' = " + std::to_string(dp)},
              take_first ? "F1/F2 sum" : "(1 + (2d-1)^k)/2");
}

BoundResult optm_bound(std::int64_t d, std::int64_t k) {
  require(d >= 1, "d >= 1");
  require(k >= 1, "k >= 1");
  return make(Rational(Z(d) * ipow(Z(2 * d - 1), k - 1)), "optm", {"d >= 1", "k >= 1"}, "d(2d-1)^(k-1)");
}

namespace {

BoundResult classic_semi(std::int64_t top, std::int64_t d, std::int64_t k, const char* id, std::vector<std::string> assumptions) {
  const Integer base = Z(d) * ipow(Z(2 * d - 1), k - 1);
  Integer s = 0;
  for (std::int64_t i = 0; i <= k; ++i)
    for (std::int64_t j = 0; j <= k - i; ++j) s += binomial(top, j) * ipow(Z(6), j);
  return make(Rational(s * base), id, std::move(assumptions), "double sum");
}

}  // namespace

BoundResult b99_bound(std::int64_t s, std::int64_t d, std::int64_t k) {
  require(s >= 1, "s >= 1");
  require(d >= 1, "d >= 1");
  require(k >= 1, "k >= 1");
  return classic_semi(s + 1, d, k, "b99", {"s >= 1", "d >= 1", "k >= 1"});
}

BoundResult gv07_bound(std::int64_t s, std::int64_t d, std::int64_t k) {
  require(s >= 1, "s >= 1");
  require(d >= 1, "d >= 1");
  require(k >= 1, "k >= 1");
  return classic_semi(2 * k * s + 1, d, k, "gv07", {"s >= 1", "d >= 1", "k >= 1"});
}

BoundResult basu_kettner_bound(std::int64_t s, std::int64_t k, std::int64_t i) {
  require(s >= 1 && s <= k, "1 <= s <= k");
  require(i >= 0 && i <= k - 1, "0 <= i <= k-1");
  Integer t = 0;
  for (std::int64_t j = 0; j <= std::min(s, k - i); ++j) t += binomial(s, j) * binomial(k + 1, j) * ipow(Z(2), j);
  return make(ratio(t, 2), "basu-kettner", {"1 <= s <= k", "0 <= i <= k-1", "degrees <= 2"}, "half sum");
}

BoundResult safey_el_din_bound(const IntVector& degrees, std::int64_t k, std::int64_t kp, SafeyVariant v) {
  const auto s = static_cast<std::int64_t>(degrees.size());
  require(s >= 1 && s <= k - 1, "1 <= s <= k-1");
  require(kp >= 0 && kp <= k - s, "0 <= k' <= k-s");
  for (auto d : degrees) require(d >= 1, "degrees >= 1");
  const std::int64_t d = *std::max_element(degrees.begin(), degrees.end());
  Integer t = 0;
  for (std::int64_t i = 0; i <= kp; ++i) {
    const Integer c = v == SafeyVariant::Radical ? binomial(k - i, k - i - s) : binomial(k - i - 1, k - i - s);
    t += ipow(Z(d - 1), k - s - i) * c;
  }
  return make(Rational(product(degrees) * t), "safey-el-din", {"1 <= s <= k-1", "0 <= k' <= k-s"},
              v == SafeyVariant::Radical ? "radical ideal" : "regular sequence");
}

Rational g_gen(const IntVector& d, const IntVector& kv, std::int64_t j) {
  if (d.size() != kv.size()) throw ShapeError("degree and block-size vectors differ in length");
  require(!kv.empty(), "at least one block");
  require(j >= 1, "j >= 1");
  for (auto v : kv) require(v >= 0, "block sizes >= 0");
  const std::int64_t k = sum(kv);
  const auto p = static_cast<std::int64_t>(kv.size());
  Rational head = Z(1 + sign_pow(k - j + 1));
  const Integer c = binomial(k, j - 1);
  if (c == 0) return head;
  Integer dp = 1;
  for (std::size_t i = 0; i < d.size(); ++i) dp *= ipow(Z(d[i]), kv[i]);
  const std::int64_t e = 3 * k - j + 1;
  Rational pw = e >= 0 ? Rational(ipow(Z(1 + p), e)) : ratio(1, ipow(Z(1 + p), -e));
  Rational core = ratio(ipow(Z(k - j + 2), 2) * c * dp, multinomial(k, kv)) * pw / Rational(Z(p * (p + 2)));
  return head + core;
}

BoundResult g_min(const IntVector& d, const IntVector& kv, std::int64_t ell) {
  if (d.size() != kv.size()) throw ShapeError("degree and block-size vectors differ in length");
  for (auto v : d) require(v >= 2, "d_i >= 2");
  require(ell >= 1, "l >= 1");
  const std::int64_t k = sum(kv);
  const IntVector dp = round_up_even_all(d);
  Rational first = 3;
  for (std::int64_t j = 1; j <= k; ++j) {
    const Integer c = binomial(ell, j);
    if (c != 0) first += Rational(c * ipow(Z(2), j)) * (g_gen(dp, kv, j) + g_gen(dp, kv, j + 1));
  }
  IntVector twice(d);
  for (auto& v : twice) v *= 2;
  const Rational second = g_gen(twice, kv, 1) / 2;
  const bool take_first = first <= second;
  return make(take_first ? first : second, "multi-degree", {"d_i >= 2", "l >= 1"}, take_first ? "G_gen sum" : "G_gen(2d, k, 1)/2");
}

BoundResult multi_semi_bound(const IntVector& d, const IntVector& kv, std::int64_t s, std::optional<std::int64_t> i) {
  require(s >= 1, "s >= 1");
  if (d.size() != kv.size()) throw ShapeError("degree and block-size vectors differ in length");
  for (auto v : d) require(v >= 2, "d_i >= 2");
  const std::int64_t k = sum(kv);
  std::string branch;
  Rational v = semi_wrap(k, s, i, [&](std::int64_t j) { return g_min(d, kv, j).value; }, branch);
  return make(v, "multi-semi", {"s >= 1", "d_i >= 2"}, branch);
}

Integer k_gen(const IntMatrix& d) {
  const auto r = static_cast<std::int64_t>(d.rows());
  const auto k = static_cast<std::int64_t>(d.cols());
  if (r < 1 || r > k) return 0;
  return Integer(betti_boxes_generic(d).get_num()) - Z(1 + sign_pow(k - r + 1));
}

namespace {

void check_box_matrix(const IntMatrix& d) {
  require(d.rows() >= 1 && d.cols() >= 1, "non-empty degree matrix");
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) require(d(r, c) >= 2, "all d_ij >= 2");
}

}  // namespace

BoundResult box_variety_bound(const IntMatrix& d) {
  check_box_matrix(d);
  const std::size_t ell = d.rows();
  const auto k = static_cast<std::int64_t>(d.cols());
  IntMatrix dd(2 * ell, d.cols());
  for (std::size_t r = 0; r < ell; ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) dd(r, c) = dd(r + ell, c) = round_up_even(d(r, c));
  std::vector<std::size_t> all_cols(d.cols());
  for (std::size_t c = 0; c < d.cols(); ++c) all_cols[c] = c;
  Integer total = 3;
  for (std::int64_t i = 1; i <= std::min<std::int64_t>(k, static_cast<std::int64_t>(2 * ell)); ++i)
    for (const auto& I : combinations(2 * ell, static_cast<std::size_t>(i))) total += ipow(Z(2), i + 1) * k_gen(dd.select(I, all_cols));
  return make(Rational(total), "boxes", {"all d_ij >= 2", "row subsets of the doubled matrix"}, "K(d)");
}

BoundResult box_semi_bound(const IntMatrix& d, std::int64_t s, std::optional<std::int64_t> i) {
  require(s >= 1, "s >= 1");
  const Rational K = box_variety_bound(d).value;
  std::string branch;
  Rational v = semi_wrap(static_cast<std::int64_t>(d.cols()), s, i, [&](std::int64_t) { return K; }, branch);
  return make(v, "boxes-semi", {"s >= 1", "all d_ij >= 2"}, branch);
}

Integer h_gen(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t j) {
  require(k1 >= 0 && k2 >= 0, "k1, k2 >= 0");
  require(j >= 1, "j >= 1");
  const std::int64_t k = k1 + k2;
  return Z(2 + sign_pow(k - j + 1)) + Z(j) * ipow(Z(2), j) * ipow(Z(k), j - 1) * ipow(Z(2 * d * k + 1), k1);
}

Integer h_full(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  require(ell >= 1, "l >= 1");
  const std::int64_t k = k1 + k2;
  const std::int64_t dp = round_up_even(d);
  Integer total = 3;
  for (std::int64_t j = 1; j <= k; ++j) {
    const Integer c = binomial(ell, j);
    if (c != 0) total += c * ipow(Z(2), j) * (h_gen(dp, k1, k2, j) + h_gen(dp, k1, k2, j + 1));
  }
  return total;
}

BoundResult partially_quadratic_variety_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  require(d >= 2, "d >= 2");
  require(k1 + k2 >= 1, "k1 + k2 >= 1");
  return make(Rational(h_full(d, k1, k2, ell)), "partly-quadratic", {"d >= 2", "l >= 1"}, "H(d', k1, k2, l)");
}

BoundResult partially_quadratic_semi_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t s, std::optional<std::int64_t> i) {
  require(d >= 2, "d >= 2");
  require(s >= 1, "s >= 1");
  require(k1 >= 0 && k2 >= 0 && k1 + k2 >= 1, "k1, k2 >= 0, k1 + k2 >= 1");
  const std::int64_t dp = round_up_even(d);
  std::string branch;
  Rational v = semi_wrap(k1 + k2, s, i, [&](std::int64_t j) { return Rational(h_full(dp, k1, k2, j)); }, branch);
  return make(v, "partly-quadratic-semi", {"d >= 2", "s >= 1"}, branch);
}

Integer h_gen_prime(std::int64_t k, std::int64_t i) {
  require(i >= 1 && i <= k, "1 <= i <= k");
  Integer inner = Z(k - i + 1);
  for (std::int64_t h = 0; h <= i - 1; ++h) {
    Integer t = 0;
    for (std::int64_t j = i; j <= k; ++j) t += signed_term(j + 1, binomial(j, h));
    inner += ipow(Z(-2), h) * t;
  }
  return Z((1 + sign_pow(k - i + 1)) * (k - i + 1)) + signed_term(k - i, inner);
}

BoundResult projective_quadrics_bound(std::int64_t k, std::int64_t ell) {
  require(ell >= 1, "l >= 1");
  require(k >= 2, "k >= 2");
  Integer total = Z(k + 1);
  for (std::int64_t i = 1; i <= k; ++i) {
    const Integer c = binomial(ell, i);
    if (c != 0) total += c * ipow(Z(2), i) * h_gen_prime(k, i);
  }
  return make(Rational(total), "projective-quadrics", {"l >= 1", "k >= 2"}, "(k+1) + sum");
}

BoundResult bpr_new_bound(std::int64_t s, std::int64_t m, std::int64_t d, std::int64_t k1, std::int64_t k2, std::optional<std::int64_t> i) {
  require(s >= 0 && m >= 0, "s, m >= 0");
  require(m <= k2, "m <= k2");
  require(d >= 1, "d >= 1");
  require(k1 >= 0 && k1 + k2 >= 1, "k1 >= 0, k1 + k2 >= 1");
  const std::int64_t k = k1 + k2;
  std::vector<Integer> h(static_cast<std::size_t>(m) + 2);
  for (std::int64_t j2 = 0; j2 <= m + 1; ++j2) h[static_cast<std::size_t>(j2)] = h_full(2 * d, k1, k2, j2 + 1);

  // Σ over (j1, j2) with j1 + j2 = j and the stated caps.
  auto level = [&](std::int64_t j, std::int64_t base) -> Integer {
    Integer t = 0;
    for (std::int64_t j1 = 0; j1 <= std::min(s, k1); ++j1) {
      const std::int64_t j2 = j - j1;
      if (j2 < 0 || j2 > std::min(m + 1, k - j1)) continue;
      t += binomial(s, j1) * binomial(m + 1, j2) * h[static_cast<std::size_t>(j2)];
    }
    return t * ipow(Z(base), j);
  };

  Integer total = 0;
  std::string branch;
  if (i) {
    require(*i >= 0 && *i <= k - 1, "0 <= i <= k-1");
    for (std::int64_t j = 1; j <= k - *i; ++j) total += level(j, 5);
    branch = "sign conditions, i=" + std::to_string(*i);
  } else {
    for (std::int64_t ii = 0; ii <= k; ++ii)
      for (std::int64_t j = 0; j <= k - ii; ++j) total += level(j, 7);
    branch = "closed semi-algebraic set";
  }
  return make(Rational(total), "bpr-new", {"m <= k2", "s, m >= 0"}, branch);
}

Integer m_gen(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t j) {
  if (static_cast<std::int64_t>(d.size()) != k1) throw ShapeError("need exactly k1 per-variable degrees");
  require(k2 >= 0, "k2 >= 0");
  require(j >= 1, "j >= 1");
  const std::int64_t k = k1 + k2;
  return Z(2 + sign_pow(k - j + 1)) + Z(j) * ipow(Z(2), j) * factorial(k1) * ipow(Z(k), j - 1) * ipow(Z(2 * k + 1), k1) * product(d);
}

Integer m_full(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  require(ell >= 1, "l >= 1");
  const IntVector dp = round_up_even_all(d);
  Integer total = 3;
  for (std::int64_t j = 1; j <= k1 + k2; ++j) {
    const Integer c = binomial(ell, j);
    if (c != 0) total += c * ipow(Z(2), j) * (m_gen(dp, k1, k2, j) + m_gen(dp, k1, k2, j + 1));
  }
  return total;
}

BoundResult partially_quadratic_multi_variety_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  for (auto v : d) require(v >= 2, "d_i >= 2");
  require(k1 + k2 >= 1, "k1 + k2 >= 1");
  return make(Rational(m_full(d, k1, k2, ell)), "partly-quadratic-multi", {"d_i >= 2", "l >= 1"}, "M(d', k1, k2, l)");
}

BoundResult partially_quadratic_multi_semi_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t s,
                                                 std::optional<std::int64_t> i) {
  for (auto v : d) require(v >= 2, "d_i >= 2");
  require(s >= 1, "s >= 1");
  require(k1 + k2 >= 1, "k1 + k2 >= 1");
  const IntVector dp = round_up_even_all(d);
  std::string branch;
  Rational v = semi_wrap(k1 + k2, s, i, [&](std::int64_t j) { return Rational(m_full(dp, k1, k2, j)); }, branch);
  return make(v, "partly-quadratic-multi-semi", {"d_i >= 2", "s >= 1"}, branch);
}

std::string to_string(BBReading r) {
  switch (r) {
    case BBReading::D2: return "d2";
    case BBReading::D1: return "d1";
    case BBReading::Max2D1D2: return "max";
  }
  return "?";
}

BoundResult barone_basu_bound(std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t kp, std::int64_t s, BBReading reading) {
  require(d1 >= 1 && d1 <= d2, "1 <= d1 <= d2");
  require(kp >= 0 && kp <= k, "0 <= k' <= k");
  require(s >= 0, "s >= 0");
  const std::int64_t mx = std::max(2 * d1, d2);
  const std::int64_t d = reading == BBReading::D2 ? d2 : reading == BBReading::D1 ? d1 : mx;
  Integer total = 0;
  for (std::int64_t j = 0; j <= kp; ++j) {
    Integer inner = binomial(k + 1, k - kp + j + 1) * ipow(Z(2 * d1), k - kp) * ipow(Z(d), j) * ipow(Z(mx), kp - j) + Z(2 * (k - j + 1));
    total += ipow(Z(4), j) * binomial(s + 1, j) * inner;
  }
  return make(Rational(total), "barone-basu", {"d1 <= d2", "0 <= k' <= k", "reading of d: " + to_string(reading)}, "d = " + to_string(reading));
}

Rational refined_F(std::int64_t d1, std::int64_t d2, std::int64_t k) {
  require(k >= 1, "k >= 1");
  Rational inner = Rational(ipow(Z(d1 - 1), k - 1));
  // At k = 1 the second summand carries the factor (k-1) = 0.
  if (k >= 2) inner += ratio(Z(4 * (k - 1)), 3) * Rational(Z(d2) * ipow(Z(d2 - 1), k - 2));
  return Rational(binomial(k + 1, 2) * Z(d1)) * inner;
}

Integer two_degree_simple_bound(std::int64_t d1, std::int64_t d2, std::int64_t k) {
  require(k >= 2, "k >= 2");
  return 8 * binomial(k + 1, 3) * Z(d1) * Z(d2) * ipow(Z(d2 - 1), k - 2);
}

BoundResult two_degree_variety_bound(std::int64_t d1, std::int64_t d2, std::int64_t k) {
  require(d1 >= 2 && d1 <= d2, "2 <= d1 <= d2");
  require(k >= 2, "k >= 2");
  const Rational v = refined_F(d1, d2, k) + refined_F(d1, d2, k - 1) + 1;
  return make(v, "refined-two-degree", {"2 <= d1 <= d2", "k >= 2"},
              "F(k) + F(k-1) + 1; simple form " + to_string(two_degree_simple_bound(d1, d2, k)));
}

BoundResult bb_new_bound(std::int64_t d1, std::int64_t d2, std::int64_t k, std::int64_t kp, std::int64_t s, std::int64_t i) {
  require(d1 >= 2 && d1 <= d2, "2 <= d1 <= d2");
  require(s >= 1, "s >= 1");
  require(kp < k, "k' < k");
  require(i >= 0 && i < kp, "0 <= i < k'");
  const Rational core = refined_F(2 * d1, 2 * d2, k) + refined_F(2 * d1, 2 * d2, k - 1) + 1;
  Rational total = 0;
  for (std::int64_t j = 1; j <= kp - i; ++j) total += Rational(binomial(s, j) * ipow(Z(4), j)) * core;
  return make(total, "bb-new", {"2 <= d1 <= d2", "0 <= i < k' < k", "s >= 1"}, "sign conditions, i=" + std::to_string(i));
}

std::pair<Rational, Rational> leading_coefficient_comparison(std::int64_t ell) {
  require(ell >= 1, "l >= 1");
  const Rational ours = ratio(Z(ell) * (ipow(Z(3), ell) - 1), factorial(ell - 1));
  return {ours, ratio(Z(ell + 1), 2)};
}

}  // namespace betti

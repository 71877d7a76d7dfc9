#include "doctest.h"

#include <numeric>

#include "betti/combinat.hpp"

using namespace betti;

namespace {

// Pascal's triangle built by addition only.
Integer pascal(std::int64_t n, std::int64_t r) {
  std::vector<Integer> row{1};
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Integer> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = next;
  }
  return (r < 0 || r > n) ? Integer(0) : row[static_cast<std::size_t>(r)];
}

// Count monomials of degree j in l variables weighted by Π d_i^{e_i}.
Integer brute_h(std::int64_t j, const IntVector& d, std::size_t from = 0) {
  if (j == 0) return 1;
  if (from == d.size()) return 0;
  Integer s = 0, w = 1;
  for (std::int64_t e = 0; e <= j; ++e) {
    s += w * brute_h(j - e, d, from + 1);
    w *= d[from];
  }
  return s;
}

// Fill an r×c matrix cell by cell, checking margins at the end.
std::int64_t brute_contingency(IntVector rows, IntVector cols, std::size_t cell = 0) {
  const std::size_t nc = cols.size();
  if (cell == rows.size() * nc) {
    for (auto v : rows) if (v) return 0;
    for (auto v : cols) if (v) return 0;
    return 1;
  }
  const std::size_t r = cell / nc, c = cell % nc;
  std::int64_t total = 0;
  for (std::int64_t v = 0; v <= std::min(rows[r], cols[c]); ++v) {
    rows[r] -= v;
    cols[c] -= v;
    total += brute_contingency(rows, cols, cell + 1);
    rows[r] += v;
    cols[c] += v;
  }
  return total;
}

}  // namespace

TEST_CASE("binomial agrees with Pascal's triangle") {
  for (std::int64_t n = 0; n <= 60; ++n)
    for (std::int64_t r = -1; r <= n + 1; ++r) CHECK(binomial(n, r) == pascal(n, r));
  CHECK(binomial(300, 150) == factorial(300) / (factorial(150) * factorial(150)));
  CHECK_THROWS_AS(binomial(-1, 2), HypothesisError);
}

TEST_CASE("generalized binomial extends to negative upper index") {
  CHECK(generalized_binomial(-1, 0) == 1);
  CHECK(generalized_binomial(-1, 3) == -1);
  CHECK(generalized_binomial(-2, 3) == -4);
  CHECK(generalized_binomial(5, 2) == 10);
  CHECK(generalized_binomial(3, -1) == 0);
}

TEST_CASE("multinomial and falling factorial") {
  CHECK(multinomial(4, IntVector{2, 1, 1}) == 12);
  CHECK(multinomial(0, IntVector{0, 0}) == 1);
  CHECK_THROWS_AS(multinomial(4, IntVector{2, 1}), HypothesisError);
  CHECK(falling_factorial(5, 3) == 60);
  CHECK(falling_factorial(5, 0) == 1);
}

TEST_CASE("complete homogeneous polynomial against monomial enumeration") {
  for (const IntVector& d : {IntVector{1}, IntVector{2, 3}, IntVector{1, 2, 4}, IntVector{3, 3, 3, 1}})
    for (std::int64_t j = 0; j <= 5; ++j) CHECK(complete_homogeneous(j, d) == brute_h(j, d));
}

TEST_CASE("contingency tables against cell enumeration") {
  for (const auto& [r, c] : std::vector<std::pair<IntVector, IntVector>>{
           {{1, 1}, {1, 1}}, {{2, 1}, {1, 2}}, {{2, 2, 1}, {3, 2}}, {{3, 1}, {1, 1, 2}}, {{2}, {2}}, {{1, 2}, {4}}})
    CHECK(contingency_count(r, c) == brute_contingency(r, c));
  CHECK(contingency_count(IntVector{1}, IntVector{2}) == 0);
}

TEST_CASE("A(n, p)") {
  CHECK(alternating_binomial_A(5, 1) == 9);
  for (std::int64_t n = 0; n <= 20; ++n) CHECK(alternating_binomial_A(n, 0) == n / 2 + 1);
  CHECK(alternating_binomial_A(5, 1) + alternating_binomial_A(4, 1) == binomial(6, 2));
  CHECK_THROWS_AS(alternating_binomial_A(2, 3), HypothesisError);
}

TEST_CASE("powers, signs and rounding") {
  CHECK(ipow(Integer(3), 4) == 81);
  CHECK(ipow(Integer(-2), 3) == -8);
  CHECK(ipow(Rational(2, 3), 2) == Rational(4, 9));
  CHECK_THROWS_AS(ipow(Integer(2), -1), HypothesisError);
  CHECK(sign_pow(-3) == -1);
  CHECK(sign_pow(4) == 1);
  CHECK(round_up_even(1) == 2);
  CHECK(round_up_even(4) == 4);
  CHECK(round_up_even(5) == 6);
}

TEST_CASE("ratio is canonical") {
  const Rational q = ratio(4, 6);
  CHECK(q.get_num() == 2);
  CHECK(q.get_den() == 3);
  CHECK(to_string(ratio(6, 3)) == "2");
  CHECK(to_string(ratio(-6, 4)) == "-3/2");
}

TEST_CASE("rational text round trip") {
  for (const char* s : {"0", "17", "-5", "3/4", "-22/7"}) CHECK(to_string(parse_rational(s)) == s);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(is_integer(parse_rational("4/2")));
  CHECK_FALSE(is_integer(parse_rational("1/2")));
}

TEST_CASE("combinations and compositions") {
  const auto c = combinations(4, 2);
  REQUIRE(c.size() == 6);
  CHECK(c.front() == std::vector<std::size_t>{0, 1});
  CHECK(c.back() == std::vector<std::size_t>{2, 3});
  CHECK(std::is_sorted(c.begin(), c.end()));
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::size_t p = 1; p <= static_cast<std::size_t>(n); ++p) {
      const auto comps = positive_compositions(n, p);
      CHECK(Integer(static_cast<long>(comps.size())) == binomial(n - 1, static_cast<std::int64_t>(p) - 1));
      for (const auto& v : comps) CHECK(std::accumulate(v.begin(), v.end(), std::int64_t{0}) == n);
    }
  CHECK(positive_compositions(2, 3).empty());
}

TEST_CASE("matrix helpers") {
  const IntMatrix m = IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}});
  CHECK(m.row(1) == IntVector{4, 5, 6});
  const std::vector<std::size_t> cols{0, 2}, rows{1};
  CHECK(m.select_columns(cols) == IntMatrix::from_rows({{1, 3}, {4, 6}}));
  CHECK(m.select(rows, cols) == IntMatrix::from_rows({{4, 6}}));
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), ShapeError);
}

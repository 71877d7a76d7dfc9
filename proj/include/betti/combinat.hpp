#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace betti {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact rational; GMP keeps it canonical (reduced, positive denominator)
/// after every arithmetic operation.
using Rational = mpq_class;

using IntVector = std::vector<std::int64_t>;

/// Row-major rectangular integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; throws ShapeError when rows are ragged.
  static IntMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntMatrix select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
  IntMatrix select_columns(std::span<const std::size_t> col_idx) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

// Error taxonomy shared by every module; the CLI maps each to an exit code.

/// A hypothesis of a formula or a precondition of an operation does not hold.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Polytope family outside the supported classes.
class UnsupportedFamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent dimensions between arguments.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer factorial(std::int64_t n);

/// Binomial coefficient. r < 0 gives 0; for n >= 0, r > n gives 0.
/// Negative n throws HypothesisError; use generalized_binomial where the
/// falling-factorial extension is wanted.
Integer binomial(std::int64_t n, std::int64_t r);

/// n^{\underline{r}} / r! for any signed n, r >= 0 (0 when r < 0).
Integer generalized_binomial(std::int64_t n, std::int64_t r);

/// t(t-1)...(t-n+1); empty product 1.
Integer falling_factorial(std::int64_t t, std::int64_t n);

/// n! / prod(parts_i!); parts must be nonnegative and sum to n.
Integer multinomial(std::int64_t n, std::span<const std::int64_t> parts);

/// Complete homogeneous symmetric polynomial h_j(d_1, ..., d_l).
Integer complete_homogeneous(std::int64_t j, std::span<const std::int64_t> d);

/// Number of nonnegative integer matrices with the given margins.
Integer contingency_count(std::span<const std::int64_t> rows, std::span<const std::int64_t> cols);

/// A(n, p) = sum_{i=0}^{floor((n-p)/2)} binom(n - 2i, p).
Integer alternating_binomial_A(std::int64_t n, std::int64_t p);

/// base^exp for exp >= 0.
Integer ipow(const Integer& base, std::int64_t exp);
Rational ipow(const Rational& base, std::int64_t exp);

/// n / d in canonical form; d must be nonzero.
Rational ratio(const Integer& n, const Integer& d);

/// +1 / -1.
inline int sign_pow(std::int64_t exp) { return (exp % 2 == 0) ? 1 : -1; }

/// Least even integer >= d.
std::int64_t round_up_even(std::int64_t d);

/// Decimal rendering: integers as "n", others as "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "n" or "p/q" exactly; throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);

/// All subsets of {0..n-1} of size r, in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

/// All compositions of total into exactly parts positive parts.
std::vector<IntVector> positive_compositions(std::int64_t total, std::size_t parts);

}  // namespace betti

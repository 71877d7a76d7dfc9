#include "betti/combinat.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace betti {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix: row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

IntMatrix IntMatrix::select(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
  IntMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c) out(r, c) = (*this)(row_idx[r], col_idx[c]);
  return out;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> col_idx) const {
  std::vector<std::size_t> all(rows_);
  std::iota(all.begin(), all.end(), 0);
  return select(all, col_idx);
}

namespace {

// Growable factorial table. Entries are appended under the lock and never
// mutated afterwards, so results do not depend on call order.
class FactorialTable {
 public:
  Integer get(std::int64_t n) {
    std::lock_guard lock(mu_);
    while (static_cast<std::int64_t>(table_.size()) <= n) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[static_cast<std::size_t>(n)];
  }

 private:
  std::mutex mu_;
  std::vector<Integer> table_{Integer(1)};
};

FactorialTable& factorials() {
  static FactorialTable t;
  return t;
}

constexpr std::int64_t kPascalLimit = 256;

// Pascal rows for small n, filled lazily.
class PascalTable {
 public:
  Integer get(std::int64_t n, std::int64_t r) {
    std::lock_guard lock(mu_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) {
      const auto& prev = rows_.back();
      std::vector<Integer> next(prev.size() + 1);
      next.front() = 1;
      next.back() = 1;
      for (std::size_t i = 1; i + 1 < next.size(); ++i) next[i] = prev[i - 1] + prev[i];
      rows_.push_back(std::move(next));
    }
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  }

 private:
  std::mutex mu_;
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

PascalTable& pascal() {
  static PascalTable t;
  return t;
}

}  // namespace

Integer factorial(std::int64_t n) {
  if (n < 0) throw HypothesisError("factorial of negative integer " + std::to_string(n));
  return factorials().get(n);
}

Integer binomial(std::int64_t n, std::int64_t r) {
  if (r < 0) return 0;
  if (n < 0) throw HypothesisError("binomial with negative upper index " + std::to_string(n) + " requires generalized_binomial");
  if (r > n) return 0;
  if (n < kPascalLimit) return pascal().get(n, r);
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer falling_factorial(std::int64_t t, std::int64_t n) {
  if (n < 0) throw HypothesisError("falling factorial of negative length");
  Integer out = 1;
  for (std::int64_t i = 0; i < n; ++i) out *= Integer(static_cast<long>(t - i));
  return out;
}

Integer generalized_binomial(std::int64_t n, std::int64_t r) {
  if (r < 0) return 0;
  if (n >= 0) return binomial(n, r);
  // (-m choose r) = (-1)^r (m + r - 1 choose r)
  const std::int64_t m = -n;
  Integer v = binomial(m + r - 1, r);
  return sign_pow(r) > 0 ? v : Integer(-v);
}

Integer multinomial(std::int64_t n, std::span<const std::int64_t> parts) {
  std::int64_t sum = 0;
  for (auto p : parts) {
    if (p < 0) throw HypothesisError("multinomial part is negative");
    sum += p;
  }
  if (sum != n) throw HypothesisError("multinomial parts sum to " + std::to_string(sum) + " but n = " + std::to_string(n) + " (invalid degree/block data)");
  Integer out = factorial(n);
  for (auto p : parts) out /= factorial(p);
  return out;
}

Integer complete_homogeneous(std::int64_t j, std::span<const std::int64_t> d) {
  if (j < 0) throw HypothesisError("complete_homogeneous degree must be >= 0");
  // h[t] holds h_t of the variables consumed so far.
  std::vector<Integer> h(static_cast<std::size_t>(j) + 1, Integer(0));
  h[0] = 1;
  for (auto v : d) {
    const Integer x(static_cast<long>(v));
    for (std::size_t t = 1; t < h.size(); ++t) h[t] += x * h[t - 1];
  }
  return h[static_cast<std::size_t>(j)];
}

namespace {

struct ContingencyCounter {
  std::vector<std::int64_t> cols;
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, Integer> memo;

  // Fill row `r` with sum `need` across columns, then recurse to the next row.
  Integer rows_from(std::size_t r, std::span<const std::int64_t> rows, std::vector<std::int64_t>& residual) {
    if (r == rows.size()) {
      return std::all_of(residual.begin(), residual.end(), [](auto v) { return v == 0; }) ? Integer(1) : Integer(0);
    }
    auto key = std::make_pair(r, residual);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    fill_row(r, rows, residual, 0, rows[r], total);
    memo.emplace(std::move(key), total);
    return total;
  }

  void fill_row(std::size_t r, std::span<const std::int64_t> rows, std::vector<std::int64_t>& residual, std::size_t c, std::int64_t need, Integer& acc) {
    if (c + 1 == residual.size()) {
      if (need <= residual[c]) {
        residual[c] -= need;
        acc += rows_from(r + 1, rows, residual);
        residual[c] += need;
      }
      return;
    }
    const std::int64_t cap = std::min(need, residual[c]);
    for (std::int64_t x = 0; x <= cap; ++x) {
      residual[c] -= x;
      fill_row(r, rows, residual, c + 1, need - x, acc);
      residual[c] += x;
    }
  }
};

}  // namespace

Integer contingency_count(std::span<const std::int64_t> rows, std::span<const std::int64_t> cols) {
  std::int64_t rs = 0, cs = 0;
  for (auto v : rows) {
    if (v < 0) throw HypothesisError("negative row margin");
    rs += v;
  }
  for (auto v : cols) {
    if (v < 0) throw HypothesisError("negative column margin");
    cs += v;
  }
  if (rs != cs) return 0;  // no table has both margins
  if (rows.empty() || cols.empty()) return 1;
  ContingencyCounter counter;
  std::vector<std::int64_t> residual(cols.begin(), cols.end());
  return counter.rows_from(0, rows, residual);
}

Integer alternating_binomial_A(std::int64_t n, std::int64_t p) {
  if (p < 0 || n < p) throw HypothesisError("A(n, p) requires n >= p >= 0");
  Integer sum = 0;
  for (std::int64_t i = 0; 2 * i <= n - p; ++i) sum += binomial(n - 2 * i, p);
  return sum;
}

Integer ipow(const Integer& base, std::int64_t exp) {
  if (exp < 0) throw HypothesisError("negative exponent for integer power");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

Rational ratio(const Integer& n, const Integer& d) {
  if (d == 0) throw std::domain_error("division by zero");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational ipow(const Rational& base, std::int64_t exp) {
  if (exp < 0) throw HypothesisError("negative exponent for rational power");
  Rational out(ipow(Integer(base.get_num()), exp), ipow(Integer(base.get_den()), exp));
  out.canonicalize();
  return out;
}

std::int64_t round_up_even(std::int64_t d) { return (d % 2 == 0) ? d : d + 1; }

std::string to_string(const Integer& z) { return z.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Rational parse_rational(const std::string& text) {
  auto valid_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') throw std::invalid_argument("not an exact rational: '" + text + "'");
  Integer n(num[0] == '+' ? num.substr(1) : num, 10);
  Integer d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<IntVector> positive_compositions(std::int64_t total, std::size_t parts) {
  std::vector<IntVector> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  if (total < static_cast<std::int64_t>(parts)) return out;
  IntVector cur(parts, 1);
  // Recursive fill; compositions come out in lexicographic order.
  auto rec = [&](auto& self, std::size_t pos, std::int64_t left) -> void {
    if (pos + 1 == parts) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    const auto rest = static_cast<std::int64_t>(parts - pos - 1);
    for (std::int64_t v = 1; v <= left - rest; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace betti

#include "betti/applications.hpp"

#include <vector>

#include "betti/bounds.hpp"

namespace betti {

namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw HypothesisError("hypothesis violated: " + clause);
}

// Σ_{h=0}^{α} Σ_{l=1}^{α-h} binom(n, l) 6^l G_min(d, k, l).
Rational fibered_term(const IntVector& d, const IntVector& kv, std::int64_t alpha, std::int64_t n) {
  std::vector<Rational> g(static_cast<std::size_t>(alpha) + 1);
  for (std::int64_t l = 1; l <= alpha; ++l) {
    const Integer c = binomial(n, l);
    if (c != 0) g[static_cast<std::size_t>(l)] = Rational(c * ipow(Integer(6), l)) * g_min(d, kv, l).value;
  }
  Rational total = 0;
  for (std::int64_t h = 0; h <= alpha; ++h)
    for (std::int64_t l = 1; l <= alpha - h; ++l) total += g[static_cast<std::size_t>(l)];
  return total;
}

// Blocks (k repeated j+1 times, m) with degrees (d repeated j+1 times, D).
std::pair<IntVector, IntVector> fibered_blocks(std::int64_t j, std::int64_t k, std::int64_t m, std::int64_t d, std::int64_t D) {
  IntVector dv(static_cast<std::size_t>(j + 1), d), kv(static_cast<std::size_t>(j + 1), k);
  dv.push_back(D);
  kv.push_back(m);
  return {dv, kv};
}

BoundResult make(Rational v, std::string id, std::vector<std::string> a, std::string branch) {
  BoundResult r;
  r.value = std::move(v);
  r.citation = std::move(id);
  r.assumptions = std::move(a);
  r.branch = std::move(branch);
  return r;
}

}  // namespace

std::int64_t transversal_m(std::int64_t k) { return (k + 1) * (k + 2) / 2 - 1; }

BoundResult pull_back_bound(const PullBack& sc) {
  require(sc.k >= 0 && sc.m >= 0 && sc.s >= 0, "dimensions >= 0");
  require(sc.k + sc.m >= 1, "k + m >= 1");
  require(sc.d >= 2 && sc.D >= 2, "d, D >= 2");
  const std::int64_t n = sc.k + sc.m;
  const IntVector dv{sc.d, sc.D}, kv{sc.k, sc.m};
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 1; j <= n; ++j) g[static_cast<std::size_t>(j)] = g_min(dv, kv, j).value;
  Rational total = 0;
  for (std::int64_t i = 0; i <= n; ++i)
    for (std::int64_t j = 1; j <= n - i; ++j)
      total += Rational(binomial(sc.m + sc.s + 1, j) * ipow(Integer(6), j)) * g[static_cast<std::size_t>(j)];
  return make(total, "pull-back", {"d, D >= 2", "blocks (k, m)"}, "closed semi-algebraic set");
}

BoundResult image_bound(const Image& sc) {
  require(sc.k >= 0 && sc.m >= 0 && sc.s >= 0, "dimensions >= 0");
  require(sc.k + sc.m >= 1, "k + m >= 1");
  require(sc.i >= 0 && sc.i <= sc.m, "0 <= i <= m");
  require(sc.d >= sc.D && sc.D >= 2, "d >= D >= 2");
  Rational total = 0;
  for (std::int64_t j = 0; j <= sc.i; ++j) {
    auto [dv, kv] = fibered_blocks(j, sc.k, sc.m, sc.d, sc.D);
    total += fibered_term(dv, kv, (j + 1) * sc.k + sc.m, (j + 1) * (sc.m + sc.s) + 1);
  }
  return make(total, "image", {"0 <= i <= m", "d >= D >= 2", "alpha_j = (j+1)k + m"}, "i=" + std::to_string(sc.i));
}

BoundResult fourier_mukai_bound(const FourierMukai& sc) {
  require(sc.k >= 0 && sc.m >= 0 && sc.s1 >= 0 && sc.s2 >= 0, "dimensions >= 0");
  require(sc.k + sc.m >= 1, "k + m >= 1");
  require(sc.i >= 0 && sc.i <= sc.m, "0 <= i <= m");
  require(sc.d >= sc.D && sc.D >= 2, "d >= D >= 2");
  Rational total = 0;
  for (std::int64_t j = 0; j <= sc.i; ++j) {
    auto [dv, kv] = fibered_blocks(j, sc.k, sc.m, sc.d, sc.D);
    total += fibered_term(dv, kv, (j + 1) * (sc.k + sc.m) + sc.k, (j + 1) * (sc.s1 + sc.s2) + 1);
  }
  return make(total, "fourier-mukai", {"0 <= i <= m", "d >= D >= 2", "alpha_j = (j+1)(k+m) + k"}, "i=" + std::to_string(sc.i));
}

BoundResult transversal_bound(const Transversal& sc) {
  require(sc.k >= 1 && sc.s >= 0, "k >= 1, s >= 0");
  require(sc.kp >= 0 && sc.kp <= sc.k, "0 <= k' <= k");
  require(sc.d >= 2, "d >= 2");
  const std::int64_t m = transversal_m(sc.k);
  require(sc.i >= 0 && sc.i <= m, "0 <= i <= m");
  Rational total = 0;
  for (std::int64_t j = 0; j <= sc.i; ++j) {
    auto [dv, kv] = fibered_blocks(j, sc.k, m, sc.d, 2);
    total += fibered_term(dv, kv, (j + 1) * sc.k + m, (j + 1) * (sc.s + m + 2 * (sc.k + 1)) + 1);
  }
  return make(total, "transversal", {"0 <= k' <= k", "d >= 2", "m = (k+1)(k+2)/2 - 1 = " + std::to_string(m)},
              "i=" + std::to_string(sc.i));
}

BoundResult application_bound(const MapScenario& sc) {
  return std::visit(
      [](const auto& v) -> BoundResult {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PullBack>) return pull_back_bound(v);
        else if constexpr (std::is_same_v<T, Image>) return image_bound(v);
        else if constexpr (std::is_same_v<T, FourierMukai>) return fourier_mukai_bound(v);
        else return transversal_bound(v);
      },
      sc);
}

}  // namespace betti

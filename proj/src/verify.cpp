#include "betti/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "betti/generic_chi.hpp"
#include "betti/polytope.hpp"

namespace betti {

namespace {

Integer Z(std::int64_t v) { return Integer(static_cast<long>(v)); }

std::string show(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Recorder {
  SuiteResult r;

  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    ++r.checks;
    if (got == want) return;
    std::ostringstream out;
    out << what << ": got " << got << ", expected " << want;
    r.failures.push_back(out.str());
  }
};

// Every length-n vector with entries in [lo, hi], odometer order.
std::vector<IntVector> tuples(std::size_t n, std::int64_t lo, std::int64_t hi) {
  std::vector<IntVector> out;
  IntVector v(n, lo);
  while (true) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == hi) v[--i] = lo;
    if (i == 0) break;
    ++v[i - 1];
  }
  return out;
}

Polytope partly_quadratic_support(std::int64_t d, std::int64_t k1, std::int64_t k2) {
  std::vector<SimplexBlock> blocks;
  VarSet x, y;
  for (std::int64_t i = 0; i < k1; ++i) x.push_back(static_cast<std::size_t>(i));
  for (std::int64_t i = 0; i < k2; ++i) y.push_back(static_cast<std::size_t>(k1 + i));
  if (k1) blocks.push_back({x, d});
  if (k2) blocks.push_back({y, 2});
  return Polytope::block_product(blocks, range_vars(static_cast<std::size_t>(k1 + k2)));
}

Polytope several_blocks_support(const IntVector& d, std::int64_t k2) {
  const auto k1 = static_cast<std::int64_t>(d.size());
  std::vector<SimplexBlock> blocks;
  for (std::int64_t i = 0; i < k1; ++i) blocks.push_back({{static_cast<std::size_t>(i)}, d[static_cast<std::size_t>(i)]});
  VarSet y;
  for (std::int64_t i = 0; i < k2; ++i) y.push_back(static_cast<std::size_t>(k1 + i));
  if (k2) blocks.push_back({y, 2});
  return Polytope::block_product(blocks, range_vars(static_cast<std::size_t>(k1 + k2)));
}

SuiteResult khovanskii_closed_forms() {
  Recorder t{{"khovanskii-closed-forms", 0, {}}};
  for (std::int64_t k = 2; k <= 10; ++k)
    t.equal(betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), {2, 2}), Setting::Affine).betti_sum, Rational(Z(2 * k)),
            "two quadrics k=" + std::to_string(k));
  for (std::int64_t d = 1; d <= 5; ++d)
    for (std::int64_t k = 1; k <= 6; ++k)
      t.equal(betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), {d}), Setting::Affine).betti_sum,
              Rational(1 + ipow(Z(d - 1), k)), "hypersurface d=" + std::to_string(d) + " k=" + std::to_string(k));
  for (std::int64_t k = 1; k <= 5; ++k)
    for (std::int64_t l = 1; l <= std::min<std::int64_t>(k, 3); ++l)
      for (const auto& d : tuples(static_cast<std::size_t>(l), 1, 3))
        t.equal(betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), d), Setting::Affine).betti_sum,
                betti_ci_total_distinct(k, d), "ci k=" + std::to_string(k) + " d=" + show(d));
  for (std::int64_t k = 1; k <= 3; ++k)
    for (const auto& d : tuples(static_cast<std::size_t>(k), 1, 3))
      t.equal(betti_generic(GenericSystem::boxes(IntMatrix::from_rows({d})), Setting::Affine).betti_sum, betti_one_multi(d),
              "one-multi d=" + show(d));
  for (std::int64_t k = 1; k <= 7; ++k)
    for (std::int64_t l = 1; l <= k; ++l)
      t.equal(chi_khovanskii(GenericSystem::simplices(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(l), 2))),
              quadrics_affine_chi(k, l), "quadrics affine k=" + std::to_string(k) + " l=" + std::to_string(l));
  for (std::int64_t k1 = 0; k1 <= 2; ++k1)
    for (std::int64_t k2 = 0; k2 <= 3; ++k2)
      for (std::int64_t l = 1; l <= k1 + k2; ++l) {
        const auto k = static_cast<std::size_t>(k1 + k2);
        const std::string at = " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2) + " l=" + std::to_string(l);
        t.equal(chi_khovanskii(GenericSystem::shared(k, partly_quadratic_support(3, k1, k2), static_cast<std::size_t>(l))),
                partially_quadratic_chi(3, k1, k2, l), "partly quadratic" + at);
        IntVector d;
        for (std::int64_t i = 0; i < k1; ++i) d.push_back(i + 2);
        t.equal(chi_khovanskii(GenericSystem::shared(k, several_blocks_support(d, k2), static_cast<std::size_t>(l))),
                several_blocks_chi(d, k2, l), "several blocks" + at);
      }
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t l = 1; l < k; ++l) {
      const auto engine = betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(l), 2)),
                                        Setting::Projective);
      const auto closed = quadrics_projective(k, l);
      t.equal(engine.chi, closed.chi, "projective quadrics chi k=" + std::to_string(k) + " l=" + std::to_string(l));
      t.equal(engine.betti_sum, closed.betti_sum, "projective quadrics b k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  return t.r;
}

// A random query whose bodies all share one coordinate partition: either
// boxes or products of simplices on fixed blocks.
MixedVolumeQuery random_query(std::mt19937_64& rng, std::size_t k, bool boxes) {
  auto pick = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::vector<std::int64_t> mult;
  std::size_t left = k;
  while (left > 0) {
    const auto m = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(left)));
    mult.push_back(static_cast<std::int64_t>(m));
    left -= m;
  }
  std::vector<VarSet> comps;
  if (boxes) {
    for (std::size_t i = 0; i < k; ++i) comps.push_back({i});
  } else {
    std::size_t next = 0;
    while (next < k) {
      const auto len = static_cast<std::size_t>(pick(1, static_cast<std::int64_t>(k - next)));
      VarSet c;
      for (std::size_t i = 0; i < len; ++i) c.push_back(next++);
      comps.push_back(c);
    }
  }
  MixedVolumeQuery q;
  for (auto m : mult) {
    if (boxes) {
      IntVector sides;
      for (std::size_t i = 0; i < k; ++i) sides.push_back(pick(0, 4));
      q.bodies.push_back({Polytope::box(range_vars(k), sides), m});
    } else {
      std::vector<SimplexBlock> blocks;
      for (const auto& c : comps) blocks.push_back({c, pick(0, 4)});
      q.bodies.push_back({Polytope::block_product(blocks, range_vars(k)), m});
    }
  }
  return q;
}

SuiteResult mv_oracles() {
  Recorder t{{"mv-oracles", 0, {}}};
  std::mt19937_64 rng(20240601);
  for (int n = 0; n < 200; ++n) {
    const auto k = static_cast<std::size_t>(std::uniform_int_distribution<int>(1, 5)(rng));
    const bool boxes = n % 2 == 0;
    MixedVolumeQuery q = random_query(rng, k, boxes);
    const Rational mv = mixed_volume(q);
    t.equal(mv, mixed_volume_oracle_interpolation(q), "instance " + std::to_string(n) + (boxes ? " (boxes)" : " (blocks)"));
    std::reverse(q.bodies.begin(), q.bodies.end());
    t.equal(mixed_volume(q), mv, "permutation symmetry, instance " + std::to_string(n));
  }
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t l = 1; l <= k; ++l) {
      IntMatrix d(l, k);
      for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < k; ++c) d(r, c) = std::uniform_int_distribution<std::int64_t>(1, 4)(rng);
      for (const auto& alpha : positive_compositions(static_cast<std::int64_t>(k), l)) {
        Integer alpha_fact = 1;
        for (auto a : alpha) alpha_fact *= factorial(a);
        t.equal(Rational(n_refined(d, alpha) * alpha_fact), Rational(factorial(static_cast<std::int64_t>(k))) * mixed_volume(box_query(d, alpha)),
                "n_refined vs mixed volume, alpha=" + show(alpha));
      }
    }
  return t.r;
}

SuiteResult identities() {
  Recorder t{{"identities", 0, {}}};
  // Both recurrences need A(n-1, p), defined for n-1 >= p.
  for (std::int64_t n = 1; n <= 40; ++n)
    for (std::int64_t p = 0; p <= std::min<std::int64_t>(6, n - 1); ++p) {
      const std::string at = " n=" + std::to_string(n) + " p=" + std::to_string(p);
      t.equal(alternating_binomial_A(n, p) + alternating_binomial_A(n - 1, p), binomial(n + 1, p + 1), "A sum" + at);
      if (p >= 1) t.equal(alternating_binomial_A(n, p) - alternating_binomial_A(n - 1, p), alternating_binomial_A(n - 1, p - 1), "A difference" + at);
    }
  for (std::int64_t n = 0; n <= 8; ++n)
    for (std::size_t parts = 1; parts <= 3; ++parts) {
      Integer sum = 0;
      for (const auto& c : tuples(parts, 0, n)) {
        std::int64_t s = 0;
        for (auto x : c) s += x;
        if (s == n) sum += multinomial(n, c);
      }
      t.equal(sum, ipow(Z(static_cast<std::int64_t>(parts)), n), "multinomial sum n=" + std::to_string(n));
    }
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::int64_t l = 1; l <= k; ++l)
      for (std::int64_t d = 1; d <= 3; ++d) {
        const auto rep = betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(l), d)), Setting::Affine);
        const Rational want = Rational(Z(1 + sign_pow(k - l + 1))) + sign_pow(k - l) * rep.chi;
        t.equal(rep.betti_sum, want, "affine roundtrip k=" + std::to_string(k) + " l=" + std::to_string(l));
        ++t.r.checks;
        if (!is_integer(rep.betti_sum)) t.r.failures.push_back("non-integral b at k=" + std::to_string(k));
        if (l < k) {
          const auto proj = betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), IntVector(static_cast<std::size_t>(l), d)), Setting::Projective);
          const Rational pw = Rational(Z((1 + sign_pow(k - l + 1)) * (k - l + 1))) + sign_pow(k - l) * proj.chi;
          t.equal(proj.betti_sum, pw, "projective roundtrip k=" + std::to_string(k) + " l=" + std::to_string(l));
        }
      }
  return t.r;
}

SuiteResult chern() {
  Recorder t{{"chern", 0, {}}};
  for (std::int64_t k = 2; k <= 6; ++k)
    for (std::int64_t l = 1; l <= std::min<std::int64_t>(3, k - 1); ++l)
      for (const auto& d : tuples(static_cast<std::size_t>(l), 1, 4)) {
        if (!std::is_sorted(d.begin(), d.end())) continue;  // χ is symmetric in the degrees
        t.equal(Rational(lefschetz_chi_affine(k, d)), chi_khovanskii(GenericSystem::simplices(static_cast<std::size_t>(k), d)),
                "lefschetz vs khovanskii k=" + std::to_string(k) + " d=" + show(d));
        t.equal(Rational(chern_chi_projective(k, d)), betti_generic(GenericSystem::simplices(static_cast<std::size_t>(k), d), Setting::Projective).chi,
                "chern vs sliced khovanskii k=" + std::to_string(k) + " d=" + show(d));
      }
  return t.r;
}

}  // namespace

std::vector<std::string> suite_names() { return {"khovanskii-closed-forms", "mv-oracles", "identities", "chern"}; }

std::vector<SuiteResult> run_suites(const std::string& name) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "khovanskii-closed-forms") out.push_back(khovanskii_closed_forms());
  if (all || name == "mv-oracles") out.push_back(mv_oracles());
  if (all || name == "identities") out.push_back(identities());
  if (all || name == "chern") out.push_back(chern());
  if (out.empty()) throw std::invalid_argument("unknown suite '" + name + "'; known: khovanskii-closed-forms, mv-oracles, identities, chern, all");
  return out;
}

}  // namespace betti

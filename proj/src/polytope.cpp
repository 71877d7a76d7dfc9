#include "betti/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace betti {

VarSet make_varset(std::vector<std::size_t> vars) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) throw ShapeError("variable set has repeated entries");
  return vars;
}

VarSet range_vars(std::size_t k) {
  VarSet v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

namespace {

bool subset_of(const VarSet& a, const VarSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

VarSet set_minus(const VarSet& a, const VarSet& b) {
  VarSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void check_side(std::int64_t s) {
  if (s < 0) throw HypothesisError("polytope side must be >= 0, got " + std::to_string(s));
}

// Canonical block list: zero-side blocks split into singletons, uncovered
// ambient coordinates added as points, sorted by smallest coordinate.
std::vector<SimplexBlock> canonical_blocks(const std::vector<SimplexBlock>& blocks, const VarSet& ambient) {
  std::vector<SimplexBlock> out;
  VarSet covered;
  for (const auto& b : blocks) {
    if (b.side == 0) continue;
    out.push_back(b);
    covered.insert(covered.end(), b.vars.begin(), b.vars.end());
  }
  std::sort(covered.begin(), covered.end());
  for (auto v : set_minus(ambient, covered)) out.push_back({{v}, 0});
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.vars.front() < y.vars.front(); });
  return out;
}

CommonPartition partition_of_forms(const std::vector<std::vector<SimplexBlock>>& forms, const VarSet& ambient) {
  std::map<std::size_t, std::size_t> index;
  for (std::size_t i = 0; i < ambient.size(); ++i) index[ambient[i]] = i;
  std::vector<std::size_t> parent(ambient.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& form : forms)
    for (const auto& b : form) {
      if (b.side == 0) continue;
      for (std::size_t t = 1; t < b.vars.size(); ++t) parent[find(index.at(b.vars[t]))] = find(index.at(b.vars[0]));
    }

  std::map<std::size_t, VarSet> groups;
  for (auto v : ambient) groups[find(index.at(v))].push_back(v);
  CommonPartition cp;
  for (auto& [root, vars] : groups) cp.components.push_back(vars);
  std::sort(cp.components.begin(), cp.components.end());

  for (const auto& form : forms) {
    IntVector s(cp.components.size(), 0);
    for (std::size_t c = 0; c < cp.components.size(); ++c) {
      const auto& comp = cp.components[c];
      for (const auto& b : form) {
        if (b.side == 0 || !subset_of(b.vars, comp)) continue;
        if (b.vars != comp || s[c] != 0)
          throw UnsupportedFamilyError("Minkowski combination of simplex blocks that do not align; needs interpolation oracle");
        s[c] = b.side;
      }
    }
    cp.sides.push_back(std::move(s));
  }
  return cp;
}

Rational block_volume(std::int64_t side, std::size_t n) {
  return ratio(ipow(Integer(static_cast<long>(side)), static_cast<std::int64_t>(n)), factorial(static_cast<std::int64_t>(n)));
}

std::string join(const VarSet& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

Polytope Polytope::simplex(std::int64_t side, VarSet vars) {
  auto v = make_varset(std::move(vars));
  return simplex(side, v, v);
}

Polytope Polytope::simplex(std::int64_t side, VarSet vars, VarSet ambient) {
  check_side(side);
  Polytope p;
  p.kind_ = Kind::Simplex;
  p.ambient_ = make_varset(std::move(ambient));
  auto v = make_varset(std::move(vars));
  if (!subset_of(v, p.ambient_)) throw ShapeError("simplex variables are not contained in the ambient set");
  if (!v.empty()) p.blocks_.push_back({std::move(v), side});
  return p;
}

Polytope Polytope::box(VarSet vars, IntVector sides) {
  if (vars.size() != sides.size()) throw ShapeError("box has " + std::to_string(vars.size()) + " variables but " + std::to_string(sides.size()) + " sides");
  Polytope p;
  p.kind_ = Kind::Box;
  std::vector<std::pair<std::size_t, std::int64_t>> pairs;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    check_side(sides[i]);
    pairs.emplace_back(vars[i], sides[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [v, s] : pairs) {
    p.ambient_.push_back(v);
    p.blocks_.push_back({{v}, s});
  }
  make_varset(p.ambient_);
  return p;
}

Polytope Polytope::block_product(std::vector<SimplexBlock> blocks) {
  VarSet all;
  for (const auto& b : blocks) all.insert(all.end(), b.vars.begin(), b.vars.end());
  return block_product(std::move(blocks), std::move(all));
}

Polytope Polytope::block_product(std::vector<SimplexBlock> blocks, VarSet ambient) {
  Polytope p;
  p.kind_ = Kind::BlockProduct;
  p.ambient_ = make_varset(std::move(ambient));
  VarSet seen;
  for (auto& b : blocks) {
    check_side(b.side);
    b.vars = make_varset(std::move(b.vars));
    if (b.vars.empty()) continue;
    seen.insert(seen.end(), b.vars.begin(), b.vars.end());
    p.blocks_.push_back(std::move(b));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw ShapeError("blocks of a block product must be disjoint");
  if (!subset_of(seen, p.ambient_)) throw ShapeError("block variables are not contained in the ambient set");
  return p;
}

Polytope Polytope::minkowski_sum(std::vector<Polytope> members) {
  if (members.empty()) throw ShapeError("empty Minkowski sum");
  Polytope p;
  p.kind_ = Kind::MinkowskiSum;
  p.ambient_ = members.front().ambient_;
  for (const auto& m : members)
    if (m.ambient_ != p.ambient_) throw ShapeError("Minkowski summands live on different ambient sets");
  p.members_ = std::move(members);
  return p;
}

Polytope Polytope::face_at_zero(const VarSet& I) const {
  const auto cut = make_varset(I);
  if (!subset_of(cut, ambient_)) throw ShapeError("face index set is not contained in the ambient set");
  Polytope p;
  p.kind_ = kind_;
  p.ambient_ = set_minus(ambient_, cut);
  for (const auto& b : blocks_) {
    auto rest = set_minus(b.vars, cut);
    if (!rest.empty()) p.blocks_.push_back({std::move(rest), b.side});
  }
  for (const auto& m : members_) p.members_.push_back(m.face_at_zero(cut));
  return p;
}

Polytope Polytope::scaled(std::int64_t lambda) const {
  check_side(lambda);
  Polytope p = *this;
  for (auto& b : p.blocks_) b.side *= lambda;
  for (auto& m : p.members_) m = m.scaled(lambda);
  return p;
}

std::vector<SimplexBlock> Polytope::normal_form() const {
  if (kind_ != Kind::MinkowskiSum) return canonical_blocks(blocks_, ambient_);
  std::vector<std::vector<SimplexBlock>> forms;
  for (const auto& m : members_) forms.push_back(m.normal_form());
  const auto cp = partition_of_forms(forms, ambient_);
  std::vector<SimplexBlock> out;
  for (std::size_t c = 0; c < cp.components.size(); ++c) {
    std::int64_t side = 0;
    for (const auto& s : cp.sides) side += s[c];
    out.push_back({cp.components[c], side});
  }
  return canonical_blocks(out, ambient_);
}

Rational Polytope::volume() const {
  Rational v = 1;
  for (const auto& b : normal_form()) v *= block_volume(b.side, b.vars.size());
  return v;
}

std::string Polytope::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Simplex:
      os << "simplex(" << (blocks_.empty() ? 0 : blocks_.front().side) << ";" << join(blocks_.empty() ? VarSet{} : blocks_.front().vars) << ")";
      break;
    case Kind::Box: {
      os << "box(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? "," : "") << blocks_[i].side;
      os << ")";
      break;
    }
    case Kind::BlockProduct:
      os << "blocks(";
      for (std::size_t i = 0; i < blocks_.size(); ++i) os << (i ? " x " : "") << blocks_[i].side << "@{" << join(blocks_[i].vars) << "}";
      os << ")";
      break;
    case Kind::MinkowskiSum:
      for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? " + " : "") << members_[i].describe();
      break;
  }
  return os.str();
}

CommonPartition common_partition(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) return {};
  std::vector<std::vector<SimplexBlock>> forms;
  for (const auto& b : bodies) {
    if (b.ambient() != bodies.front().ambient()) throw ShapeError("bodies live on different ambient sets");
    forms.push_back(b.normal_form());
  }
  return partition_of_forms(forms, bodies.front().ambient());
}

std::string to_string(MvStrategy s) {
  switch (s) {
    case MvStrategy::IdenticalVolume: return "identical-bodies-volume";
    case MvStrategy::SimplexClosedForm: return "simplex-closed-form";
    case MvStrategy::BoxPermanent: return "box-permanent";
    case MvStrategy::BlockConvolution: return "block-convolution";
  }
  return "?";
}

Integer permanent(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeError("permanent of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n > 30) throw HypothesisError("permanent dimension too large for subset enumeration");
  // Ryser with Gray-code column updates.
  std::vector<Integer> row_sum(n, 0);
  Integer total = 0;
  std::uint64_t prev_gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const std::uint64_t gray = step ^ (step >> 1);
    const std::uint64_t flipped = gray ^ prev_gray;
    const auto col = static_cast<std::size_t>(__builtin_ctzll(flipped));
    const bool added = (gray & flipped) != 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (added) row_sum[r] += Integer(static_cast<long>(a(r, col)));
      else row_sum[r] -= Integer(static_cast<long>(a(r, col)));
    }
    prev_gray = gray;
    Integer prod = 1;
    for (const auto& s : row_sum) {
      prod *= s;
      if (prod == 0) break;
    }
    const int bits = __builtin_popcountll(gray);
    if ((static_cast<int>(n) - bits) % 2 == 0) total += prod;
    else total -= prod;
  }
  return total;
}

namespace {

struct ValidatedQuery {
  VarSet ambient;
  std::vector<std::vector<SimplexBlock>> forms;
  IntVector mult;
  std::int64_t m = 0;
};

ValidatedQuery validate(const MixedVolumeQuery& q) {
  if (q.bodies.empty()) throw ShapeError("mixed volume query has no bodies");
  ValidatedQuery v;
  v.ambient = q.bodies.front().first.ambient();
  for (const auto& [body, mult] : q.bodies) {
    if (mult < 1) throw HypothesisError("mixed volume multiplicities must be >= 1");
    if (body.ambient() != v.ambient) throw ShapeError("mixed volume bodies live on different ambient sets");
    v.forms.push_back(body.normal_form());
    v.mult.push_back(mult);
    v.m += mult;
  }
  if (v.m != static_cast<std::int64_t>(v.ambient.size()))
    throw ShapeError("total multiplicity " + std::to_string(v.m) + " differs from ambient dimension " + std::to_string(v.ambient.size()));
  return v;
}

// Σ over distributions of each body's copies among the components
// (component c receives exactly n_c copies) of multinomial · Π side^x.
struct Convolution {
  const std::vector<IntVector>& sides;
  const IntVector& mult;
  std::map<std::pair<std::size_t, IntVector>, Integer> memo;

  Integer from(std::size_t body, IntVector& residual) {
    if (body == mult.size()) return 1;
    auto key = std::make_pair(body, residual);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    IntVector x(residual.size(), 0);
    distribute(body, residual, x, 0, mult[body], Integer(1), total);
    memo.emplace(std::move(key), total);
    return total;
  }

  void distribute(std::size_t body, IntVector& residual, IntVector& x, std::size_t c, std::int64_t left, const Integer& weight, Integer& acc) {
    const auto& s = sides[body];
    if (c == residual.size()) {
      if (left != 0) return;
      acc += weight * multinomial(mult[body], x) * from(body + 1, residual);
      return;
    }
    const std::int64_t cap = std::min(left, residual[c]);
    // A zero side kills every term that sends a copy to this component.
    const std::int64_t hi = s[c] == 0 ? 0 : cap;
    Integer w = weight;
    for (std::int64_t t = 0; t <= hi; ++t) {
      x[c] = t;
      residual[c] -= t;
      distribute(body, residual, x, c + 1, left - t, w, acc);
      residual[c] += t;
      w *= Integer(static_cast<long>(s[c]));
    }
    x[c] = 0;
  }
};

}  // namespace

MixedVolumeResult mixed_volume_detailed(const MixedVolumeQuery& q) {
  const auto v = validate(q);
  const Integer m_fact = factorial(v.m);

  if (std::all_of(v.forms.begin(), v.forms.end(), [&](const auto& f) { return f == v.forms.front(); }))
    return {q.bodies.front().first.volume(), MvStrategy::IdenticalVolume};

  const auto cp = partition_of_forms(v.forms, v.ambient);

  if (cp.components.size() == 1) {
    Integer prod = 1;
    for (std::size_t i = 0; i < cp.sides.size(); ++i) prod *= ipow(Integer(static_cast<long>(cp.sides[i][0])), v.mult[i]);
    return {ratio(prod, m_fact), MvStrategy::SimplexClosedForm};
  }

  if (cp.components.size() == static_cast<std::size_t>(v.m)) {
    const auto n = static_cast<std::size_t>(v.m);
    IntMatrix a(n, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < cp.sides.size(); ++i)
      for (std::int64_t t = 0; t < v.mult[i]; ++t, ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = cp.sides[i][c];
    Rational mv(permanent(a), m_fact);
    mv.canonicalize();
    return {mv, MvStrategy::BoxPermanent};
  }

  IntVector sizes;
  for (const auto& comp : cp.components) sizes.push_back(static_cast<std::int64_t>(comp.size()));
  Convolution conv{cp.sides, v.mult, {}};
  Rational mv(conv.from(0, sizes), m_fact);
  mv.canonicalize();
  return {mv, MvStrategy::BlockConvolution};
}

Rational mixed_volume(const MixedVolumeQuery& q) { return mixed_volume_detailed(q).value; }

Rational mixed_volume_oracle_interpolation(const MixedVolumeQuery& q) {
  const auto v = validate(q);
  std::vector<const Polytope*> copies;
  for (const auto& [body, mult] : q.bodies)
    for (std::int64_t t = 0; t < mult; ++t) copies.push_back(&body);
  const std::size_t m = copies.size();
  if (m > 24) throw HypothesisError("interpolation oracle limited to 24 body copies");

  // Mixed finite difference Δ_1⋯Δ_m of vol(Σ λ_i K_i) at λ = (1, ..., 1);
  // for a degree-m form this isolates the λ_1⋯λ_m coefficient.
  Rational acc = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<Polytope> scaled;
    scaled.reserve(m);
    for (std::size_t i = 0; i < m; ++i) scaled.push_back(copies[i]->scaled(((mask >> i) & 1U) ? 2 : 1));
    const Rational vol = Polytope::minkowski_sum(std::move(scaled)).volume();
    const auto bits = static_cast<std::size_t>(__builtin_popcountll(mask));
    if ((m - bits) % 2 == 0) acc += vol;
    else acc -= vol;
  }
  return acc / Rational(factorial(static_cast<std::int64_t>(m)));
}

namespace {

void check_refined_shape(const IntMatrix& d, const IntVector& alpha) {
  if (d.rows() != alpha.size())
    throw ShapeError("degree matrix has " + std::to_string(d.rows()) + " rows but alpha has " + std::to_string(alpha.size()) + " entries");
  std::int64_t sum = 0;
  for (auto a : alpha) {
    if (a <= 0) throw HypothesisError("alpha entries must be positive");
    sum += a;
  }
  if (sum != static_cast<std::int64_t>(d.cols()))
    throw ShapeError("alpha sums to " + std::to_string(sum) + " but the matrix has " + std::to_string(d.cols()) + " columns");
}

// Column-by-column assignment to rows with residual quotas; Combine is
// either sum (refined count) or max (coarse bound).
template <class Combine>
Integer partition_dp(const IntMatrix& d, const IntVector& alpha, Combine combine) {
  std::map<IntVector, Integer> memo;
  IntVector residual = alpha;
  auto rec = [&](auto& self, std::size_t col) -> Integer {
    if (col == d.cols()) return 1;
    if (auto it = memo.find(residual); it != memo.end()) return it->second;
    Integer best = 0;
    bool first = true;
    for (std::size_t r = 0; r < d.rows(); ++r) {
      if (residual[r] == 0) continue;
      --residual[r];
      Integer term = Integer(static_cast<long>(d(r, col))) * self(self, col + 1);
      ++residual[r];
      best = first ? term : combine(best, term);
      first = false;
    }
    memo.emplace(residual, best);
    return best;
  };
  return rec(rec, 0);
}

}  // namespace

Integer n_refined(const IntMatrix& d, const IntVector& alpha) {
  check_refined_shape(d, alpha);
  return partition_dp(d, alpha, [](const Integer& a, const Integer& b) { return Integer(a + b); });
}

Integer n_coarse_bound(const IntMatrix& d, const IntVector& alpha) {
  check_refined_shape(d, alpha);
  return partition_dp(d, alpha, [](const Integer& a, const Integer& b) { return a < b ? b : a; });
}

MixedVolumeQuery box_query(const IntMatrix& d, const IntVector& alpha) {
  check_refined_shape(d, alpha);
  MixedVolumeQuery q;
  const auto vars = range_vars(d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) q.bodies.emplace_back(Polytope::box(vars, d.row(r)), alpha[r]);
  return q;
}

}  // namespace betti

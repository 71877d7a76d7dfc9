#include "betti/generic_chi.hpp"

#include <algorithm>
#include <map>

namespace betti {

std::string to_string(Setting s) { return s == Setting::Affine ? "affine" : "projective"; }

GenericSystem GenericSystem::shared(std::size_t k, const Polytope& support, std::size_t ell) {
  return {k, std::vector<Polytope>(ell, support)};
}

GenericSystem GenericSystem::simplices(std::size_t k, const IntVector& degrees) {
  GenericSystem sys{k, {}};
  for (auto d : degrees) sys.supports.push_back(Polytope::simplex(d, range_vars(k)));
  return sys;
}

GenericSystem GenericSystem::boxes(const IntMatrix& d) {
  GenericSystem sys{d.cols(), {}};
  for (std::size_t r = 0; r < d.rows(); ++r) sys.supports.push_back(Polytope::box(range_vars(d.cols()), d.row(r)));
  return sys;
}

namespace {

void check_system(const GenericSystem& sys) {
  const std::size_t ell = sys.ell();
  if (ell < 1 || ell > sys.k) throw HypothesisError("a generic complete intersection needs 1 <= l <= k (got l=" + std::to_string(ell) + ", k=" + std::to_string(sys.k) + ")");
  const auto ambient = range_vars(sys.k);
  for (const auto& p : sys.supports) {
    if (p.ambient() != ambient) throw ShapeError("support " + p.describe() + " does not live on the k ambient coordinates");
    for (const auto& b : p.normal_form())
      if (b.side < 1) throw HypothesisError("support " + p.describe() + " misses a coordinate axis, so the face formula does not apply");
  }
}

// Faces are grouped so that each group shares one mixed-volume value.
// Non-singleton components are symmetric in their variables; singleton
// components with the same side in every support are interchangeable.
struct FaceClass {
  std::vector<VarSet> members;  // each member is one component
  bool singletons = false;
};

std::vector<FaceClass> face_classes(const CommonPartition& cp) {
  std::vector<FaceClass> out;
  std::map<IntVector, std::size_t> by_sides;
  for (std::size_t c = 0; c < cp.components.size(); ++c) {
    const auto& comp = cp.components[c];
    if (comp.size() > 1) {
      out.push_back({{comp}, false});
      continue;
    }
    IntVector column;
    for (const auto& s : cp.sides) column.push_back(s[c]);
    auto [it, fresh] = by_sides.emplace(column, out.size());
    if (fresh) out.push_back({{comp}, true});
    else out[it->second].members.push_back(comp);
  }
  return out;
}

std::size_t class_range(const FaceClass& fc) { return fc.singletons ? fc.members.size() : fc.members.front().size(); }

// Degree-κ part of Π_j Δ_j/(1+Δ_j) on one face: (-1)^{κ-ℓ} Σ_m κ!·MV.
Integer face_term(const std::vector<Polytope>& faces, std::int64_t kappa) {
  const std::size_t ell = faces.size();
  if (kappa < static_cast<std::int64_t>(ell)) return 0;
  const Integer kf = factorial(kappa);
  Rational sum = 0;
  const bool all_same = std::all_of(faces.begin(), faces.end(), [&](const auto& f) { return f == faces.front(); });
  if (all_same) {
    // Every composition contributes κ!·vol of the common face.
    sum = Rational(binomial(kappa - 1, static_cast<std::int64_t>(ell) - 1)) * faces.front().volume() * Rational(kf);
  } else {
    for (const auto& m : positive_compositions(kappa, ell)) {
      MixedVolumeQuery q;
      for (std::size_t j = 0; j < ell; ++j) q.bodies.emplace_back(faces[j], m[j]);
      sum += mixed_volume(q) * Rational(kf);
    }
  }
  if (!is_integer(sum)) throw std::logic_error("non-integral face contribution");
  Integer v = sum.get_num();
  return sign_pow(kappa - static_cast<std::int64_t>(ell)) > 0 ? v : Integer(-v);
}

}  // namespace

std::size_t khovanskii_face_classes(const GenericSystem& sys) {
  check_system(sys);
  std::size_t n = 1;
  for (const auto& fc : face_classes(common_partition(sys.supports))) n *= class_range(fc) + 1;
  return n;
}

Rational chi_khovanskii(const GenericSystem& sys) {
  check_system(sys);
  const auto classes = face_classes(common_partition(sys.supports));
  const auto k = static_cast<std::int64_t>(sys.k);

  Integer chi = 0;
  std::vector<std::size_t> removed(classes.size(), 0);
  while (true) {
    VarSet cut;
    Integer weight = 1;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const auto& fc = classes[c];
      const std::size_t t = removed[c];
      weight *= binomial(static_cast<std::int64_t>(class_range(fc)), static_cast<std::int64_t>(t));
      if (fc.singletons) {
        for (std::size_t i = 0; i < t; ++i) cut.push_back(fc.members[i].front());
      } else {
        cut.insert(cut.end(), fc.members.front().begin(), fc.members.front().begin() + static_cast<std::ptrdiff_t>(t));
      }
    }
    const std::int64_t kappa = k - static_cast<std::int64_t>(cut.size());
    if (kappa >= static_cast<std::int64_t>(sys.ell())) {
      std::sort(cut.begin(), cut.end());
      std::vector<Polytope> faces;
      faces.reserve(sys.ell());
      for (const auto& p : sys.supports) faces.push_back(p.face_at_zero(cut));
      chi += weight * face_term(faces, kappa);
    }
    // Odometer over the removal counts.
    std::size_t c = 0;
    while (c < classes.size() && removed[c] == class_range(classes[c])) removed[c++] = 0;
    if (c == classes.size()) break;
    ++removed[c];
  }
  return Rational(chi);
}

Rational affine_betti_from_chi(const Rational& chi, std::size_t k, std::size_t ell) {
  const auto e = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(ell);
  return Rational(1 + sign_pow(e + 1)) + Rational(sign_pow(e)) * chi;
}

Rational projective_betti_from_chi(const Rational& chi, std::size_t k, std::size_t ell) {
  const auto e = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(ell);
  return Rational((1 + sign_pow(e + 1)) * (e + 1)) + Rational(sign_pow(e)) * chi;
}

namespace {

const char* kAffineConversion = "b = 1 + (-1)^(k-l+1) + (-1)^(k-l) chi";
const char* kProjectiveConversion = "b = (1 + (-1)^(k-l+1)) (k-l+1) + (-1)^(k-l) chi";

}  // namespace

ChiReport betti_generic(const GenericSystem& sys, Setting setting) {
  check_system(sys);
  ChiReport r;
  r.k = sys.k;
  r.ell = sys.ell();
  r.setting = setting;
  if (setting == Setting::Affine) {
    r.chi = chi_khovanskii(sys);
    r.betti_sum = affine_betti_from_chi(r.chi, r.k, r.ell);
    r.conversion = kAffineConversion;
    return r;
  }
  IntVector degrees;
  for (const auto& p : sys.supports) {
    const auto nf = p.normal_form();
    if (nf.size() != 1) throw UnsupportedFamilyError("projective setting needs total-degree (simplex) supports, got " + p.describe());
    degrees.push_back(nf.front().side);
  }
  // P^k is the disjoint union of C^k, C^{k-1}, ..., C^0; slices below
  // dimension ℓ are empty for a generic system.
  r.chi = 0;
  for (std::size_t n = r.ell; n <= r.k; ++n) r.chi += chi_khovanskii(GenericSystem::simplices(n, degrees));
  r.betti_sum = projective_betti_from_chi(r.chi, r.k, r.ell);
  r.conversion = kProjectiveConversion;
  return r;
}

namespace {

void require_positive(const IntVector& d, std::int64_t lo, const char* what) {
  for (auto v : d)
    if (v < lo) throw HypothesisError(std::string(what) + " must be >= " + std::to_string(lo) + ", got " + std::to_string(v));
}

Integer product(const IntVector& d) {
  Integer p = 1;
  for (auto v : d) p *= Integer(static_cast<long>(v));
  return p;
}

Integer Z(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

Rational betti_ci_total_distinct(std::int64_t k, const IntVector& d) {
  const auto ell = static_cast<std::int64_t>(d.size());
  if (ell < 1 || ell > k) throw HypothesisError("need 1 <= l <= k");
  require_positive(d, 1, "degree");
  Integer s = 0;
  for (std::int64_t j = 0; j <= k - ell; ++j) {
    Integer t = binomial(k, j + ell) * complete_homogeneous(j, d);
    if (sign_pow(k - ell + j) > 0) s += t;
    else s -= t;
  }
  return Rational(Integer(1 + sign_pow(k - ell + 1)) + product(d) * s);
}

Rational betti_one_multi(const IntVector& d) {
  const auto k = static_cast<std::int64_t>(d.size());
  if (k < 1) throw HypothesisError("need at least one variable");
  require_positive(d, 0, "degree");
  Integer s = 1 + sign_pow(k);
  // e[j] = elementary symmetric polynomial of degree j.
  std::vector<Integer> e(static_cast<std::size_t>(k) + 1, Integer(0));
  e[0] = 1;
  for (auto v : d)
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += Z(v) * e[j - 1];
  for (std::int64_t j = 1; j <= k; ++j) {
    Integer t = factorial(j) * e[static_cast<std::size_t>(j)];
    if (sign_pow(k - j) > 0) s += t;
    else s -= t;
  }
  return Rational(s);
}

Rational betti_blocks_bound(const IntVector& kv, const IntVector& d, std::int64_t ell) {
  if (kv.size() != d.size()) throw ShapeError("block sizes and block degrees differ in length");
  if (kv.empty()) throw HypothesisError("need at least one block");
  require_positive(kv, 1, "block size");
  std::int64_t k = 0;
  for (auto v : kv) k += v;
  if (ell < 1) throw HypothesisError("need l >= 1");
  const auto p = static_cast<std::int64_t>(kv.size());
  Rational core = ratio(ipow(Z(k - ell + 2), 2) * binomial(k, ell - 1), multinomial(k, kv));
  core *= ratio(ipow(Z(1 + p), 3 * k - ell + 1), Z(p * (p + 2)));
  Integer dp = 1;
  for (std::size_t i = 0; i < d.size(); ++i) dp *= ipow(Z(d[i]), kv[i]);
  core *= Rational(dp);
  return Rational(1 + sign_pow(k - ell + 1)) + core;
}

Rational betti_partially_quadratic_bound(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  const std::int64_t k = k1 + k2;
  if (k1 < 0 || k2 < 0 || ell < 1 || ell > k) throw HypothesisError("need k1, k2 >= 0 and 1 <= l <= k1 + k2");
  if (d < 1) throw HypothesisError("need d >= 1");
  Integer v = Z(ell) * ipow(Z(2), ell) * ipow(Z(k), ell - 1) * ipow(Z(2 * d * k + 1), k1);
  return Rational(Z(2 + sign_pow(k - ell + 1)) + v);
}

Rational betti_several_blocks_mixed_bound(const IntVector& d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  if (static_cast<std::int64_t>(d.size()) != k1) throw ShapeError("need exactly k1 per-variable degrees");
  const std::int64_t k = k1 + k2;
  if (k2 < 0 || ell < 1 || ell > k) throw HypothesisError("need 1 <= l <= k1 + k2");
  require_positive(d, 1, "degree");
  Integer v = Z(ell) * ipow(Z(2), ell) * factorial(k1) * ipow(Z(k), ell - 1) * ipow(Z(2 * k + 1), k1) * product(d);
  return Rational(Z(2 + sign_pow(k - ell + 1)) + v);
}

Integer inner_F(std::int64_t j1, std::int64_t k2, std::int64_t ell) {
  if (j1 < 0 || k2 < 0 || ell < 1) throw HypothesisError("need j1, k2 >= 0 and l >= 1");
  Integer s = 0;
  for (std::int64_t j2 = 0; j2 <= k2; ++j2)
    s += binomial(j1 + j2, j2) * generalized_binomial(j1 + j2 - 1, ell - 1) * binomial(k2, j2) * ipow(Z(-2), j2);
  return s;
}

Rational partially_quadratic_chi(std::int64_t d, std::int64_t k1, std::int64_t k2, std::int64_t ell) {
  if (k1 < 0 || k2 < 0 || ell < 1 || ell > k1 + k2) throw HypothesisError("need 1 <= l <= k1 + k2");
  Integer s = 1;
  for (std::int64_t j1 = 0; j1 <= k1; ++j1) {
    Integer t = binomial(k1, j1) * ipow(Z(d), j1) * inner_F(j1, k2, ell);
    if (sign_pow(j1 + ell) > 0) s += t;
    else s -= t;
  }
  return Rational(s);
}

Rational several_blocks_chi(const IntVector& d, std::int64_t k2, std::int64_t ell) {
  const auto k1 = static_cast<std::int64_t>(d.size());
  if (k2 < 0 || ell < 1 || ell > k1 + k2) throw HypothesisError("need 1 <= l <= k1 + k2");
  std::vector<Integer> e(d.size() + 1, Integer(0));
  e[0] = 1;
  for (auto v : d)
    for (std::size_t j = e.size() - 1; j >= 1; --j) e[j] += Z(v) * e[j - 1];
  Integer s = 1;
  for (std::int64_t j1 = 0; j1 <= k1; ++j1) {
    Integer t = factorial(j1) * e[static_cast<std::size_t>(j1)] * inner_F(j1, k2, ell);
    if (sign_pow(j1 + ell) > 0) s += t;
    else s -= t;
  }
  return Rational(s);
}

Rational quadrics_affine_chi(std::int64_t k, std::int64_t ell) {
  if (ell < 1 || ell > k) throw HypothesisError("need 1 <= l <= k");
  Integer s = 0;
  for (std::int64_t h = 0; h < ell; ++h) s += binomial(k, h) * ipow(Z(-2), h);
  return Rational(sign_pow(k + 1) > 0 ? Integer(1 + s) : Integer(1 - s));
}

Integer quadrics_B(std::int64_t h, std::int64_t k, std::int64_t ell) {
  if (h < 0) throw HypothesisError("need h >= 0");
  Integer s = 0;
  for (std::int64_t j = ell; j <= k; ++j) {
    if (sign_pow(j + 1) > 0) s += binomial(j, h);
    else s -= binomial(j, h);
  }
  return ipow(Z(2), h) * s;
}

ChiReport quadrics_projective(std::int64_t k, std::int64_t ell) {
  if (ell < 1 || ell >= k) throw HypothesisError("projective quadrics formula requires 1 <= l < k (got l=" + std::to_string(ell) + ", k=" + std::to_string(k) + ")");
  Integer chi = Z(k - ell + 1);
  for (std::int64_t h = 0; h < ell; ++h) {
    Integer inner = 0;
    for (std::int64_t j = ell; j <= k; ++j) {
      if (sign_pow(j + 1) > 0) inner += binomial(j, h);
      else inner -= binomial(j, h);
    }
    chi += ipow(Z(-2), h) * inner;
  }
  ChiReport r;
  r.k = static_cast<std::size_t>(k);
  r.ell = static_cast<std::size_t>(ell);
  r.setting = Setting::Projective;
  r.chi = Rational(chi);
  r.betti_sum = projective_betti_from_chi(r.chi, r.k, r.ell);
  r.conversion = kProjectiveConversion;
  return r;
}

Rational betti_boxes_generic(const IntMatrix& d) {
  const auto ell = static_cast<std::int64_t>(d.rows());
  const auto k = static_cast<std::int64_t>(d.cols());
  if (ell < 1 || ell > k) throw HypothesisError("need 1 <= l <= k");
  Integer total = 1 + sign_pow(k - ell + 1);
  for (std::int64_t j = ell; j <= k; ++j) {
    const auto alphas = positive_compositions(j, static_cast<std::size_t>(ell));
    Integer over_j = 0;
    for (const auto& J : combinations(static_cast<std::size_t>(k), static_cast<std::size_t>(j))) {
      const IntMatrix sub = d.select_columns(J);
      for (const auto& a : alphas) over_j += n_refined(sub, a);
    }
    if (sign_pow(k - j) > 0) total += over_j;
    else total -= over_j;
  }
  return Rational(total);
}

Integer chern_chi_projective(std::int64_t k, const IntVector& d) {
  const auto ell = static_cast<std::int64_t>(d.size());
  if (ell < 1 || ell > k) throw HypothesisError("need 1 <= l <= k");
  require_positive(d, 1, "degree");
  Integer n = 0;
  for (std::int64_t i = 0; i <= k - ell; ++i) {
    Integer t = binomial(k + 1, i) * complete_homogeneous(k - ell - i, d);
    if (sign_pow(k - ell - i) > 0) n += t;
    else n -= t;
  }
  return n * product(d);
}

Integer lefschetz_chi_affine(std::int64_t k, const IntVector& d) {
  const auto ell = static_cast<std::int64_t>(d.size());
  if (ell < 1 || ell > k - 1) throw HypothesisError("the hyperplane section at infinity must stay a complete intersection: need 1 <= l <= k-1");
  return chern_chi_projective(k, d) - chern_chi_projective(k - 1, d);
}

}  // namespace betti

#include "betti/registry.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "betti/applications.hpp"
#include "betti/bounds.hpp"
#include "betti/generic_chi.hpp"

namespace betti {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& raw, const std::string& what) {
  const std::string s = trim(raw);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ShapeError("cannot parse " + what + " '" + raw + "' as an integer");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t total(const IntVector& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

BoundResult exact(Rational v, std::string id, std::vector<std::string> assumptions, std::string branch) {
  BoundResult r;
  r.value = std::move(v);
  r.citation = std::move(id);
  r.assumptions = std::move(assumptions);
  r.branch = std::move(branch);
  r.kind = ValueKind::Exact;
  return r;
}

BoundResult complex_bound(Rational v, std::string id, std::vector<std::string> assumptions) {
  BoundResult r;
  r.value = std::move(v);
  r.citation = std::move(id);
  r.assumptions = std::move(assumptions);
  r.branch = "complex generic bound";
  return r;
}

void require(bool ok, const std::string& clause) {
  if (!ok) throw HypothesisError("hypothesis violated: " + clause);
}

using O = const EvalOptions&;

std::vector<RegistryEntry> build() {
  std::vector<RegistryEntry> r;
  auto add = [&](std::string id, std::string summary, std::vector<std::string> req, std::vector<std::string> opt, auto fn) {
    r.push_back({std::move(id), std::move(summary), std::move(req), std::move(opt), fn});
  };

  add("optm", "d(2d-1)^(k-1); with --dvec, d is the total degree sum(dvec) and k = len(dvec)", {}, {"d", "k", "dvec"},
      [](const Params& p, O o) {
        if (p.count("dvec")) {
          const IntVector dv = param_vec(p, "dvec");
          guard_size(static_cast<std::int64_t>(dv.size()), "k", o);
          return optm_bound(total(dv), static_cast<std::int64_t>(dv.size()));
        }
        guard_size(param_int(p, "k"), "k", o);
        return optm_bound(param_int(p, "d"), param_int(p, "k"));
      });
  add("b99", "closed semi-algebraic sets, binom(s+1, j) 6^j d(2d-1)^(k-1)", {"s", "d", "k"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return b99_bound(param_int(p, "s"), param_int(p, "d"), param_int(p, "k"));
      });
  add("gv07", "closed semi-algebraic sets, binom(2ks+1, j) 6^j d(2d-1)^(k-1)", {"s", "d", "k"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return gv07_bound(param_int(p, "s"), param_int(p, "d"), param_int(p, "k"));
      });
  add("basu-kettner", "quadratic semi-algebraic sets, per i", {"s", "k", "i"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return basu_kettner_bound(param_int(p, "s"), param_int(p, "k"), param_int(p, "i"));
      });
  add("safey-el-din", "varieties of codimension s, degrees --dvec, b_0..b_k'", {"dvec", "k", "kp"}, {"variant"},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        SafeyVariant v = SafeyVariant::Radical;
        if (auto it = p.find("variant"); it != p.end()) {
          if (it->second == "regular") v = SafeyVariant::RegularSequence;
          else if (it->second != "radical") throw ShapeError("--variant must be radical or regular");
        }
        return safey_el_din_bound(param_vec(p, "dvec"), param_int(p, "k"), param_int(p, "kp"), v);
      });
  add("total-degree", "varieties cut by l polynomials of degree <= d in k variables", {"d", "k", "l"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return total_degree_variety_bound(param_int(p, "d"), param_int(p, "k"), param_int(p, "l"));
      });
  add("multi-degree", "varieties, block degrees --dvec on block sizes --kvec", {"dvec", "kvec", "l"}, {},
      [](const Params& p, O o) {
        const IntVector kv = param_vec(p, "kvec");
        guard_size(total(kv), "k", o);
        return g_min(param_vec(p, "dvec"), kv, param_int(p, "l"));
      });
  add("multi-semi", "semi-algebraic sets with block degrees; per i if --i is given", {"dvec", "kvec", "s"}, {"i"},
      [](const Params& p, O o) {
        const IntVector kv = param_vec(p, "kvec");
        guard_size(total(kv), "k", o);
        return multi_semi_bound(param_vec(p, "dvec"), kv, param_int(p, "s"), param_opt_int(p, "i"));
      });
  add("boxes", "varieties with one box of degrees per polynomial (--dmat rows)", {"dmat"}, {},
      [](const Params& p, O o) {
        const IntMatrix d = param_mat(p, "dmat");
        guard_size(static_cast<std::int64_t>(d.cols()), "k", o);
        guard_size(static_cast<std::int64_t>(2 * d.rows()), "2l", o);
        return box_variety_bound(d);
      });
  add("boxes-semi", "semi-algebraic sets with box degrees; per i if --i is given", {"dmat", "s"}, {"i"},
      [](const Params& p, O o) {
        const IntMatrix d = param_mat(p, "dmat");
        guard_size(static_cast<std::int64_t>(d.cols()), "k", o);
        guard_size(static_cast<std::int64_t>(2 * d.rows()), "2l", o);
        return box_semi_bound(d, param_int(p, "s"), param_opt_int(p, "i"));
      });
  add("partly-quadratic", "varieties, degree <= d in k1 variables and <= 2 in k2 variables", {"d", "k1", "k2", "l"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k1") + param_int(p, "k2"), "k1+k2", o);
        return partially_quadratic_variety_bound(param_int(p, "d"), param_int(p, "k1"), param_int(p, "k2"), param_int(p, "l"));
      });
  add("partly-quadratic-semi", "semi-algebraic version of partly-quadratic", {"d", "k1", "k2", "s"}, {"i"},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k1") + param_int(p, "k2"), "k1+k2", o);
        return partially_quadratic_semi_bound(param_int(p, "d"), param_int(p, "k1"), param_int(p, "k2"), param_int(p, "s"),
                                              param_opt_int(p, "i"));
      });
  add("projective-quadrics", "real projective varieties cut by l quadrics in P^k", {"k", "l"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return projective_quadrics_bound(param_int(p, "k"), param_int(p, "l"));
      });
  add("bpr-new", "s polynomials of X-degree <= d together with m quadrics, m <= k2", {"s", "m", "d", "k1", "k2"}, {"i"},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k1") + param_int(p, "k2"), "k1+k2", o);
        return bpr_new_bound(param_int(p, "s"), param_int(p, "m"), param_int(p, "d"), param_int(p, "k1"), param_int(p, "k2"),
                             param_opt_int(p, "i"));
      });
  add("partly-quadratic-multi", "varieties, per-variable degrees --dvec on k1 = len(dvec) variables, quadratic in k2", {"dvec", "k2", "l"},
      {"k1"}, [](const Params& p, O o) {
        const IntVector d = param_vec(p, "dvec");
        const auto k1 = param_opt_int(p, "k1").value_or(static_cast<std::int64_t>(d.size()));
        guard_size(k1 + param_int(p, "k2"), "k1+k2", o);
        return partially_quadratic_multi_variety_bound(d, k1, param_int(p, "k2"), param_int(p, "l"));
      });
  add("partly-quadratic-multi-semi", "semi-algebraic version of partly-quadratic-multi", {"dvec", "k2", "s"}, {"k1", "i"},
      [](const Params& p, O o) {
        const IntVector d = param_vec(p, "dvec");
        const auto k1 = param_opt_int(p, "k1").value_or(static_cast<std::int64_t>(d.size()));
        guard_size(k1 + param_int(p, "k2"), "k1+k2", o);
        return partially_quadratic_multi_semi_bound(d, k1, param_int(p, "k2"), param_int(p, "s"), param_opt_int(p, "i"));
      });
  add("barone-basu", "b_0..b_k' for s polynomials of degree d2 on a variety of degree d1; --interp d2|d1|max", {"d1", "d2", "k", "kp", "s"},
      {"interp"}, [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        BBReading reading = BBReading::D2;
        if (auto it = p.find("interp"); it != p.end()) {
          if (it->second == "d1") reading = BBReading::D1;
          else if (it->second == "max") reading = BBReading::Max2D1D2;
          else if (it->second != "d2") throw ShapeError("--interp must be d2, d1 or max");
        }
        return barone_basu_bound(param_int(p, "d1"), param_int(p, "d2"), param_int(p, "k"), param_int(p, "kp"), param_int(p, "s"), reading);
      });
  add("refined-two-degree", "variety of one degree-d1 and one degree-d2 polynomial", {"d1", "d2", "k"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return two_degree_variety_bound(param_int(p, "d1"), param_int(p, "d2"), param_int(p, "k"));
      });
  add("refined-two-degree-simple", "8 binom(k+1,3) d1 d2 (d2-1)^(k-2)", {"d1", "d2", "k"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        const auto d1 = param_int(p, "d1"), d2 = param_int(p, "d2"), k = param_int(p, "k");
        require(d1 >= 2 && d1 <= d2, "2 <= d1 <= d2");
        BoundResult r;
        r.value = Rational(two_degree_simple_bound(d1, d2, k));
        r.citation = "refined-two-degree-simple";
        r.assumptions = {"2 <= d1 <= d2", "k >= 2"};
        r.branch = "simplified form";
        return r;
      });
  add("bb-new", "b_i, i < k', for sign conditions on a two-degree variety of dimension k'", {"d1", "d2", "k", "kp", "s", "i"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        return bb_new_bound(param_int(p, "d1"), param_int(p, "d2"), param_int(p, "k"), param_int(p, "kp"), param_int(p, "s"),
                            param_int(p, "i"));
      });
  add("pull-back", "pull-back of a closed set under a polynomial map R^k -> R^m", {"k", "m", "d", "D", "s"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k") + param_int(p, "m"), "k+m", o);
        return pull_back_bound({param_int(p, "k"), param_int(p, "m"), param_int(p, "d"), param_int(p, "D"), param_int(p, "s")});
      });
  add("image", "b_i of the image of a bounded closed set", {"k", "m", "d", "D", "s", "i"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        guard_size(param_int(p, "m"), "m", o);
        return image_bound({param_int(p, "k"), param_int(p, "m"), param_int(p, "d"), param_int(p, "D"), param_int(p, "s"), param_int(p, "i")});
      });
  add("fourier-mukai", "b_i of a set-theoretic Fourier-Mukai transform", {"k", "m", "d", "D", "s1", "s2", "i"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        guard_size(param_int(p, "m"), "m", o);
        return fourier_mukai_bound({param_int(p, "k"), param_int(p, "m"), param_int(p, "d"), param_int(p, "D"), param_int(p, "s1"),
                                    param_int(p, "s2"), param_int(p, "i")});
      });
  add("transversal", "b_i of the space of k'-flats meeting a closed set in R^k", {"k", "kp", "d", "s", "i"}, {},
      [](const Params& p, O o) {
        guard_size(transversal_m(param_int(p, "k")), "m", o);
        return transversal_bound({param_int(p, "k"), param_int(p, "kp"), param_int(p, "d"), param_int(p, "s"), param_int(p, "i")});
      });
  add("ci-total-distinct", "exact b of a generic complex complete intersection of degrees --dvec in C^k", {"k", "dvec"}, {},
      [](const Params& p, O o) {
        const auto k = param_int(p, "k");
        guard_size(k, "k", o);
        const IntVector d = param_vec(p, "dvec");
        require(!d.empty() && static_cast<std::int64_t>(d.size()) <= k, "1 <= l <= k");
        for (auto v : d) require(v >= 1, "d_i >= 1");
        return exact(betti_ci_total_distinct(k, d), "ci-total-distinct", {"generic coefficients", "1 <= l <= k"}, "closed form");
      });
  add("one-multi", "exact b of a generic complex hypersurface with per-variable degrees --dvec", {"dvec"}, {},
      [](const Params& p, O o) {
        const IntVector d = param_vec(p, "dvec");
        guard_size(static_cast<std::int64_t>(d.size()), "k", o);
        for (auto v : d) require(v >= 0, "d_i >= 0");
        return exact(betti_one_multi(d), "one-multi", {"generic coefficients"}, "closed form");
      });
  add("quadrics-affine", "exact b of l generic quadrics in C^k", {"k", "l"}, {},
      [](const Params& p, O o) {
        const auto k = param_int(p, "k"), l = param_int(p, "l");
        guard_size(k, "k", o);
        require(l >= 1 && l <= k, "1 <= l <= k");
        const Rational chi = quadrics_affine_chi(k, l);
        return exact(affine_betti_from_chi(chi, static_cast<std::size_t>(k), static_cast<std::size_t>(l)), "quadrics-affine",
                     {"generic coefficients", "1 <= l <= k"}, "chi = " + to_string(chi));
      });
  add("quadrics-projective", "exact b of l < k generic quadrics in P^k", {"k", "l"}, {},
      [](const Params& p, O o) {
        guard_size(param_int(p, "k"), "k", o);
        const ChiReport c = quadrics_projective(param_int(p, "k"), param_int(p, "l"));
        return exact(c.betti_sum, "quadrics-projective", {"generic coefficients", "1 <= l < k"}, "chi = " + to_string(c.chi));
      });
  add("blocks-complex", "generic complex bound, block degrees --dvec on block sizes --kvec", {"kvec", "dvec", "l"}, {},
      [](const Params& p, O o) {
        const IntVector kv = param_vec(p, "kvec");
        guard_size(total(kv), "k", o);
        for (auto v : kv) require(v >= 1, "block sizes >= 1");
        const auto l = param_int(p, "l");
        require(l >= 1, "l >= 1");
        return complex_bound(betti_blocks_bound(kv, param_vec(p, "dvec"), l), "blocks-complex", {"block sizes >= 1", "l >= 1"});
      });
  add("partially-quadratic-complex", "generic complex bound, degree d in k1 variables and 2 in k2", {"d", "k1", "k2", "l"}, {},
      [](const Params& p, O o) {
        const auto d = param_int(p, "d"), k1 = param_int(p, "k1"), k2 = param_int(p, "k2"), l = param_int(p, "l");
        guard_size(k1 + k2, "k1+k2", o);
        require(l >= 1 && l <= k1 + k2, "1 <= l <= k1+k2");
        require(d >= 1, "d >= 1");
        return complex_bound(betti_partially_quadratic_bound(d, k1, k2, l), "partially-quadratic-complex", {"1 <= l <= k1+k2", "d >= 1"});
      });
  add("several-blocks-complex", "generic complex bound, per-variable degrees --dvec, quadratic in k2", {"dvec", "k2", "l"}, {"k1"},
      [](const Params& p, O o) {
        const IntVector d = param_vec(p, "dvec");
        const auto k1 = param_opt_int(p, "k1").value_or(static_cast<std::int64_t>(d.size()));
        const auto k2 = param_int(p, "k2"), l = param_int(p, "l");
        guard_size(k1 + k2, "k1+k2", o);
        if (static_cast<std::int64_t>(d.size()) != k1) throw ShapeError("need exactly k1 per-variable degrees");
        require(l >= 1 && l <= k1 + k2, "1 <= l <= k1+k2");
        return complex_bound(betti_several_blocks_mixed_bound(d, k1, k2, l), "several-blocks-complex", {"1 <= l <= k1+k2"});
      });
  add("boxes-complex", "exact b of generic complex polynomials with box supports (--dmat rows)", {"dmat"}, {},
      [](const Params& p, O o) {
        const IntMatrix d = param_mat(p, "dmat");
        guard_size(static_cast<std::int64_t>(d.cols()), "k", o);
        require(d.rows() >= 1 && d.rows() <= d.cols(), "1 <= l <= k");
        return exact(betti_boxes_generic(d), "boxes-complex", {"generic coefficients", "1 <= l <= k"}, "column-subset sum");
      });
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& bound_registry() {
  static const std::vector<RegistryEntry> table = build();
  return table;
}

const RegistryEntry& find_bound(const std::string& id) {
  for (const auto& e : bound_registry())
    if (e.id == id) return e;
  std::string known;
  for (const auto& e : bound_registry()) known += (known.empty() ? "" : ", ") + e.id;
  throw UnknownIdError("unknown bound id '" + id + "'; known ids: " + known);
}

std::vector<std::string> bound_ids() {
  std::vector<std::string> ids;
  for (const auto& e : bound_registry()) ids.push_back(e.id);
  return ids;
}

BoundResult evaluate_bound(const std::string& id, const Params& p, const EvalOptions& opts, bool strict) {
  const RegistryEntry& e = find_bound(id);
  if (strict) {
    std::set<std::string> known(e.required.begin(), e.required.end());
    known.insert(e.optional.begin(), e.optional.end());
    for (const auto& [name, value] : p)
      if (!known.count(name)) throw ShapeError("parameter --" + name + " is not used by " + id);
  }
  for (const auto& name : e.required)
    if (!p.count(name)) throw ShapeError(id + " needs parameter --" + name);
  return e.eval(p, opts);
}

std::int64_t param_int(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw ShapeError("missing parameter --" + name);
  return parse_int(it->second, "--" + name);
}

std::optional<std::int64_t> param_opt_int(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) return std::nullopt;
  return parse_int(it->second, "--" + name);
}

IntVector parse_int_vector(const std::string& text) {
  IntVector v;
  if (trim(text).empty()) return v;  // e.g. no per-variable degrees when k1 = 0
  for (const auto& part : split(text, ',')) v.push_back(parse_int(part, "list entry"));
  return v;
}

IntMatrix parse_int_matrix(const std::string& text) {
  std::vector<IntVector> rows;
  for (const auto& part : split(text, ';')) {
    if (trim(part).empty()) throw ShapeError("empty matrix row");
    rows.push_back(parse_int_vector(part));
  }
  return IntMatrix::from_rows(rows);
}

IntVector param_vec(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw ShapeError("missing parameter --" + name);
  return parse_int_vector(it->second);
}

IntMatrix param_mat(const Params& p, const std::string& name) {
  auto it = p.find(name);
  if (it == p.end()) throw ShapeError("missing parameter --" + name);
  return parse_int_matrix(it->second);
}

void guard_size(std::int64_t value, const std::string& what, const EvalOptions& opts) {
  if (!opts.allow_large && value > opts.cap)
    throw HypothesisError(what + " = " + std::to_string(value) + " exceeds the enumeration cap " + std::to_string(opts.cap) +
                          " (pass --allow-large to lift it)");
}

}  // namespace betti

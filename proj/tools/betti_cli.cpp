// betti: command-line front end for the bound catalog, the generic
// complex computations and the cross-check suites.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "betti/generic_chi.hpp"
#include "betti/polytope.hpp"
#include "betti/registry.hpp"
#include "betti/report.hpp"
#include "betti/verify.hpp"

using namespace betti;

namespace {

const std::vector<std::string> kScalarParams = {"d", "k", "l", "s", "i", "d1", "d2", "kp", "m", "D", "k1", "k2", "s1", "s2"};
const std::vector<std::string> kOtherParams = {"dvec", "kvec", "dmat", "variant", "interp"};

struct OutputFlags {
  std::string format = "csv";
  std::string out;
  std::string config;
  bool allow_large = false;
};

struct ParamFlags {
  std::map<std::string, std::string> values;
};

void add_param_flags(CLI::App* cmd, ParamFlags& pf) {
  for (const auto& n : kScalarParams) cmd->add_option("--" + n, pf.values[n], "integer, range a..b or alternatives x|y");
  cmd->add_option("--dvec", pf.values["dvec"], "degree vector, e.g. 2,3");
  cmd->add_option("--kvec", pf.values["kvec"], "block sizes, e.g. 1,2");
  cmd->add_option("--dmat", pf.values["dmat"], "degree matrix, rows separated by ';'");
  cmd->add_option("--variant", pf.values["variant"], "safey-el-din: radical|regular");
  cmd->add_option("--interp", pf.values["interp"], "barone-basu reading of d: d2|d1|max");
}

void add_output_flags(CLI::App* cmd, OutputFlags& of) {
  cmd->add_option("--format", of.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", of.out, "write to FILE instead of stdout");
  cmd->add_option("--config", of.config, "JSON file with default parameters");
  cmd->add_flag("--allow-large", of.allow_large, "lift the enumeration cap of 16");
}

// Config defaults first, explicit flags override them.
Params collect(const ParamFlags& pf, const OutputFlags& of) {
  Params p;
  if (!of.config.empty()) {
    std::ifstream in(of.config);
    if (!in) throw ShapeError("cannot read config file " + of.config);
    const auto doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw ShapeError("config file is not a JSON object");
    if (doc.contains("params"))
      for (const auto& [k, v] : doc["params"].items()) p[k] = v.is_string() ? v.get<std::string>() : v.dump();
  }
  for (const auto& [k, v] : pf.values)
    if (!v.empty()) p[k] = v;
  return p;
}

void emit(const Table& t, const OutputFlags& of) {
  const Format f = parse_format(of.format);
  if (of.out.empty()) {
    write_table(std::cout, t, f);
    return;
  }
  std::ofstream file(of.out, std::ios::binary);
  if (!file) throw ShapeError("cannot open " + of.out + " for writing");
  write_table(file, t, f);
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> ids;
  std::stringstream in(s);
  std::string id;
  while (std::getline(in, id, ',')) ids.push_back(id);
  return ids;
}

struct FamilyFlags {
  std::int64_t quadrics = 0;
  std::int64_t simplex_d = 0;
  std::string dvec, multi, dmat, setting = "affine";
  std::int64_t k = 0, l = 1;
};

void add_family_flags(CLI::App* cmd, FamilyFlags& ff) {
  cmd->add_option("--quadrics", ff.quadrics, "number of generic quadrics");
  cmd->add_option("--simplex-d", ff.simplex_d, "common total degree of l polynomials");
  cmd->add_option("--dvec", ff.dvec, "distinct total degrees, one per polynomial");
  cmd->add_option("--multi", ff.multi, "one polynomial with per-variable degrees");
  cmd->add_option("--dmat", ff.dmat, "box supports, one row per polynomial");
  cmd->add_option("--k", ff.k, "ambient dimension");
  cmd->add_option("--l", ff.l, "number of polynomials (with --simplex-d)");
  cmd->add_option("--setting", ff.setting, "affine or projective")->check(CLI::IsMember({"affine", "projective"}));
}

std::pair<GenericSystem, std::string> build_family(const FamilyFlags& ff, const EvalOptions& opts) {
  auto need_k = [&] {
    if (ff.k < 1) throw ShapeError("--k is required and must be >= 1");
    guard_size(ff.k, "k", opts);
    return static_cast<std::size_t>(ff.k);
  };
  if (ff.quadrics > 0) return {GenericSystem::simplices(need_k(), IntVector(static_cast<std::size_t>(ff.quadrics), 2)), "quadrics"};
  if (ff.simplex_d > 0) {
    if (ff.l < 1) throw HypothesisError("hypothesis violated: l >= 1");
    return {GenericSystem::simplices(need_k(), IntVector(static_cast<std::size_t>(ff.l), ff.simplex_d)), "simplex"};
  }
  if (!ff.dvec.empty()) return {GenericSystem::simplices(need_k(), parse_int_vector(ff.dvec)), "simplex"};
  if (!ff.multi.empty()) {
    const IntVector d = parse_int_vector(ff.multi);
    guard_size(static_cast<std::int64_t>(d.size()), "k", opts);
    return {GenericSystem::boxes(IntMatrix::from_rows({d})), "multi"};
  }
  if (!ff.dmat.empty()) {
    const IntMatrix d = parse_int_matrix(ff.dmat);
    guard_size(static_cast<std::int64_t>(d.cols()), "k", opts);
    return {GenericSystem::boxes(d), "boxes"};
  }
  throw ShapeError("choose a family: --quadrics, --simplex-d, --dvec, --multi or --dmat");
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Betti number bounds for real varieties and semi-algebraic sets"};
  app.require_subcommand(1);

  OutputFlags of;
  ParamFlags bp;
  std::string id;
  bool list = false;
  auto* bound = app.add_subcommand("bound", "evaluate one catalog entry, optionally over a grid");
  bound->add_option("--id", id, "bound id");
  bound->add_flag("--list", list, "list bound ids with their parameters");
  add_param_flags(bound, bp);
  add_output_flags(bound, of);

  ParamFlags cp;
  std::string ids;
  auto* compare = app.add_subcommand("compare", "tabulate several bounds over one grid");
  compare->add_option("--ids", ids, "comma-separated bound ids")->required();
  add_param_flags(compare, cp);
  add_output_flags(compare, of);

  FamilyFlags gf;
  auto* generic = app.add_subcommand("generic", "exact chi and Betti sum of a generic complex complete intersection");
  add_family_flags(generic, gf);
  add_output_flags(generic, of);

  FamilyFlags xf;
  auto* chi = app.add_subcommand("chi", "Euler characteristic by the coordinate-face sum");
  add_family_flags(chi, xf);
  add_output_flags(chi, of);

  std::string mv_dmat, mv_simplex, mv_alpha;
  bool mv_oracle = false;
  auto* mixedvol = app.add_subcommand("mixedvol", "mixed volume of boxes or full simplices");
  mixedvol->add_option("--dmat", mv_dmat, "box side vectors, one row per body");
  mixedvol->add_option("--simplex-sides", mv_simplex, "full simplex sides, one per body");
  mixedvol->add_option("--alpha", mv_alpha, "multiplicities, one per body")->required();
  mixedvol->add_flag("--oracle", mv_oracle, "also evaluate by finite differences");
  add_output_flags(mixedvol, of);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run the cross-check suites");
  verify->add_option("--suite", suite, "khovanskii-closed-forms, mv-oracles, identities, chern or all");

  std::int64_t from = 1, to = 20;
  auto* asymptotic = app.add_subcommand("asymptotic", "leading coefficients in d^k against the Basu-Lerario-Rizzie bound");
  asymptotic->add_option("--from", from, "first l");
  asymptotic->add_option("--to", to, "last l");
  add_output_flags(asymptotic, of);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const EvalOptions opts{of.allow_large};

  if (*bound) {
    if (list) {
      for (const auto& e : bound_registry()) {
        std::string flags;
        for (const auto& r : e.required) flags += (flags.empty() ? "--" : " --") + r;
        for (const auto& o : e.optional) flags += (flags.empty() ? "(--" : " (--") + o + ")";
        std::cout << e.id << "  [" << flags << "]  " << e.summary << "\n";
      }
      return 0;
    }
    if (id.empty()) throw UnknownIdError("--id is required; run 'betti bound --list'");
    emit(bound_table(id, collect(bp, of), opts), of);
  } else if (*compare) {
    emit(compare_table(split_ids(ids), collect(cp, of), opts), of);
  } else if (*generic) {
    auto [sys, family] = build_family(gf, opts);
    const Setting setting = gf.setting == "projective" ? Setting::Projective : Setting::Affine;
    const ChiReport r = betti_generic(sys, setting);
    Table t{"generic", {"family", "k", "l", "setting", "chi", "b", "kind", "conversion"}, {}};
    t.rows.push_back({family, std::to_string(r.k), std::to_string(r.ell), to_string(r.setting), to_string(r.chi), to_string(r.betti_sum),
                      to_string(r.kind), r.conversion});
    emit(t, of);
  } else if (*chi) {
    auto [sys, family] = build_family(xf, opts);
    Table t{"chi", {"family", "k", "l", "chi", "face_classes"}, {}};
    t.rows.push_back({family, std::to_string(sys.k), std::to_string(sys.ell()), to_string(chi_khovanskii(sys)),
                      std::to_string(khovanskii_face_classes(sys))});
    emit(t, of);
  } else if (*mixedvol) {
    const IntVector alpha = parse_int_vector(mv_alpha);
    MixedVolumeQuery q;
    if (!mv_dmat.empty()) {
      const IntMatrix d = parse_int_matrix(mv_dmat);
      guard_size(static_cast<std::int64_t>(d.cols()), "k", opts);
      q = box_query(d, alpha);
    } else if (!mv_simplex.empty()) {
      const IntVector sides = parse_int_vector(mv_simplex);
      if (sides.size() != alpha.size()) throw ShapeError("--simplex-sides and --alpha differ in length");
      std::int64_t k = 0;
      for (auto a : alpha) k += a;
      guard_size(k, "k", opts);
      for (std::size_t b = 0; b < sides.size(); ++b)
        q.bodies.push_back({Polytope::simplex(sides[b], range_vars(static_cast<std::size_t>(k))), alpha[b]});
    } else {
      throw ShapeError("give --dmat or --simplex-sides");
    }
    const auto r = mixed_volume_detailed(q);
    Table t{"mixedvol", {"mixed_volume", "strategy"}, {{to_string(r.value), to_string(r.strategy)}}};
    if (mv_oracle) {
      t.columns.push_back("oracle");
      t.rows[0].push_back(to_string(mixed_volume_oracle_interpolation(q)));
    }
    emit(t, of);
  } else if (*verify) {
    bool ok = true;
    for (const auto& r : run_suites(suite)) {
      std::cout << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks << " checks)\n";
      for (const auto& f : r.failures) std::cout << "  counterexample: " << f << "\n";
      ok = ok && r.passed();
    }
    return ok ? 0 : 1;
  } else if (*asymptotic) {
    emit(asymptotic_table(from, to), of);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UnknownIdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

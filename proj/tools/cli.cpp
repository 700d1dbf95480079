#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <iostream>
#include <string>

#include "trilie/io.hpp"
#include "trilie/search.hpp"

using namespace trilie;
using ojson = nlohmann::ordered_json;

namespace {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

struct Options {
  std::string format = "text";
  std::size_t max_witnesses = kDefaultMaxWitnesses;
};

std::string tuple_names(const std::vector<std::size_t>& indices,
                        const std::vector<std::string>& basis) {
  std::string s = "(";
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (t) s += ", ";
    s += indices[t] < basis.size() ? basis[indices[t]] : std::to_string(indices[t] + 1);
  }
  return s + ")";
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "fail";
    default: return "n/a";
  }
}

ojson report_to_json(const Report& r) {
  ojson out;
  out["subject"] = r.subject;
  out["ok"] = r.ok();
  ojson items = ojson::array();
  for (const CheckItem& item : r.items) {
    ojson it;
    it["identity"] = item.identity;
    it["status"] = status_name(item.status);
    it["violations"] = item.violation_count;
    if (!item.note.empty()) it["note"] = item.note;
    ojson ws = ojson::array();
    for (const Violation& v : item.witnesses) {
      ojson w;
      w["indices"] = v.indices;
      w["lhs"] = v.lhs;
      w["rhs"] = v.rhs;
      ws.push_back(std::move(w));
    }
    it["witnesses"] = std::move(ws);
    items.push_back(std::move(it));
  }
  out["items"] = std::move(items);
  return out;
}

void print_report(const Report& r, const Options& opt, const std::vector<std::string>& basis) {
  if (opt.format == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
    return;
  }
  std::cout << r.subject << ": " << (r.ok() ? "pass" : "FAIL") << "\n";
  for (const CheckItem& item : r.items) {
    std::cout << "  " << item.identity << ": " << status_name(item.status);
    if (item.status == CheckStatus::failed) std::cout << " (" << item.violation_count << " violations)";
    if (!item.note.empty()) std::cout << " [" << item.note << "]";
    std::cout << "\n";
    for (const Violation& v : item.witnesses)
      std::cout << "    at " << tuple_names(v.indices, basis) << ": " << v.lhs
                << " != " << v.rhs << "\n";
  }
}

std::string product_flags_line(const ProductClass& pc) {
  if (!pc.square_is_identity) return "excluded: E^2 != Id";
  if (pc.is_plus_minus_identity) return "excluded: E = +-Id";
  std::string s;
  auto add = [&s](bool flag, const char* name) {
    if (flag) s += std::string(s.empty() ? "" : " ") + name;
  };
  add(pc.almost, "almost");
  add(pc.product, "product");
  add(pc.strict, "strict");
  add(pc.abelian, "abelian");
  add(pc.strong_abelian, "strong_abelian");
  add(pc.perfect, "perfect");
  add(pc.paracomplex, "paracomplex");
  return s.empty() ? "none" : s;
}

std::string complex_flags_line(const ComplexClass& cc) {
  if (!cc.square_is_minus_identity) return "excluded: J^2 != -Id";
  std::string s;
  auto add = [&s](bool flag, const char* name) {
    if (flag) s += std::string(s.empty() ? "" : " ") + name;
  };
  add(cc.almost, "almost");
  add(cc.complex_structure, "complex");
  add(cc.strict, "strict");
  add(cc.abelian, "abelian");
  add(cc.strong_abelian, "strong_abelian");
  add(cc.perfect, "perfect");
  return s.empty() ? "none" : s;
}

ojson product_class_json(const ProductClass& pc) {
  ojson j;
  j["square_is_identity"] = pc.square_is_identity;
  j["is_plus_minus_identity"] = pc.is_plus_minus_identity;
  j["almost"] = pc.almost;
  j["product"] = pc.product;
  j["strict"] = pc.strict;
  j["abelian"] = pc.abelian;
  j["strong_abelian"] = pc.strong_abelian;
  j["perfect"] = pc.perfect;
  j["paracomplex"] = pc.paracomplex;
  j["dim_plus"] = pc.plus.dim();
  j["dim_minus"] = pc.minus.dim();
  return j;
}

ojson complex_class_json(const ComplexClass& cc) {
  ojson j;
  j["square_is_minus_identity"] = cc.square_is_minus_identity;
  j["almost"] = cc.almost;
  j["complex"] = cc.complex_structure;
  j["strict"] = cc.strict;
  j["abelian"] = cc.abelian;
  j["strong_abelian"] = cc.strong_abelian;
  j["perfect"] = cc.perfect;
  j["dim_eig_i"] = cc.eig_i.dim();
  j["dim_eig_minus_i"] = cc.eig_minus_i.dim();
  return j;
}

const ThreeLieAlgebra& as_threelie(const ParsedAlgebra& pa, const std::string& path) {
  if (!std::holds_alternative<ThreeLieAlgebra>(pa))
    throw ParseError(path + ": expected a 3-Lie algebra file (kind: threelie)");
  return std::get<ThreeLieAlgebra>(pa);
}

const ThreePreLie& as_prelie(const ParsedAlgebra& pa, const std::string& path) {
  if (!std::holds_alternative<ThreePreLie>(pa))
    throw ParseError(path + ": expected a 3-pre-Lie algebra file (kind: prelie)");
  return std::get<ThreePreLie>(pa);
}

void require_dim(std::size_t got, std::size_t want, const std::string& what) {
  if (got != want)
    throw ParseError(what + ": dimension " + std::to_string(got) + " does not match the algebra (" +
                     std::to_string(want) + ")");
}

int cmd_validate(const std::string& algebra_path, const Options& opt) {
  ParsedAlgebra pa = read_algebra_file(algebra_path);
  if (std::holds_alternative<ThreeLieAlgebra>(pa)) {
    const auto& g = std::get<ThreeLieAlgebra>(pa);
    Report r = check_fundamental_identity(g, opt.max_witnesses);
    print_report(r, opt, g.basis());
    return r.ok() ? exit_pass : exit_fail;
  }
  const auto& a = std::get<ThreePreLie>(pa);
  Report r = check_prelie_axioms(a, opt.max_witnesses);
  print_report(r, opt, a.basis());
  return r.ok() ? exit_pass : exit_fail;
}

int cmd_classify(const std::string& kind, const std::string& algebra_path,
                 const std::string& map_path, const Options& opt) {
  ParsedAlgebra pa = read_algebra_file(algebra_path);
  const ThreeLieAlgebra& g = as_threelie(pa, algebra_path);
  Matrix m = read_map_file(map_path);
  require_dim(m.rows(), g.dim(), map_path);

  if (kind == "product") {
    ProductClass pc = classify_product(g, m);
    if (opt.format == "json")
      std::cout << product_class_json(pc).dump(2) << "\n";
    else
      std::cout << product_flags_line(pc) << "\n"
                << "dim g+ = " << pc.plus.dim() << ", dim g- = " << pc.minus.dim() << "\n";
    return exit_pass;
  }
  if (kind == "complex") {
    ComplexClass cc = classify_complex(g, m);
    if (opt.format == "json")
      std::cout << complex_class_json(cc).dump(2) << "\n";
    else
      std::cout << complex_flags_line(cc) << "\n"
                << "dim g_i = " << cc.eig_i.dim() << ", dim g_-i = " << cc.eig_minus_i.dim()
                << "\n";
    return exit_pass;
  }
  if (kind == "nijenhuis") {
    Report r = check_nijenhuis(g, m, opt.max_witnesses);
    print_report(r, opt, g.basis());
    return r.ok() ? exit_pass : exit_fail;
  }
  throw ParseError("unknown classify kind '" + kind + "'");
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& inputs,
                  const std::string& rep_choice, const std::string& out) {
  auto algebra_out = [&](const std::string& text) {
    write_text_file(out + ".algebra.json", text);
    std::cout << "wrote " << out << ".algebra.json\n";
  };
  if (kind == "phase-space") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    PhaseSpace ps = phase_space(as_prelie(pa, inputs.at(0)));
    algebra_out(algebra_to_json(ps.algebra));
    write_text_file(out + ".form.json", form_to_json(ps.omega));
    std::cout << "wrote " << out << ".form.json\n";
    return exit_pass;
  }
  if (kind == "semidirect") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    Representation rep = adjoint_rep(g);
    if (rep_choice == "dual-adjoint")
      rep = dual_representation(rep);
    else if (rep_choice != "adjoint")
      throw ParseError("--rep must be 'adjoint' or 'dual-adjoint'");
    algebra_out(algebra_to_json(semidirect_product(g, rep)));
    return exit_pass;
  }
  if (kind == "sub-adjacent") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    algebra_out(algebra_to_json(sub_adjacent(as_prelie(pa, inputs.at(0)))));
    return exit_pass;
  }
  if (kind == "levi-civita") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    BilForm s = read_form_file(inputs.at(1));
    require_dim(s.dim(), g.dim(), inputs.at(1));
    LeviCivita lc = levi_civita(g, s);
    // The connection tensor shares the pre-Lie container shape: skew in its
    // first two slots, free third slot.
    ThreePreLie nabla = ThreePreLie::from_dense(lc.nabla, g.field(), g.basis());
    write_text_file(out + ".nabla.json", algebra_to_json(nabla));
    std::cout << "wrote " << out << ".nabla.json\n";
    return exit_pass;
  }
  if (kind == "complexify") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    algebra_out(algebra_to_json(complexify(as_threelie(pa, inputs.at(0))).algebra));
    return exit_pass;
  }
  if (kind == "aff") {
    ParsedAlgebra pa = read_algebra_file(inputs.at(0));
    AffComplexProduct aff = aff_complex_product(as_prelie(pa, inputs.at(0)));
    algebra_out(algebra_to_json(aff.algebra));
    write_text_file(out + ".J.json", map_to_json(aff.j));
    write_text_file(out + ".E.json", map_to_json(aff.e));
    std::cout << "wrote " << out << ".J.json\nwrote " << out << ".E.json\n";
    return exit_pass;
  }
  throw ParseError("unknown construct kind '" + kind + "'");
}

int verdict_result(const std::string& name, bool main_flag, bool perfect_flag,
                   const KaehlerVerdict& v, const Options& opt) {
  if (opt.format == "json") {
    ojson j;
    j["check"] = name;
    j["ok"] = main_flag;
    j["perfect"] = perfect_flag;
    if (v.metric.has_value()) {
      j["metric"] = ojson::parse(form_to_json(*v.metric));
      j["signature"] = ojson::array({v.metric_signature.first, v.metric_signature.second});
    }
    if (name == "pseudo-kahler") j["kaehler"] = v.kaehler;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << name << ": " << (main_flag ? "pass" : "FAIL");
    if (main_flag && perfect_flag) std::cout << " (perfect)";
    if (name == "pseudo-kahler" && v.kaehler) std::cout << " (kaehler)";
    std::cout << "\n";
  }
  return main_flag ? exit_pass : exit_fail;
}

int cmd_check(const std::string& kind, const std::vector<std::string>& inputs,
              const Options& opt) {
  ParsedAlgebra pa = read_algebra_file(inputs.at(0));

  if (kind == "symplectic") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    BilForm w = read_form_file(inputs.at(1));
    require_dim(w.dim(), g.dim(), inputs.at(1));
    Report r = check_symplectic(g, w, opt.max_witnesses);
    print_report(r, opt, g.basis());
    return r.ok() ? exit_pass : exit_fail;
  }
  if (kind == "para-kahler") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    BilForm w = read_form_file(inputs.at(1));
    Matrix e = read_map_file(inputs.at(2));
    require_dim(w.dim(), g.dim(), inputs.at(1));
    require_dim(e.rows(), g.dim(), inputs.at(2));
    KaehlerVerdict v = check_para_kaehler(g, w, e);
    return verdict_result("para-kahler", v.para_kaehler, v.perfect_para_kaehler, v, opt);
  }
  if (kind == "pseudo-kahler") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    BilForm w = read_form_file(inputs.at(1));
    Matrix j = read_map_file(inputs.at(2));
    require_dim(w.dim(), g.dim(), inputs.at(1));
    require_dim(j.rows(), g.dim(), inputs.at(2));
    KaehlerVerdict v = check_pseudo_kaehler(g, w, j);
    return verdict_result("pseudo-kahler", v.pseudo_kaehler, false, v, opt);
  }
  if (kind == "complex-product") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    Matrix j = read_map_file(inputs.at(1));
    Matrix e = read_map_file(inputs.at(2));
    require_dim(j.rows(), g.dim(), inputs.at(1));
    require_dim(e.rows(), g.dim(), inputs.at(2));
    KaehlerVerdict v = check_complex_product(g, j, e);
    return verdict_result("complex-product", v.complex_product, v.perfect_complex_product, v, opt);
  }
  if (kind == "manin-triple") {
    const ThreePreLie& a = as_prelie(pa, inputs.at(0));
    BilForm w = read_form_file(inputs.at(1));
    require_dim(w.dim(), a.dim(), inputs.at(1));
    if (a.dim() % 2 != 0) throw ParseError("manin-triple: algebra dimension must be even");
    Report r = check_manin_triple(a, w, 0, opt.max_witnesses);
    print_report(r, opt, a.basis());
    return r.ok() ? exit_pass : exit_fail;
  }
  if (kind == "phase-space") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    BilForm w = read_form_file(inputs.at(1));
    require_dim(w.dim(), g.dim(), inputs.at(1));
    if (g.dim() % 2 != 0) throw ParseError("phase-space: algebra dimension must be even");
    PhaseSpaceVerdict v = check_phase_space(g, w);
    if (opt.format == "json") {
      ojson j;
      j["check"] = "phase-space";
      j["is_phase_space"] = v.is_phase_space;
      j["perfect"] = v.perfect;
      j["omega_canonical"] = v.omega_canonical;
      j["omega_symplectic"] = v.omega_symplectic;
      j["primal_subalgebra"] = v.primal_subalgebra;
      j["dual_subalgebra"] = v.dual_subalgebra;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "phase-space: " << (v.is_phase_space ? "pass" : "FAIL")
                << (v.is_phase_space && v.perfect ? " (perfect)" : "") << "\n";
    }
    return v.is_phase_space ? exit_pass : exit_fail;
  }
  if (kind == "o-operator") {
    const ThreeLieAlgebra& g = as_threelie(pa, inputs.at(0));
    Matrix t = read_map_file(inputs.at(1));
    require_dim(t.rows(), g.dim(), inputs.at(1));
    Report r = check_O_operator(g, adjoint_rep(g), t, opt.max_witnesses);
    print_report(r, opt, g.basis());
    return r.ok() ? exit_pass : exit_fail;
  }
  if (kind == "invariant-form") {
    const ThreePreLie& a = as_prelie(pa, inputs.at(0));
    BilForm b = read_form_file(inputs.at(1));
    require_dim(b.dim(), a.dim(), inputs.at(1));
    bool ok = check_invariant_form(a, b);
    if (opt.format == "json") {
      ojson j;
      j["check"] = "invariant-form";
      j["ok"] = ok;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "invariant-form: " << (ok ? "pass" : "FAIL") << "\n";
    }
    return ok ? exit_pass : exit_fail;
  }
  throw ParseError("unknown check kind '" + kind + "'");
}

std::string matrix_compact(const Matrix& m) {
  std::string s;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += to_string(m.at(i, j));
    }
  }
  return s;
}

int cmd_search(const std::string& family_name, const std::string& algebra_path,
               const std::string& omega_path, const Options& opt) {
  ParsedAlgebra pa = read_algebra_file(algebra_path);
  const ThreeLieAlgebra& g = as_threelie(pa, algebra_path);
  std::vector<BilForm> omegas;
  if (!omega_path.empty()) {
    BilForm w = read_form_file(omega_path);
    require_dim(w.dim(), g.dim(), omega_path);
    omegas.push_back(std::move(w));
  }

  ojson rows = ojson::array();
  if (family_name == "diagonal") {
    if (g.dim() > kDiagonalFamilyMaxDim)
      throw ParseError("search: dimension exceeds the diagonal family cap of " +
                       std::to_string(kDiagonalFamilyMaxDim));
    CandidateFamily fam{CandidateFamily::Kind::diagonal_signs,
                        CandidateFamily::Constraint::square_is_identity,
                        {}};
    auto results = enumerate_products(g, fam);
    std::vector<Matrix> es;
    for (auto& [e, pc] : results) es.push_back(e);
    PairReport pr = pair_search(g, es, {}, omegas);
    for (std::size_t t = 0; t < results.size(); ++t) {
      const auto& [e, pc] = results[t];
      bool para = false;
      for (auto [oi, ei] : pr.para_kaehler) para = para || ei == t;
      if (opt.format == "json") {
        ojson row = product_class_json(pc);
        row["matrix"] = ojson::parse(map_to_json(e))["matrix"];
        if (!omegas.empty()) row["para_kaehler_with_omega"] = para;
        rows.push_back(std::move(row));
      } else {
        std::cout << "[" << matrix_compact(e) << "] -> " << product_flags_line(pc);
        if (!omegas.empty() && para) std::cout << " | para-kahler with omega";
        std::cout << "\n";
      }
    }
  } else if (family_name == "signed-permutations") {
    if (g.dim() > kSignedPermutationFamilyMaxDim)
      throw ParseError("search: dimension exceeds the signed-permutation family cap of " +
                       std::to_string(kSignedPermutationFamilyMaxDim));
    if (g.dim() % 2 != 0) throw ParseError("search: signed-permutation family needs even dimension");
    CandidateFamily fam{CandidateFamily::Kind::signed_permutations,
                        CandidateFamily::Constraint::square_is_minus_identity,
                        {}};
    auto results = enumerate_complex(g, fam);
    std::vector<Matrix> js;
    for (auto& [j, cc] : results) js.push_back(j);
    PairReport pr = pair_search(g, {}, js, omegas);
    for (std::size_t t = 0; t < results.size(); ++t) {
      const auto& [j, cc] = results[t];
      bool pk = false;
      for (auto [oi, ji] : pr.pseudo_kaehler) pk = pk || ji == t;
      if (opt.format == "json") {
        ojson row = complex_class_json(cc);
        row["matrix"] = ojson::parse(map_to_json(j))["matrix"];
        if (!omegas.empty()) row["pseudo_kaehler_with_omega"] = pk;
        rows.push_back(std::move(row));
      } else {
        std::cout << "[" << matrix_compact(j) << "] -> " << complex_flags_line(cc);
        if (!omegas.empty() && pk) std::cout << " | pseudo-kahler with omega";
        std::cout << "\n";
      }
    }
  } else {
    throw ParseError("unknown search family '" + family_name + "'");
  }
  if (opt.format == "json") std::cout << rows.dump(2) << "\n";
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trilie: exact verification and construction of structures on 3-Lie algebras"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-witnesses", opt.max_witnesses, "Violation witnesses kept per identity");

  std::function<int()> action;

  auto* validate = app.add_subcommand("validate", "Check the defining identities of an algebra file");
  auto val_path = std::make_shared<std::string>();
  validate->add_option("algebra", *val_path, "AlgebraFile (threelie or prelie)")->required();
  validate->callback([&action, val_path, &opt] {
    action = [val_path, &opt] { return cmd_validate(*val_path, opt); };
  });

  auto* classify = app.add_subcommand("classify", "Classify a linear map against the taxonomy");
  auto cls_args = std::make_shared<std::vector<std::string>>(3);
  classify->add_option("kind", (*cls_args)[0], "product | complex | nijenhuis")
      ->required()
      ->check(CLI::IsMember({"product", "complex", "nijenhuis"}));
  classify->add_option("algebra", (*cls_args)[1], "AlgebraFile")->required();
  classify->add_option("map", (*cls_args)[2], "MapFile")->required();
  classify->callback([&action, cls_args, &opt] {
    action = [cls_args, &opt] {
      return cmd_classify((*cls_args)[0], (*cls_args)[1], (*cls_args)[2], opt);
    };
  });

  auto* construct = app.add_subcommand("construct", "Run a constructor and write its output files");
  auto con_kind = std::make_shared<std::string>();
  auto con_inputs = std::make_shared<std::vector<std::string>>();
  auto con_rep = std::make_shared<std::string>("adjoint");
  auto con_out = std::make_shared<std::string>();
  construct->add_option("kind", *con_kind,
                        "phase-space | semidirect | sub-adjacent | levi-civita | complexify | aff")
      ->required()
      ->check(CLI::IsMember(
          {"phase-space", "semidirect", "sub-adjacent", "levi-civita", "complexify", "aff"}));
  construct->add_option("inputs", *con_inputs, "Input files for the constructor")->required();
  construct->add_option("--rep", *con_rep, "Representation for semidirect (adjoint | dual-adjoint)");
  construct->add_option("-o,--output", *con_out, "Output path stem")->required();
  construct->callback([&action, con_kind, con_inputs, con_rep, con_out] {
    action = [con_kind, con_inputs, con_rep, con_out] {
      return cmd_construct(*con_kind, *con_inputs, *con_rep, *con_out);
    };
  });

  auto* check = app.add_subcommand("check", "Check a paired structure");
  auto chk_kind = std::make_shared<std::string>();
  auto chk_inputs = std::make_shared<std::vector<std::string>>();
  check->add_option("kind", *chk_kind,
                    "symplectic | para-kahler | pseudo-kahler | complex-product | manin-triple | "
                    "phase-space | o-operator | invariant-form")
      ->required()
      ->check(CLI::IsMember({"symplectic", "para-kahler", "pseudo-kahler", "complex-product",
                             "manin-triple", "phase-space", "o-operator", "invariant-form"}));
  check->add_option("inputs", *chk_inputs, "Input files for the check")->required();
  check->callback([&action, chk_kind, chk_inputs, &opt] {
    action = [chk_kind, chk_inputs, &opt] { return cmd_check(*chk_kind, *chk_inputs, opt); };
  });

  auto* search = app.add_subcommand("search", "Enumerate and classify candidate structures");
  auto srch_family = std::make_shared<std::string>();
  auto srch_algebra = std::make_shared<std::string>();
  auto srch_omega = std::make_shared<std::string>();
  search->add_option("family", *srch_family, "diagonal | signed-permutations")
      ->required()
      ->check(CLI::IsMember({"diagonal", "signed-permutations"}));
  search->add_option("algebra", *srch_algebra, "AlgebraFile")->required();
  search->add_option("--omega", *srch_omega, "Optional FormFile for pairing checks");
  search->callback([&action, srch_family, srch_algebra, srch_omega, &opt] {
    action = [srch_family, srch_algebra, srch_omega, &opt] {
      return cmd_search(*srch_family, *srch_algebra, *srch_omega, opt);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::out_of_range&) {
    std::cerr << "error: missing input file arguments for this command\n";
    return exit_usage;
  } catch (const std::exception& e) {
    // Library precondition failures: the inputs parsed but the requested
    // construction or check rejected them.
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trilie/io.hpp"
#include "trilie/search.hpp"

namespace py = pybind11;
using namespace trilie;

namespace {

// Coefficients cross the boundary as exact strings ("p/q", "a+bi/c").
Vec vec_from_py(const std::vector<std::string>& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = parse_scalar(v[i]);
  return out;
}

std::vector<std::string> vec_to_py(const Vec& v) {
  std::vector<std::string> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_string(v[i]);
  return out;
}

Matrix matrix_from_py(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw py::value_error("ragged matrix rows");
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = parse_scalar(rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::string>> matrix_to_py(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = to_string(m.at(i, j));
  }
  return rows;
}

FormKind form_kind(const std::string& s) {
  if (s == "skew") return FormKind::skew;
  if (s == "symmetric") return FormKind::symmetric;
  throw py::value_error("form kind must be 'skew' or 'symmetric'");
}

std::vector<CanonicalEntry> entries_from_py(
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                 std::vector<std::pair<std::size_t, std::string>>>>& products,
    std::size_t dim) {
  std::vector<CanonicalEntry> entries;
  for (const auto& [i, j, k, value] : products) {
    CanonicalEntry e{i, j, k, Vec(dim)};
    for (const auto& [idx, coeff] : value) {
      if (idx >= dim) throw py::value_error("coefficient index out of range");
      e.value[idx] += parse_scalar(coeff);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "pass";
    case CheckStatus::failed: return "fail";
    default: return "n/a";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact verification and construction of structures on 3-Lie algebras";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Violation>(m, "Violation")
      .def_readonly("indices", &Violation::indices)
      .def_readonly("lhs", &Violation::lhs)
      .def_readonly("rhs", &Violation::rhs);

  py::class_<CheckItem>(m, "CheckItem")
      .def_readonly("identity", &CheckItem::identity)
      .def_property_readonly("status", [](const CheckItem& c) { return status_str(c.status); })
      .def_readonly("violations", &CheckItem::violation_count)
      .def_readonly("witnesses", &CheckItem::witnesses)
      .def_readonly("note", &CheckItem::note);

  py::class_<Report>(m, "Report")
      .def_readonly("subject", &Report::subject)
      .def_readonly("items", &Report::items)
      .def("ok", &Report::ok)
      .def("summary", &Report::summary)
      .def("__repr__",
           [](const Report& r) {
             return "<Report " + r.subject + ": " + (r.ok() ? "pass" : "FAIL") + ">";
           });

  py::class_<Matrix>(m, "Matrix")
      .def(py::init([](const std::vector<std::vector<std::string>>& rows) {
        return matrix_from_py(rows);
      }))
      .def_static("identity", &Matrix::identity)
      .def_static("zero", &Matrix::zero)
      .def_property_readonly("rows", &Matrix::rows)
      .def_property_readonly("cols", &Matrix::cols)
      .def("to_lists", &matrix_to_py)
      .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
      .def("__neg__", [](const Matrix& a) { return -a; })
      .def("__mul__", [](const Matrix& a, const Matrix& b) { return a * b; })
      .def("__repr__", [](const Matrix& a) { return "<Matrix " + matrix_brief(a) + ">"; });

  py::class_<BilForm>(m, "BilForm")
      .def(py::init([](const std::vector<std::vector<std::string>>& rows, const std::string& kind) {
        return BilForm(matrix_from_py(rows), form_kind(kind));
      }))
      .def_property_readonly("matrix", [](const BilForm& b) { return matrix_to_py(b.m); })
      .def_property_readonly(
          "kind", [](const BilForm& b) { return b.kind == FormKind::skew ? "skew" : "symmetric"; })
      .def("nondegenerate", &BilForm::nondegenerate);
  m.def("canonical_phase_form", &canonical_phase_form);

  py::class_<Subspace>(m, "Subspace")
      .def_property_readonly("ambient", &Subspace::ambient)
      .def_property_readonly("dim", &Subspace::dim)
      .def_property_readonly("basis",
                             [](const Subspace& w) {
                               std::vector<std::vector<std::string>> out;
                               for (const Vec& v : w.basis()) out.push_back(vec_to_py(v));
                               return out;
                             })
      .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; });

  py::class_<ThreeLieAlgebra>(m, "ThreeLieAlgebra")
      .def_static(
          "create",
          [](std::size_t dim, const std::string& field,
             const std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                          std::vector<std::pair<std::size_t, std::string>>>>&
                 products,
             const std::vector<std::string>& basis) {
            return ThreeLieAlgebra::from_canonical(dim, parse_field(field),
                                                   entries_from_py(products, dim), basis);
          },
          py::arg("dim"), py::arg("field"), py::arg("products"),
          py::arg("basis") = std::vector<std::string>{})
      .def_static("abelian",
                  [](std::size_t dim) { return ThreeLieAlgebra::abelian(dim); })
      .def_property_readonly("dim", &ThreeLieAlgebra::dim)
      .def_property_readonly("field",
                             [](const ThreeLieAlgebra& g) { return field_name(g.field()); })
      .def_property_readonly("basis", &ThreeLieAlgebra::basis)
      .def("bracket",
           [](const ThreeLieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
             return vec_to_py(g.bracket(i, j, k));
           })
      .def("bracket_vectors",
           [](const ThreeLieAlgebra& g, const std::vector<std::string>& x,
              const std::vector<std::string>& y, const std::vector<std::string>& z) {
             return vec_to_py(g.bracket(vec_from_py(x), vec_from_py(y), vec_from_py(z)));
           })
      .def("to_json", [](const ThreeLieAlgebra& g) { return algebra_to_json(g); })
      .def("__eq__", [](const ThreeLieAlgebra& a, const ThreeLieAlgebra& b) { return a == b; })
      .def("__repr__", [](const ThreeLieAlgebra& g) {
        return "<ThreeLieAlgebra dim=" + std::to_string(g.dim()) + ">";
      });

  py::class_<ThreePreLie>(m, "ThreePreLie")
      .def_static(
          "create",
          [](std::size_t dim, const std::string& field,
             const std::vector<std::tuple<std::size_t, std::size_t, std::size_t,
                                          std::vector<std::pair<std::size_t, std::string>>>>&
                 products,
             const std::vector<std::string>& basis) {
            return ThreePreLie::from_canonical(dim, parse_field(field),
                                               entries_from_py(products, dim), basis);
          },
          py::arg("dim"), py::arg("field"), py::arg("products"),
          py::arg("basis") = std::vector<std::string>{})
      .def_static("abelian", [](std::size_t dim) { return ThreePreLie::abelian(dim); })
      .def_property_readonly("dim", &ThreePreLie::dim)
      .def_property_readonly("field", [](const ThreePreLie& a) { return field_name(a.field()); })
      .def_property_readonly("basis", &ThreePreLie::basis)
      .def("product",
           [](const ThreePreLie& a, std::size_t i, std::size_t j, std::size_t k) {
             return vec_to_py(a.product(i, j, k));
           })
      .def("to_json", [](const ThreePreLie& a) { return algebra_to_json(a); })
      .def("__eq__", [](const ThreePreLie& a, const ThreePreLie& b) { return a == b; })
      .def("__repr__", [](const ThreePreLie& a) {
        return "<ThreePreLie dim=" + std::to_string(a.dim()) + ">";
      });

  m.def("algebra_from_json", [](const std::string& text) -> py::object {
    ParsedAlgebra pa = algebra_from_json(text);
    if (std::holds_alternative<ThreeLieAlgebra>(pa))
      return py::cast(std::get<ThreeLieAlgebra>(pa));
    return py::cast(std::get<ThreePreLie>(pa));
  });
  m.def("map_from_json", [](const std::string& text) { return map_from_json(text); });
  m.def("map_to_json", &map_to_json);
  m.def("form_from_json", [](const std::string& text) { return form_from_json(text); });
  m.def("form_to_json", &form_to_json);

  // threelie operations
  m.def("check_fundamental_identity", &check_fundamental_identity, py::arg("g"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("check_nijenhuis", &check_nijenhuis, py::arg("g"), py::arg("n"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("is_subalgebra", &is_subalgebra);
  m.def("is_abelian_on", &is_abelian_on);
  m.def("direct_sum", &direct_sum);
  m.def("span", [](std::size_t ambient, const std::vector<std::vector<std::string>>& vectors) {
    std::vector<Vec> vs;
    for (const auto& v : vectors) vs.push_back(vec_from_py(v));
    return Subspace::span(ambient, vs);
  });

  // representations
  py::class_<Representation>(m, "Representation")
      .def(py::init([](const ThreeLieAlgebra& g, std::size_t vdim,
                       const std::vector<std::vector<std::vector<std::string>>>& maps) {
        std::vector<Matrix> ms;
        for (const auto& rows : maps) ms.push_back(matrix_from_py(rows));
        return Representation(g, vdim, std::move(ms));
      }))
      .def_property_readonly("vdim", &Representation::vdim)
      .def("rho", [](const Representation& r, std::size_t i, std::size_t j) {
        return r.rho(i, j);
      });
  m.def("adjoint_rep", &adjoint_rep);
  m.def("check_representation", &check_representation, py::arg("r"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("dual_representation", &dual_representation);
  m.def("semidirect_product", &semidirect_product);

  // pre-Lie operations
  py::class_<PreLieRep>(m, "PreLieRep")
      .def_property_readonly("vdim", &PreLieRep::vdim)
      .def("rho",
           [](const PreLieRep& pr, std::size_t i, std::size_t j) { return pr.rho(i, j); })
      .def("mu", [](const PreLieRep& pr, std::size_t i, std::size_t j) { return pr.mu(i, j); });
  m.def("check_prelie_axioms", &check_prelie_axioms, py::arg("a"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("sub_adjacent", &sub_adjacent);
  m.def("left_mult", &left_mult);
  m.def("right_mult", &right_mult);
  m.def("regular_rep", &regular_rep);
  m.def("check_prelie_representation", &check_prelie_representation, py::arg("pr"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("semidirect_prelie", &semidirect_prelie);
  m.def("combined_rep", &combined_rep);
  m.def("dual_prelie_rep", &dual_prelie_rep);
  m.def("check_O_operator", &check_O_operator, py::arg("g"), py::arg("r"), py::arg("t"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("compatible_prelie_from_O", &compatible_prelie_from_O);
  m.def("check_invariant_form", &check_invariant_form);
  m.def("invariant_form_space", &invariant_form_space);

  // symplectic operations
  py::class_<PhaseSpace>(m, "PhaseSpace")
      .def_readonly("algebra", &PhaseSpace::algebra)
      .def_readonly("omega", &PhaseSpace::omega)
      .def_readonly("half", &PhaseSpace::half);
  py::class_<PhaseSpaceVerdict>(m, "PhaseSpaceVerdict")
      .def_readonly("is_phase_space", &PhaseSpaceVerdict::is_phase_space)
      .def_readonly("perfect", &PhaseSpaceVerdict::perfect)
      .def_readonly("omega_canonical", &PhaseSpaceVerdict::omega_canonical)
      .def_readonly("omega_symplectic", &PhaseSpaceVerdict::omega_symplectic)
      .def_readonly("primal_subalgebra", &PhaseSpaceVerdict::primal_subalgebra)
      .def_readonly("dual_subalgebra", &PhaseSpaceVerdict::dual_subalgebra);
  py::class_<ManinAssembly>(m, "ManinAssembly")
      .def_readonly("algebra", &ManinAssembly::algebra)
      .def_readonly("prelie_axioms_pass", &ManinAssembly::prelie_axioms_pass)
      .def_readonly("subadjacent_matches", &ManinAssembly::subadjacent_matches);
  m.def("check_symplectic", &check_symplectic, py::arg("g"), py::arg("omega"),
        py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("prelie_from_symplectic", &prelie_from_symplectic);
  m.def("check_quadratic_prelie", &check_quadratic_prelie);
  m.def("phase_space", &phase_space);
  m.def("check_phase_space", &check_phase_space, py::arg("g"), py::arg("omega"),
        py::arg("half") = 0);
  m.def("check_manin_triple", &check_manin_triple, py::arg("script_a"), py::arg("omega"),
        py::arg("half") = 0, py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("manin_mixed_products", &manin_mixed_products);

  // product / complex structures
  py::class_<DecompositionFacts>(m, "DecompositionFacts")
      .def_readonly("plus_subalgebra", &DecompositionFacts::plus_subalgebra)
      .def_readonly("minus_subalgebra", &DecompositionFacts::minus_subalgebra)
      .def_readonly("plus_abelian", &DecompositionFacts::plus_abelian)
      .def_readonly("minus_abelian", &DecompositionFacts::minus_abelian)
      .def_readonly("mixed_ppm_zero", &DecompositionFacts::mixed_ppm_zero)
      .def_readonly("mixed_mmp_zero", &DecompositionFacts::mixed_mmp_zero)
      .def_readonly("mixed_ppm_in_plus", &DecompositionFacts::mixed_ppm_in_plus)
      .def_readonly("mixed_ppm_in_minus", &DecompositionFacts::mixed_ppm_in_minus)
      .def_readonly("mixed_mmp_in_plus", &DecompositionFacts::mixed_mmp_in_plus)
      .def_readonly("mixed_mmp_in_minus", &DecompositionFacts::mixed_mmp_in_minus);
  py::class_<ProductClass>(m, "ProductClass")
      .def_readonly("square_is_identity", &ProductClass::square_is_identity)
      .def_readonly("is_plus_minus_identity", &ProductClass::is_plus_minus_identity)
      .def_readonly("almost", &ProductClass::almost)
      .def_readonly("product", &ProductClass::product)
      .def_readonly("strict", &ProductClass::strict)
      .def_readonly("abelian", &ProductClass::abelian)
      .def_readonly("strong_abelian", &ProductClass::strong_abelian)
      .def_readonly("perfect", &ProductClass::perfect)
      .def_readonly("paracomplex", &ProductClass::paracomplex)
      .def_readonly("plus", &ProductClass::plus)
      .def_readonly("minus", &ProductClass::minus)
      .def_readonly("induced_prelie", &ProductClass::induced_prelie)
      .def_readonly("facts", &ProductClass::facts);
  py::class_<ComplexClass>(m, "ComplexClass")
      .def_readonly("square_is_minus_identity", &ComplexClass::square_is_minus_identity)
      .def_readonly("almost", &ComplexClass::almost)
      .def_readonly("complex_structure", &ComplexClass::complex_structure)
      .def_readonly("strict", &ComplexClass::strict)
      .def_readonly("abelian", &ComplexClass::abelian)
      .def_readonly("strong_abelian", &ComplexClass::strong_abelian)
      .def_readonly("perfect", &ComplexClass::perfect)
      .def_readonly("eig_i", &ComplexClass::eig_i)
      .def_readonly("eig_minus_i", &ComplexClass::eig_minus_i)
      .def_readonly("induced_prelie", &ComplexClass::induced_prelie)
      .def_readonly("facts", &ComplexClass::facts);
  py::class_<Complexified>(m, "Complexified")
      .def_readonly("algebra", &Complexified::algebra)
      .def_readonly("origin", &Complexified::origin);
  m.def("classify_product", &classify_product);
  m.def("product_from_decomposition", &product_from_decomposition);
  m.def("complexify", &complexify);
  m.def("classify_complex", &classify_complex);
  m.def("j_bracket", &j_bracket);
  m.def("complex_from_subalgebra", &complex_from_subalgebra);
  m.def("product_complex_duality",
        [](const ThreeLieAlgebra& g, const Matrix& mat, const std::string& mode) {
          if (mode == "product_to_complex")
            return product_complex_duality(g, mat, DualityMode::product_to_complex);
          if (mode == "complex_to_product")
            return product_complex_duality(g, mat, DualityMode::complex_to_product);
          throw py::value_error("mode must be 'product_to_complex' or 'complex_to_product'");
        });

  // Kaehler-family operations
  py::class_<LeviCivita>(m, "LeviCivita")
      .def("eval",
           [](const LeviCivita& lc, const std::vector<std::string>& x,
              const std::vector<std::string>& y, const std::vector<std::string>& z) {
             return vec_to_py(lc.eval(vec_from_py(x), vec_from_py(y), vec_from_py(z)));
           })
      .def("value", [](const LeviCivita& lc, std::size_t i, std::size_t j, std::size_t k) {
        return vec_to_py(lc.nabla.value(i, j, k));
      });
  py::class_<KaehlerVerdict>(m, "KaehlerVerdict")
      .def_readonly("complex_product", &KaehlerVerdict::complex_product)
      .def_readonly("perfect_complex_product", &KaehlerVerdict::perfect_complex_product)
      .def_readonly("para_kaehler", &KaehlerVerdict::para_kaehler)
      .def_readonly("perfect_para_kaehler", &KaehlerVerdict::perfect_para_kaehler)
      .def_readonly("pseudo_kaehler", &KaehlerVerdict::pseudo_kaehler)
      .def_readonly("kaehler", &KaehlerVerdict::kaehler)
      .def_readonly("metric", &KaehlerVerdict::metric)
      .def_readonly("metric_signature", &KaehlerVerdict::metric_signature);
  py::class_<ComplexParaKaehler>(m, "ComplexParaKaehler")
      .def_readonly("g", &ComplexParaKaehler::g)
      .def_readonly("omega", &ComplexParaKaehler::omega)
      .def_readonly("e", &ComplexParaKaehler::e);
  py::class_<RealPseudoKaehler>(m, "RealPseudoKaehler")
      .def_readonly("g", &RealPseudoKaehler::g)
      .def_readonly("omega", &RealPseudoKaehler::omega)
      .def_readonly("j", &RealPseudoKaehler::j);
  py::class_<MetricPreLieResult>(m, "MetricPreLieResult")
      .def_readonly("algebra", &MetricPreLieResult::algebra)
      .def_readonly("omega", &MetricPreLieResult::omega)
      .def_readonly("j", &MetricPreLieResult::j)
      .def_readonly("e", &MetricPreLieResult::e)
      .def_readonly("complex_product_verdict", &MetricPreLieResult::complex_product_verdict)
      .def_readonly("para_kaehler_verdict", &MetricPreLieResult::para_kaehler_verdict)
      .def_readonly("pseudo_kaehler_verdict", &MetricPreLieResult::pseudo_kaehler_verdict)
      .def_readonly("kaehler", &MetricPreLieResult::kaehler);
  py::class_<AffComplexProduct>(m, "AffComplexProduct")
      .def_readonly("algebra", &AffComplexProduct::algebra)
      .def_readonly("j", &AffComplexProduct::j)
      .def_readonly("e", &AffComplexProduct::e)
      .def_readonly("verdict", &AffComplexProduct::verdict);
  m.def("check_complex_product", &check_complex_product);
  m.def("complex_product_from_phi", &complex_product_from_phi);
  m.def("check_para_kaehler", &check_para_kaehler);
  m.def("levi_civita", &levi_civita);
  m.def("para_kaehler_mixed_formulas", &para_kaehler_mixed_formulas, py::arg("g"),
        py::arg("omega"), py::arg("e"), py::arg("max_witnesses") = kDefaultMaxWitnesses);
  m.def("check_pseudo_kaehler", &check_pseudo_kaehler);
  m.def("complexify_pseudo_kaehler", &complexify_pseudo_kaehler);
  m.def("realify_para_kaehler", &realify_para_kaehler);
  m.def("metric_prelie_structures", &metric_prelie_structures);
  m.def("aff_complex_product", &aff_complex_product);

  // search
  py::class_<PairReport>(m, "PairReport")
      .def_readonly("complex_product", &PairReport::complex_product)
      .def_readonly("para_kaehler", &PairReport::para_kaehler)
      .def_readonly("pseudo_kaehler", &PairReport::pseudo_kaehler);
  m.def(
      "enumerate_products",
      [](const ThreeLieAlgebra& g, const std::string& kind,
         const std::vector<Matrix>& explicit_candidates) {
        CandidateFamily fam;
        fam.constraint = CandidateFamily::Constraint::square_is_identity;
        if (kind == "diagonal_signs")
          fam.kind = CandidateFamily::Kind::diagonal_signs;
        else if (kind == "signed_permutations")
          fam.kind = CandidateFamily::Kind::signed_permutations;
        else if (kind == "explicit_list") {
          fam.kind = CandidateFamily::Kind::explicit_list;
          fam.explicit_candidates = explicit_candidates;
        } else {
          throw py::value_error("unknown family kind");
        }
        return enumerate_products(g, fam);
      },
      py::arg("g"), py::arg("kind") = "diagonal_signs",
      py::arg("explicit_candidates") = std::vector<Matrix>{});
  m.def(
      "enumerate_complex",
      [](const ThreeLieAlgebra& g, const std::string& kind,
         const std::vector<Matrix>& explicit_candidates) {
        CandidateFamily fam;
        fam.constraint = CandidateFamily::Constraint::square_is_minus_identity;
        if (kind == "signed_permutations")
          fam.kind = CandidateFamily::Kind::signed_permutations;
        else if (kind == "explicit_list") {
          fam.kind = CandidateFamily::Kind::explicit_list;
          fam.explicit_candidates = explicit_candidates;
        } else {
          throw py::value_error("unknown family kind");
        }
        return enumerate_complex(g, fam);
      },
      py::arg("g"), py::arg("kind") = "signed_permutations",
      py::arg("explicit_candidates") = std::vector<Matrix>{});
  m.def("pair_search", &pair_search);

  m.attr("__version__") = "0.1.0";
}

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/cli.hpp"
#include "solsol/curvature.hpp"
#include "solsol/derivations.hpp"
#include "solsol/moduli.hpp"
#include "solsol/rank_weyl.hpp"
#include "solsol/soliton.hpp"

namespace py = pybind11;
using namespace solsol;

namespace {

MetricLieAlgebra algebra_from_id_or_json(const std::string& text) {
  if (has_catalog_entry(text)) return catalog_entry(text).build();
  return algebra_from_json(nlohmann::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_solsol, m) {
  m.doc() = "classification machinery for Ricci solitons on solvable Lie groups";

  py::register_exception<AlgebraError>(m, "AlgebraError");

  py::class_<MetricLieAlgebra>(m, "MetricLieAlgebra")
      .def(py::init<int>())
      .def_property_readonly("dim", &MetricLieAlgebra::dim)
      .def_property_readonly("gram", [](const MetricLieAlgebra& a) { return a.gram(); })
      .def("c", &MetricLieAlgebra::c)
      .def("bracket", &MetricLieAlgebra::bracket)
      .def("to_json", [](const MetricLieAlgebra& a) { return algebra_to_json(a).dump(); })
      .def("__repr__", [](const MetricLieAlgebra& a) { return bracket_notation(a); });

  py::class_<EigenvalueType>(m, "EigenvalueType")
      .def_readonly("ks", &EigenvalueType::ks)
      .def_readonly("ds", &EigenvalueType::ds)
      .def("__str__", &EigenvalueType::str);

  py::class_<NilsolitonCertificate>(m, "NilsolitonCertificate")
      .def_readonly("c", &NilsolitonCertificate::c)
      .def_readonly("D1", &NilsolitonCertificate::D1)
      .def_readonly("residual", &NilsolitonCertificate::residual)
      .def_readonly("eigen_type", &NilsolitonCertificate::eigen_type);

  py::class_<SolsolitonExtension>(m, "SolsolitonExtension")
      .def_readonly("algebra", &SolsolitonExtension::algebra)
      .def_readonly("c", &SolsolitonExtension::c)
      .def_readonly("D0", &SolsolitonExtension::D0)
      .def_readonly("H", &SolsolitonExtension::H)
      .def_readonly("soliton_residual", &SolsolitonExtension::soliton_residual)
      .def_readonly("is_einstein", &SolsolitonExtension::is_einstein);

  m.def("catalog_ids", [] {
    std::vector<std::string> ids;
    for (const auto& e : catalog()) ids.push_back(e.id);
    return ids;
  });
  m.def("algebra", &algebra_from_id_or_json, py::arg("id_or_json"),
        "catalog entry by id, or an algebra from its JSON document");
  m.def("bracket_notation", &bracket_notation);
  m.def("parse_bracket_notation", &parse_bracket_notation);
  m.def("jacobi_defect", &jacobi_defect);
  m.def("nilpotency_step", &nilpotency_step);

  m.def("ricci", &ricci_fast);
  m.def("ricci_oracle", &ricci_oracle);
  m.def("sectional_curvature",
        py::overload_cast<const MetricLieAlgebra&, const Eigen::VectorXd&, const Eigen::VectorXd&>(
            &sectional_curvature));

  m.def("certify", &nilsoliton_certificate);
  m.def("einstein_check", [](const MetricLieAlgebra& a) {
    EinsteinCheck e = einstein_check(a);
    return py::make_tuple(e.is_einstein, e.c, e.residual);
  });

  m.def("symmetric_derivations", &symmetric_derivations);
  m.def("skew_derivations", &skew_derivations);
  m.def("derivation_space", &derivation_space);

  m.def("rank", [](const std::string& id, uint64_t seed) {
    const CatalogEntry& e = catalog_entry(id);
    return maximal_abelian(symmetric_derivations(e.build()), seed).rank;
  },
        py::arg("id"), py::arg("seed") = 0);
  m.def("weyl_order", [](const std::string& id) { return catalog_weyl(catalog_entry(id)).order(); });
  m.def("canonical_form", [](const std::string& id, const Eigen::VectorXd& p) {
    return canonical_form(p, catalog_weyl(catalog_entry(id)));
  });
  m.def("domain_membership", &domain_membership);

  m.def("extend_line", [](const std::string& id, const Eigen::VectorXd& p) {
    const CatalogEntry& e = catalog_entry(id);
    return extend(catalog_certificate(e), e.build(), {catalog_frame(e).element(p)}, e.id);
  });
  m.def("moduli_slice", [](int m2) {
    ModuliSlice s = moduli_slice(m2);
    py::list comps;
    for (const auto& c : s.components) {
      py::dict d;
      d["id"] = c.id;
      d["r"] = c.r;
      d["parameter_dim"] = c.parameter_dim;
      d["weyl_order"] = c.weyl_order;
      d["contains_einstein"] = c.contains_einstein;
      d["domain"] = c.domain;
      comps.append(d);
    }
    return comps;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    CliResult r = run_cli(args);
    return py::make_tuple(r.status, r.out, r.err);
  });
}

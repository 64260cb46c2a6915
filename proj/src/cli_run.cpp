#include "solsol/cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/linalg.hpp"
#include "solsol/curvature.hpp"
#include "solsol/derivations.hpp"
#include "solsol/moduli.hpp"
#include "solsol/rank_weyl.hpp"
#include "solsol/soliton.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

Eigen::VectorXd parse_point(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    vals.push_back(std::stod(item));
  }
  if (vals.empty()) throw AlgebraError("empty point");
  Eigen::VectorXd p(static_cast<Eigen::Index>(vals.size()));
  for (size_t i = 0; i < vals.size(); ++i) p[static_cast<Eigen::Index>(i)] = vals[i];
  return p;
}

MetricLieAlgebra load_input(const std::string& id_or_file) {
  if (has_catalog_entry(id_or_file)) return catalog_entry(id_or_file).build();
  std::ifstream in(id_or_file);
  if (!in) throw UnknownIdError("unknown id and unreadable file '" + id_or_file + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw AlgebraError("malformed JSON in '" + id_or_file + "': " + e.what());
  }
  return algebra_from_json(j);
}

struct Options {
  bool json_mode = false;
  uint64_t seed = 0;
  int samples = 256;
  double tol = tol::kCertify;
};

int cmd_catalog(const std::string& sub, const std::string& id, const Options& opt,
                std::ostream& out) {
  if (sub == "list") {
    if (opt.json_mode) {
      json arr = json::array();
      for (const auto& e : catalog())
        arr.push_back({{"id", e.id},
                       {"dim", e.dim},
                       {"bracket", bracket_notation(e.build())},
                       {"eigenvalue_type", e.type_string()},
                       {"rank", e.rank}});
      out << json{{"catalog", arr}}.dump(2) << "\n";
    } else {
      char line[160];
      std::snprintf(line, sizeof(line), "%-8s %3s  %-28s %-8s %s\n", "id", "dim", "eigenvalue type",
                    "rank", "bracket");
      out << line;
      for (const auto& e : catalog()) {
        std::snprintf(line, sizeof(line), "%-8s %3d  %-28s %-8d %s\n", e.id.c_str(), e.dim,
                      e.type_string().c_str(), e.rank, bracket_notation(e.build()).c_str());
        out << line;
      }
    }
    return 0;
  }
  const CatalogEntry& e = catalog_entry(id);
  MetricLieAlgebra alg = e.build();
  if (opt.json_mode) {
    json j = {{"id", e.id},
              {"dim", e.dim},
              {"bracket", bracket_notation(alg)},
              {"eigenvalue_type", e.type_string()},
              {"rank", e.rank},
              {"family", e.family_string()},
              {"algebra", algebra_to_json(alg)}};
    if (!e.domain.empty()) j["fundamental_domain"] = e.domain;
    if (!e.note.empty()) j["note"] = e.note;
    out << j.dump(2) << "\n";
  } else {
    out << e.id << "  " << bracket_notation(alg) << "\n";
    out << "  eigenvalue type " << e.type_string() << ", rank " << e.rank << "\n";
    out << "  a_mu = " << e.family_string() << "\n";
    if (!e.domain.empty()) out << "  fundamental domain " << e.domain << "\n";
    if (!e.note.empty()) out << "  note: " << e.note << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& id_or_file, const Options& opt, std::ostream& out) {
  MetricLieAlgebra alg = load_input(id_or_file);
  bool is_catalog = has_catalog_entry(id_or_file);
  NilsolitonCertificate cert;
  try {
    cert = nilsoliton_certificate(alg);
  } catch (const NotNilsolitonError& e) {
    if (opt.json_mode)
      out << nlohmann::json{{"input", id_or_file}, {"pass", false}, {"reason", e.what()}}.dump(2)
          << "\n";
    else
      out << id_or_file << ": FAIL (" << e.what() << ")\n";
    return 1;
  }
  bool pass = cert.residual <= opt.tol && cert.c < 0.0;
  std::string expected;
  if (is_catalog) {
    const CatalogEntry& e = catalog_entry(id_or_file);
    expected = e.type_string();
    pass = pass && cert.eigen_type.str() == expected;
  }
  Eigen::VectorXd spec = operator_spectrum(alg, cert.D1);
  if (opt.json_mode) {
    json j = {{"input", id_or_file},
              {"c", cert.c},
              {"residual", cert.residual},
              {"eigenvalue_type", cert.eigen_type.str()},
              {"D1_spectrum", vector_json(spec)},
              {"pass", pass}};
    if (is_catalog) j["expected_type"] = expected;
    out << j.dump(2) << "\n";
  } else {
    out << "nilsoliton certificate for " << id_or_file << " "
        << bracket_notation(alg) << "\n";
    out << "  c = " << fmt(cert.c) << ", residual = " << fmt(cert.residual) << "\n";
    out << "  D1 spectrum:";
    for (int i = 0; i < spec.size(); ++i) out << " " << fmt(spec[i]);
    out << "\n  eigenvalue type " << cert.eigen_type.str();
    if (is_catalog) out << " (table: " << expected << ")";
    out << "\n  " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_verify_all(const Options& opt, std::ostream& out) {
  int passed = 0;
  json arr = json::array();
  for (const auto& e : catalog()) {
    MetricLieAlgebra alg = e.build();
    bool pass = false;
    std::string type;
    double c = 0, res = 0;
    try {
      NilsolitonCertificate cert = nilsoliton_certificate(alg);
      type = cert.eigen_type.str();
      c = cert.c;
      res = cert.residual;
      pass = cert.residual <= opt.tol && cert.c < 0.0 && type == e.type_string();
    } catch (const AlgebraError&) {
      pass = false;
    }
    if (pass) ++passed;
    if (opt.json_mode)
      arr.push_back({{"id", e.id}, {"c", c}, {"residual", res}, {"type", type}, {"pass", pass}});
    else {
      char line[160];
      std::snprintf(line, sizeof(line), "%-8s c=%-12.6g residual=%-10.3g %-24s %s\n", e.id.c_str(),
                    c, res, type.c_str(), pass ? "PASS" : "FAIL");
      out << line;
    }
  }
  int total = static_cast<int>(catalog().size());
  if (opt.json_mode)
    out << json{{"entries", arr}, {"passed", passed}, {"total", total}}.dump(2) << "\n";
  else
    out << passed << "/" << total << " PASS\n";
  return passed == total ? 0 : 1;
}

int cmd_derivations(const std::string& id_or_file, const Options& opt, std::ostream& out) {
  MetricLieAlgebra alg = load_input(id_or_file);
  DerivationReport rep = derivation_report(alg);
  if (opt.json_mode) {
    auto basis_json = [](const std::vector<Eigen::MatrixXd>& v) {
      json a = json::array();
      for (const auto& m : v) a.push_back(matrix_json(m));
      return a;
    };
    out << json{{"input", id_or_file},
                {"dim_der", rep.der_basis.size()},
                {"dim_p", rep.sym_basis.size()},
                {"dim_k", rep.skew_basis.size()},
                {"der_basis", basis_json(rep.der_basis)},
                {"sym_basis", basis_json(rep.sym_basis)},
                {"skew_basis", basis_json(rep.skew_basis)}}
               .dump(2)
        << "\n";
  } else {
    out << "derivations of " << id_or_file << ": dim Der = " << rep.der_basis.size()
        << ", dim p = " << rep.sym_basis.size() << ", dim k = " << rep.skew_basis.size() << "\n";
    auto print_basis = [&](const char* name, const std::vector<Eigen::MatrixXd>& v) {
      out << name << ":\n";
      for (const auto& m : v) {
        for (int r = 0; r < m.rows(); ++r) {
          out << "   ";
          for (int c = 0; c < m.cols(); ++c) out << " " << fmt(m(r, c));
          out << "\n";
        }
        out << "\n";
      }
    };
    print_basis("p basis", rep.sym_basis);
    print_basis("k basis", rep.skew_basis);
  }
  return 0;
}

int cmd_rank(const std::string& id, const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  MetricLieAlgebra alg = e.build();
  AbelianFrame frame = maximal_abelian(symmetric_derivations(alg), opt.seed);
  bool pass = frame.rank == e.rank;
  if (opt.json_mode) {
    out << json{{"id", e.id},
                {"rank", frame.rank},
                {"expected_rank", e.rank},
                {"family", e.family_string()},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    out << "rank(" << e.id << ") = " << frame.rank << " (table: " << e.rank << ") "
        << (pass ? "PASS" : "FAIL") << "\n";
    out << "  a_mu = " << e.family_string() << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_weyl(const std::string& id, const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  const WeylAction& w = catalog_weyl(e);
  if (opt.json_mode) {
    json maps = json::array();
    for (const auto& m : w.induced) maps.push_back(matrix_json(m));
    out << json{{"id", e.id},
                {"order", w.order()},
                {"normalizing_generators", w.generators.size()},
                {"induced_maps", maps}}
               .dump(2)
        << "\n";
  } else {
    out << "Weyl action on a_" << e.id << ": order " << w.order() << " ("
        << w.generators.size() << " normalizing generators kept)\n";
    for (const auto& m : w.induced) {
      for (int r = 0; r < m.rows(); ++r) {
        out << "   ";
        for (int c = 0; c < m.cols(); ++c) out << " " << fmt(m(r, c));
        out << "\n";
      }
      out << "\n";
    }
  }
  return 0;
}

int cmd_canon(const std::string& id, const std::string& point_text, const Options& opt,
              std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  Eigen::VectorXd p = parse_point(point_text);
  if (p.size() != e.rank)
    throw AlgebraError("point must have " + std::to_string(e.rank) + " coordinates for " + e.id);
  const WeylAction& w = catalog_weyl(e);
  Eigen::VectorXd canon = canonical_form(p, w);
  json j = {{"id", e.id}, {"point", vector_json(p)}, {"canonical", vector_json(canon)}};
  std::string domain_line;
  if (!e.domain.empty()) {
    Eigen::VectorXd rep = domain_representative(e.domain, e.domain_perm, p, w);
    j["domain"] = e.domain;
    j["domain_representative"] = vector_json(rep);
    domain_line = "  " + e.domain + " representative:";
    for (int i = 0; i < rep.size(); ++i) domain_line += " " + fmt(rep[i]);
    domain_line += "\n";
  }
  if (opt.json_mode)
    out << j.dump(2) << "\n";
  else {
    out << "canonical form:";
    for (int i = 0; i < canon.size(); ++i) out << " " << fmt(canon[i]);
    out << "\n" << domain_line;
  }
  return 0;
}

json extension_json(const SolsolitonExtension& ext) {
  return {{"catalog_id", ext.catalog_id},
          {"algebra", algebra_to_json(ext.algebra)},
          {"c", ext.c},
          {"mean_curvature", vector_json(ext.H)},
          {"soliton_residual", ext.soliton_residual},
          {"is_einstein", ext.is_einstein}};
}

int cmd_extend(const std::string& id, const std::string& line_text,
               const std::string& subspace_file, const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  const NilsolitonCertificate& cert = catalog_certificate(e);
  const AbelianFrame& frame = catalog_frame(e);
  std::vector<Eigen::MatrixXd> subspace;
  if (!line_text.empty()) {
    Eigen::VectorXd p = parse_point(line_text);
    if (p.size() != e.rank)
      throw AlgebraError("line must have " + std::to_string(e.rank) + " coordinates for " + e.id);
    subspace.push_back(frame.element(p));
  } else if (!subspace_file.empty()) {
    std::ifstream in(subspace_file);
    if (!in) throw AlgebraError("unreadable subspace file '" + subspace_file + "'");
    json j;
    in >> j;
    for (const auto& col : j.at("columns")) {
      Eigen::VectorXd p(static_cast<Eigen::Index>(col.size()));
      for (size_t i = 0; i < col.size(); ++i) p[static_cast<Eigen::Index>(i)] = col[i].get<double>();
      if (p.size() != e.rank) throw AlgebraError("subspace column has wrong length");
      subspace.push_back(frame.element(p));
    }
  } else {
    throw AlgebraError("extend needs --line or --subspace");
  }
  SolsolitonExtension ext = extend(cert, e.build(), subspace, e.id);
  bool pass = ext.soliton_residual <= opt.tol;
  if (opt.json_mode) {
    json j = extension_json(ext);
    j["pass"] = pass;
    out << j.dump(2) << "\n";
  } else {
    out << "extension of " << e.id << " by an abelian factor of dimension " << subspace.size()
        << "\n";
    out << "  algebra " << bracket_notation(ext.algebra) << "\n";
    out << "  c = " << fmt(ext.c) << ", soliton residual = " << fmt(ext.soliton_residual)
        << (ext.is_einstein ? " (Einstein)" : "") << "\n";
    out << "  " << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_moduli(int m, const Options& opt, std::ostream& out) {
  ModuliSlice slice = moduli_slice(m);
  if (opt.json_mode) {
    json arr = json::array();
    for (const auto& c : slice.components)
      arr.push_back({{"id", c.id},
                     {"r", c.r},
                     {"parameter_dim", c.parameter_dim},
                     {"weyl_order", c.weyl_order},
                     {"contains_einstein", c.contains_einstein},
                     {"domain", c.domain}});
    out << json{{"ambient_dim", m}, {"components", arr}}.dump(2) << "\n";
  } else {
    out << "Sol(" << m << "): " << slice.components.size() << " components\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-8s %2s %10s %6s %9s  %s\n", "id", "r", "param dim",
                  "|W|", "Einstein", "domain");
    out << line;
    for (const auto& c : slice.components) {
      std::snprintf(line, sizeof(line), "%-8s %2d %10d %6d %9s  %s\n", c.id.c_str(), c.r,
                    c.parameter_dim, c.weyl_order, c.contains_einstein ? "yes" : "no",
                    c.domain.c_str());
      out << line;
    }
  }
  return 0;
}

int cmd_curvature(const std::string& file, const Options& opt, std::ostream& out) {
  MetricLieAlgebra alg = load_input(file);
  CurvatureReport rep = curvature_report(alg, opt.samples, opt.seed);
  if (opt.json_mode) {
    out << json{{"input", file},
                {"ricci_operator", matrix_json(rep.ricci_operator)},
                {"ricci_eigenvalues", vector_json(rep.ricci_eigenvalues)},
                {"signature", {rep.negative, rep.zero, rep.positive}},
                {"scalar_curvature", rep.scalar_curvature},
                {"min_sectional_sample", rep.min_sectional_sample},
                {"max_sectional_sample", rep.max_sectional_sample}}
               .dump(2)
        << "\n";
  } else {
    out << "curvature of " << file << "\n";
    out << "  ricci eigenvalues:";
    for (int i = 0; i < rep.ricci_eigenvalues.size(); ++i)
      out << " " << fmt(rep.ricci_eigenvalues[i]);
    out << "\n  signature (neg, zero, pos) = (" << rep.negative << ", " << rep.zero << ", "
        << rep.positive << ")\n";
    out << "  scalar curvature = " << fmt(rep.scalar_curvature) << "\n";
    out << "  sampled sectional range = [" << fmt(rep.min_sectional_sample) << ", "
        << fmt(rep.max_sectional_sample) << "]\n";
  }
  return 0;
}

int cmd_scan(const std::string& id, const Options& opt, std::ostream& out) {
  const CatalogEntry& e = catalog_entry(id);
  const NilsolitonCertificate& cert = catalog_certificate(e);
  const AbelianFrame& frame = catalog_frame(e);
  json j = {{"id", e.id}};
  std::ostringstream text;
  text << "curvature scan for " << e.id << "\n";
  int status = 0;

  if (e.einstein_point.size() > 0) {
    SolsolitonExtension ext = extend(cert, e.build(), {frame.element(e.einstein_point)}, e.id);
    NegativityScan scan = negativity_scan(ext.algebra, opt.samples, opt.seed);
    j["einstein_extension"] = {{"is_einstein", ext.is_einstein},
                               {"soliton_residual", ext.soliton_residual},
                               {"all_negative", scan.all_negative},
                               {"sectional_range", {scan.min, scan.max}}};
    text << "  Einstein line extension: residual " << fmt(ext.soliton_residual)
         << (ext.is_einstein ? " (Einstein)" : " (NOT Einstein)") << ", sectional range ["
         << fmt(scan.min) << ", " << fmt(scan.max) << "]"
         << (scan.all_negative ? " all negative" : "") << "\n";
    if (!ext.is_einstein) status = 1;
  }
  if (e.rank >= 2) {
    // a trace-orthogonal direction: Ric restricted to n equals Ric(mu)
    Eigen::VectorXd d1c = frame.coordinates(cert.D1);
    Eigen::MatrixXd t = frame.trace_gram();
    Eigen::MatrixXd comp = nullspace((t * d1c).transpose(), tol::kSvdCutoff);
    Eigen::MatrixXd a = frame.element(comp.col(0));
    SolsolitonExtension ext = extend(cert, e.build(), {a}, e.id);
    Eigen::MatrixXd ric = ricci_oracle(ext.algebra);
    int n = e.dim;
    double block_defect = (ric.block(1, 1, n, n) - ricci_fast(e.build())).norm();
    Eigen::VectorXd ev = operator_spectrum(ext.algebra, ric);
    bool indefinite = ev.minCoeff() < -1e-9 && ev.maxCoeff() > 1e-9;
    j["trace_orthogonal"] = {{"ricci_block_defect", block_defect},
                             {"ricci_spectrum", vector_json(ev)},
                             {"indefinite", indefinite}};
    text << "  trace-orthogonal direction: |Ric|_n - Ric(mu)| = " << fmt(block_defect)
         << ", Ricci " << (indefinite ? "indefinite" : "semidefinite") << "\n";
  }
  if (opt.json_mode)
    out << j.dump(2) << "\n";
  else
    out << text.str();
  return status;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"solvable Ricci soliton classification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json_mode, "emit one JSON document on stdout");
  app.add_option("--seed", opt.seed, "RNG seed (default 0)");
  app.add_option("--samples", opt.samples, "sample count for curvature scans (default 256)");
  app.add_option("--tol", opt.tol, "residual tolerance for PASS verdicts (default 1e-8)")
      ->check(CLI::PositiveNumber);

  std::string id, point_text, line_text, subspace_file, file;
  int m = 0;

  auto* c_catalog = app.add_subcommand("catalog", "list the embedded nilsoliton tables");
  c_catalog->require_subcommand(1);
  auto* c_list = c_catalog->add_subcommand("list", "all entries");
  auto* c_show = c_catalog->add_subcommand("show", "one entry in bracket notation");
  c_show->add_option("id", id)->required();

  auto* c_verify = app.add_subcommand("verify", "nilsoliton certificate");
  c_verify->add_option("id_or_file", file)->required();
  auto* c_verify_all = app.add_subcommand("verify-all", "certificates for the whole catalog");
  auto* c_der = app.add_subcommand("derivations", "Der, p and k bases");
  c_der->add_option("id_or_file", file)->required();
  auto* c_rank = app.add_subcommand("rank", "rank of a catalog entry");
  c_rank->add_option("id", id)->required();
  auto* c_weyl = app.add_subcommand("weyl", "Weyl action on the maximal abelian subspace");
  c_weyl->add_option("id", id)->required();
  auto* c_canon = app.add_subcommand("canon", "canonical form of a parameter point");
  c_canon->add_option("id", id)->required();
  c_canon->add_option("--point", point_text, "comma separated parameters")->required();
  auto* c_extend = app.add_subcommand("extend", "solsoliton extension");
  c_extend->add_option("id", id)->required();
  c_extend->add_option("--line", line_text, "parameters of a line in a_mu");
  c_extend->add_option("--subspace", subspace_file, "JSON file {\"columns\": [[...], ...]}");
  auto* c_moduli = app.add_subcommand("moduli", "components of Sol(m)");
  c_moduli->add_option("m", m)->required()->check(CLI::Range(2, 7));
  auto* c_curv = app.add_subcommand("curvature", "curvature report for an algebra");
  c_curv->add_option("id_or_file", file)->required();
  auto* c_scan = app.add_subcommand("scan", "sectional/Ricci sign checks for an entry");
  c_scan->add_option("id", id)->required();

  CliResult res;
  std::ostringstream out;
  std::vector<const char*> argv;
  argv.push_back("solsol");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    res.out = app.help();
    res.status = 0;
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("usage error: ") + e.what() + "\n";
    res.status = 2;
    return res;
  }

  try {
    if (c_list->parsed() || c_show->parsed())
      res.status = cmd_catalog(c_list->parsed() ? "list" : "show", id, opt, out);
    else if (c_verify->parsed())
      res.status = cmd_verify(file, opt, out);
    else if (c_verify_all->parsed())
      res.status = cmd_verify_all(opt, out);
    else if (c_der->parsed())
      res.status = cmd_derivations(file, opt, out);
    else if (c_rank->parsed())
      res.status = cmd_rank(id, opt, out);
    else if (c_weyl->parsed())
      res.status = cmd_weyl(id, opt, out);
    else if (c_canon->parsed())
      res.status = cmd_canon(id, point_text, opt, out);
    else if (c_extend->parsed())
      res.status = cmd_extend(id, line_text, subspace_file, opt, out);
    else if (c_moduli->parsed())
      res.status = cmd_moduli(m, opt, out);
    else if (c_curv->parsed())
      res.status = cmd_curvature(file, opt, out);
    else if (c_scan->parsed())
      res.status = cmd_scan(id, opt, out);
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.status = 2;
    return res;
  }
  res.out = out.str();
  return res;
}

int cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CliResult res = run_cli(args);
  if (!res.out.empty()) std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err;
  return res.status;
}

}  // namespace solsol

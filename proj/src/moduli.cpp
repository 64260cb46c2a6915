#include "solsol/moduli.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "solsol/curvature.hpp"
#include "solsol/derivations.hpp"
#include "solsol/linalg.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

namespace {

Eigen::MatrixXd a_gram(const std::vector<Eigen::MatrixXd>& subspace, double c) {
  int r = static_cast<int>(subspace.size());
  Eigen::MatrixXd g(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) g(i, j) = -(subspace[i] * subspace[j]).trace() / c;
  return g;
}

}  // namespace

Eigen::VectorXd mean_curvature(const std::vector<Eigen::MatrixXd>& subspace, double c) {
  int r = static_cast<int>(subspace.size());
  Eigen::VectorXd t(r);
  for (int i = 0; i < r; ++i) t[i] = subspace[i].trace();
  return a_gram(subspace, c).ldlt().solve(t);
}

SolsolitonExtension extend(const NilsolitonCertificate& cert, const MetricLieAlgebra& alg,
                           const std::vector<Eigen::MatrixXd>& subspace,
                           const std::string& provenance) {
  if (cert.c >= 0.0) throw AlgebraError("extend: soliton constant must be negative");
  int n = alg.dim();
  int r = static_cast<int>(subspace.size());
  double s = 1.0 + alg.scale();
  for (const auto& a : subspace) {
    if (a.rows() != n || a.cols() != n) throw AlgebraError("extend: subspace dimension mismatch");
    if ((alg.gram() * a - a.transpose() * alg.gram()).norm() > tol::kRel * s * (1.0 + a.norm()))
      throw AlgebraError("extend: subspace element not symmetric");
    if (derivation_defect(alg, a) > 1e-7 * s * (1.0 + a.norm()))
      throw AlgebraError("extend: subspace element not a derivation");
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if ((subspace[i] * subspace[j] - subspace[j] * subspace[i]).norm() >
          tol::kRel * s * (1.0 + subspace[i].norm()) * (1.0 + subspace[j].norm()))
        throw AlgebraError("extend: subspace elements do not commute");
  if (r > 0) {
    Eigen::MatrixXd b(static_cast<Eigen::Index>(n) * n, r);
    for (int q = 0; q < r; ++q) b.col(q) = vec(subspace[q]);
    if (orthonormal_columns(b, tol::kSvdCutoff).cols() != r)
      throw AlgebraError("extend: subspace basis linearly dependent");
  }

  int m = n + r;
  SolsolitonExtension ext;
  ext.catalog_id = provenance;
  ext.subspace = subspace;
  ext.c = cert.c;

  MetricLieAlgebra salg(m);
  for (int q = 0; q < r; ++q)
    for (int b2 = 0; b2 < n; ++b2)
      for (int a2 = 0; a2 < n; ++a2) {
        double v = subspace[q](a2, b2);
        if (v != 0.0) salg.add_c(q, r + b2, r + a2, v);
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = alg.c(i, j, k);
        if (v != 0.0) salg.add_c(r + i, r + j, r + k, v);
      }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(m, m);
  if (r > 0) g.block(0, 0, r, r) = a_gram(subspace, cert.c);
  g.block(r, r, n, n) = alg.gram();
  salg.set_gram(g);
  ext.algebra = salg;

  ext.H = r > 0 ? mean_curvature(subspace, cert.c) : Eigen::VectorXd(0);
  Eigen::MatrixXd adh = Eigen::MatrixXd::Zero(n, n);
  for (int q = 0; q < r; ++q) adh += ext.H[q] * subspace[q];
  ext.D0 = Eigen::MatrixXd::Zero(m, m);
  ext.D0.block(r, r, n, n) = cert.D1 - adh;

  Eigen::MatrixXd ric = ricci_oracle(ext.algebra);
  ext.soliton_residual =
      operator_norm(ext.algebra, ric - ext.c * Eigen::MatrixXd::Identity(m, m) - ext.D0);
  ext.is_einstein = einstein_check(ext.algebra).is_einstein;
  return ext;
}

bool einstein_by_membership(const NilsolitonCertificate& cert,
                            const std::vector<Eigen::MatrixXd>& subspace) {
  if (subspace.empty()) return cert.D1.norm() <= tol::kRel;
  int n = static_cast<int>(cert.D1.rows());
  Eigen::MatrixXd b(static_cast<Eigen::Index>(n) * n, static_cast<Eigen::Index>(subspace.size()));
  for (size_t q = 0; q < subspace.size(); ++q) b.col(static_cast<Eigen::Index>(q)) = vec(subspace[q]);
  Eigen::VectorXd d = vec(cert.D1);
  Eigen::VectorXd x = b.colPivHouseholderQr().solve(d);
  return (b * x - d).norm() <= 1e-7 * std::max(1.0, d.norm());
}

bool equivalent(const AbelianFrame& frame, const WeylAction& action,
                const std::vector<Eigen::MatrixXd>& subspace_a,
                const std::vector<Eigen::MatrixXd>& subspace_b) {
  if (subspace_a.size() != subspace_b.size())
    throw AlgebraError("equivalent: subspace dimensions differ");
  if (subspace_a.empty()) return true;
  int r = static_cast<int>(subspace_a.size());
  Eigen::MatrixXd ca(frame.rank, r), cb(frame.rank, r);
  for (int q = 0; q < r; ++q) {
    ca.col(q) = frame.coordinates(subspace_a[static_cast<size_t>(q)]);
    cb.col(q) = frame.coordinates(subspace_b[static_cast<size_t>(q)]);
  }
  if (r == 1)
    return (canonical_form(ca.col(0), action) - canonical_form(cb.col(0), action)).norm() <= 1e-7;
  return subspaces_equivalent(ca, cb, action);
}

const NilsolitonCertificate& catalog_certificate(const CatalogEntry& e) {
  static std::map<std::string, NilsolitonCertificate> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e.id);
  if (it == cache.end()) it = cache.emplace(e.id, nilsoliton_certificate(e.build())).first;
  return it->second;
}

const AbelianFrame& catalog_frame(const CatalogEntry& e) {
  static std::map<std::string, AbelianFrame> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e.id);
  if (it == cache.end()) it = cache.emplace(e.id, frame_from_basis(e.build(), e.family)).first;
  return it->second;
}

const WeylAction& catalog_weyl(const CatalogEntry& e) {
  static std::map<std::string, WeylAction> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(e.id);
  if (it == cache.end())
    it = cache.emplace(e.id, weyl_group(e.build(), catalog_frame(e), e.extra_weyl)).first;
  return it->second;
}

ModuliSlice moduli_slice(int m) {
  if (m < 2 || m > 7) throw AlgebraError("moduli_slice: ambient dimension must be in 2..7");
  ModuliSlice slice;
  slice.ambient_dim = m;
  if (m == 7) {
    // Nil(7) itself has no complete classification; keep the r = 0 layer as
    // an explicit placeholder.
    slice.components.push_back({"Nil(7)", 0, -1, 0, false, "unclassified"});
  }
  for (int r = (m == 7) ? 1 : 0; r <= m - 1; ++r) {
    int n = m - r;
    for (const auto& e : catalog()) {
      if (e.dim != n || r > e.rank) continue;
      ModuliComponent comp;
      comp.id = e.id;
      comp.r = r;
      comp.parameter_dim = r * (e.rank - r);
      comp.weyl_order = r == 0 ? 0 : catalog_weyl(e).order();
      comp.contains_einstein = r >= 1 || e.abelian();
      if (r == 0)
        comp.domain = "nilsoliton";
      else if (r == e.rank)
        comp.domain = "Einstein point";
      else if ((r == 1 || r == e.rank - 1) && !e.domain.empty())
        comp.domain = e.domain;
      else if (e.abelian())
        comp.domain = "Gr" + std::to_string(r) + "(R" + std::to_string(e.rank) + ")/S" +
                      std::to_string(e.rank);
      else
        comp.domain = "Gr" + std::to_string(r) + "/W";
      slice.components.push_back(comp);
    }
  }
  return slice;
}

}  // namespace solsol

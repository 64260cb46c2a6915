#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/rank_weyl.hpp"
#include "solsol/soliton.hpp"

namespace solsol {

// The solvable extension s = a + n of Proposition-const type: a spanned by
// commuting symmetric derivations A_1..A_r acting on n, [a,a] = 0, the inner
// product on a given by the polarization -(1/c) tr(A_i A_j), and the n block
// keeping its own bracket and inner product. Basis order: a first, then n.
struct SolsolitonExtension {
  MetricLieAlgebra algebra;
  std::string catalog_id;
  std::vector<Eigen::MatrixXd> subspace;
  double c = 0.0;
  Eigen::MatrixXd D0;        // soliton derivation of s (zero on a)
  Eigen::VectorXd H;         // mean curvature vector, coordinates in the A basis
  double soliton_residual = 0.0;
  bool is_einstein = false;
};

// Builds the extension and verifies the soliton equation against the Koszul
// oracle: D0|a = 0, D0|n = D1 - ad(H)|n, residual = ||ric(s) - c I - D0||.
// Throws on a subspace that is not commuting/symmetric/derivations or is
// linearly dependent.
SolsolitonExtension extend(const NilsolitonCertificate& cert, const MetricLieAlgebra& alg,
                           const std::vector<Eigen::MatrixXd>& subspace,
                           const std::string& provenance = "");

// H in A-coordinates: <H, A> = tr(ad A) for all A in a, solved through the
// a-gram.
Eigen::VectorXd mean_curvature(const std::vector<Eigen::MatrixXd>& subspace, double c);

// True iff D1 lies in span(subspace); matches einstein_check on the built
// extension.
bool einstein_by_membership(const NilsolitonCertificate& cert,
                            const std::vector<Eigen::MatrixXd>& subspace);

// Isometry of two extensions of the same nilsoliton: equality of the
// subspaces up to the Weyl action (lines via canonical forms, higher rank by
// orbit search on Plucker coordinates). Coordinates are taken in the frame.
bool equivalent(const AbelianFrame& frame, const WeylAction& action,
                const std::vector<Eigen::MatrixXd>& subspace_a,
                const std::vector<Eigen::MatrixXd>& subspace_b);

struct ModuliComponent {
  std::string id;
  int r = 0;
  int parameter_dim = 0;
  int weyl_order = 0;
  bool contains_einstein = false;
  std::string domain;  // display label; fundamental domain id when known
};

struct ModuliSlice {
  int ambient_dim = 0;
  std::vector<ModuliComponent> components;
};

// Sol(m) for 2 <= m <= 7: every (catalog entry, r) with dim + r = m and
// r <= rank. Sol(7) carries the unclassified Nil(7) placeholder component.
ModuliSlice moduli_slice(int m);

// Catalog-entry helpers (cached): certificate, published frame, Weyl action.
const NilsolitonCertificate& catalog_certificate(const CatalogEntry& e);
const AbelianFrame& catalog_frame(const CatalogEntry& e);
const WeylAction& catalog_weyl(const CatalogEntry& e);

}  // namespace solsol

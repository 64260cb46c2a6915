#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "solsol/algebra.hpp"

namespace solsol {

// Defect of the derivation identity, stacked over basis pairs i < j:
// rows of D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j].
Eigen::VectorXd derivation_defect_vector(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d);
// max over basis pairs of the norm of the defect.
double derivation_defect(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d);

// Frobenius-orthonormal basis of Der(mu), sign-fixed so the first significant
// entry (row-major) of each basis matrix is positive.
std::vector<Eigen::MatrixXd> derivation_space(const MetricLieAlgebra& alg);
// p_mu = Der(mu) ∩ sym(n) and k_mu = Der(mu) ∩ so(n), same normalization.
std::vector<Eigen::MatrixXd> symmetric_derivations(const MetricLieAlgebra& alg);
std::vector<Eigen::MatrixXd> skew_derivations(const MetricLieAlgebra& alg);

struct DerivationReport {
  std::vector<Eigen::MatrixXd> der_basis;
  std::vector<Eigen::MatrixXd> sym_basis;
  std::vector<Eigen::MatrixXd> skew_basis;
};
DerivationReport derivation_report(const MetricLieAlgebra& alg);

struct AutomorphismCheck {
  bool ok = false;
  double orthogonality_defect = 0.0;  // ||h^T G h - G||
  double bracket_defect = 0.0;        // max over pairs ||h[x,y] - [hx,hy]||
};
// True iff h preserves both the inner product and the bracket. Throws on a
// dimension mismatch.
AutomorphismCheck is_orthogonal_automorphism(const Eigen::MatrixXd& h,
                                             const MetricLieAlgebra& alg);

// All matrices +-P, P a permutation, that are orthogonal automorphisms.
// Enumerates 2^n n! candidates; dim <= 8 enforced.
std::vector<Eigen::MatrixXd> signed_permutation_automorphisms(const MetricLieAlgebra& alg);

// Enumeration form of the above so callers can stream candidates without
// materializing the whole list.
void for_each_signed_permutation_automorphism(const MetricLieAlgebra& alg,
                                              const std::function<void(const Eigen::MatrixXd&)>& f);

}  // namespace solsol

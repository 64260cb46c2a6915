#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "solsol/algebra.hpp"

namespace solsol {

struct NotNilsolitonError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// Coprime positive integer spectrum k_1 < ... < k_r with multiplicities.
struct EigenvalueType {
  std::vector<int> ks;
  std::vector<int> ds;
  std::string str() const;
  bool operator==(const EigenvalueType& o) const { return ks == o.ks && ds == o.ds; }
};

// Scales the (positive, rationally related) eigenvalues of a gram-self-adjoint
// operator to the coprime integer type. Eigenvalues are clustered at tol and
// rationalized by continued fractions with denominators <= 64; throws
// NotNilsolitonError when they are not rationally related or not positive.
EigenvalueType eigenvalue_type(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d1);

struct NilsolitonCertificate {
  double c = 0.0;            // soliton constant, < 0
  Eigen::MatrixXd D1;        // soliton derivation, Ric = c I + D1
  double residual = 0.0;     // derivation-identity defect of D1 (stacked 2-norm)
  EigenvalueType eigen_type;
};

// Certifies ric = c I + D with D a derivation: c is the exact minimizer of
// the (affine in c) derivation defect of Ric - c I; accepted when the defect
// is <= 1e-8 and c < 0. The abelian case takes c = -1, D1 = I by convention.
// Throws NonNilpotentError / NotNilsolitonError.
NilsolitonCertificate nilsoliton_certificate(const MetricLieAlgebra& alg);

struct EinsteinCheck {
  bool is_einstein = false;
  double c = 0.0;
  double residual = 0.0;  // ||Ric - (tr Ric / dim) I||
};
EinsteinCheck einstein_check(const MetricLieAlgebra& alg);

}  // namespace solsol

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "solsol/algebra.hpp"

namespace solsol {

// Levi-Civita connection for left-invariant fields: gamma(i,j) is the
// coordinate vector of nabla_{e_i} e_j, from the Koszul formula
//   2 <nabla_{e_i} e_j, e_k> = <[e_i,e_j],e_k> - <[e_j,e_k],e_i> + <[e_k,e_i],e_j>.
class Connection {
 public:
  Connection(int dim) : dim_(dim), g_(static_cast<size_t>(dim) * dim * dim, 0.0) {}
  int dim() const { return dim_; }
  double& at(int i, int j, int k) { return g_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k]; }
  double at(int i, int j, int k) const {
    return g_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
  }
  Eigen::VectorXd nabla(int i, int j) const;                       // nabla_{e_i} e_j
  Eigen::VectorXd nabla(int i, const Eigen::VectorXd& v) const;    // nabla_{e_i} (const field v)

 private:
  int dim_;
  std::vector<double> g_;
};

Connection levi_civita(const MetricLieAlgebra& alg);

// R(e_i,e_j)e_k = sum_l r(i,j,k,l) e_l with
// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z.
class RiemannTensor {
 public:
  RiemannTensor(int dim) : dim_(dim), r_(static_cast<size_t>(dim) * dim * dim * dim, 0.0) {}
  int dim() const { return dim_; }
  double& at(int i, int j, int k, int l) {
    return r_[((static_cast<size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }
  double at(int i, int j, int k, int l) const {
    return r_[((static_cast<size_t>(i) * dim_ + j) * dim_ + k) * dim_ + l];
  }
  Eigen::VectorXd apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                        const Eigen::VectorXd& z) const;

 private:
  int dim_;
  std::vector<double> r_;
};

RiemannTensor riemann_tensor(const MetricLieAlgebra& alg);

// Ricci operator by contraction of the Riemann tensor (the oracle route).
// Sign convention: the round sphere comes out positive; on the Heisenberg
// algebra h3 this gives diag(-1/2,-1/2,1/2).
Eigen::MatrixXd ricci_oracle(const MetricLieAlgebra& alg);

// Ricci operator from the closed form for left-invariant metrics,
//   ric = M - (1/2) B - S(ad H),
// with the moment term M from the structure constants, B the Killing form and
// H the mean curvature vector. Agrees with ricci_oracle to 1e-10 on inputs of
// order one.
Eigen::MatrixXd ricci_fast(const MetricLieAlgebra& alg);

// <R(X,Y)Y,X> / (|X|^2 |Y|^2 - <X,Y>^2). Throws on a degenerate plane.
double sectional_curvature(const MetricLieAlgebra& alg, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y);
double sectional_curvature(const MetricLieAlgebra& alg, const RiemannTensor& r,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y);

struct NegativityScan {
  bool all_negative = false;
  double min = 0.0;
  double max = 0.0;
};
// Sectional curvature over a seeded sample of random planes plus all
// coordinate planes.
NegativityScan negativity_scan(const MetricLieAlgebra& alg, int samples, uint64_t seed);

struct CurvatureReport {
  Eigen::MatrixXd ricci_operator;
  Eigen::VectorXd ricci_eigenvalues;  // sorted ascending
  int negative = 0, zero = 0, positive = 0;
  double scalar_curvature = 0.0;
  double min_sectional_sample = 0.0;
  double max_sectional_sample = 0.0;
};
CurvatureReport curvature_report(const MetricLieAlgebra& alg, int samples = 256,
                                 uint64_t seed = 0);

// Eigenvalues of a gram-self-adjoint operator (sorted ascending).
Eigen::VectorXd operator_spectrum(const MetricLieAlgebra& alg, const Eigen::MatrixXd& op);

// Frobenius norm of an operator measured in a gram-orthonormal frame.
double operator_norm(const MetricLieAlgebra& alg, const Eigen::MatrixXd& op);

}  // namespace solsol

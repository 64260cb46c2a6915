#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "solsol/algebra.hpp"

namespace solsol {

struct RankUndeterminedError : AlgebraError {
  using AlgebraError::AlgebraError;
};
struct DomainError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// A maximal abelian subspace a of p_mu with its parameter structure. The
// basis entries are the parameter directions; for catalog entries they are
// the published family, so parameter coordinates match the case analysis.
// functionals has one row per joint eigendirection: row s lists the diagonal
// entries of Q^T A_q Q, i.e. the linear functional of the parameters that is
// the s-th joint eigenvalue.
struct AbelianFrame {
  std::vector<Eigen::MatrixXd> basis;
  int rank = 0;
  Eigen::MatrixXd joint_eigenbasis;  // orthogonal Q
  Eigen::MatrixXd functionals;       // n x rank

  Eigen::MatrixXd element(const Eigen::VectorXd& params) const;
  // coordinates of a matrix in span(basis); throws DomainError when the
  // residual exceeds tol
  Eigen::VectorXd coordinates(const Eigen::MatrixXd& m) const;
  // Gram matrix tr(A_i A_j) of the trace form in basis coordinates
  Eigen::MatrixXd trace_gram() const;
};

// Builds the frame data for a given commuting family (validated: symmetric,
// pairwise commuting, independent; derivation property is checked against
// alg when one is supplied).
AbelianFrame frame_from_basis(const std::vector<Eigen::MatrixXd>& basis);
AbelianFrame frame_from_basis(const MetricLieAlgebra& alg, const std::vector<Eigen::MatrixXd>& basis);

// Maximal abelian subspace of span(p_basis) as the centralizer of a seeded
// random element; resamples up to 8 times if the centralizer fails to be
// abelian, then throws RankUndeterminedError.
AbelianFrame maximal_abelian(const std::vector<Eigen::MatrixXd>& p_basis, uint64_t seed = 0);

// The Weyl action on a: orthogonal automorphisms normalizing span(a) (from
// the signed-permutation search plus any supplied generators), with the
// finite group of induced linear maps on parameter coordinates, closed under
// composition and including the identity.
struct WeylAction {
  std::vector<Eigen::MatrixXd> generators;  // n x n normalizing automorphisms
  std::vector<Eigen::MatrixXd> induced;     // k x k parameter maps, a finite group
  int order() const { return static_cast<int>(induced.size()); }
};

WeylAction weyl_group(const MetricLieAlgebra& alg, const AbelianFrame& frame,
                      const std::vector<Eigen::MatrixXd>& extra_generators = {});

// Orbit of the line through `point` under the induced maps and the sign flip,
// as deduplicated unit vectors.
std::vector<Eigen::VectorXd> line_orbit(const Eigen::VectorXd& point, const WeylAction& action);

// Colexicographically greatest element of the line orbit (coordinates
// compared from the last down, which matches the published fundamental
// domains on the diagonal families). Throws on a zero input.
Eigen::VectorXd canonical_form(const Eigen::VectorXd& point, const WeylAction& action);

bool lines_equivalent(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                      const WeylAction& action);

// Membership in one of the published fundamental domains, with strict and
// nonstrict inequalities resolved at tol. Ids: F1_1, F2_1..F2_4, F3_1..F3_4,
// F4_1, PR2, PR3, D.
bool domain_membership(const std::string& domain_id, const Eigen::VectorXd& point);

// The orbit element landing in the domain (coordinates permuted by `perm`
// before the membership test when nonempty), colex-greatest among those.
// Throws DomainError when the orbit misses the domain.
Eigen::VectorXd domain_representative(const std::string& domain_id, const std::vector<int>& perm,
                                      const Eigen::VectorXd& point, const WeylAction& action);

// Equality of r-planes in parameter coordinates up to the induced group,
// decided on Plucker coordinates.
bool subspaces_equivalent(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          const WeylAction& action);

// Trace-form orthocomplement within a, in parameter coordinates: takes a
// k x r coordinate matrix, returns k x (k-r).
Eigen::MatrixXd grassmannian_duality(const Eigen::MatrixXd& subspace_coords,
                                     const AbelianFrame& frame);
// Matrix-level form: input matrices must lie inside span(frame.basis).
std::vector<Eigen::MatrixXd> grassmannian_duality(const std::vector<Eigen::MatrixXd>& subspace,
                                                  const AbelianFrame& frame);

}  // namespace solsol

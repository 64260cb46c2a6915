#include "solsol/derivations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "solsol/linalg.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

Eigen::VectorXd derivation_defect_vector(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d) {
  int n = alg.dim();
  Eigen::VectorXd out(static_cast<Eigen::Index>(n) * n * (n - 1) / 2);
  Eigen::Index p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd v = d * alg.bracket_basis(i, j) - alg.bracket(d.col(i), Eigen::VectorXd::Unit(n, j)) -
                          alg.bracket(Eigen::VectorXd::Unit(n, i), d.col(j));
      out.segment(p, n) = v;
      p += n;
    }
  return out;
}

double derivation_defect(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d) {
  int n = alg.dim();
  Eigen::VectorXd v = derivation_defect_vector(alg, d);
  double worst = 0.0;
  for (int q = 0; q < v.size() / n; ++q) worst = std::max(worst, v.segment(q * n, n).norm());
  return worst;
}

namespace {

// Nullspace of the derivation identity over the span of the given matrices:
// column q of the constraint matrix is the stacked defect of basis_mats[q].
std::vector<Eigen::MatrixXd> derivation_nullspace(const MetricLieAlgebra& alg,
                                                  const std::vector<Eigen::MatrixXd>& basis_mats) {
  int n = alg.dim();
  int q = static_cast<int>(basis_mats.size());
  Eigen::MatrixXd m(static_cast<Eigen::Index>(n) * n * (n - 1) / 2, q);
  for (int c = 0; c < q; ++c) m.col(c) = derivation_defect_vector(alg, basis_mats[c]);
  Eigen::MatrixXd ns = nullspace(m, tol::kSvdCutoff, alg.scale());
  std::vector<Eigen::MatrixXd> out;
  for (int c = 0; c < ns.cols(); ++c) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
    for (int t = 0; t < q; ++t) d += ns(t, c) * basis_mats[t];
    Eigen::VectorXd v = vec(d);
    fix_sign(v);
    out.push_back(unvec(v, n, n));
  }
  return out;
}

}  // namespace

std::vector<Eigen::MatrixXd> derivation_space(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  std::vector<Eigen::MatrixXd> basis;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(r, c) = 1.0;
      basis.push_back(e);
    }
  return derivation_nullspace(alg, basis);
}

std::vector<Eigen::MatrixXd> symmetric_derivations(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  std::vector<Eigen::MatrixXd> basis;
  for (int r = 0; r < n; ++r)
    for (int c = r; c < n; ++c) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(r, c) = e(c, r) = (r == c) ? 1.0 : M_SQRT1_2;
      basis.push_back(e);
    }
  return derivation_nullspace(alg, basis);
}

std::vector<Eigen::MatrixXd> skew_derivations(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  std::vector<Eigen::MatrixXd> basis;
  for (int r = 0; r < n; ++r)
    for (int c = r + 1; c < n; ++c) {
      Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n, n);
      e(r, c) = M_SQRT1_2;
      e(c, r) = -M_SQRT1_2;
      basis.push_back(e);
    }
  return derivation_nullspace(alg, basis);
}

DerivationReport derivation_report(const MetricLieAlgebra& alg) {
  return {derivation_space(alg), symmetric_derivations(alg), skew_derivations(alg)};
}

AutomorphismCheck is_orthogonal_automorphism(const Eigen::MatrixXd& h,
                                             const MetricLieAlgebra& alg) {
  int n = alg.dim();
  if (h.rows() != n || h.cols() != n) throw AlgebraError("automorphism check: dimension mismatch");
  AutomorphismCheck r;
  r.orthogonality_defect = (h.transpose() * alg.gram() * h - alg.gram()).norm();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double d = (h * alg.bracket_basis(i, j) - alg.bracket(h.col(i), h.col(j))).norm();
      r.bracket_defect = std::max(r.bracket_defect, d);
    }
  double s = 1.0 + alg.scale();
  r.ok = r.orthogonality_defect <= tol::kRel * n && r.bracket_defect <= tol::kRel * s * s;
  return r;
}

void for_each_signed_permutation_automorphism(
    const MetricLieAlgebra& alg, const std::function<void(const Eigen::MatrixXd&)>& f) {
  int n = alg.dim();
  if (n > 8) throw AlgebraError("signed permutation enumeration limited to dim <= 8");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double tolerance = tol::kRel * (1.0 + alg.scale()) * (1.0 + alg.scale());
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // h e_j = s_j e_perm[j]
      auto column = [&](int j) { return perm[j]; };
      auto sign = [&](int j) { return (mask >> j) & 1u ? -1.0 : 1.0; };
      // bracket condition checked sparsely before building the matrix
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = i + 1; j < n && ok; ++j) {
          // [he_i, he_j] = s_i s_j [e_pi, e_pj]; compare with h [e_i,e_j]
          double s = sign(i) * sign(j);
          for (int k = 0; k < n; ++k) {
            double lhs = s * alg.c(column(i), column(j), column(k));
            double rhs = sign(k) * alg.c(i, j, k);
            if (std::abs(lhs - rhs) > tolerance) {
              ok = false;
              break;
            }
          }
        }
      if (!ok) continue;
      Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
      for (int j = 0; j < n; ++j) h(column(j), j) = sign(j);
      f(h);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Eigen::MatrixXd> signed_permutation_automorphisms(const MetricLieAlgebra& alg) {
  std::vector<Eigen::MatrixXd> out;
  for_each_signed_permutation_automorphism(alg, [&](const Eigen::MatrixXd& h) { out.push_back(h); });
  return out;
}

}  // namespace solsol

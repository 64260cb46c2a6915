#include "solsol/curvature.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "solsol/linalg.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

Eigen::VectorXd Connection::nabla(int i, int j) const {
  Eigen::VectorXd v(dim_);
  for (int k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

Eigen::VectorXd Connection::nabla(int i, const Eigen::VectorXd& v) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int j = 0; j < dim_; ++j) {
    if (v[j] == 0.0) continue;
    for (int k = 0; k < dim_; ++k) out[k] += v[j] * at(i, j, k);
  }
  return out;
}

Connection levi_civita(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  Eigen::LDLT<Eigen::MatrixXd> solver(alg.gram());
  if (solver.info() != Eigen::Success || !solver.isPositive())
    throw AlgebraError("levi_civita: gram not positive definite");
  Connection gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd rhs(n);
      Eigen::VectorXd ei = Eigen::VectorXd::Unit(n, i);
      Eigen::VectorXd ej = Eigen::VectorXd::Unit(n, j);
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd ek = Eigen::VectorXd::Unit(n, k);
        rhs[k] = 0.5 * (alg.inner(alg.bracket_basis(i, j), ek) -
                        alg.inner(alg.bracket(ej, ek), ei) + alg.inner(alg.bracket(ek, ei), ej));
      }
      Eigen::VectorXd sol = solver.solve(rhs);
      for (int k = 0; k < n; ++k) gamma.at(i, j, k) = sol[k];
    }
  return gamma;
}

namespace {

// nabla_v w for constant coordinate fields v, w
Eigen::VectorXd nabla_vec(const Connection& g, const Eigen::VectorXd& v, const Eigen::VectorXd& w) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(v.size());
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0.0) out += v[i] * g.nabla(i, w);
  return out;
}

}  // namespace

RiemannTensor riemann_tensor(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  Connection gamma = levi_civita(alg);
  RiemannTensor r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Eigen::VectorXd v = gamma.nabla(i, gamma.nabla(j, k)) - gamma.nabla(j, gamma.nabla(i, k)) -
                            nabla_vec(gamma, alg.bracket_basis(i, j), Eigen::VectorXd::Unit(n, k));
        for (int l = 0; l < n; ++l) r.at(i, j, k, l) = v[l];
      }
  return r;
}

Eigen::VectorXd RiemannTensor::apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& z) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      double f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        if (z[k] == 0.0) continue;
        for (int l = 0; l < dim_; ++l) out[l] += f * z[k] * at(i, j, k, l);
      }
    }
  }
  return out;
}

Eigen::MatrixXd ricci_oracle(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  RiemannTensor r = riemann_tensor(alg);
  // bilinear Ricci: ric(e_a, e_b) = tr(Z -> R(Z, e_a) e_b)
  Eigen::MatrixXd ric(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.at(i, a, b, i);
      ric(a, b) = s;
    }
  // raise one index
  return alg.gram().ldlt().solve(ric);
}

Eigen::MatrixXd ricci_fast(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  // gram-orthonormal frame f = e * S via Cholesky, structure constants in it
  Eigen::LLT<Eigen::MatrixXd> llt(alg.gram());
  if (llt.info() != Eigen::Success) throw AlgebraError("ricci_fast: gram not positive definite");
  Eigen::MatrixXd l = llt.matrixL();
  Eigen::MatrixXd s = l.transpose().inverse();
  Eigen::MatrixXd sinv = l.transpose();

  std::vector<double> c(static_cast<size_t>(n) * n * n, 0.0);
  auto C = [&](int i, int j, int k) -> double& {
    return c[(static_cast<size_t>(i) * n + j) * n + k];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Eigen::VectorXd br = sinv * alg.bracket(s.col(i), s.col(j));
      for (int k = 0; k < n; ++k) C(i, j, k) = br[k];
    }

  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  // moment term
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double m1 = 0.0, m2 = 0.0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          m1 += C(a, i, k) * C(b, i, k);
          m2 += C(i, k, a) * C(i, k, b);
        }
      ric(a, b) = -0.5 * m1 + 0.25 * m2;
      ric(b, a) = ric(a, b);
    }
  // Killing form term
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      double kf = 0.0;
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) kf += C(a, k, i) * C(b, i, k);
      ric(a, b) -= 0.5 * kf;
      ric(b, a) = ric(a, b);
    }
  // mean curvature term S(ad H), <H, e_a> = tr(ad e_a)
  Eigen::VectorXd h(n);
  for (int a = 0; a < n; ++a) {
    double t = 0.0;
    for (int k = 0; k < n; ++k) t += C(a, k, k);
    h[a] = t;
  }
  Eigen::MatrixXd adh = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < n; ++a)
    if (h[a] != 0.0)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) adh(k, j) += h[a] * C(a, j, k);
  ric -= 0.5 * (adh + adh.transpose());

  // back to the original basis as an operator
  return s * ric * sinv;
}

double sectional_curvature(const MetricLieAlgebra& alg, const RiemannTensor& r,
                           const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  double gxx = alg.inner(x, x), gyy = alg.inner(y, y), gxy = alg.inner(x, y);
  double denom = gxx * gyy - gxy * gxy;
  if (denom <= tol::kRel * tol::kRel * std::max(1.0, gxx * gyy))
    throw AlgebraError("sectional_curvature: degenerate plane");
  return alg.inner(r.apply(x, y, y), x) / denom;
}

double sectional_curvature(const MetricLieAlgebra& alg, const Eigen::VectorXd& x,
                           const Eigen::VectorXd& y) {
  return sectional_curvature(alg, riemann_tensor(alg), x, y);
}

NegativityScan negativity_scan(const MetricLieAlgebra& alg, int samples, uint64_t seed) {
  if (samples < 1) throw AlgebraError("negativity_scan: samples must be >= 1");
  int n = alg.dim();
  RiemannTensor r = riemann_tensor(alg);
  NegativityScan out;
  bool first = true;
  auto feed = [&](const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    double gxx = alg.inner(x, x), gyy = alg.inner(y, y), gxy = alg.inner(x, y);
    if (gxx * gyy - gxy * gxy <= 1e-12 * std::max(1.0, gxx * gyy)) return;
    double k = sectional_curvature(alg, r, x, y);
    if (first) {
      out.min = out.max = k;
      first = false;
    } else {
      out.min = std::min(out.min, k);
      out.max = std::max(out.max, k);
    }
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      feed(Eigen::VectorXd::Unit(n, i), Eigen::VectorXd::Unit(n, j));
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0xd1b54a32d192ed03ull);
  for (int t = 0; t < samples; ++t) feed(rng.normal_vector(n), rng.normal_vector(n));
  out.all_negative = !first && out.max < -1e-12;
  return out;
}

Eigen::VectorXd operator_spectrum(const MetricLieAlgebra& alg, const Eigen::MatrixXd& op) {
  Eigen::LLT<Eigen::MatrixXd> llt(alg.gram());
  Eigen::MatrixXd l = llt.matrixL();
  // self-adjoint wrt gram => L^T op L^{-T} symmetric
  Eigen::MatrixXd w = l.transpose() * op * l.transpose().inverse();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (w + w.transpose()));
  return es.eigenvalues();
}

double operator_norm(const MetricLieAlgebra& alg, const Eigen::MatrixXd& op) {
  Eigen::LLT<Eigen::MatrixXd> llt(alg.gram());
  Eigen::MatrixXd l = llt.matrixL();
  return (l.transpose() * op * l.transpose().inverse()).norm();
}

CurvatureReport curvature_report(const MetricLieAlgebra& alg, int samples, uint64_t seed) {
  CurvatureReport rep;
  rep.ricci_operator = ricci_fast(alg);
  rep.ricci_eigenvalues = operator_spectrum(alg, rep.ricci_operator);
  rep.scalar_curvature = rep.ricci_operator.trace();
  double sc = std::max(1.0, rep.ricci_eigenvalues.cwiseAbs().maxCoeff());
  for (int i = 0; i < rep.ricci_eigenvalues.size(); ++i) {
    double v = rep.ricci_eigenvalues[i];
    if (v < -tol::kRel * sc)
      ++rep.negative;
    else if (v > tol::kRel * sc)
      ++rep.positive;
    else
      ++rep.zero;
  }
  NegativityScan scan = negativity_scan(alg, samples, seed);
  rep.min_sectional_sample = scan.min;
  rep.max_sectional_sample = scan.max;
  return rep;
}

}  // namespace solsol

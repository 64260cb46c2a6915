#include "solsol/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "solsol/curvature.hpp"
#include "solsol/derivations.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

std::string EigenvalueType::str() const {
  std::string a, b;
  for (size_t i = 0; i < ks.size(); ++i) {
    if (i) a += "<";
    a += std::to_string(ks[i]);
  }
  for (size_t i = 0; i < ds.size(); ++i) {
    if (i) b += ",";
    b += std::to_string(ds[i]);
  }
  return "(" + a + ";" + b + ")";
}

namespace {

// best rational p/q ~ x with q <= qmax, by continued fractions
std::pair<long, long> rationalize(double x, long qmax) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(v);
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > qmax) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = v - fl;
    if (frac < 1e-12) break;
    v = 1.0 / frac;
  }
  return {p1, q1};
}

}  // namespace

EigenvalueType eigenvalue_type(const MetricLieAlgebra& alg, const Eigen::MatrixXd& d1) {
  Eigen::VectorXd ev = operator_spectrum(alg, d1);
  int n = static_cast<int>(ev.size());
  double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  double cluster = 1e-6 * scale;

  std::vector<double> vals;
  std::vector<int> mult;
  for (int i = 0; i < n; ++i) {
    if (!vals.empty() && ev[i] - vals.back() < cluster) {
      // running mean of the cluster
      vals.back() = (vals.back() * mult.back() + ev[i]) / (mult.back() + 1);
      ++mult.back();
    } else {
      vals.push_back(ev[i]);
      mult.push_back(1);
    }
  }
  if (vals.front() <= cluster)
    throw NotNilsolitonError("eigenvalue type: spectrum not positive");

  std::vector<long> ks(vals.size());
  long lcm = 1;
  std::vector<std::pair<long, long>> rats(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    double ratio = vals[i] / vals.front();
    auto [p, q] = rationalize(ratio, 64);
    if (q <= 0 || std::abs(ratio - double(p) / double(q)) > 1e-5)
      throw NotNilsolitonError("eigenvalue type: eigenvalues not rationally related");
    rats[i] = {p, q};
    lcm = std::lcm(lcm, q);
  }
  long g = 0;
  for (size_t i = 0; i < vals.size(); ++i) {
    ks[i] = rats[i].first * (lcm / rats[i].second);
    g = std::gcd(g, ks[i]);
  }
  EigenvalueType t;
  for (size_t i = 0; i < vals.size(); ++i) {
    long k = ks[i] / g;
    if (k <= 0 || (i > 0 && k <= t.ks.back()))
      throw NotNilsolitonError("eigenvalue type: spectrum not strictly graded");
    t.ks.push_back(static_cast<int>(k));
    t.ds.push_back(mult[i]);
  }
  return t;
}

NilsolitonCertificate nilsoliton_certificate(const MetricLieAlgebra& alg) {
  nilpotency_step(alg);  // throws NonNilpotentError otherwise
  int n = alg.dim();

  Eigen::MatrixXd ric = ricci_fast(alg);
  // defect(c) = L(Ric) - c L(I); L(I) = -[.,.] stacked, so the defect is
  // affine in c and the optimal c is a one-dimensional least squares.
  Eigen::VectorXd lric = derivation_defect_vector(alg, ric);
  Eigen::VectorXd lid = derivation_defect_vector(alg, Eigen::MatrixXd::Identity(n, n));

  NilsolitonCertificate cert;
  double denom = lid.squaredNorm();
  if (denom < 1e-300) {
    // abelian: Ric = 0, convention c = -1, D1 = I
    cert.c = -1.0;
    cert.D1 = Eigen::MatrixXd::Identity(n, n);
    cert.residual = 0.0;
    cert.eigen_type = eigenvalue_type(alg, cert.D1);
    return cert;
  }
  cert.c = lric.dot(lid) / denom;
  cert.D1 = ric - cert.c * Eigen::MatrixXd::Identity(n, n);
  cert.residual = (lric - cert.c * lid).norm();

  double scale = 1.0 + alg.scale() * alg.scale();
  if (cert.residual > tol::kCertify * scale)
    throw NotNilsolitonError("not a nilsoliton in this basis: derivation defect " +
                             std::to_string(cert.residual));
  if (cert.c >= 0.0) throw NotNilsolitonError("not a nilsoliton: c >= 0");
  cert.eigen_type = eigenvalue_type(alg, cert.D1);
  return cert;
}

EinsteinCheck einstein_check(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  Eigen::MatrixXd ric = ricci_fast(alg);
  EinsteinCheck r;
  r.c = ric.trace() / n;
  r.residual = operator_norm(alg, ric - r.c * Eigen::MatrixXd::Identity(n, n));
  r.is_einstein = r.residual <= tol::kCertify * (1.0 + alg.scale() * alg.scale());
  return r;
}

}  // namespace solsol

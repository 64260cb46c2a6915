#include "solsol/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace solsol {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = uniform();
    v = uniform();
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  have_spare_ = true;
  return u * f;
}

Eigen::VectorXd Rng::normal_vector(int n) {
  Eigen::VectorXd out(n);
  for (int i = 0; i < n; ++i) out[i] = normal();
  return out;
}

Eigen::VectorXd vec(const Eigen::MatrixXd& m) {
  Eigen::VectorXd v(m.size());
  int p = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v[p++] = m(r, c);
  return v;
}

Eigen::MatrixXd unvec(const Eigen::VectorXd& v, int rows, int cols) {
  Eigen::MatrixXd m(rows, cols);
  int p = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m(r, c) = v[p++];
  return m;
}

Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double cutoff_rel, double scale_floor) {
  int cols = static_cast<int>(m.cols());
  if (m.rows() == 0 || m.size() == 0) return Eigen::MatrixXd::Identity(cols, cols);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  if (smax <= cutoff_rel * scale_floor) return Eigen::MatrixXd::Identity(cols, cols);
  if (smax == 0.0) return Eigen::MatrixXd::Identity(cols, cols);
  double cut = cutoff_rel * std::max(smax, scale_floor);
  int rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()[rank] > cut) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m, double cutoff_rel) {
  if (m.cols() == 0) return m;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
  if (smax == 0.0) return Eigen::MatrixXd(m.rows(), 0);
  int rank = 0;
  while (rank < svd.singularValues().size() && svd.singularValues()[rank] > cutoff_rel * smax)
    ++rank;
  return svd.matrixU().leftCols(rank);
}

void fix_sign(Eigen::VectorXd& v) {
  double m = v.cwiseAbs().maxCoeff();
  if (m == 0.0) return;
  for (int i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-9 * m) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

namespace {

void refine_blocks(const Eigen::MatrixXd& a, Eigen::MatrixXd& q,
                   std::vector<std::pair<int, int>>& blocks, double cluster_tol) {
  std::vector<std::pair<int, int>> next;
  for (auto [lo, sz] : blocks) {
    if (sz == 1) {
      next.emplace_back(lo, 1);
      continue;
    }
    Eigen::MatrixXd sub = q.middleCols(lo, sz).transpose() * a * q.middleCols(lo, sz);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sub + sub.transpose()));
    q.middleCols(lo, sz) = q.middleCols(lo, sz) * es.eigenvectors();
    const auto& ev = es.eigenvalues();
    int start = 0;
    for (int i = 1; i <= sz; ++i) {
      if (i == sz || ev[i] - ev[start] > cluster_tol) {
        next.emplace_back(lo + start, i - start);
        start = i;
      }
    }
  }
  blocks = next;
}

}  // namespace

Eigen::MatrixXd simultaneous_diagonalize(const std::vector<Eigen::MatrixXd>& mats,
                                         double cluster_tol) {
  if (mats.empty()) return Eigen::MatrixXd();
  int n = static_cast<int>(mats[0].rows());
  Eigen::MatrixXd q = Eigen::MatrixXd::Identity(n, n);
  std::vector<std::pair<int, int>> blocks{{0, n}};
  for (const auto& a : mats) refine_blocks(a, q, blocks, cluster_tol);
  return q;
}

double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd qa = orthonormal_columns(a, 1e-12);
  Eigen::MatrixXd qb = orthonormal_columns(b, 1e-12);
  return (qa * qa.transpose() - qb * qb.transpose()).norm();
}

namespace {

void combinations(int k, int r, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    int i = r - 1;
    while (i >= 0 && idx[i] == k - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Eigen::VectorXd plucker(const Eigen::MatrixXd& m) {
  int k = static_cast<int>(m.rows());
  int r = static_cast<int>(m.cols());
  Eigen::MatrixXd q = orthonormal_columns(m, 1e-12);
  if (q.cols() != r) throw std::invalid_argument("plucker: rank-deficient basis");
  std::vector<std::vector<int>> combs;
  combinations(k, r, combs);
  Eigen::VectorXd p(static_cast<Eigen::Index>(combs.size()));
  for (size_t t = 0; t < combs.size(); ++t) {
    Eigen::MatrixXd minor(r, r);
    for (int a = 0; a < r; ++a) minor.row(a) = q.row(combs[t][a]);
    p[static_cast<Eigen::Index>(t)] = minor.determinant();
  }
  p.normalize();
  return p;
}

int colex_compare(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] > b[i] + tol) return 1;
    if (a[i] < b[i] - tol) return -1;
  }
  return 0;
}

}  // namespace solsol

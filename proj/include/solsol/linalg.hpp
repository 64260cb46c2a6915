#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace solsol {

// Deterministic RNG helpers. std::mt19937_64 bit output is pinned by the
// standard; the [-1,1] mapping below avoids the unspecified behaviour of
// std::uniform_real_distribution so seeded runs are reproducible everywhere.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  uint64_t next_u64() {
    // splitmix64
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [-1, 1]
  double uniform() {
    return 2.0 * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53) - 1.0;
  }
  // standard normal via Box-Muller on uniform bits
  double normal();
  Eigen::VectorXd normal_vector(int n);

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Eigen::VectorXd vec(const Eigen::MatrixXd& m);
Eigen::MatrixXd unvec(const Eigen::VectorXd& v, int rows, int cols);

// Orthonormal basis of the nullspace of m (columns), singular values below
// cutoff_rel * max(sigma_max, scale_floor) treated as zero. The floor keeps a
// matrix that is zero up to roundoff from being read as full rank; a zero (or
// empty) matrix yields the full space.
Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double cutoff_rel, double scale_floor = 0.0);

// Columns of m orthonormalized (rank-revealing); rank decided by the same
// relative cutoff.
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m, double cutoff_rel);

// Flips sign so the first entry with magnitude > rel * max|v| is positive.
void fix_sign(Eigen::VectorXd& v);

// Simultaneous orthogonal diagonalization of commuting symmetric matrices by
// recursive block refinement. Returns Q with Q^T A_i Q diagonal for all i.
Eigen::MatrixXd simultaneous_diagonalize(const std::vector<Eigen::MatrixXd>& mats,
                                         double cluster_tol);

// ||P_a - P_b||_F for the orthogonal projectors onto the column spans.
double subspace_distance(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

// Unit Plucker coordinate vector of the column span of m (k x r, full rank),
// defined up to a global sign: the r x r minors of an orthonormalized basis
// in lexicographic row-combination order.
Eigen::VectorXd plucker(const Eigen::MatrixXd& m);

// Colexicographic comparison with tolerance: coordinates compared from the
// last one down. Returns +1 if a > b, -1 if a < b, 0 if equal within tol.
int colex_compare(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol);

}  // namespace solsol

#pragma once

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace solsol {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonNilpotentError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// A metric Lie algebra: structure constants c(i,j,k) for
// [e_i, e_j] = sum_k c(i,j,k) e_k plus the Gram matrix of the inner product
// (identity = orthonormal basis). Antisymmetry in (i,j) holds exactly by
// construction; the Jacobi identity is a checked predicate, not enforced.
// Immutable in practice: operations take it by const reference and all
// library functions are pure.
class MetricLieAlgebra {
 public:
  MetricLieAlgebra() = default;
  explicit MetricLieAlgebra(int dim)
      : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim, 0.0),
        gram_(Eigen::MatrixXd::Identity(dim, dim)) {}

  static MetricLieAlgebra abelian(int dim) { return MetricLieAlgebra(dim); }

  int dim() const { return dim_; }
  const Eigen::MatrixXd& gram() const { return gram_; }
  void set_gram(const Eigen::MatrixXd& g);

  // 0-based indices.
  double c(int i, int j, int k) const { return c_[idx(i, j, k)]; }
  // Adds v to c(i,j,k) and -v to c(j,i,k).
  void add_c(int i, int j, int k, double v);

  Eigen::VectorXd bracket_basis(int i, int j) const;
  Eigen::VectorXd bracket(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;
  Eigen::MatrixXd ad(const Eigen::VectorXd& x) const;

  double inner(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    return x.dot(gram_ * y);
  }
  double norm(const Eigen::VectorXd& x) const;

  // max |c(i,j,k)|; 0 for the abelian algebra.
  double scale() const;

  bool operator==(const MetricLieAlgebra& other) const {
    return dim_ == other.dim_ && c_ == other.c_ && gram_ == other.gram_;
  }

 private:
  size_t idx(int i, int j, int k) const {
    return (static_cast<size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_ = 0;
  std::vector<double> c_;
  Eigen::MatrixXd gram_;
};

// Parses the coordinate-vector notation of a bracket, one string per
// coordinate: "(0,0,12)" is {"0","0","12"}, the k-th string being a sum of
// coeff*ij monomials meaning [e_i,e_j] = coeff * e_k. Pairs with i > j are
// accepted and antisymmetrized (tables write monomials like "52"); i == j is
// an error. Gram is the identity.
MetricLieAlgebra parse_bracket_notation(const std::vector<std::string>& terms);

// Renders the structure constants back into coordinate-vector notation with
// decimal coefficients, for display.
std::string bracket_notation(const MetricLieAlgebra& alg);

// Structure constants and gram of the same metric algebra in the basis
// f_j = sum_i S(i,j) e_i (S invertible).
MetricLieAlgebra change_basis(const MetricLieAlgebra& alg, const Eigen::MatrixXd& s);

// max over basis triples of |[[x,y],z] + [[y,z],x] + [[z,x],y]|.
double jacobi_defect(const MetricLieAlgebra& alg);

// Length of the lower central series: smallest k with C^k = 0 where
// C^1 = [g,g]. Abelian gives 1. Throws NonNilpotentError when the series
// stabilizes at a nonzero subspace.
int nilpotency_step(const MetricLieAlgebra& alg);

// JSON schema:
//   {"dim": n, "terms": [{"i":1,"j":2,"k":3,"coeff":"sqrt(3)"}], "gram": [[...]]}
// Indices are 1-based, coeff is a CoeffExpr string, gram is optional
// (row-major n x n array, omitted when it is the identity).
nlohmann::json algebra_to_json(const MetricLieAlgebra& alg);
MetricLieAlgebra algebra_from_json(const nlohmann::json& j);

}  // namespace solsol

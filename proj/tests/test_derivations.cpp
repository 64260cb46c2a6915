#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/derivations.hpp"
#include "solsol/linalg.hpp"

using namespace solsol;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

// Independent oracle for dim Der: build the constraint system directly from
// the bracket (no shared code path with derivation_space) and count the rank
// with a full-pivot LU.
int der_dim_oracle(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  int rows = 0;
  MatrixXd m = MatrixXd::Zero(n * n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int out = 0; out < n; ++out) {
        // D[e_i,e_j]_out - [De_i,e_j]_out - [e_i,De_j]_out
        for (int k = 0; k < n; ++k) m(rows, out * n + k) += alg.c(i, j, k);
        for (int a = 0; a < n; ++a) {
          m(rows, a * n + i) -= alg.c(a, j, out);
          m(rows, a * n + j) -= alg.c(i, a, out);
        }
        ++rows;
      }
  Eigen::FullPivLU<MatrixXd> lu(m.topRows(rows));
  lu.setThreshold(1e-10);
  return n * n - static_cast<int>(lu.rank());
}

bool span_contains(const std::vector<MatrixXd>& basis, const MatrixXd& target) {
  if (basis.empty()) return target.norm() <= 1e-9;
  MatrixXd b(target.size(), static_cast<Eigen::Index>(basis.size()));
  for (size_t q = 0; q < basis.size(); ++q) b.col(static_cast<Eigen::Index>(q)) = vec(basis[q]);
  VectorXd t = vec(target);
  VectorXd x = b.colPivHouseholderQr().solve(t);
  return (b * x - t).norm() <= 1e-8 * std::max(1.0, t.norm());
}

}  // namespace

TEST_CASE("derivation space dimensions") {
  // every endomorphism is a derivation of the zero bracket
  CHECK(derivation_space(MetricLieAlgebra::abelian(3)).size() == 9);
  CHECK(derivation_space(MetricLieAlgebra::abelian(4)).size() == 16);

  MetricLieAlgebra h3 = catalog_entry("h3").build();
  int expected = der_dim_oracle(h3);
  CHECK(expected == 6);
  CHECK(derivation_space(h3).size() == 6);

  // oracle agreement across a few table entries
  for (const char* id : {"eta2", "lambda4", "mu6", "mu24"}) {
    MetricLieAlgebra alg = catalog_entry(id).build();
    CAPTURE(id);
    CHECK(static_cast<int>(derivation_space(alg).size()) == der_dim_oracle(alg));
  }
}

TEST_CASE("derivation bases satisfy the identity and are orthonormal") {
  for (const char* id : {"h3", "eta2", "lambda5", "mu15", "mu30"}) {
    MetricLieAlgebra alg = catalog_entry(id).build();
    CAPTURE(id);
    DerivationReport rep = derivation_report(alg);
    CHECK(rep.sym_basis.size() + rep.skew_basis.size() <= rep.der_basis.size());
    auto check_basis = [&](const std::vector<MatrixXd>& basis) {
      for (size_t a = 0; a < basis.size(); ++a) {
        CHECK(derivation_defect(alg, basis[a]) <= 1e-8 * (1.0 + alg.scale()));
        for (size_t b = a; b < basis.size(); ++b) {
          double ip = vec(basis[a]).dot(vec(basis[b]));
          CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) <= 1e-8);
        }
      }
    };
    check_basis(rep.der_basis);
    check_basis(rep.sym_basis);
    check_basis(rep.skew_basis);
    for (const auto& s : rep.sym_basis) CHECK((s - s.transpose()).norm() <= 1e-9);
    for (const auto& s : rep.skew_basis) CHECK((s + s.transpose()).norm() <= 1e-9);
  }
}

TEST_CASE("symmetric derivations match the case analysis") {
  // p of R^n is all of sym(n)
  CHECK(symmetric_derivations(MetricLieAlgebra::abelian(4)).size() == 10);
  // h3: the 3-parameter family [[a,c],[c,b]] + (a+b)
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  auto p = symmetric_derivations(h3);
  CHECK(p.size() == 3);
  MatrixXd fam(3, 3);
  fam << 1, 0.5, 0, 0.5, 2, 0, 0, 0, 3;  // a=1, b=2, c=0.5
  CHECK(span_contains(p, fam));
  // mu18 is rank one with p spanned by diag(1,1,2,2,3,3)
  auto p18 = symmetric_derivations(catalog_entry("mu18").build());
  REQUIRE(p18.size() == 1);
  VectorXd d(6);
  d << 1, 1, 2, 2, 3, 3;
  CHECK(span_contains(p18, d.asDiagonal()));
  // eta2 contains the diag(a,b,c,a+b) family
  auto p2 = symmetric_derivations(catalog_entry("eta2").build());
  VectorXd f(4);
  f << 1, 2, 5, 3;
  CHECK(span_contains(p2, f.asDiagonal()));
}

TEST_CASE("skew derivations") {
  CHECK(skew_derivations(MetricLieAlgebra::abelian(4)).size() == 6);  // so(4)
  CHECK(skew_derivations(catalog_entry("lambda5").build()).empty());
  CHECK(skew_derivations(catalog_entry("h3").build()).size() == 1);
}

TEST_CASE("rank-one entries have p spanned by the listed diagonal") {
  struct Row {
    const char* id;
    std::vector<double> diag;
  };
  // the seven rank-one nilsolitons of dimension <= 6
  std::vector<Row> rows = {{"lambda2", {1, 2, 3, 4, 5}},    {"mu1", {1, 2, 3, 4, 5, 7}},
                           {"mu4", {1, 2, 3, 4, 5, 6}},     {"mu5", {1, 3, 4, 5, 6, 7}},
                           {"mu8", {1, 1, 2, 3, 3, 4}},     {"mu11", {1, 2, 3, 3, 4, 5}},
                           {"mu18", {1, 1, 2, 2, 3, 3}}};
  for (const auto& row : rows) {
    CAPTURE(row.id);
    auto p = symmetric_derivations(catalog_entry(row.id).build());
    REQUIRE(p.size() == 1);
    VectorXd d(static_cast<Eigen::Index>(row.diag.size()));
    for (size_t i = 0; i < row.diag.size(); ++i) d[static_cast<Eigen::Index>(i)] = row.diag[i];
    CHECK(span_contains(p, MatrixXd(d.asDiagonal())));
  }
}

TEST_CASE("multiplicity-free entries have diagonal p") {
  for (const auto& e : catalog()) {
    if (!e.multiplicity_free()) continue;
    CAPTURE(e.id);
    for (const auto& m : symmetric_derivations(e.build()))
      CHECK((m - MatrixXd(m.diagonal().asDiagonal())).norm() <= 1e-8);
  }
}

TEST_CASE("orthogonal automorphism check") {
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  CHECK(is_orthogonal_automorphism(MatrixXd::Identity(3, 3), h3).ok);

  // diag(H, det H) with H a rotation
  double th = 0.7;
  MatrixXd rot = MatrixXd::Zero(3, 3);
  rot(0, 0) = std::cos(th);
  rot(0, 1) = -std::sin(th);
  rot(1, 0) = std::sin(th);
  rot(1, 1) = std::cos(th);
  rot(2, 2) = 1.0;
  CHECK(is_orthogonal_automorphism(rot, h3).ok);

  // diag(1,1,-1) breaks [e1,e2] = e3
  MatrixXd f = MatrixXd::Identity(3, 3);
  f(2, 2) = -1.0;
  AutomorphismCheck chk = is_orthogonal_automorphism(f, h3);
  CHECK(!chk.ok);
  CHECK(chk.orthogonality_defect <= 1e-12);
  CHECK(chk.bracket_defect == doctest::Approx(2.0));

  // non-orthogonal scaling
  CHECK(!is_orthogonal_automorphism(2.0 * MatrixXd::Identity(3, 3), h3).ok);
  CHECK_THROWS_AS(is_orthogonal_automorphism(MatrixXd::Identity(4, 4), h3), AlgebraError);
}

TEST_CASE("signed permutation automorphisms") {
  // all of them on an abelian algebra
  CHECK(signed_permutation_automorphisms(MetricLieAlgebra::abelian(2)).size() == 8);
  CHECK(signed_permutation_automorphisms(MetricLieAlgebra::abelian(3)).size() == 48);

  // h3 contains the swap of e1,e2 composed with e3 -> -e3
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  MatrixXd swp = MatrixXd::Zero(3, 3);
  swp(1, 0) = swp(0, 1) = 1.0;
  swp(2, 2) = -1.0;
  bool found = false;
  for (const auto& h : signed_permutation_automorphisms(h3))
    if ((h - swp).norm() <= 1e-12) found = true;
  CHECK(found);

  // eta1 = (0,0,12,13) admits only diagonal sign matrices: s1 s2 = s3 and
  // s1 s3 = s4 leave 4 of them
  auto auts = signed_permutation_automorphisms(catalog_entry("eta1").build());
  CHECK(auts.size() == 4);
  for (const auto& h : auts) CHECK((h - MatrixXd(h.diagonal().asDiagonal())).norm() <= 1e-12);
}

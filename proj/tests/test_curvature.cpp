#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/curvature.hpp"
#include "solsol/moduli.hpp"

using namespace solsol;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

MetricLieAlgebra hyperbolic_plane() {
  // extension of R^1 by the identity derivation: [X0,X1] = X1, <X0,X0> = 1
  MetricLieAlgebra r1 = MetricLieAlgebra::abelian(1);
  return extend(nilsoliton_certificate(r1), r1, {MatrixXd::Identity(1, 1)}).algebra;
}

}  // namespace

TEST_CASE("levi-civita on flat and nilpotent examples") {
  Connection flat = levi_civita(MetricLieAlgebra::abelian(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(flat.nabla(i, j).norm() == 0.0);

  // h3: nabla_{e1} e2 = (1/2) e3
  Connection g = levi_civita(catalog_entry("h3").build());
  CHECK((g.nabla(0, 1) - 0.5 * Eigen::Vector3d::Unit(2)).norm() <= 1e-14);

  // bi-invariant check: so(3) has skew ad, so nabla_X Y = (1/2)[X,Y]
  MetricLieAlgebra so3(3);
  so3.add_c(0, 1, 2, 1.0);
  so3.add_c(1, 2, 0, 1.0);
  so3.add_c(2, 0, 1, 1.0);
  REQUIRE(jacobi_defect(so3) <= 1e-14);
  Connection gs = levi_civita(so3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK((gs.nabla(i, j) - 0.5 * so3.bracket_basis(i, j)).norm() <= 1e-14);
}

TEST_CASE("connection is metric and torsion free") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    MetricLieAlgebra alg = testing::random_solvable(rng);
    Connection g = levi_civita(alg);
    int n = alg.dim();
    double s = 1.0 + alg.scale();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        // torsion: nabla_i e_j - nabla_j e_i = [e_i, e_j]
        CHECK((g.nabla(i, j) - g.nabla(j, i) - alg.bracket_basis(i, j)).norm() <= 1e-10 * s);
        for (int k = 0; k < n; ++k) {
          // left-invariant fields have constant inner products
          double comp = alg.inner(g.nabla(i, j), Eigen::VectorXd::Unit(n, k)) +
                        alg.inner(Eigen::VectorXd::Unit(n, j), g.nabla(i, k));
          CHECK(std::abs(comp) <= 1e-10 * s * s);
        }
      }
  }
}

TEST_CASE("riemann tensor on model spaces") {
  // flat
  RiemannTensor flat = riemann_tensor(MetricLieAlgebra::abelian(4));
  double worst = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        worst = std::max(worst, flat.apply(VectorXd::Unit(4, i), VectorXd::Unit(4, j),
                                           VectorXd::Unit(4, k))
                                    .norm());
  CHECK(worst == 0.0);

  // hyperbolic plane: constant curvature -1
  MetricLieAlgebra h2 = hyperbolic_plane();
  CHECK(sectional_curvature(h2, Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) ==
        doctest::Approx(-1.0));
  CHECK(sectional_curvature(h2, Eigen::Vector2d(1, 1), Eigen::Vector2d(2, -1)) ==
        doctest::Approx(-1.0));

  // h3 plane ratios: sec(e1,e2) = -3 sec(e1,e3), sec(e1,e3) = 1/4
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  double k12 = sectional_curvature(h3, Eigen::Vector3d::Unit(0), Eigen::Vector3d::Unit(1));
  double k13 = sectional_curvature(h3, Eigen::Vector3d::Unit(0), Eigen::Vector3d::Unit(2));
  CHECK(k13 == doctest::Approx(0.25));
  CHECK(k12 == doctest::Approx(-3.0 * k13));

  CHECK_THROWS_AS(sectional_curvature(h3, Eigen::Vector3d::Unit(0), Eigen::Vector3d::Unit(0)),
                  AlgebraError);
}

TEST_CASE("riemann symmetries and first Bianchi identity") {
  Rng rng(11);
  for (int trial = 0; trial < 6; ++trial) {
    MetricLieAlgebra alg = testing::random_solvable(rng);
    int n = alg.dim();
    RiemannTensor r = riemann_tensor(alg);
    double s = std::pow(1.0 + alg.scale(), 2);
    for (int rep = 0; rep < 20; ++rep) {
      VectorXd x = rng.normal_vector(n), y = rng.normal_vector(n), z = rng.normal_vector(n),
               w = rng.normal_vector(n);
      // first Bianchi
      CHECK((r.apply(x, y, z) + r.apply(y, z, x) + r.apply(z, x, y)).norm() <= 1e-8 * s);
      // <R(X,Y)Z,W> = -<R(Y,X)Z,W> = -<R(X,Y)W,Z> = <R(Z,W)X,Y>
      double a = alg.inner(r.apply(x, y, z), w);
      CHECK(a == doctest::Approx(-alg.inner(r.apply(y, x, z), w)).epsilon(1e-6));
      CHECK(a == doctest::Approx(-alg.inner(r.apply(x, y, w), z)).epsilon(1e-6));
      CHECK(a == doctest::Approx(alg.inner(r.apply(z, w, x), y)).epsilon(1e-6));
    }
  }
}

TEST_CASE("ricci oracle pins the sign convention on h3") {
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  MatrixXd ric = ricci_oracle(h3);
  MatrixXd want = Eigen::Vector3d(-0.5, -0.5, 0.5).asDiagonal();
  CHECK((ric - want).norm() <= 1e-13);
  CHECK((ricci_fast(h3) - want).norm() <= 1e-13);
  CHECK(ricci_oracle(MetricLieAlgebra::abelian(5)).norm() == 0.0);
  CHECK(ricci_fast(MetricLieAlgebra::abelian(5)).norm() == 0.0);
}

TEST_CASE("two-path ricci agreement on seeded random solvable algebras") {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    MetricLieAlgebra alg = testing::random_solvable(rng);
    REQUIRE(alg.dim() <= 7);
    MatrixXd a = ricci_oracle(alg);
    MatrixXd b = ricci_fast(alg);
    CAPTURE(trial);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-10);
    // both are self-adjoint for the gram
    CHECK((alg.gram() * b - b.transpose() * alg.gram()).norm() <= 1e-9);
    // scalar curvature is the trace, basis independent
    CHECK(a.trace() == doctest::Approx(b.trace()).epsilon(1e-9));
  }
}

TEST_CASE("negativity scan") {
  NegativityScan hyp = negativity_scan(hyperbolic_plane(), 64, 5);
  CHECK(hyp.all_negative);
  CHECK(hyp.min == doctest::Approx(-1.0));
  CHECK(hyp.max == doctest::Approx(-1.0));

  NegativityScan flat = negativity_scan(MetricLieAlgebra::abelian(3), 64, 5);
  CHECK(!flat.all_negative);
  CHECK(std::abs(flat.min) <= 1e-14);
  CHECK(std::abs(flat.max) <= 1e-14);

  CHECK_THROWS_AS(negativity_scan(MetricLieAlgebra::abelian(3), 0, 1), AlgebraError);

  // determinism
  MetricLieAlgebra h3 = catalog_entry("h3").build();
  NegativityScan s1 = negativity_scan(h3, 128, 9);
  NegativityScan s2 = negativity_scan(h3, 128, 9);
  CHECK(s1.min == s2.min);
  CHECK(s1.max == s2.max);
}

TEST_CASE("curvature report") {
  CurvatureReport rep = curvature_report(catalog_entry("h3").build(), 64, 1);
  CHECK(rep.negative == 2);
  CHECK(rep.zero == 0);
  CHECK(rep.positive == 1);
  CHECK(rep.scalar_curvature == doctest::Approx(-0.5));
  CHECK(rep.ricci_eigenvalues[0] == doctest::Approx(-0.5));
  CHECK(rep.ricci_eigenvalues[2] == doctest::Approx(0.5));
  // signature counts match the eigenvalue list
  CHECK(rep.negative + rep.zero + rep.positive == rep.ricci_eigenvalues.size());
}

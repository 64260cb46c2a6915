#include <Eigen/Dense>
#include <cmath>

#include "doctest.h"
#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/curvature.hpp"
#include "solsol/derivations.hpp"
#include "solsol/soliton.hpp"

using namespace solsol;
using Eigen::MatrixXd;
using Eigen::VectorXd;

TEST_CASE("h3 certificate") {
  // Ric(h3) = diag(-1/2,-1/2,1/2) forces c = -3/2 through d3 = d1 + d2
  NilsolitonCertificate cert = nilsoliton_certificate(catalog_entry("h3").build());
  CHECK(cert.c == doctest::Approx(-1.5));
  CHECK((cert.D1 - MatrixXd(Eigen::Vector3d(1, 1, 2).asDiagonal())).norm() <= 1e-12);
  CHECK(cert.residual <= 1e-12);
  CHECK(cert.eigen_type.str() == "(1<2;2,1)");
}

TEST_CASE("abelian convention") {
  NilsolitonCertificate cert = nilsoliton_certificate(MetricLieAlgebra::abelian(5));
  CHECK(cert.c == -1.0);
  CHECK((cert.D1 - MatrixXd::Identity(5, 5)).norm() == 0.0);
  CHECK(cert.eigen_type.str() == "(1;5)");
}

TEST_CASE("certificate rejections") {
  // non-nilpotent input
  MetricLieAlgebra solv(2);
  solv.add_c(0, 1, 1, 1.0);
  CHECK_THROWS_AS(nilsoliton_certificate(solv), NonNilpotentError);

  // a nilpotent algebra whose canonical metric is not a soliton in this
  // basis: perturb one h3-like coefficient on a two-step algebra
  MetricLieAlgebra bad = parse_bracket_notation({"0", "0", "0", "0", "12+2*34"});
  CHECK_THROWS_AS(nilsoliton_certificate(bad), NotNilsolitonError);
  CHECK_THROWS_WITH_AS(nilsoliton_certificate(bad),
                       doctest::Contains("not a nilsoliton"), NotNilsolitonError);
}

TEST_CASE("eigenvalue types of selected entries") {
  CHECK(nilsoliton_certificate(catalog_entry("lambda4").build()).eigen_type.str() == "(1<2;4,1)");
  CHECK(nilsoliton_certificate(catalog_entry("lambda1").build()).eigen_type.str() ==
        "(2<9<11<13<15;1,1,1,1,1)");
  CHECK(nilsoliton_certificate(catalog_entry("mu32").build()).eigen_type.str() == "(3<4<6;4,1,1)");
}

TEST_CASE("eigenvalue_type rationalization") {
  MetricLieAlgebra flat = MetricLieAlgebra::abelian(3);
  CHECK(eigenvalue_type(flat, Eigen::Vector3d(1, 1, 2).asDiagonal()).str() == "(1<2;2,1)");
  CHECK(eigenvalue_type(flat, Eigen::Vector3d(0.5, 0.75, 1.25).asDiagonal()).str() ==
        "(2<3<5;1,1,1)");
  // not rationally related within denominator 64
  CHECK_THROWS_AS(eigenvalue_type(flat, Eigen::Vector3d(1.0, M_SQRT2, 2.0).asDiagonal()),
                  NotNilsolitonError);
  // not positive
  CHECK_THROWS_AS(eigenvalue_type(flat, Eigen::Vector3d(-1, 1, 2).asDiagonal()),
                  NotNilsolitonError);
}

TEST_CASE("all 50 table rows certify with the stated type") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    NilsolitonCertificate cert = nilsoliton_certificate(e.build());
    CHECK(cert.residual <= 1e-8);
    CHECK(cert.c < 0.0);
    CHECK(cert.eigen_type.ks == e.type_k);
    CHECK(cert.eigen_type.ds == e.type_d);
  }
}

TEST_CASE("soliton derivation is trace orthogonal to skew derivations") {
  for (const char* id : {"h3", "eta2", "lambda4", "lambda6", "mu16", "mu28", "mu30"}) {
    CAPTURE(id);
    MetricLieAlgebra alg = catalog_entry(id).build();
    NilsolitonCertificate cert = nilsoliton_certificate(alg);
    for (const auto& a : skew_derivations(alg))
      CHECK(std::abs((cert.D1 * a).trace()) <= 1e-9);
  }
}

TEST_CASE("scaling covariance: t mu gives t^2 c and t^2 D1, same type") {
  for (const char* id : {"h3", "lambda5", "mu24"}) {
    CAPTURE(id);
    const CatalogEntry& e = catalog_entry(id);
    NilsolitonCertificate base = nilsoliton_certificate(e.build());
    for (double t : {2.0, 0.5}) {
      MetricLieAlgebra scaled(e.dim);
      MetricLieAlgebra alg = e.build();
      for (int i = 0; i < e.dim; ++i)
        for (int j = i + 1; j < e.dim; ++j)
          for (int k = 0; k < e.dim; ++k)
            if (alg.c(i, j, k) != 0.0) scaled.add_c(i, j, k, t * alg.c(i, j, k));
      NilsolitonCertificate cert = nilsoliton_certificate(scaled);
      CHECK(cert.c == doctest::Approx(t * t * base.c));
      CHECK((cert.D1 - t * t * base.D1).norm() <= 1e-9 * t * t);
      CHECK(cert.eigen_type.str() == base.eigen_type.str());
    }
  }
}

TEST_CASE("einstein check") {
  EinsteinCheck flat = einstein_check(MetricLieAlgebra::abelian(4));
  CHECK(flat.is_einstein);
  CHECK(flat.c == 0.0);

  EinsteinCheck h3 = einstein_check(catalog_entry("h3").build());
  CHECK(!h3.is_einstein);
  CHECK(h3.residual > 1e-4);
}

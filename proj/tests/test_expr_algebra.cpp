#include <cmath>

#include "doctest.h"
#include "solsol/algebra.hpp"
#include "solsol/expr.hpp"

#include <nlohmann/json.hpp>

using namespace solsol;

TEST_CASE("coefficient expressions") {
  CHECK(CoeffExpr::parse("2").value() == 2.0);
  CHECK(CoeffExpr::parse("4/3").value() == doctest::Approx(4.0 / 3.0));
  CHECK(CoeffExpr::parse("sqrt(3)").value() == doctest::Approx(std::sqrt(3.0)));
  CHECK(CoeffExpr::parse("-sqrt(35/136)").value() == doctest::Approx(-std::sqrt(35.0 / 136.0)));
  CHECK(CoeffExpr::parse("1/2*sqrt(3)").value() == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(CoeffExpr::parse("0.25").value() == 0.25);
  CHECK(CoeffExpr::parse(" -2 ").value() == -2.0);

  CHECK_THROWS_AS(CoeffExpr::parse("sqrt(-1)"), ExprError);
  CHECK_THROWS_AS(CoeffExpr::parse("1/0"), ExprError);
  CHECK_THROWS_AS(CoeffExpr::parse("sqrt(3"), ExprError);
  CHECK_THROWS_AS(CoeffExpr::parse("2**3"), ExprError);
  CHECK_THROWS_AS(CoeffExpr::parse(""), ExprError);

  // decimal form round-trips through the grammar
  double v = -0.12345678901234567;
  CHECK(CoeffExpr::parse(CoeffExpr::from_value(v).str()).value() == v);
}

TEST_CASE("bracket notation parsing") {
  // (0,0,12): the 3-dimensional Heisenberg algebra
  MetricLieAlgebra h3 = parse_bracket_notation({"0", "0", "12"});
  CHECK(h3.dim() == 3);
  CHECK(h3.c(0, 1, 2) == 1.0);
  CHECK(h3.c(1, 0, 2) == -1.0);
  CHECK(h3.gram().isIdentity(0.0));

  // (0,0,0,0,12+34)
  MetricLieAlgebra l4 = parse_bracket_notation({"0", "0", "0", "0", "12+34"});
  CHECK(l4.c(0, 1, 4) == 1.0);
  CHECK(l4.c(2, 3, 4) == 1.0);

  // zero bracket on R^2
  MetricLieAlgebra r2 = parse_bracket_notation({"0", "0"});
  CHECK(r2.scale() == 0.0);

  // reversed index pairs antisymmetrize: "42" means [e4,e2]
  MetricLieAlgebra rev = parse_bracket_notation({"0", "0", "0", "0", "42"});
  CHECK(rev.c(3, 1, 4) == 1.0);
  CHECK(rev.c(1, 3, 4) == -1.0);

  // coefficients with radicals and signs
  MetricLieAlgebra m20 = parse_bracket_notation({"0", "0", "-12", "sqrt(3)*12", "2*14",
                                                 "24-sqrt(3)*23"});
  CHECK(m20.c(0, 1, 2) == -1.0);
  CHECK(m20.c(0, 1, 3) == doctest::Approx(std::sqrt(3.0)));
  CHECK(m20.c(1, 2, 5) == doctest::Approx(-std::sqrt(3.0)));

  CHECK_THROWS_AS(parse_bracket_notation({"0", "0", "11"}), AlgebraError);     // i = j
  CHECK_THROWS_AS(parse_bracket_notation({"0", "0", "14"}), AlgebraError);     // out of range
  CHECK_THROWS_AS(parse_bracket_notation({"0", "0", "zz*12"}), AlgebraError);  // bad coeff
  CHECK_THROWS_AS(parse_bracket_notation({}), AlgebraError);
}

TEST_CASE("antisymmetry is exact for parsed algebras") {
  MetricLieAlgebra alg = parse_bracket_notation(
      {"0", "0", "sqrt(7)*12", "sqrt(15/2)*13", "3*14", "sqrt(15/2)*23+2*15"});
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = 0; j < alg.dim(); ++j)
      for (int k = 0; k < alg.dim(); ++k) CHECK(alg.c(i, j, k) == -alg.c(j, i, k));
}

TEST_CASE("jacobi defect") {
  CHECK(jacobi_defect(MetricLieAlgebra::abelian(4)) == 0.0);
  // 2-step: all triple brackets vanish
  CHECK(jacobi_defect(parse_bracket_notation({"0", "0", "12"})) == 0.0);

  // c(1,2,3) = c(1,3,4) = c(2,3,1) = 1: expanding the cyclic sum by hand,
  // [[e1,e2],e3] = [e3,e3] = 0, [[e2,e3],e1] = [e1,e1] = 0,
  // [[e3,e1],e2] = [-e4,e2] = 0, and every other triple dies the same way,
  // so the defect is 0 although the algebra is not nilpotent.
  MetricLieAlgebra t(4);
  t.add_c(0, 1, 2, 1.0);
  t.add_c(0, 2, 3, 1.0);
  t.add_c(1, 2, 0, 1.0);
  CHECK(jacobi_defect(t) == 0.0);
  CHECK_THROWS_AS(nilpotency_step(t), NonNilpotentError);

  // [e1,e2]=e3, [e2,e3]=e3: the (1,2,3) cyclic sum is
  // [e3,e3] + [e3,e1] + [-e3,e2] = 0 + 0 + e3, defect 1
  MetricLieAlgebra u(3);
  u.add_c(0, 1, 2, 1.0);
  u.add_c(1, 2, 2, 1.0);
  CHECK(jacobi_defect(u) == doctest::Approx(1.0));
}

TEST_CASE("nilpotency step") {
  CHECK(nilpotency_step(MetricLieAlgebra::abelian(5)) == 1);
  CHECK(nilpotency_step(parse_bracket_notation({"0", "0", "12"})) == 2);
  // free 3-step nilpotent algebra on 2 generators
  CHECK(nilpotency_step(parse_bracket_notation({"0", "0", "0", "12", "13", "23"})) == 3);
  // the C-series of mu1 drops 4 -> 3 -> 2 -> 1 -> 0
  CHECK(nilpotency_step(parse_bracket_notation(
            {"0", "0", "sqrt(13)*12", "4*13", "sqrt(12)*14+2*23", "sqrt(12)*34+sqrt(13)*52"})) ==
        5);
}

TEST_CASE("algebra JSON schema round trip") {
  MetricLieAlgebra alg = parse_bracket_notation({"0", "0", "sqrt(3)*12", "sqrt(3)*13",
                                                 "sqrt(2)*14+sqrt(2)*23"});
  nlohmann::json j = algebra_to_json(alg);
  MetricLieAlgebra back = algebra_from_json(j);
  CHECK(back == alg);

  // explicit gram survives
  Eigen::MatrixXd g = Eigen::MatrixXd::Identity(5, 5);
  g(0, 0) = 4.0;
  g(0, 1) = g(1, 0) = 0.5;
  alg.set_gram(g);
  back = algebra_from_json(algebra_to_json(alg));
  CHECK(back == alg);

  CHECK_THROWS_AS(algebra_from_json(nlohmann::json{{"terms", nlohmann::json::array()}}),
                  AlgebraError);
  nlohmann::json bad = {{"dim", 3},
                        {"terms", {{{"i", 1}, {"j", 1}, {"k", 2}, {"coeff", "1"}}}}};
  CHECK_THROWS_AS(algebra_from_json(bad), AlgebraError);
}

TEST_CASE("gram validation") {
  MetricLieAlgebra alg(2);
  Eigen::MatrixXd g(2, 2);
  g << 1, 2, 2, 1;  // indefinite
  CHECK_THROWS_AS(alg.set_gram(g), AlgebraError);
  g << 1, 0.5, 0.5, 2;
  alg.set_gram(g);
  CHECK(alg.inner(Eigen::Vector2d(1, 0), Eigen::Vector2d(0, 1)) == 0.5);
}

TEST_CASE("bracket notation display") {
  CHECK(bracket_notation(parse_bracket_notation({"0", "0", "12"})) == "(0,0,12)");
  CHECK(bracket_notation(parse_bracket_notation({"0", "0", "0", "0", "12+34"})) ==
        "(0,0,0,0,12+34)");
  CHECK(bracket_notation(parse_bracket_notation({"0", "0", "-12", "2*13"})) == "(0,0,-12,2*13)");
}

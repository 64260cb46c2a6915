#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/rank_weyl.hpp"

using namespace solsol;

TEST_CASE("catalog has the 50 classified nilsolitons") {
  CHECK(catalog().size() == 50);
  std::set<std::string> ids;
  int by_dim[7] = {0, 0, 0, 0, 0, 0, 0};
  for (const auto& e : catalog()) {
    CHECK(ids.insert(e.id).second);
    REQUIRE(e.dim >= 1);
    REQUIRE(e.dim <= 6);
    ++by_dim[e.dim];
  }
  CHECK(by_dim[1] == 1);
  CHECK(by_dim[2] == 1);
  CHECK(by_dim[3] == 2);
  CHECK(by_dim[4] == 3);
  CHECK(by_dim[5] == 9);
  CHECK(by_dim[6] == 34);
}

TEST_CASE("catalog lookup and aliases") {
  CHECK(catalog_entry("h3").rank == 2);
  CHECK(catalog_entry("mu18").rank == 1);
  CHECK(catalog_entry("mu34").rank == 6);
  CHECK(catalog_entry("R6").id == "mu34");
  CHECK(catalog_entry("R4").id == "eta3");
  CHECK(catalog_entry("R5").id == "lambda9");
  CHECK(has_catalog_entry("lambda4"));
  CHECK(!has_catalog_entry("nope"));
  CHECK_THROWS_AS(catalog_entry("nope"), UnknownIdError);
}

TEST_CASE("every entry parses, is a nilpotent Lie algebra, and round-trips") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    MetricLieAlgebra alg = e.build();
    CHECK(alg.dim() == e.dim);
    double scale = std::max(1.0, alg.scale());
    CHECK(jacobi_defect(alg) <= 1e-12 * scale);
    int step = nilpotency_step(alg);
    CHECK(step <= 5);
    CHECK(step >= 1);

    // parse(serialize(entry)) is the identity on the structure tensor
    MetricLieAlgebra back = algebra_from_json(algebra_to_json(alg));
    CHECK(back == alg);

    // eigenvalue type data is well formed
    REQUIRE(e.type_k.size() == e.type_d.size());
    int total = 0, g = 0;
    for (size_t i = 0; i < e.type_k.size(); ++i) {
      if (i) CHECK(e.type_k[i] > e.type_k[i - 1]);
      CHECK(e.type_k[i] > 0);
      CHECK(e.type_d[i] > 0);
      total += e.type_d[i];
      g = std::gcd(g, e.type_k[i]);
    }
    CHECK(total == e.dim);
    CHECK(g == 1);
    CHECK(e.rank >= 0);
    CHECK(e.rank <= e.dim);
  }
}

TEST_CASE("published families are commuting symmetric derivation frames") {
  for (const auto& e : catalog()) {
    CAPTURE(e.id);
    REQUIRE(static_cast<int>(e.family.size()) == e.rank);
    MetricLieAlgebra alg = e.build();
    AbelianFrame frame = frame_from_basis(alg, e.family);
    CHECK(frame.rank == e.rank);
    if (e.einstein_point.size() > 0) CHECK(e.einstein_point.size() == e.rank);
    for (int i : e.domain_perm) {
      CHECK(i >= 0);
      CHECK(i < e.rank);
    }
  }
}

TEST_CASE("type strings render like the tables") {
  CHECK(catalog_entry("h3").type_string() == "(1<2;2,1)");
  CHECK(catalog_entry("lambda1").type_string() == "(2<9<11<13<15;1,1,1,1,1)");
  CHECK(catalog_entry("mu32").type_string() == "(3<4<6;4,1,1)");
  CHECK(catalog_entry("mu34").type_string() == "(1;6)");
  CHECK(catalog_entry("h3").family_string() == "diag(a,b,a+b)");
  CHECK(catalog_entry("lambda4").family_string() == "diag(a,b,c,a+b-c,a+b)");
}

#include "solsol/catalog.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace solsol {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<MatrixXd> diag_family(const std::vector<std::vector<double>>& rows) {
  std::vector<MatrixXd> out;
  for (const auto& r : rows) {
    MatrixXd m = MatrixXd::Zero(static_cast<int>(r.size()), static_cast<int>(r.size()));
    for (size_t i = 0; i < r.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = r[i];
    out.push_back(m);
  }
  return out;
}

MatrixXd sym_pair(int n, int i, int j, double v) {
  MatrixXd m = MatrixXd::Zero(n, n);
  m(i, j) = v;
  m(j, i) = v;
  return m;
}

// signed permutation: entry s[t] sends e_{t} to sign(s[t]) * e_{|s[t]|-1}
MatrixXd signed_perm(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  MatrixXd m = MatrixXd::Zero(n, n);
  for (int t = 0; t < n; ++t) m(std::abs(s[t]) - 1, t) = s[t] > 0 ? 1.0 : -1.0;
  return m;
}

VectorXd point(std::initializer_list<double> v) {
  VectorXd p(static_cast<Eigen::Index>(v.size()));
  int i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

struct Spec {
  const char* id;
  std::vector<std::string> terms;
  int rank;
  std::vector<int> tk, td;
  std::vector<std::vector<double>> fam;  // diagonal families; non-diagonal set below
  const char* domain = "";
  std::vector<int> dperm = {};
  std::vector<double> epoint = {};
  const char* note = "";
};

std::vector<CatalogEntry> build_catalog() {
  std::vector<Spec> specs = {
      // dimension <= 3
      {"R1", {"0"}, 1, {1}, {1}, {{1}}, "", {}, {1}},
      {"R2", {"0", "0"}, 2, {1}, {2}, {{1, 0}, {0, 1}}, "F1_1", {}, {1, 1}},
      {"R3", {"0", "0", "0"}, 3, {1}, {3}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "F2_4", {}, {1, 1, 1}},
      {"h3", {"0", "0", "12"}, 2, {1, 2}, {2, 1}, {{1, 0, 1}, {0, 1, 1}}, "F1_1", {}, {1, 1}},
      // dimension 4
      {"eta1", {"0", "0", "12", "13"}, 2, {1, 2, 3, 4}, {1, 1, 1, 1},
       {{1, 0, 1, 2}, {0, 1, 1, 1}}, "PR2", {}, {1, 2}},
      {"eta2", {"0", "0", "0", "12"}, 3, {2, 3, 4}, {2, 1, 1},
       {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 0}}, "F2_1", {}, {2, 2, 3}},
      {"eta3", {"0", "0", "0", "0"}, 4, {1}, {4},
       {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, "", {}, {1, 1, 1, 1}},
      // dimension 5
      {"lambda1", {"0", "0", "sqrt(3)*12", "2*13", "sqrt(3)*14"}, 2, {2, 9, 11, 13, 15},
       {1, 1, 1, 1, 1}, {{1, 0, 1, 2, 3}, {0, 1, 1, 1, 1}}, "PR2", {}, {2, 9},
       "the table prints coefficients (3,4,3), which fail the soliton equation;"
       " (sqrt(3),2,sqrt(3)) satisfies it and reproduces the stated type"},
      {"lambda2", {"0", "0", "sqrt(3)*12", "sqrt(3)*13", "sqrt(2)*14+sqrt(2)*23"}, 1,
       {1, 2, 3, 4, 5}, {1, 1, 1, 1, 1}, {{1, 2, 3, 4, 5}}, "", {}, {1}},
      {"lambda3", {"0", "0", "0", "sqrt(2)*12", "23+sqrt(2)*14"}, 2, {3, 4, 6, 7, 10},
       {1, 1, 1, 1, 1}, {{1, 0, 2, 1, 2}, {0, 1, 0, 1, 1}}, "PR2", {}, {3, 4}},
      {"lambda4", {"0", "0", "0", "0", "12+34"}, 3, {1, 2}, {4, 1},
       {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 1}, {0, 0, 1, -1, 0}}, "F2_2", {}, {1, 1, 1}},
      {"lambda5", {"0", "0", "2*12", "sqrt(3)*13", "sqrt(3)*23"}, 2, {1, 2, 3}, {2, 1, 2},
       {{1, 0, 1, 2, 1}, {0, 1, 1, 1, 2}}, "F1_1", {}, {1, 1}},
      {"lambda6", {"0", "0", "0", "12", "13"}, 3, {2, 3, 5}, {1, 2, 2},
       {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 1, 0, 1}}, "F2_1", {2, 1, 0}, {2, 3, 3}},
      {"lambda7", {"0", "0", "0", "0", "12"}, 4, {2, 3, 4}, {2, 2, 1},
       {{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}, "F3_1", {},
       {2, 2, 3, 3}},
      {"lambda8", {"0", "0", "0", "12", "14"}, 3, {1, 2, 3, 4}, {1, 1, 2, 1},
       {{1, 0, 0, 1, 2}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 0}}, "PR3", {}, {1, 2, 3}},
      {"lambda9", {"0", "0", "0", "0", "0"}, 5, {1}, {5},
       {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}},
       "", {}, {1, 1, 1, 1, 1}},
      // dimension 6, 4- and 5-step
      {"mu1",
       {"0", "0", "sqrt(13)*12", "4*13", "sqrt(12)*14+2*23", "sqrt(12)*34+sqrt(13)*52"}, 1,
       {1, 2, 3, 4, 5, 7}, {1, 1, 1, 1, 1, 1}, {{1, 2, 3, 4, 5, 7}}, "", {}, {1}},
      {"mu2", {"0", "0", "12", "sqrt(4/3)*13", "14", "34+52"}, 2, {1, 3, 4, 5, 6, 9},
       {1, 1, 1, 1, 1, 1}, {{1, 0, 1, 2, 3, 3}, {0, 1, 1, 1, 1, 2}}, "PR2", {}, {1, 3}},
      {"mu3", {"0", "0", "2*12", "sqrt(6)*13", "sqrt(6)*14", "2*15"}, 2,
       {1, 9, 10, 11, 12, 13}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 1, 2, 3, 4}, {0, 1, 1, 1, 1, 1}}, "PR2", {}, {1, 9}},
      {"mu4",
       {"0", "0", "sqrt(22)*12", "6*13", "sqrt(22)*14+sqrt(30)*23", "5*24+sqrt(30)*15"}, 1,
       {1, 2, 3, 4, 5, 6}, {1, 1, 1, 1, 1, 1}, {{1, 2, 3, 4, 5, 6}}, "", {}, {1}},
      {"mu5",
       {"0", "0", "sqrt(7)*12", "sqrt(15/2)*13", "3*14", "sqrt(15/2)*23+2*15"}, 1,
       {1, 3, 4, 5, 6, 7}, {1, 1, 1, 1, 1, 1}, {{1, 3, 4, 5, 6, 7}}, "", {}, {1}},
      {"mu6", {"0", "0", "12", "13", "23", "14"}, 2, {1, 2, 3, 4, 5}, {1, 1, 1, 1, 2},
       {{1, 0, 1, 2, 1, 3}, {0, 1, 1, 1, 2, 1}}, "PR2", {}, {1, 2}},
      {"mu7", {"0", "0", "2*12", "sqrt(5)*13", "sqrt(5)*23", "2*14-2*25"}, 2, {1, 2, 3, 4},
       {2, 1, 2, 1}, {{1, 1, 2, 3, 3, 4}}, "PR2", {}, {1, 0}},
      {"mu8", {"0", "0", "2*12", "sqrt(5)*13", "sqrt(5)*23", "2*14+2*25"}, 1, {1, 2, 3, 4},
       {2, 1, 2, 1}, {{1, 1, 2, 3, 3, 4}}, "", {}, {1}},
      {"mu9", {"0", "0", "0", "sqrt(5/4)*12", "14-23", "sqrt(5/4)*15+34"}, 2,
       {6, 11, 12, 17, 23, 29}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 2, 1, 2, 3}, {0, 1, 0, 1, 1, 1}}, "PR2", {}, {6, 11}},
      {"mu10", {"0", "0", "0", "12", "sqrt(5/3)*14", "15+23"}, 2, {4, 9, 12, 13, 17, 21},
       {1, 1, 1, 1, 1, 1}, {{1, 0, 3, 1, 2, 3}, {0, 1, 0, 1, 1, 1}}, "PR2", {}, {4, 9}},
      {"mu11",
       {"0", "0", "-sqrt(25/56)*12", "sqrt(3/7)*12", "sqrt(5/28)*14-sqrt(15/14)*13",
        "sqrt(3/4)*15+sqrt(7/8)*24"},
       1, {1, 2, 3, 4, 5}, {1, 1, 2, 1, 1}, {{1, 2, 3, 3, 4, 5}}, "", {}, {1},
       "the printed radicands (35/136, 21/34, 25/68, 15/17) fail the soliton"
       " equation; these values solve it at the same scale (the 15 and 24"
       " coefficients and the invariants |v_3|^2+|v_4|^2 = 7/8, 5/4 agree with"
       " the printed row)"},
      {"mu12", {"0", "0", "0", "sqrt(3)*12", "sqrt(3)*14", "sqrt(2)*15+sqrt(2)*24"}, 2,
       {3, 6, 9, 11, 12, 15}, {1, 1, 1, 1, 1, 1},
       {{1, 2, 0, 3, 4, 5}, {0, 0, 1, 0, 0, 0}}, "PR2", {}, {3, 11},
       "table 7 prints the family as (a,2a,b,3a,a+b,2a+b); the bracket forces"
       " (a,2a,b,3a,4a,5a), which matches the stated rank, type and Einstein line"},
      {"mu13", {"0", "0", "0", "sqrt(3)*12", "2*14", "sqrt(3)*15"}, 3,
       {2, 9, 11, 12, 13, 15}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 0, 1, 2, 3}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 0, 0, 0}}, "PR3", {}, {2, 9, 12}},
      // dimension 6, step <= 3
      {"mu14", {"0", "0", "0", "sqrt(3)*12", "sqrt(2)*13", "sqrt(2)*14+sqrt(3)*35"}, 2,
       {2, 3, 4, 5, 6, 8}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 0.5, 1, 1.5, 2}, {0, 1, 0.5, 1, 0.5, 1}}, "PR2", {}, {1, 2}},
      {"mu15", {"0", "0", "0", "13", "-23", "14+25"}, 3, {1, 2, 3}, {3, 2, 1},
       {{1, 1, 0, 1, 1, 2}, {0, 0, 1, 1, 1, 1}}, "F2_3", {}, {1, 1, 0},
       "stated in the reordered basis (X1,X3,X2,X4,X5,X6) of the original"
       " (0,0,0,12,23,14+35)"},
      {"mu16", {"0", "0", "0", "13", "-23", "14-25"}, 2, {1, 2, 3}, {3, 2, 1},
       {{1, 1, 0, 1, 1, 2}, {0, 0, 1, 1, 1, 1}}, "PR2", {}, {1, 1},
       "stated in the reordered basis (X1,X3,X2,X4,X5,X6) of the original"
       " (0,0,0,12,23,14-35)"},
      {"mu17", {"0", "0", "0", "2*12", "sqrt(3)*14", "sqrt(3)*24"}, 3, {5, 10, 12, 15},
       {2, 1, 1, 2}, {{1, 0, 0, 1, 2, 1}, {0, 1, 0, 1, 1, 2}, {0, 0, 1, 0, 0, 0}},
       "F2_1", {}, {5, 5, 12}},
      {"mu18",
       {"0", "0", "0", "sqrt(2)*12", "sqrt(1/2)*13+sqrt(3/2)*42", "sqrt(3/2)*14+sqrt(1/2)*23"},
       1, {1, 2, 3}, {2, 2, 2}, {{1, 1, 2, 2, 3, 3}}, "", {}, {1}},
      {"mu19", {"0", "0", "0", "2*12", "sqrt(3)*14", "13+sqrt(3)*42"}, 2,
       {5, 6, 11, 12, 16, 17}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 0, 1, 2, 1}, {0, 1, 2, 1, 1, 2}}, "PR2", {}, {5, 6},
       "the table prints the last coordinate as '13+3^(1/2) 42'; the plain 13"
       " monomial (coefficient 1) is consistent with the stated type"},
      {"mu20", {"0", "0", "-12", "sqrt(3)*12", "2*14", "24-sqrt(3)*23"}, 2, {1, 2, 3},
       {2, 2, 2}, {{1, 0, 1, 1, 2, 1}, {0, 1, 1, 1, 1, 2}}, "F1_1", {}, {1, 1}},
      {"mu21", {"0", "0", "0", "sqrt(2)*12", "13", "sqrt(2)*14+23"}, 2,
       {3, 5, 6, 8, 9, 11}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 2, 1, 3, 2}, {0, 1, 0, 1, 0, 1}}, "PR2", {}, {3, 5}},
      {"mu22", {"0", "0", "0", "sqrt(3/4)*12", "sqrt(3/4)*13", "24"}, 3,
       {5, 6, 9, 11, 15, 16}, {1, 1, 1, 1, 1, 1},
       {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 2}, {0, 0, 1, 0, 1, 0}}, "PR3", {}, {6, 5, 9}},
      {"mu23", {"0", "0", "0", "sqrt(2)*12", "13", "sqrt(2)*14"}, 3, {2, 5, 6, 7, 8, 9},
       {1, 1, 1, 1, 1, 1},
       {{1, 0, 0, 1, 1, 2}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 0}}, "PR3", {}, {2, 5, 6}},
      {"mu24", {"0", "0", "0", "12", "13", "23"}, 3, {1, 2}, {3, 3},
       {{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}}, "F2_4", {}, {1, 1, 1}},
      {"mu25", {"0", "0", "0", "0", "2*12", "sqrt(3)*15+sqrt(3)*34"}, 3, {5, 8, 9, 13, 18},
       {1, 1, 2, 1, 1},
       {{1, 0, 0, 2, 1, 2}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, -1, 0, 0}}, "PR3", {}, {5, 8, 9}},
      {"mu26", {"0", "0", "0", "0", "12", "15"}, 4, {1, 2, 3, 4}, {1, 1, 3, 1},
       {{1, 0, 0, 0, 1, 2}, {0, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}},
       "F3_2", {}, {1, 2, 3, 3}},
      {"mu27", {"0", "0", "0", "0", "sqrt(2)*12", "14+sqrt(2)*25"}, 3, {3, 4, 6, 7, 10},
       {1, 1, 1, 2, 1},
       {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 2, 1, 2}, {0, 0, 1, 0, 0, 0}}, "PR3", {}, {4, 3, 7},
       "the stated Einstein condition 4a=3b=2c contradicts the stated type;"
       " the soliton derivation sits at (a,b,c)=(4,3,7) in this family"},
      {"mu28", {"0", "0", "0", "0", "13+42", "14+23"}, 2, {1, 2}, {4, 2},
       {{1, 1, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 1}}, "F1_1", {}, {1, 1}},
      {"mu29", {"0", "0", "0", "0", "12", "14+23"}, 3, {3, 4, 6, 7}, {2, 2, 1, 1},
       {{1, 0, 0, -1, 1, 0}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 0, 1}}, "PR3", {}, {3, 3, 4}},
      {"mu30", {"0", "0", "0", "0", "12", "34"}, 4, {1, 2}, {4, 2},
       {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1}},
       "F3_3", {}, {1, 1, 1, 1}},
      {"mu31", {"0", "0", "0", "0", "12", "13"}, 4, {2, 3, 4, 5}, {1, 2, 1, 2},
       {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 0}},
       "F3_2", {0, 3, 1, 2}, {2, 3, 3, 4}},
      {"mu32", {"0", "0", "0", "0", "0", "12+34"}, 4, {3, 4, 6}, {4, 1, 1},
       {{1, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, -1, 0, 0}, {0, 0, 0, 0, 1, 0}},
       "F3_4", {}, {3, 3, 3, 4}},
      {"mu33", {"0", "0", "0", "0", "0", "12"}, 5, {2, 3, 4}, {2, 3, 1},
       {{1, 0, 0, 0, 0, 1},
        {0, 1, 0, 0, 0, 1},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0}},
       "F4_1", {}, {2, 2, 3, 3, 3}},
      {"mu34", {"0", "0", "0", "0", "0", "0"}, 6, {1}, {6},
       {{1, 0, 0, 0, 0, 0},
        {0, 1, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 0, 1, 0, 0},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1}},
       "", {}, {1, 1, 1, 1, 1, 1}},
  };

  std::vector<CatalogEntry> out;
  out.reserve(specs.size());
  for (auto& s : specs) {
    CatalogEntry e;
    e.id = s.id;
    e.terms = s.terms;
    e.dim = static_cast<int>(s.terms.size());
    e.rank = s.rank;
    e.type_k = s.tk;
    e.type_d = s.td;
    e.family = diag_family(s.fam);
    e.domain = s.domain;
    e.domain_perm = s.dperm;
    if (!s.epoint.empty()) {
      e.einstein_point = VectorXd(static_cast<Eigen::Index>(s.epoint.size()));
      for (size_t i = 0; i < s.epoint.size(); ++i)
        e.einstein_point[static_cast<Eigen::Index>(i)] = s.epoint[i];
    }
    e.note = s.note;
    out.push_back(std::move(e));
  }

  auto find = [&out](const char* id) -> CatalogEntry& {
    for (auto& e : out)
      if (e.id == id) return e;
    throw UnknownIdError(id);
  };

  // mu7: a = { a*diag(1,1,2,3,3,4) + b*(E12+E21+E45+E54) }
  find("mu7").family.push_back(sym_pair(6, 0, 1, 1.0) + sym_pair(6, 3, 4, 1.0));
  // mu15 (reordered basis): third direction couples the (1,2) and (4,5) pairs
  find("mu15").family.push_back(sym_pair(6, 0, 1, 1.0) - sym_pair(6, 3, 4, 1.0));

  // Extra Weyl generators transcribed from the case analysis.
  {
    // lambda4: block maps induced by the unitary automorphisms T(A1), T(A2)
    MatrixXd t1 = MatrixXd::Zero(5, 5);
    t1(2, 0) = t1(3, 1) = t1(0, 2) = t1(1, 3) = 1.0;
    t1(4, 4) = 1.0;
    MatrixXd rot = MatrixXd::Zero(2, 2);
    rot(0, 1) = 1.0;
    rot(1, 0) = -1.0;
    MatrixXd t2 = MatrixXd::Zero(5, 5);
    t2.block(0, 0, 2, 2) = rot;
    t2.block(2, 2, 2, 2) = rot;
    t2(4, 4) = 1.0;
    find("lambda4").extra_weyl = {t1, t2};
  }
  {
    // mu20: the only generator that is not a signed permutation
    MatrixXd g = MatrixXd::Zero(6, 6);
    g(0, 1) = g(1, 0) = 1.0;
    g(2, 2) = 0.5;
    g(2, 3) = g(3, 2) = std::sqrt(3.0) / 2.0;
    g(3, 3) = -0.5;
    g(4, 5) = g(5, 4) = -1.0;
    find("mu20").extra_weyl = {g};
  }
  // mu24: transpositions of the three generators
  find("mu24").extra_weyl = {signed_perm({2, 1, 3, -4, 6, 5}), signed_perm({1, 3, 2, 5, 4, -6})};
  // mu28: exchanges the two parameters
  find("mu28").extra_weyl = {signed_perm({4, 3, 2, 1, 5, -6})};
  // mu30: swaps the two Heisenberg factors
  find("mu30").extra_weyl = {signed_perm({3, 4, 1, 2, 6, 5})};

  return out;
}

}  // namespace

std::string CatalogEntry::type_string() const {
  std::string ks, ds;
  for (size_t i = 0; i < type_k.size(); ++i) {
    if (i) ks += "<";
    ks += std::to_string(type_k[i]);
  }
  for (size_t i = 0; i < type_d.size(); ++i) {
    if (i) ds += ",";
    ds += std::to_string(type_d[i]);
  }
  return "(" + ks + ";" + ds + ")";
}

std::string CatalogEntry::family_string() const {
  for (const auto& m : family)
    if (!m.isDiagonal(0.0)) return "(non-diagonal matrix family, rank " + std::to_string(rank) + ")";
  const char* names = "abcdef";
  std::string out = "diag(";
  for (int s = 0; s < dim; ++s) {
    if (s) out += ",";
    std::string slot;
    for (size_t q = 0; q < family.size(); ++q) {
      double v = family[q](s, s);
      if (v == 0.0) continue;
      char buf[32];
      if (v == 1.0)
        std::snprintf(buf, sizeof(buf), "%s%c", slot.empty() ? "" : "+", names[q]);
      else if (v == -1.0)
        std::snprintf(buf, sizeof(buf), "-%c", names[q]);
      else
        std::snprintf(buf, sizeof(buf), "%s%g%c", (slot.empty() || v < 0) ? "" : "+", v, names[q]);
      slot += buf;
    }
    out += slot.empty() ? "0" : slot;
  }
  return out + ")";
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

bool has_catalog_entry(const std::string& id) {
  static const std::map<std::string, std::string> aliases = {
      {"R4", "eta3"}, {"R5", "lambda9"}, {"R6", "mu34"}};
  std::string key = aliases.count(id) ? aliases.at(id) : id;
  for (const auto& e : catalog())
    if (e.id == key) return true;
  return false;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  static const std::map<std::string, std::string> aliases = {
      {"R4", "eta3"}, {"R5", "lambda9"}, {"R6", "mu34"}};
  std::string key = aliases.count(id) ? aliases.at(id) : id;
  for (const auto& e : catalog())
    if (e.id == key) return e;
  throw UnknownIdError("unknown catalog id '" + id + "'");
}

}  // namespace solsol

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "solsol/algebra.hpp"

namespace solsol {

struct UnknownIdError : AlgebraError {
  using AlgebraError::AlgebraError;
};

// One nilsoliton of dimension <= 6, with the classification data attached:
// bracket in coordinate-vector notation, eigenvalue type, rank, the published
// basis of a maximal abelian subspace a of sym derivations (parameter
// directions, in order), any orthogonal automorphisms needed beyond signed
// permutations to generate the Weyl action, the fundamental domain the
// rank-one extensions are parameterized by (with an optional coordinate
// permutation into that domain), and the parameter point of the Einstein
// line when the locus is known.
struct CatalogEntry {
  std::string id;
  int dim = 0;
  std::vector<std::string> terms;
  int rank = 0;
  std::vector<int> type_k;
  std::vector<int> type_d;
  std::vector<Eigen::MatrixXd> family;
  std::vector<Eigen::MatrixXd> extra_weyl;
  std::string domain;
  std::vector<int> domain_perm;
  Eigen::VectorXd einstein_point;
  std::string note;

  MetricLieAlgebra build() const { return parse_bracket_notation(terms); }
  bool abelian() const { return type_k.size() == 1 && type_k[0] == 1; }
  bool multiplicity_free() const {
    for (int d : type_d)
      if (d != 1) return false;
    return true;
  }
  std::string type_string() const;
  // "diag(a,b,a+b)"-style rendering of the parameter family; falls back to a
  // matrix-family note when the published basis is not diagonal.
  std::string family_string() const;
};

// The 50 nilsolitons of dimension <= 6 in table order.
const std::vector<CatalogEntry>& catalog();

// Lookup by id; aliases R4/R5/R6 resolve to eta3/lambda9/mu34. Throws
// UnknownIdError.
const CatalogEntry& catalog_entry(const std::string& id);
bool has_catalog_entry(const std::string& id);

}  // namespace solsol

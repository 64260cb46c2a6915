#pragma once

#include <Eigen/Dense>

#include "solsol/algebra.hpp"
#include "solsol/catalog.hpp"
#include "solsol/linalg.hpp"
#include "solsol/moduli.hpp"

namespace solsol::testing {

// Random orthogonal matrix from a seeded QR.
inline Eigen::MatrixXd random_orthogonal(Rng& rng, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) m.col(i) = rng.normal_vector(n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  return qr.householderQ();
}

// A seeded random metric solvable Lie algebra of dim <= 7: a catalog
// nilsoliton, optionally extended by a random line of commuting symmetric
// derivations, then pushed through a random basis change (orthogonal times a
// mild shear) so the gram is a generic SPD matrix. Structure constants stay
// of order one.
inline MetricLieAlgebra random_solvable(Rng& rng) {
  const auto& entries = catalog();
  const CatalogEntry& e = entries[rng.next_u64() % entries.size()];
  MetricLieAlgebra alg = e.build();
  bool extend_line = (rng.next_u64() & 1u) != 0;
  if (extend_line) {
    const AbelianFrame& frame = catalog_frame(e);
    Eigen::VectorXd p = rng.normal_vector(frame.rank);
    if (p.norm() < 0.1) p.setOnes();
    p.normalize();
    alg = extend(catalog_certificate(e), alg, {frame.element(p)}, e.id).algebra;
  }
  int n = alg.dim();
  Eigen::MatrixXd s = random_orthogonal(rng, n);
  if ((rng.next_u64() & 1u) != 0) {
    // mild shear keeps the gram away from the identity
    Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) t(i, j) = 0.2 * rng.uniform();
    s = s * t;
  }
  return change_basis(alg, s);
}

}  // namespace solsol::testing

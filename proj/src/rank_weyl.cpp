#include "solsol/rank_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "solsol/derivations.hpp"
#include "solsol/linalg.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

namespace {

double mat_scale(const std::vector<Eigen::MatrixXd>& mats) {
  double s = 0.0;
  for (const auto& m : mats) s = std::max(s, m.cwiseAbs().maxCoeff());
  return std::max(s, 1.0);
}

void validate_commuting_symmetric(const std::vector<Eigen::MatrixXd>& basis) {
  double s = mat_scale(basis);
  for (const auto& a : basis)
    if ((a - a.transpose()).norm() > tol::kRel * s)
      throw AlgebraError("abelian frame: basis element not symmetric");
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if ((basis[i] * basis[j] - basis[j] * basis[i]).norm() > tol::kRel * s * s)
        throw AlgebraError("abelian frame: basis elements do not commute");
}

}  // namespace

Eigen::MatrixXd AbelianFrame::element(const Eigen::VectorXd& params) const {
  if (params.size() != rank) throw AlgebraError("frame: parameter count mismatch");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis[0].rows(), basis[0].cols());
  for (int q = 0; q < rank; ++q) m += params[q] * basis[q];
  return m;
}

Eigen::VectorXd AbelianFrame::coordinates(const Eigen::MatrixXd& m) const {
  Eigen::MatrixXd b(m.size(), rank);
  for (int q = 0; q < rank; ++q) b.col(q) = vec(basis[q]);
  Eigen::VectorXd target = vec(m);
  Eigen::VectorXd x = b.colPivHouseholderQr().solve(target);
  if ((b * x - target).norm() > 1e-7 * std::max(1.0, target.norm()))
    throw DomainError("matrix does not lie inside the abelian frame");
  return x;
}

Eigen::MatrixXd AbelianFrame::trace_gram() const {
  Eigen::MatrixXd t(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) t(i, j) = (basis[i] * basis[j]).trace();
  return t;
}

AbelianFrame frame_from_basis(const std::vector<Eigen::MatrixXd>& basis) {
  if (basis.empty()) {
    AbelianFrame f;
    f.rank = 0;
    return f;
  }
  validate_commuting_symmetric(basis);
  AbelianFrame f;
  f.basis = basis;
  f.rank = static_cast<int>(basis.size());
  {
    Eigen::MatrixXd b(basis[0].size(), f.rank);
    for (int q = 0; q < f.rank; ++q) b.col(q) = vec(basis[q]);
    if (orthonormal_columns(b, tol::kSvdCutoff).cols() != f.rank)
      throw AlgebraError("abelian frame: basis linearly dependent");
  }
  std::vector<Eigen::MatrixXd> sym;
  for (const auto& a : basis) sym.push_back(0.5 * (a + a.transpose()));
  f.joint_eigenbasis = simultaneous_diagonalize(sym, 1e-7 * mat_scale(basis));
  int n = static_cast<int>(basis[0].rows());
  f.functionals.resize(n, f.rank);
  for (int q = 0; q < f.rank; ++q) {
    Eigen::MatrixXd d = f.joint_eigenbasis.transpose() * sym[q] * f.joint_eigenbasis;
    f.functionals.col(q) = d.diagonal();
  }
  return f;
}

AbelianFrame frame_from_basis(const MetricLieAlgebra& alg,
                              const std::vector<Eigen::MatrixXd>& basis) {
  double s = (1.0 + alg.scale()) * mat_scale(basis);
  for (const auto& a : basis)
    if (derivation_defect(alg, a) > tol::kRel * s)
      throw AlgebraError("abelian frame: basis element is not a derivation");
  return frame_from_basis(basis);
}

AbelianFrame maximal_abelian(const std::vector<Eigen::MatrixXd>& p_basis, uint64_t seed) {
  if (p_basis.empty()) return frame_from_basis({});
  int n = static_cast<int>(p_basis[0].rows());
  int kp = static_cast<int>(p_basis.size());
  Rng rng(seed * 0x9e3779b97f4a7c15ull + 0x2545f4914f6cdd1dull);
  double s = mat_scale(p_basis);

  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int q = 0; q < kp; ++q) a += rng.normal() * p_basis[q];
    // centralizer of a within span(p_basis)
    Eigen::MatrixXd m(static_cast<Eigen::Index>(n) * n, kp);
    for (int q = 0; q < kp; ++q) m.col(q) = vec(a * p_basis[q] - p_basis[q] * a);
    Eigen::MatrixXd ns = nullspace(m, tol::kSvdCutoff, a.norm() * s);
    std::vector<Eigen::MatrixXd> cand;
    for (int t = 0; t < ns.cols(); ++t) {
      Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
      for (int q = 0; q < kp; ++q) b += ns(q, t) * p_basis[q];
      Eigen::VectorXd v = vec(b);
      fix_sign(v);
      cand.push_back(0.5 * (unvec(v, n, n) + unvec(v, n, n).transpose()));
    }
    bool commuting = true;
    for (size_t i = 0; i < cand.size() && commuting; ++i)
      for (size_t j = i + 1; j < cand.size() && commuting; ++j)
        if ((cand[i] * cand[j] - cand[j] * cand[i]).norm() > 1e-7 * s * s) commuting = false;
    if (commuting) return frame_from_basis(cand);
  }
  throw RankUndeterminedError("maximal_abelian: centralizer failed to be abelian after 8 samples");
}

namespace {

std::vector<int64_t> map_key(const Eigen::MatrixXd& m) {
  std::vector<int64_t> key(static_cast<size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) key[static_cast<size_t>(i)] = llround(m.data()[i] * 1048576.0);
  return key;
}

}  // namespace

WeylAction weyl_group(const MetricLieAlgebra& alg, const AbelianFrame& frame,
                      const std::vector<Eigen::MatrixXd>& extra_generators) {
  int k = frame.rank;
  WeylAction w;
  if (k == 0) return w;
  int n = alg.dim();
  Eigen::MatrixXd b(static_cast<Eigen::Index>(n) * n, k);
  for (int q = 0; q < k; ++q) b.col(q) = vec(frame.basis[q]);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(b);
  double bscale = mat_scale(frame.basis);

  std::map<std::vector<int64_t>, int> seen;
  auto try_add = [&](const Eigen::MatrixXd& h, bool must_normalize) {
    // induced action: h A_j h^T = sum_i M(i,j) A_i
    Eigen::MatrixXd m(k, k);
    for (int j = 0; j < k; ++j) {
      Eigen::MatrixXd conj = h * frame.basis[j] * h.transpose();
      Eigen::VectorXd x = qr.solve(vec(conj));
      double res = (b * x - vec(conj)).norm();
      if (res > 1e-7 * bscale) {
        if (must_normalize)
          throw AlgebraError("weyl_group: supplied generator does not normalize the frame");
        return;
      }
      m.col(j) = x;
    }
    if (seen.emplace(map_key(m), 1).second) {
      w.generators.push_back(h);
      w.induced.push_back(m);
    }
  };

  try_add(Eigen::MatrixXd::Identity(n, n), true);
  for_each_signed_permutation_automorphism(alg, [&](const Eigen::MatrixXd& h) { try_add(h, false); });
  for (const auto& h : extra_generators) {
    AutomorphismCheck chk = is_orthogonal_automorphism(h, alg);
    if (!chk.ok)
      throw AlgebraError("weyl_group: supplied generator is not an orthogonal automorphism");
    try_add(h, true);
  }

  // close the induced maps under composition
  std::map<std::vector<int64_t>, int> group;
  std::vector<Eigen::MatrixXd> elems;
  for (const auto& m : w.induced)
    if (group.emplace(map_key(m), 1).second) elems.push_back(m);
  for (size_t head = 0; head < elems.size(); ++head) {
    for (size_t g = 0; g < w.induced.size(); ++g) {
      Eigen::MatrixXd prod = w.induced[g] * elems[head];
      if (group.emplace(map_key(prod), 1).second) elems.push_back(prod);
      if (elems.size() > 50000) throw AlgebraError("weyl_group: induced group did not close");
    }
  }
  w.induced = std::move(elems);
  return w;
}

std::vector<Eigen::VectorXd> line_orbit(const Eigen::VectorXd& point, const WeylAction& action) {
  if (point.norm() == 0.0) throw AlgebraError("line_orbit: zero input");
  std::vector<Eigen::VectorXd> orbit;
  auto add = [&](const Eigen::VectorXd& v) {
    for (const auto& u : orbit)
      if ((u - v).norm() <= 1e-9) return;
    orbit.push_back(v);
  };
  Eigen::VectorXd base = point.normalized();
  if (action.induced.empty()) {
    add(base);
    add(-base);
    return orbit;
  }
  for (const auto& m : action.induced) {
    Eigen::VectorXd w = (m * base).normalized();
    add(w);
    add(-w);
  }
  return orbit;
}

Eigen::VectorXd canonical_form(const Eigen::VectorXd& point, const WeylAction& action) {
  std::vector<Eigen::VectorXd> orbit = line_orbit(point, action);
  Eigen::VectorXd best = orbit.front();
  for (const auto& v : orbit)
    if (colex_compare(v, best, tol::kRel) > 0) best = v;
  return best;
}

bool lines_equivalent(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                      const WeylAction& action) {
  Eigen::VectorXd bn = b.normalized();
  for (const auto& v : line_orbit(a, action))
    if ((v - bn).norm() <= 1e-7) return true;
  return false;
}

namespace {

constexpr double kT = tol::kDomain;

bool gt(double x) { return x > kT; }
bool ge(double x) { return x >= -kT; }
bool eqz(double x) { return std::abs(x) <= kT; }

bool f11(double a, double b) { return std::abs(a) <= b + kT; }
bool f21(double a, double b, double c) {
  return (gt(c) && a <= b + kT) || (eqz(c) && std::abs(a) <= b + kT);
}
bool f22(double a, double b, double c) {
  return gt(a) && 2 * c >= a + b - kT && a + b >= -kT && a >= c - kT && c >= b - kT;
}
bool f23(double a, double b, double c) {
  return (gt(a) && ge(c)) || (eqz(a) && ge(b) && ge(c));
}
bool f24(double a, double b, double c) {
  return (gt(b) && a >= b - kT && b >= c - kT) || (eqz(b) && std::abs(c) <= a + kT);
}
bool f31(double a, double b, double c, double d) {
  return (gt(a) && a >= b - kT && c >= d - kT) || (eqz(a) && eqz(b) && c >= std::abs(d) - kT);
}
bool f32(double a, double b, double c, double d) {
  return (gt(a) && c <= d + kT) || (eqz(a) && f21(c, d, b));
}
bool dset(double a, double b, double c, double d) {
  return a >= b - kT && c >= d - kT &&
         (a + b > c + d + kT || (std::abs(a + b - c - d) <= kT && a >= c - kT));
}
bool f33(double a, double b, double c, double d) {
  return dset(a, b, c, d) && gt(a) && ge(a + b) &&
         (!(d < -kT && c + d < -kT) || a > std::abs(d) - kT);
}
bool f34(double a, double b, double c, double d) {
  return (gt(d) && a >= c - kT && c >= b - kT && 2 * c >= a + b - kT) || (eqz(d) && f22(a, b, c));
}
bool f41(double a, double b, double c, double d, double e) {
  return (gt(e) && a >= b - kT && c <= d + kT && d <= e + kT) || (eqz(e) && f31(a, b, c, d));
}
bool pr2(double x, double y) { return gt(y) || (eqz(y) && gt(x)); }
bool pr3(double x, double y, double z) { return gt(z) || (eqz(z) && pr2(x, y)); }

}  // namespace

bool domain_membership(const std::string& domain_id, const Eigen::VectorXd& p) {
  auto need = [&](int k) {
    if (p.size() != k)
      throw DomainError("domain " + domain_id + " expects " + std::to_string(k) + " coordinates");
  };
  if (domain_id == "F1_1") return need(2), f11(p[0], p[1]);
  if (domain_id == "F2_1") return need(3), f21(p[0], p[1], p[2]);
  if (domain_id == "F2_2") return need(3), f22(p[0], p[1], p[2]);
  if (domain_id == "F2_3") return need(3), f23(p[0], p[1], p[2]);
  if (domain_id == "F2_4") return need(3), f24(p[0], p[1], p[2]);
  if (domain_id == "F3_1") return need(4), f31(p[0], p[1], p[2], p[3]);
  if (domain_id == "F3_2") return need(4), f32(p[0], p[1], p[2], p[3]);
  if (domain_id == "F3_3") return need(4), f33(p[0], p[1], p[2], p[3]);
  if (domain_id == "F3_4") return need(4), f34(p[0], p[1], p[2], p[3]);
  if (domain_id == "F4_1") return need(5), f41(p[0], p[1], p[2], p[3], p[4]);
  if (domain_id == "PR2") return need(2), pr2(p[0], p[1]);
  if (domain_id == "PR3") return need(3), pr3(p[0], p[1], p[2]);
  if (domain_id == "D") return need(4), dset(p[0], p[1], p[2], p[3]);
  throw DomainError("unknown domain id '" + domain_id + "'");
}

Eigen::VectorXd domain_representative(const std::string& domain_id, const std::vector<int>& perm,
                                      const Eigen::VectorXd& point, const WeylAction& action) {
  auto permuted = [&](const Eigen::VectorXd& v) {
    if (perm.empty()) return v;
    Eigen::VectorXd w(v.size());
    for (size_t i = 0; i < perm.size(); ++i) w[static_cast<Eigen::Index>(i)] = v[perm[i]];
    return w;
  };
  bool found = false;
  Eigen::VectorXd best;
  for (const auto& v : line_orbit(point, action)) {
    if (!domain_membership(domain_id, permuted(v))) continue;
    if (!found || colex_compare(v, best, tol::kRel) > 0) {
      best = v;
      found = true;
    }
  }
  if (!found)
    throw DomainError("orbit does not meet domain " + domain_id);
  return best;
}

bool subspaces_equivalent(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          const WeylAction& action) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw AlgebraError("subspaces_equivalent: dimension mismatch");
  if (a.cols() == 0) return true;
  Eigen::VectorXd pb = plucker(b);
  auto same = [&](const Eigen::MatrixXd& m) {
    Eigen::VectorXd pa = plucker(m);
    return std::min((pa - pb).norm(), (pa + pb).norm()) <= 1e-7;
  };
  if (action.induced.empty()) return same(a);
  for (const auto& g : action.induced)
    if (same(g * a)) return true;
  return false;
}

Eigen::MatrixXd grassmannian_duality(const Eigen::MatrixXd& subspace_coords,
                                     const AbelianFrame& frame) {
  if (subspace_coords.rows() != frame.rank)
    throw DomainError("duality: coordinates do not match the frame rank");
  if (subspace_coords.cols() == 0) return Eigen::MatrixXd::Identity(frame.rank, frame.rank);
  Eigen::MatrixXd t = frame.trace_gram();
  return nullspace(subspace_coords.transpose() * t, tol::kSvdCutoff, t.norm());
}

std::vector<Eigen::MatrixXd> grassmannian_duality(const std::vector<Eigen::MatrixXd>& subspace,
                                                  const AbelianFrame& frame) {
  Eigen::MatrixXd coords(frame.rank, static_cast<Eigen::Index>(subspace.size()));
  for (size_t q = 0; q < subspace.size(); ++q)
    coords.col(static_cast<Eigen::Index>(q)) = frame.coordinates(subspace[q]);
  Eigen::MatrixXd comp = grassmannian_duality(coords, frame);
  std::vector<Eigen::MatrixXd> out;
  for (int c = 0; c < comp.cols(); ++c) out.push_back(frame.element(comp.col(c)));
  return out;
}

}  // namespace solsol

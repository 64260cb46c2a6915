#include "solsol/algebra.hpp"

#include <nlohmann/json.hpp>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cctype>
#include <cmath>
#include <cstdio>

#include "solsol/expr.hpp"
#include "solsol/tolerances.hpp"

namespace solsol {

void MetricLieAlgebra::set_gram(const Eigen::MatrixXd& g) {
  if (g.rows() != dim_ || g.cols() != dim_) throw AlgebraError("gram dimension mismatch");
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > tol::kRel * (1.0 + g.cwiseAbs().maxCoeff()))
    throw AlgebraError("gram not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  if (es.eigenvalues().minCoeff() <= 0.0) throw AlgebraError("gram not positive definite");
  gram_ = 0.5 * (g + g.transpose());
}

void MetricLieAlgebra::add_c(int i, int j, int k, double v) {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
    throw AlgebraError("structure index out of range");
  if (i == j) throw AlgebraError("bracket pair with i = j");
  c_[idx(i, j, k)] += v;
  c_[idx(j, i, k)] -= v;
}

Eigen::VectorXd MetricLieAlgebra::bracket_basis(int i, int j) const {
  Eigen::VectorXd out(dim_);
  for (int k = 0; k < dim_; ++k) out[k] = c(i, j, k);
  return out;
}

Eigen::VectorXd MetricLieAlgebra::bracket(const Eigen::VectorXd& x,
                                          const Eigen::VectorXd& y) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j] == 0.0) continue;
      double f = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

Eigen::MatrixXd MetricLieAlgebra::ad(const Eigen::VectorXd& x) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int i = 0; i < dim_; ++i) {
      if (x[i] == 0.0) continue;
      for (int k = 0; k < dim_; ++k) m(k, j) += x[i] * c(i, j, k);
    }
  return m;
}

double MetricLieAlgebra::norm(const Eigen::VectorXd& x) const {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

double MetricLieAlgebra::scale() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// One coefficient*pair monomial out of a coordinate string. The pair is two
// digits; dim <= 9 keeps this unambiguous (larger algebras go through JSON).
struct Monomial {
  double coeff;
  int i, j;  // 1-based
};

std::vector<Monomial> parse_coordinate(const std::string& term) {
  std::vector<Monomial> out;
  std::string t;
  for (char ch : term)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw AlgebraError("empty coordinate term");
  if (t == "0") return out;

  // split into signed monomials at top-level +/-
  size_t pos = 0;
  while (pos < t.size()) {
    double sign = 1.0;
    while (pos < t.size() && (t[pos] == '+' || t[pos] == '-')) {
      if (t[pos] == '-') sign = -sign;
      ++pos;
    }
    size_t start = pos;
    int depth = 0;
    while (pos < t.size()) {
      char ch = t[pos];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if ((ch == '+' || ch == '-') && depth == 0 && pos > start) break;
      ++pos;
    }
    std::string mono = t.substr(start, pos - start);
    if (mono.size() < 2) throw AlgebraError("malformed monomial '" + mono + "'");
    std::string pair = mono.substr(mono.size() - 2);
    if (!std::isdigit(static_cast<unsigned char>(pair[0])) ||
        !std::isdigit(static_cast<unsigned char>(pair[1])))
      throw AlgebraError("malformed monomial '" + mono + "': expected index pair");
    std::string coeff_str = mono.substr(0, mono.size() - 2);
    if (!coeff_str.empty() && coeff_str.back() == '*') coeff_str.pop_back();
    double coeff = coeff_str.empty() ? 1.0 : CoeffExpr::parse(coeff_str).value();
    out.push_back({sign * coeff, pair[0] - '0', pair[1] - '0'});
  }
  return out;
}

}  // namespace

MetricLieAlgebra parse_bracket_notation(const std::vector<std::string>& terms) {
  int n = static_cast<int>(terms.size());
  if (n == 0) throw AlgebraError("no coordinates");
  if (n > 9) throw AlgebraError("vector notation supports dim <= 9; use the JSON schema");
  MetricLieAlgebra alg(n);
  for (int k = 0; k < n; ++k) {
    for (const Monomial& m : parse_coordinate(terms[k])) {
      if (m.i < 1 || m.i > n || m.j < 1 || m.j > n)
        throw AlgebraError("index out of range in monomial");
      if (m.i == m.j) throw AlgebraError("bracket pair with i = j");
      alg.add_c(m.i - 1, m.j - 1, k, m.coeff);
    }
  }
  return alg;
}

std::string bracket_notation(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  std::string out = "(";
  for (int k = 0; k < n; ++k) {
    if (k) out += ",";
    std::string coord;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double v = alg.c(i, j, k);
        if (v == 0.0) continue;
        char buf[64];
        if (v == 1.0)
          std::snprintf(buf, sizeof(buf), "%d%d", i + 1, j + 1);
        else if (v == -1.0)
          std::snprintf(buf, sizeof(buf), "-%d%d", i + 1, j + 1);
        else
          std::snprintf(buf, sizeof(buf), "%.6g*%d%d", v, i + 1, j + 1);
        if (!coord.empty() && buf[0] != '-') coord += "+";
        coord += buf;
      }
    out += coord.empty() ? "0" : coord;
  }
  out += ")";
  return out;
}

MetricLieAlgebra change_basis(const MetricLieAlgebra& alg, const Eigen::MatrixXd& s) {
  int n = alg.dim();
  if (s.rows() != n || s.cols() != n) throw AlgebraError("change_basis: dimension mismatch");
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(s);
  MetricLieAlgebra out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd br = lu.solve(alg.bracket(s.col(i), s.col(j)));
      for (int k = 0; k < n; ++k)
        if (br[k] != 0.0) out.add_c(i, j, k, br[k]);
    }
  out.set_gram(s.transpose() * alg.gram() * s);
  return out;
}

double jacobi_defect(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Eigen::VectorXd s = alg.bracket(alg.bracket_basis(i, j), Eigen::VectorXd::Unit(n, k)) +
                            alg.bracket(alg.bracket_basis(j, k), Eigen::VectorXd::Unit(n, i)) +
                            alg.bracket(alg.bracket_basis(k, i), Eigen::VectorXd::Unit(n, j));
        worst = std::max(worst, alg.norm(s));
      }
  return worst;
}

int nilpotency_step(const MetricLieAlgebra& alg) {
  int n = alg.dim();
  // C^1 = [g,g]
  std::vector<Eigen::VectorXd> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gens.push_back(alg.bracket_basis(i, j));

  auto span_basis = [&](const std::vector<Eigen::VectorXd>& vecs) {
    Eigen::MatrixXd m(n, static_cast<Eigen::Index>(vecs.size()));
    for (size_t q = 0; q < vecs.size(); ++q) m.col(static_cast<Eigen::Index>(q)) = vecs[q];
    if (vecs.empty()) return Eigen::MatrixXd(n, 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
    double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;
    double cut = tol::kSvdCutoff * std::max(smax, alg.scale() + 1e-300);
    int r = 0;
    while (r < svd.singularValues().size() && svd.singularValues()[r] > cut) ++r;
    return Eigen::MatrixXd(svd.matrixU().leftCols(r));
  };

  Eigen::MatrixXd cur = span_basis(gens);
  int step = 1;
  int prev_dim = n;
  while (cur.cols() > 0) {
    if (cur.cols() >= prev_dim)
      throw NonNilpotentError("lower central series stabilizes at a nonzero subspace");
    prev_dim = static_cast<int>(cur.cols());
    ++step;
    std::vector<Eigen::VectorXd> next;
    for (int i = 0; i < n; ++i)
      for (int q = 0; q < cur.cols(); ++q)
        next.push_back(alg.bracket(Eigen::VectorXd::Unit(n, i), cur.col(q)));
    cur = span_basis(next);
    if (step > n + 1) throw NonNilpotentError("lower central series did not terminate");
  }
  return step;
}

nlohmann::json algebra_to_json(const MetricLieAlgebra& alg) {
  nlohmann::json j;
  int n = alg.dim();
  j["dim"] = n;
  nlohmann::json terms = nlohmann::json::array();
  for (int i = 0; i < n; ++i)
    for (int jj = i + 1; jj < n; ++jj)
      for (int k = 0; k < n; ++k) {
        double v = alg.c(i, jj, k);
        if (v == 0.0) continue;
        terms.push_back({{"i", i + 1}, {"j", jj + 1}, {"k", k + 1},
                         {"coeff", CoeffExpr::from_value(v).str()}});
      }
  j["terms"] = terms;
  if (!alg.gram().isIdentity(0.0)) {
    nlohmann::json g = nlohmann::json::array();
    for (int r = 0; r < n; ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (int c2 = 0; c2 < n; ++c2) row.push_back(alg.gram()(r, c2));
      g.push_back(row);
    }
    j["gram"] = g;
  }
  return j;
}

MetricLieAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw AlgebraError("algebra JSON: missing integer 'dim'");
  int n = j["dim"].get<int>();
  if (n <= 0) throw AlgebraError("algebra JSON: dim must be positive");
  MetricLieAlgebra alg(n);
  if (j.contains("terms")) {
    for (const auto& t : j["terms"]) {
      int i = t.at("i").get<int>(), jj = t.at("j").get<int>(), k = t.at("k").get<int>();
      double v = t.at("coeff").is_string() ? CoeffExpr::parse(t.at("coeff").get<std::string>()).value()
                                           : t.at("coeff").get<double>();
      if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
        throw AlgebraError("algebra JSON: index out of range");
      if (i == jj) throw AlgebraError("algebra JSON: bracket pair with i = j");
      alg.add_c(i - 1, jj - 1, k - 1, v);
    }
  }
  if (j.contains("gram") && !j["gram"].is_null()) {
    Eigen::MatrixXd g(n, n);
    const auto& rows = j["gram"];
    if (static_cast<int>(rows.size()) != n) throw AlgebraError("algebra JSON: bad gram shape");
    for (int r = 0; r < n; ++r) {
      if (static_cast<int>(rows[r].size()) != n) throw AlgebraError("algebra JSON: bad gram shape");
      for (int c2 = 0; c2 < n; ++c2) g(r, c2) = rows[r][c2].get<double>();
    }
    alg.set_gram(g);
  }
  return alg;
}

}  // namespace solsol

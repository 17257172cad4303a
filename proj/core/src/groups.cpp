#include "liebound/groups.hpp"

#include <algorithm>
#include <cmath>

namespace liebound {

namespace {

const cd I(0.0, 1.0);

Mat pauli(int j) {
  Mat s(2, 2);
  switch (j) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, -I, I, 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

Mat unit_matrix(int n, int r, int c) {
  Mat e = Mat::Zero(n, n);
  e(r, c) = 1.0;
  return e;
}

Mat symplectic_form(int m) {
  Mat w = Mat::Zero(2 * m, 2 * m);
  w.block(0, m, m, m) = Mat::Identity(m, m);
  w.block(m, 0, m, m) = -Mat::Identity(m, m);
  return w;
}

double raw_inner(const GroupSpec& spec, const Mat& x, const Mat& y) {
  if (spec.id == GroupId::heisenberg)
    return (x.adjoint() * y).real().sum();
  return spec.ip_scale * (x.adjoint() * y).trace().real();
}

// All shipped bases are orthogonal by construction; Gram-Schmidt pins the
// normalization against the declared inner product regardless.
void orthonormalize(GroupSpec& spec) {
  spec.basis.clear();
  for (const Mat& raw : spec.raw_basis) {
    Mat v = raw;
    for (const Mat& b : spec.basis) v -= raw_inner(spec, b, v) * b;
    const double n = std::sqrt(raw_inner(spec, v, v));
    if (n < 1e-12)
      throw NumericalError("make_group: degenerate basis");
    spec.basis.push_back(v / n);
  }
  const int d = spec.algebra_dim;
  spec.raw_gram.resize(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      spec.raw_gram(i, j) = raw_inner(spec, spec.raw_basis[i], spec.raw_basis[j]);
}

GroupSpec build_su2() {
  GroupSpec s;
  s.id = GroupId::su2;
  s.matrix_dim = 2;
  s.algebra_dim = 3;
  s.ip_scale = 2.0;
  s.name = "su2";
  s.ad_invariant = true;
  // -(i/2) sigma_j: satisfies [X_1, X_2] = X_3 cyclically and maps to +S_j
  // under the spin representations.
  for (int j = 1; j <= 3; ++j) s.raw_basis.push_back(-I / 2.0 * pauli(j));
  return s;
}

GroupSpec build_so2m(int m) {
  GroupSpec s;
  s.id = GroupId::so2m;
  s.m = m;
  s.matrix_dim = 2 * m;
  s.algebra_dim = m * (2 * m - 1);
  s.ip_scale = 1.0;
  s.name = "so" + std::to_string(2 * m);
  s.ad_invariant = true;
  const double r = 1.0 / std::sqrt(2.0);
  for (int j = 2; j <= 2 * m; ++j)
    for (int k = 1; k < j; ++k)
      s.raw_basis.push_back(
          r * (unit_matrix(2 * m, j - 1, k - 1) - unit_matrix(2 * m, k - 1, j - 1)));
  return s;
}

GroupSpec build_sp2m(int m) {
  GroupSpec s;
  s.id = GroupId::sp2m;
  s.m = m;
  s.matrix_dim = 2 * m;
  s.algebra_dim = m * (2 * m + 1);
  s.ip_scale = 1.0;
  s.name = "sp" + std::to_string(2 * m);
  s.omega = symplectic_form(m);
  const int n = 2 * m;
  const double r = 1.0 / std::sqrt(2.0);
  // Orthonormal basis of Sym(2m) mapped through the isometry S -> -Omega S.
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l)
      s.raw_basis.push_back(-s.omega *
                            (r * (unit_matrix(n, k, l) + unit_matrix(n, l, k))));
  for (int k = 0; k < n; ++k)
    s.raw_basis.push_back(-s.omega * unit_matrix(n, k, k));
  return s;
}

GroupSpec build_su11() {
  GroupSpec s;
  s.id = GroupId::su11;
  s.matrix_dim = 2;
  s.algebra_dim = 3;
  s.ip_scale = 2.0;
  s.name = "su11";
  Mat x0(2, 2), x1(2, 2), x2(2, 2);
  x0 << I / 2.0, 0, 0, -I / 2.0;
  x1 << 0, -I / 2.0, I / 2.0, 0;
  x2 << 0, 0.5, 0.5, 0;
  s.raw_basis = {x0, x1, x2};
  return s;
}

GroupSpec build_lorentz() {
  GroupSpec s;
  s.id = GroupId::lorentz;
  s.matrix_dim = 4;
  s.algebra_dim = 6;
  s.ip_scale = 0.5;
  s.name = "lorentz";
  s.eta = Mat::Zero(4, 4);
  s.eta.diagonal() << -1, 1, 1, 1;
  auto E = [](int r, int c) { return unit_matrix(4, r, c); };
  s.raw_basis = {
      E(3, 2) - E(2, 3),  // J1
      E(1, 3) - E(3, 1),  // J2
      E(2, 1) - E(1, 2),  // J3
      E(0, 1) + E(1, 0),  // K1
      E(0, 2) + E(2, 0),  // K2
      E(0, 3) + E(3, 0),  // K3
  };
  return s;
}

GroupSpec build_heisenberg(int m) {
  GroupSpec s;
  s.id = GroupId::heisenberg;
  s.m = m;
  s.matrix_dim = 2 * m + 1;
  s.algebra_dim = 2 * m + 1;
  s.ip_scale = 1.0;
  s.name = "heisenberg" + std::to_string(m);
  s.omega = symplectic_form(m);
  for (int j = 0; j < 2 * m + 1; ++j) {
    Mat e = Mat::Zero(2 * m + 1, 1);
    e(j, 0) = 1.0;
    s.raw_basis.push_back(e);
  }
  return s;
}

double heis_symplectic_pairing(const GroupSpec& spec, const Mat& a, const Mat& b) {
  const int d = 2 * spec.m;
  const Eigen::VectorXd xi = a.topRows(d).real();
  const Eigen::VectorXd eta = b.topRows(d).real();
  return xi.dot((spec.omega.real() * eta));
}

}  // namespace

GroupPtr make_group(GroupId id, int m) {
  if (m < 1) throw ValidationError("make_group: m must be >= 1");
  GroupSpec s;
  switch (id) {
    case GroupId::su2: s = build_su2(); break;
    case GroupId::so2m: s = build_so2m(m); break;
    case GroupId::sp2m: s = build_sp2m(m); break;
    case GroupId::su11: s = build_su11(); break;
    case GroupId::lorentz: s = build_lorentz(); break;
    case GroupId::heisenberg: s = build_heisenberg(m); break;
    default: throw ValidationError("make_group: unknown group id");
  }
  orthonormalize(s);
  return std::make_shared<const GroupSpec>(std::move(s));
}

GroupPtr make_group(const std::string& name, int m) {
  if (name == "su2") return make_group(GroupId::su2, 1);
  if (name == "so2m") return make_group(GroupId::so2m, m);
  if (name == "sp2m") return make_group(GroupId::sp2m, m);
  if (name == "su11") return make_group(GroupId::su11, 1);
  if (name == "lorentz") return make_group(GroupId::lorentz, 1);
  if (name == "heisenberg") return make_group(GroupId::heisenberg, m);
  throw ValidationError("make_group: unknown group '" + name + "'");
}

Membership is_member(const GroupElement& g, double tol) {
  const GroupSpec& s = *g.group;
  const Mat& mat = g.mat;
  double r = 0.0;
  switch (s.id) {
    case GroupId::su2: {
      r = (mat.adjoint() * mat - Mat::Identity(2, 2)).norm() +
          std::abs(mat.determinant() - 1.0);
      break;
    }
    case GroupId::so2m: {
      r = (mat.transpose() * mat - Mat::Identity(mat.rows(), mat.cols())).norm() +
          std::abs(mat.determinant() - 1.0) + mat.imag().norm();
      break;
    }
    case GroupId::sp2m: {
      r = (mat.transpose() * s.omega * mat - s.omega).norm() + mat.imag().norm();
      break;
    }
    case GroupId::su11: {
      Mat sz(2, 2);
      sz << 1, 0, 0, -1;
      r = (mat * sz * mat.adjoint() - sz).norm() +
          std::abs(mat.determinant() - 1.0);
      break;
    }
    case GroupId::lorentz: {
      r = (mat.transpose() * s.eta * mat - s.eta).norm() +
          std::abs(mat.determinant() - 1.0) + mat.imag().norm();
      // proper orthochronous component
      r += std::max(0.0, 1.0 - mat(0, 0).real());
      break;
    }
    case GroupId::heisenberg: {
      r = mat.imag().norm();
      break;
    }
  }
  return {r <= tol, r};
}

Membership is_member(const AlgebraElement& x, double tol) {
  const GroupSpec& s = *x.group;
  const Mat& mat = x.mat;
  double r = 0.0;
  switch (s.id) {
    case GroupId::su2:
      r = (mat + mat.adjoint()).norm() + std::abs(mat.trace());
      break;
    case GroupId::so2m:
      r = (mat + mat.transpose()).norm() + mat.imag().norm();
      break;
    case GroupId::sp2m:
      r = (s.omega * mat + mat.transpose() * s.omega).norm() + mat.imag().norm();
      break;
    case GroupId::su11: {
      Mat sz(2, 2);
      sz << 1, 0, 0, -1;
      r = (mat * sz + sz * mat.adjoint()).norm() + std::abs(mat.trace());
      break;
    }
    case GroupId::lorentz:
      r = (mat.transpose() * s.eta + s.eta * mat).norm() + mat.imag().norm();
      break;
    case GroupId::heisenberg:
      r = mat.imag().norm();
      break;
  }
  return {r <= tol, r};
}

double inner(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.group->id != y.group->id || x.group->m != y.group->m)
    throw std::invalid_argument("inner: elements from different groups");
  return raw_inner(*x.group, x.mat, y.mat);
}

double algebra_norm(const AlgebraElement& x) {
  return std::sqrt(std::max(0.0, inner(x, x)));
}

RVec coords(const AlgebraElement& x) {
  const GroupSpec& s = *x.group;
  RVec c(s.algebra_dim);
  for (int j = 0; j < s.algebra_dim; ++j)
    c(j) = raw_inner(s, s.basis[j], x.mat);
  return c;
}

AlgebraElement from_coords(const GroupPtr& g, const RVec& c) {
  if (c.size() != g->algebra_dim)
    throw std::invalid_argument("from_coords: wrong coordinate count");
  Mat m = Mat::Zero(g->basis[0].rows(), g->basis[0].cols());
  for (int j = 0; j < g->algebra_dim; ++j) m += c(j) * g->basis[j];
  return {g, std::move(m)};
}

AlgebraElement zero_element(const GroupPtr& g) {
  return {g, Mat::Zero(g->basis[0].rows(), g->basis[0].cols())};
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  const GroupSpec& s = *x.group;
  if (s.id == GroupId::heisenberg) {
    // From the group law via BCH: [(xi,.),(eta,.)] = (0, -xi.Omega.eta).
    Mat z = Mat::Zero(s.matrix_dim, 1);
    z(s.matrix_dim - 1, 0) = -heis_symplectic_pairing(s, x.mat, y.mat);
    return {x.group, std::move(z)};
  }
  return {x.group, x.mat * y.mat - y.mat * x.mat};
}

GroupElement group_identity(const GroupPtr& g) {
  if (g->is_heisenberg()) return {g, Mat::Zero(g->matrix_dim, 1)};
  return {g, Mat::Identity(g->matrix_dim, g->matrix_dim)};
}

GroupElement group_exp(const AlgebraElement& x) {
  if (x.group->is_heisenberg()) return {x.group, x.mat};
  return {x.group, expm(x.mat)};
}

GroupElement group_mul(const GroupElement& a, const GroupElement& b) {
  const GroupSpec& s = *a.group;
  if (s.id == GroupId::heisenberg) {
    Mat out = a.mat + b.mat;
    out(s.matrix_dim - 1, 0) -= 0.5 * heis_symplectic_pairing(s, a.mat, b.mat);
    return {a.group, std::move(out)};
  }
  return {a.group, a.mat * b.mat};
}

GroupElement group_inv(const GroupElement& a) {
  const GroupSpec& s = *a.group;
  if (s.id == GroupId::heisenberg) return {a.group, -a.mat};
  return {a.group, a.mat.inverse()};
}

GroupElement element_from_word(const std::vector<AlgebraElement>& word) {
  if (word.empty()) throw std::invalid_argument("element_from_word: empty word");
  GroupElement g = group_exp(word[0]);
  for (size_t k = 1; k < word.size(); ++k)
    g = group_mul(g, group_exp(word[k]));
  return g;
}

AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x) {
  const GroupSpec& s = *g.group;
  if (s.id == GroupId::heisenberg) {
    Mat out = x.mat;
    out(s.matrix_dim - 1, 0) -= heis_symplectic_pairing(s, g.mat, x.mat);
    return {x.group, std::move(out)};
  }
  return {x.group, g.mat * x.mat * g.mat.inverse()};
}

AlgebraElement random_algebra_element(const GroupPtr& g, double scale,
                                      std::mt19937_64& rng) {
  if (scale < 0.0)
    throw std::invalid_argument("random_algebra_element: negative scale");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  RVec c(g->algebra_dim);
  for (int j = 0; j < g->algebra_dim; ++j) c(j) = gauss(rng);
  const double n = c.norm();
  const double r = scale * unif(rng);
  if (n > 0.0 && scale > 0.0) c *= r / n; else c.setZero();
  return from_coords(g, c);
}

AlgebraElement random_algebra_element(const GroupPtr& g, double scale,
                                      uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_algebra_element(g, scale, rng);
}

GroupElement random_group_element(const GroupPtr& g, double scale,
                                  std::mt19937_64& rng, int max_factors) {
  std::uniform_int_distribution<int> nf(1, std::max(1, max_factors));
  GroupElement e = group_identity(g);
  const int n = nf(rng);
  for (int k = 0; k < n; ++k)
    e = group_mul(e, group_exp(random_algebra_element(g, scale, rng)));
  return e;
}

bool ad_invariance_test(const GroupPtr& g, int samples, uint64_t seed,
                        double tol) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const GroupElement go = random_group_element(g, 1.0, rng);
    const AlgebraElement x = random_algebra_element(g, 1.0, rng);
    const AlgebraElement y = random_algebra_element(g, 1.0, rng);
    const double lhs = inner(adjoint_action(go, x), adjoint_action(go, y));
    const double rhs = inner(x, y);
    if (std::abs(lhs - rhs) > tol) return false;
  }
  return true;
}

AlgebraElement so_generator(const GroupPtr& g, int j, int k) {
  if (g->id != GroupId::so2m)
    throw std::invalid_argument("so_generator: group is not so(2m)");
  const int n = g->matrix_dim;
  if (j <= k || k < 1 || j > n)
    throw std::invalid_argument("so_generator: need 1 <= k < j <= 2m");
  Mat b = Mat::Zero(n, n);
  b(j - 1, k - 1) = 1.0 / std::sqrt(2.0);
  b(k - 1, j - 1) = -1.0 / std::sqrt(2.0);
  return {g, std::move(b)};
}

double structure_closure_residual(const GroupPtr& g) {
  double worst = 0.0;
  for (int i = 0; i < g->algebra_dim; ++i)
    for (int j = 0; j < g->algebra_dim; ++j) {
      const AlgebraElement br =
          bracket({g, g->basis[i]}, {g, g->basis[j]});
      AlgebraElement back = from_coords(g, coords(br));
      worst = std::max(worst, (br.mat - back.mat).norm());
    }
  return worst;
}

}  // namespace liebound

#include <doctest.h>

#include <cmath>
#include <random>

#include "liebound/nelson.hpp"

using namespace liebound;

namespace {

const cd I(0.0, 1.0);

Mat restrict_to(const Mat& a, const std::vector<Eigen::Index>& idx) {
  Mat out(idx.size(), idx.size());
  for (size_t r = 0; r < idx.size(); ++r)
    for (size_t c = 0; c < idx.size(); ++c) out(r, c) = a(idx[r], idx[c]);
  return out;
}

}  // namespace

TEST_CASE("nelson closed forms: spin and flo are exact multiples of 1") {
  for (double j : {0.5, 1.0, 2.0, 3.0}) {
    const auto rep = make_spin(j);
    const auto sum = nelson_basis_sum(rep);
    const auto cf = nelson_closed_form(rep);
    CHECK((sum.dense() - j * (j + 1.0) * Mat::Identity(rep->dim, rep->dim))
              .norm() < 1e-10);
    CHECK((sum.dense() - cf.dense()).norm() < 1e-12);
  }
  for (int m : {1, 2, 3}) {
    const auto rep = make_flo(m);
    const auto sum = nelson_basis_sum(rep);
    const double want = m * (2.0 * m - 1.0) / 8.0;
    CHECK((sum.dense() - want * Mat::Identity(rep->dim, rep->dim)).norm() <
          1e-12);
  }
}

TEST_CASE("nelson closed form: displacement is 1 + 2H, identically") {
  const auto rep = make_displacement(1, 32);
  const auto sum = nelson_basis_sum(rep);
  const auto cf = nelson_closed_form(rep);
  CHECK((sum.dense() - cf.dense()).norm() < 1e-12);
  const auto ops = boson_ops(1, 32);
  CHECK((cf.dense() - Mat::Identity(32, 32) - 2.0 * Mat(ops.h)).norm() < 1e-12);
}

TEST_CASE("nelson: metaplectic basis sum matches H^2 + 3m/8 below cutoff") {
  const auto rep = make_metaplectic(1, 64);
  const Mat diff = nelson_basis_sum(rep).dense() - nelson_closed_form(rep).dense();
  const auto idx = sub_cutoff_indices(*rep, 16);
  CHECK(restrict_to(diff, idx).norm() < 1e-8);

  // truncation-convergent: the discrepancy on a fixed block does not grow
  // when the cutoff doubles
  const auto rep2 = make_metaplectic(1, 128);
  const Mat diff2 =
      nelson_basis_sum(rep2).dense() - nelson_closed_form(rep2).dense();
  const auto idx2 = fock_indices_up_to(1, 128, 16);
  CHECK(restrict_to(diff2, idx2).norm() <= restrict_to(diff, idx).norm() + 1e-12);
}

TEST_CASE("nelson: su11 sector form") {
  for (int n : {0, 1, 2}) {
    const auto rep = make_su11_sector(n, 48);
    const Mat diff =
        nelson_basis_sum(rep).dense() - nelson_closed_form(rep).dense();
    const auto idx = sub_cutoff_indices(*rep, 20);
    CHECK(restrict_to(diff, idx).norm() < 1e-8);
    // spectral floor of the closed form: 2 ((|n|+1)/2)^2 + (1-n^2)/4
    const double k0min = (std::abs(n) + 1) / 2.0;
    CHECK(nelson_closed_form(rep).spectral_floor ==
          doctest::Approx(2.0 * k0min * k0min + (1.0 - n * n) / 4.0));
  }
}

TEST_CASE("every energy operator is positive semidefinite") {
  const std::vector<EnergyOperator> ops = {
      nelson_basis_sum(make_spin(1.5)),
      nelson_basis_sum(make_flo(2)),
      nelson_basis_sum(make_su11_sector(1, 32)),
      nelson_closed_form(make_displacement(1, 32)),
      improved_k(make_spin(2.0)),
      improved_k(make_displacement(1, 32)),
  };
  for (const auto& op : ops)
    CHECK(min_hermitian_eigenvalue(op.dense()) > -1e-9);
}

TEST_CASE("improved K: spin j^2 and displacement 2H") {
  const auto spin2 = make_spin(2.0);
  const auto k = improved_k(spin2);
  CHECK((k.dense() - 4.0 * Mat::Identity(5, 5)).norm() < 1e-14);
  // strictly below Delta = 6
  CHECK(min_hermitian_eigenvalue(nelson_basis_sum(spin2).dense() - k.dense()) >
        1.0);

  const auto disp = make_displacement(1, 32);
  const auto kd = improved_k(disp);
  const auto delta = nelson_closed_form(disp);
  CHECK((kd.dense() - (delta.dense() - Mat::Identity(32, 32))).norm() < 1e-12);

  CHECK_THROWS_AS(improved_k(make_flo(2)), NotApplicable);
}

TEST_CASE("improved K certification: A(X)^2 <= ||X||^2 K") {
  std::mt19937_64 rng(101);
  for (double j : {0.5, 1.0, 2.0, 4.0}) {
    const auto rep = make_spin(j);
    const auto k = improved_k(rep);
    for (int s = 0; s < 200; ++s) {
      const auto x = random_algebra_element(rep->group, 2.0, rng);
      const Mat ax = rep->generator(x);
      const double n2 = inner(x, x);
      const double worst =
          -min_hermitian_eigenvalue(n2 * k.dense() - ax * ax);
      CHECK(worst < 1e-9);
    }
  }
}

TEST_CASE("rescaled laplacian bounds") {
  const auto spin1 = make_spin(1.0);
  {
    RVec w = RVec::Ones(3);
    const auto rb = rescaled_laplacian_bounds(spin1, w);
    CHECK(rb.c == 1.0);
    CHECK(rb.C == 1.0);
    CHECK((rb.delta_prime.dense() - nelson_basis_sum(spin1).dense()).norm() <
          1e-12);
  }
  {
    RVec w = RVec::Ones(3) * 4.0;
    const auto rb = rescaled_laplacian_bounds(spin1, w);
    CHECK((rb.delta_prime.dense() - nelson_basis_sum(spin1).dense() / 4.0)
              .norm() < 1e-12);
    CHECK(rb.c == 4.0);
    CHECK(rb.C == 4.0);
    CHECK(rb.violation_lower > -1e-8);
    CHECK(rb.violation_upper > -1e-8);
  }
  {
    const auto flo2 = make_flo(2);
    RVec w = RVec::Ones(6);
    w(5) = 9.0;
    const auto rb = rescaled_laplacian_bounds(flo2, w);
    CHECK(rb.c == 1.0);
    CHECK(rb.C == 9.0);
    CHECK(rb.violation_lower > -1e-8);
    CHECK(rb.violation_upper > -1e-8);
  }
  CHECK_THROWS_AS(rescaled_laplacian_bounds(spin1, RVec::Zero(3)),
                  std::invalid_argument);
}

TEST_CASE("basis independence of the Laplacian") {
  std::mt19937_64 rng(55);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const RepPtr& rep : {make_spin(1.5), make_flo(2),
                            make_su11_sector(0, 24), make_metaplectic(1, 32)}) {
    const int d = rep->group->algebra_dim;
    RMat g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = gauss(rng);
    const RMat q = Eigen::HouseholderQR<RMat>(g).householderQ();
    // rotated orthonormal basis Y_j = sum_k q(j,k) X_k
    Mat rotated = Mat::Zero(rep->dim, rep->dim);
    for (int j = 0; j < d; ++j) {
      Mat a = Mat::Zero(rep->dim, rep->dim);
      for (int k = 0; k < d; ++k) a += q(j, k) * Mat(rep->gens[k]);
      rotated += a * a;
    }
    const Mat orig = nelson_basis_sum(rep).dense();
    CHECK((rotated - orig).norm() < 1e-8 * std::max(1.0, orig.norm()));
  }
}

TEST_CASE("generator domination by the Laplacian") {
  std::mt19937_64 rng(66);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const RepPtr& rep : {make_spin(2.0), make_flo(2),
                            make_su11_sector(1, 32), make_metaplectic(1, 48)}) {
    const auto delta = nelson_basis_sum(rep);
    const auto idx = sub_cutoff_indices(*rep, rep->truncated ? 10 : -1);
    for (int s = 0; s < 30; ++s) {
      const auto x = random_algebra_element(rep->group, 1.5, rng);
      Vec psi = Vec::Zero(rep->dim);
      for (Eigen::Index i : idx) psi(i) = cd(gauss(rng), gauss(rng));
      psi.normalize();
      const double lhs = (rep->generator(x) * psi).norm();
      const double rhs = algebra_norm(x) *
                         std::sqrt(std::max(0.0, energy_expectation(delta, psi)));
      CHECK(lhs <= rhs + 1e-8);
    }
  }
}

TEST_CASE("single-mode operator-ordering identities on the truncated space") {
  const int cutoff = 48;
  const auto ops = boson_ops(1, cutoff);
  const Mat q = Mat(ops.q[0]), p = Mat(ops.p[0]);
  const Mat id = Mat::Identity(cutoff, cutoff);
  const auto idx = fock_indices_up_to(1, cutoff, cutoff / 2);

  const Mat lhs1 = (p * q + q * p) * (p * q + q * p);
  const Mat rhs1 = 4.0 * q * q * p * p - 8.0 * I * q * p - id;
  CHECK(restrict_to(lhs1 - rhs1, idx).norm() < 1e-8);

  const Mat lhs2 = p * p * q * q;
  const Mat rhs2 = q * q * p * p - 4.0 * I * q * p - 2.0 * id;
  CHECK(restrict_to(lhs2 - rhs2, idx).norm() < 1e-8);
}

TEST_CASE("two-mode oscillator-square identity on the truncated space") {
  const int cutoff = 24, m = 2;
  const auto ops = boson_ops(m, cutoff);
  const Eigen::Index d = ops.dim;
  const Mat id = Mat::Identity(d, d);
  Mat sumq2 = Mat::Zero(d, d), sump2 = Mat::Zero(d, d), sumqp = Mat::Zero(d, d);
  Mat h = Mat::Zero(d, d);
  std::vector<Mat> q(m), p(m);
  for (int k = 0; k < m; ++k) {
    q[k] = Mat(ops.q[k]);
    p[k] = Mat(ops.p[k]);
    sumq2 += q[k] * q[k];
    sump2 += p[k] * p[k];
    sumqp += q[k] * p[k];
    h += q[k] * q[k] + p[k] * p[k];
  }
  Mat cross = Mat::Zero(d, d);
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) cross += q[k] * q[k] * p[l] * p[l];
  const Mat lhs = h * h;
  const Mat rhs =
      sumq2 * sumq2 + sump2 * sump2 + 2.0 * cross - 4.0 * I * sumqp -
      2.0 * double(m) * id;
  const auto idx = fock_indices_up_to(m, cutoff, cutoff / 2);
  CHECK(restrict_to(lhs - rhs, idx).norm() < 1e-8);
}

TEST_CASE("flo generator squares: A(B_jk)^2 = 1/8 for all pairs, m <= 3") {
  for (int m : {1, 2, 3}) {
    const auto rep = make_flo(m);
    const Mat id = Mat::Identity(rep->dim, rep->dim);
    for (int j = 2; j <= 2 * m; ++j)
      for (int k = 1; k < j; ++k) {
        const Mat a = rep->generator(so_generator(rep->group, j, k));
        CHECK((a * a - id / 8.0).norm() < 1e-12);
      }
  }
}

#include <doctest.h>

#include <numbers>
#include <random>

#include "liebound/groups.hpp"

using namespace liebound;

namespace {

const std::vector<GroupPtr>& all_groups() {
  static const std::vector<GroupPtr> groups = {
      make_group(GroupId::su2),         make_group(GroupId::so2m, 2),
      make_group(GroupId::sp2m, 1),     make_group(GroupId::sp2m, 2),
      make_group(GroupId::su11),        make_group(GroupId::lorentz),
      make_group(GroupId::heisenberg, 1)};
  return groups;
}

}  // namespace

TEST_CASE("basis sizes match the algebra dimensions") {
  CHECK(make_group(GroupId::su2)->algebra_dim == 3);
  CHECK(make_group(GroupId::so2m, 2)->algebra_dim == 6);
  CHECK(make_group(GroupId::sp2m, 1)->algebra_dim == 3);
  CHECK(make_group(GroupId::sp2m, 2)->algebra_dim == 10);
  CHECK(make_group(GroupId::su11)->algebra_dim == 3);
  CHECK(make_group(GroupId::lorentz)->algebra_dim == 6);
  CHECK(make_group(GroupId::heisenberg, 2)->algebra_dim == 5);
  CHECK_THROWS_AS(make_group(GroupId::so2m, 0), ValidationError);
  CHECK_THROWS_AS(make_group("nope"), ValidationError);
}

TEST_CASE("orthonormality of the internal basis") {
  for (const auto& g : all_groups()) {
    for (int i = 0; i < g->algebra_dim; ++i)
      for (int j = 0; j < g->algebra_dim; ++j) {
        const double ip = inner({g, g->basis[i]}, {g, g->basis[j]});
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < 1e-12);
      }
  }
}

TEST_CASE("raw gram data: su2 paper basis is unit under the shipped product") {
  const auto su2 = make_group(GroupId::su2);
  CHECK((su2->raw_gram - RMat::Identity(3, 3)).norm() < 1e-12);
  // and has squared norm 1/2 under the plain Frobenius trace
  const double frob = (su2->raw_basis[0].adjoint() * su2->raw_basis[0]).trace().real();
  CHECK(frob == doctest::Approx(0.5));
}

TEST_CASE("algebra membership of every basis element") {
  for (const auto& g : all_groups())
    for (const auto& b : g->basis) {
      const auto mem = is_member(AlgebraElement{g, b});
      CHECK(mem.ok);
      CHECK(mem.residual < 1e-12);
    }
}

TEST_CASE("group membership examples") {
  const auto su2 = make_group(GroupId::su2);
  CHECK(is_member(group_identity(su2)).ok);
  CHECK(is_member(group_identity(su2)).residual == doctest::Approx(0.0));

  const auto sp2 = make_group(GroupId::sp2m, 1);
  // Omega itself is symplectic
  CHECK(is_member(GroupElement{sp2, sp2->omega}).ok);
  // diag(2, 1/2): 2x2 symplectic condition is det = 1
  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 0.5;
  CHECK(is_member(GroupElement{sp2, d}).ok);
  Mat bad = Mat::Identity(2, 2) * 2.0;
  CHECK_FALSE(is_member(GroupElement{sp2, bad}).ok);

  const auto lor = make_group(GroupId::lorentz);
  // time reversal is orthochronous-violating
  Mat tr = Mat::Identity(4, 4);
  tr(0, 0) = -1;
  tr(1, 1) = -1;
  CHECK_FALSE(is_member(GroupElement{lor, tr}).ok);
}

TEST_CASE("inner product conventions") {
  const auto su2 = make_group(GroupId::su2);
  // paper basis has tr[X*X] = 1/2; the shipped product doubles it
  CHECK(inner({su2, su2->raw_basis[2]}, {su2, su2->raw_basis[2]}) ==
        doctest::Approx(1.0));

  const auto so4 = make_group(GroupId::so2m, 2);
  const auto b21 = so_generator(so4, 2, 1);
  const auto b31 = so_generator(so4, 3, 1);
  CHECK(inner(b21, b31) == doctest::Approx(0.0));
  CHECK(inner(b21, b21) == doctest::Approx(1.0));

  const auto lor = make_group(GroupId::lorentz);
  // K1 has unit norm under half the Frobenius product
  CHECK(inner({lor, lor->basis[3]}, {lor, lor->basis[3]}) == doctest::Approx(1.0));
}

TEST_CASE("expm maps the algebra into the group") {
  std::mt19937_64 rng(21);
  for (const auto& g : all_groups()) {
    for (int k = 0; k < 25; ++k) {
      const auto x = random_algebra_element(g, 5.0, rng);
      const auto e = group_exp(x);
      const auto mem = is_member(e, 1e-8);
      CHECK(mem.ok);
    }
  }
}

TEST_CASE("structure constants close in the basis") {
  for (const auto& g : all_groups())
    CHECK(structure_closure_residual(g) < 1e-10);

  // su2: [X_i, X_j] = eps_ijk X_k
  const auto su2 = make_group(GroupId::su2);
  const auto br = bracket({su2, su2->basis[0]}, {su2, su2->basis[1]});
  CHECK((br.mat - su2->basis[2]).norm() < 1e-14);
}

TEST_CASE("ad invariance matches the paper's classification") {
  CHECK(ad_invariance_test(make_group(GroupId::su2), 50, 1));
  CHECK(ad_invariance_test(make_group(GroupId::so2m, 2), 50, 2));
  CHECK_FALSE(ad_invariance_test(make_group(GroupId::sp2m, 1), 200, 3));
  CHECK_FALSE(ad_invariance_test(make_group(GroupId::heisenberg, 1), 200, 4));
}

TEST_CASE("random algebra elements are deterministic and in the algebra") {
  const auto so4 = make_group(GroupId::so2m, 2);
  const auto a = random_algebra_element(so4, 1.0, uint64_t(99));
  const auto b = random_algebra_element(so4, 1.0, uint64_t(99));
  CHECK((a.mat - b.mat).norm() == 0.0);

  const auto z = random_algebra_element(so4, 0.0, uint64_t(5));
  CHECK(z.mat.norm() == 0.0);

  std::mt19937_64 rng(123);
  for (int k = 0; k < 1000; ++k) {
    const auto x = random_algebra_element(so4, 1.5, rng);
    CHECK(is_member(x).residual < 1e-12);
    CHECK(algebra_norm(x) <= 1.5 + 1e-12);
  }
}

TEST_CASE("heisenberg group law") {
  const auto h1 = make_group(GroupId::heisenberg, 1);
  std::mt19937_64 rng(77);
  for (int k = 0; k < 50; ++k) {
    const auto a = group_exp(random_algebra_element(h1, 2.0, rng));
    const auto b = group_exp(random_algebra_element(h1, 2.0, rng));
    const auto c = group_exp(random_algebra_element(h1, 2.0, rng));
    const auto ab_c = group_mul(group_mul(a, b), c);
    const auto a_bc = group_mul(a, group_mul(b, c));
    CHECK((ab_c.mat - a_bc.mat).norm() < 1e-12);
    // inverse
    const auto e = group_mul(a, group_inv(a));
    CHECK(e.mat.norm() < 1e-14);
  }
  // central elements commute with everything
  Mat central = Mat::Zero(3, 1);
  central(2, 0) = 1.7;
  const GroupElement z{h1, central};
  const auto g = group_exp(random_algebra_element(h1, 1.0, rng));
  CHECK((group_mul(z, g).mat - group_mul(g, z).mat).norm() < 1e-14);
}

TEST_CASE("coordinates round trip") {
  std::mt19937_64 rng(31);
  for (const auto& g : all_groups()) {
    const auto x = random_algebra_element(g, 1.0, rng);
    const auto back = from_coords(g, coords(x));
    CHECK((x.mat - back.mat).norm() < 1e-12);
  }
}

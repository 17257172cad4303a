#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "liebound/linalg.hpp"

namespace liebound {

enum class GroupId { su2, so2m, sp2m, su11, lorentz, heisenberg };

// A registered group: matrix carrier, algebra basis (orthonormalized against
// the declared inner product), Gram data of the conventional basis, and
// structural matrices where the group has them.
//
// Inner products, for X, Y in the algebra:
//   su2      2 tr[X^† Y]          (makes the (i/2)-Pauli basis unit norm)
//   so2m     tr[X^T Y]
//   sp2m     tr[X^T Y]
//   su11     2 tr[X^† Y]
//   lorentz  (1/2) tr[X^T Y]
//   heisenberg  Euclidean on the (xi, t) coordinates
struct GroupSpec {
  GroupId id = GroupId::su2;
  int m = 1;           // size parameter for so2m / sp2m / heisenberg
  int matrix_dim = 0;  // heisenberg: length of the coordinate vector
  int algebra_dim = 0;
  double ip_scale = 1.0;
  std::vector<Mat> basis;      // orthonormal, used everywhere internally
  std::vector<Mat> raw_basis;  // conventional basis before normalization
  RMat raw_gram;               // Gram matrix of raw_basis
  Mat omega;                   // symplectic form, sp2m and heisenberg
  Mat eta;                     // Minkowski signature, lorentz
  std::string name;
  bool ad_invariant = false;   // inner product Ad-invariant (su2, so2m)

  bool is_heisenberg() const { return id == GroupId::heisenberg; }
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

// Heisenberg elements store the (xi, t) coordinate vector in `mat` as a
// (2m+1) x 1 column; matrix groups store the actual matrix.
struct AlgebraElement {
  GroupPtr group;
  Mat mat;
};

struct GroupElement {
  GroupPtr group;
  Mat mat;
};

struct Membership {
  bool ok = false;
  double residual = 0.0;
};

GroupPtr make_group(GroupId id, int m = 1);
// Accepts "su2", "so2m", "sp2m", "su11", "lorentz", "heisenberg".
GroupPtr make_group(const std::string& name, int m = 1);

Membership is_member(const GroupElement& g, double tol = 1e-8);
Membership is_member(const AlgebraElement& x, double tol = 1e-10);

double inner(const AlgebraElement& x, const AlgebraElement& y);
double algebra_norm(const AlgebraElement& x);

// Coordinates with respect to the orthonormal basis.
RVec coords(const AlgebraElement& x);
AlgebraElement from_coords(const GroupPtr& g, const RVec& c);
AlgebraElement zero_element(const GroupPtr& g);

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

GroupElement group_identity(const GroupPtr& g);
GroupElement group_exp(const AlgebraElement& x);
GroupElement group_mul(const GroupElement& a, const GroupElement& b);
GroupElement group_inv(const GroupElement& a);
// Product of exponentials of the word, left to right.
GroupElement element_from_word(const std::vector<AlgebraElement>& word);

AlgebraElement adjoint_action(const GroupElement& g, const AlgebraElement& x);

AlgebraElement random_algebra_element(const GroupPtr& g, double scale,
                                      std::mt19937_64& rng);
AlgebraElement random_algebra_element(const GroupPtr& g, double scale,
                                      uint64_t seed);
// Product of up to max_factors exponentials of random algebra elements,
// so samples stay in the connected component.
GroupElement random_group_element(const GroupPtr& g, double scale,
                                  std::mt19937_64& rng, int max_factors = 3);

bool ad_invariance_test(const GroupPtr& g, int samples, uint64_t seed,
                        double tol = 1e-8);

// (E_jk - E_kj)/sqrt(2) as an algebra element of so(2m), 1-based, j > k.
AlgebraElement so_generator(const GroupPtr& g, int j, int k);

// Residual of expanding [X_i, X_j] in the orthonormal basis; zero when the
// basis closes under the bracket.
double structure_closure_residual(const GroupPtr& g);

}  // namespace liebound

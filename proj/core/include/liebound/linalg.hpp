#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <complex>
#include <utility>
#include <vector>

#include "liebound/errors.hpp"

namespace liebound {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<cd>;

// Tolerances threaded through matrix functions and membership checks.
// Truncated Fock-space comparisons loosen these per call site.
struct Tolerance {
  double rel = 1e-12;
  double abs = 1e-14;
};

enum class NormKind { frobenius, operator_norm, scaled };

bool is_finite(const Mat& a);

// e^A by scaling-and-squaring with a degree-13 Pade approximant.
Mat expm(const Mat& a);

// Principal branch of log(A) by inverse scaling-and-squaring on a Schur
// form. Throws BranchFailure when an eigenvalue lies on the closed
// negative real axis, NumericalError when A is singular.
Mat logm_principal(const Mat& a, const Tolerance& tol = {});

double norm_frobenius(const Mat& a);
double norm_operator(const Mat& a);
// scale * frobenius; covers the sqrt(2)*||.||_2 and 2^{-1/2}*||.||_2
// algebra-norm conventions.
double norm_scaled(const Mat& a, double scale);
double matrix_norm(const Mat& a, NormKind kind, double scale = 1.0);

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
// Input must be Hermitian within tol.abs + tol.rel * ||A||.
std::pair<RVec, Mat> eig_hermitian(const Mat& a, const Tolerance& tol = {});

Mat kron(const Mat& a, const Mat& b);
SpMat kron_sparse(const SpMat& a, const SpMat& b);

SpMat sparse_identity(Eigen::Index n);
bool is_diagonal_sparse(const SpMat& a, double tol = 1e-14);

inline Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

inline bool is_unitary(const Mat& u, double tol = 1e-8) {
  return ((u.adjoint() * u) - Mat::Identity(u.rows(), u.cols())).norm() <= tol;
}

// Smallest eigenvalue of the Hermitian part, used for PSD checks and
// energy-budget validation.
double min_hermitian_eigenvalue(const Mat& a);

}  // namespace liebound

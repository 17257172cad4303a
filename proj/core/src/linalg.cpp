#include "liebound/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace liebound {

bool is_finite(const Mat& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const cd v = a(i, j);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
  return true;
}

static void require_square_finite(const Mat& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix must be square");
  if (!is_finite(a))
    throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

// ---------------------------------------------------------------------------
// expm: Higham's scaling-and-squaring with the [13/13] Pade approximant.

static Mat pade13(const Mat& a) {
  static const double b[] = {64764752532480000., 32382376266240000.,
                             7771770303897600.,  1187353796428800.,
                             129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,
                             1323241920.,        40840800.,
                             960960.,            16380.,
                             182.,               1.};
  const Eigen::Index n = a.rows();
  const Mat id = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  const Mat u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  const Mat v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

Mat expm(const Mat& a) {
  require_square_finite(a, "expm");
  const double theta13 = 5.371920351148152;
  const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  int s = 0;
  if (nrm > theta13) {
    s = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    if (s > 64) throw NumericalError("expm: norm beyond scaling capacity");
  }
  Mat e = pade13(a / std::pow(2.0, s));
  for (int k = 0; k < s; ++k) e = e * e;
  return e;
}

// ---------------------------------------------------------------------------
// logm_principal: complex Schur form, repeated triangular square roots until
// T is close to the identity, then the log series, then squaring back.

// Principal square root of an upper triangular matrix (recurrence of
// Bjorck and Hammarling).
static Mat sqrtm_triangular(const Mat& t) {
  const Eigen::Index n = t.rows();
  Mat r = Mat::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) r(i, i) = std::sqrt(t(i, i));
  for (Eigen::Index d = 1; d < n; ++d) {
    for (Eigen::Index i = 0; i + d < n; ++i) {
      const Eigen::Index j = i + d;
      cd s = t(i, j);
      for (Eigen::Index k = i + 1; k < j; ++k) s -= r(i, k) * r(k, j);
      r(i, j) = s / (r(i, i) + r(j, j));
    }
  }
  return r;
}

Mat logm_principal(const Mat& a, const Tolerance& tol) {
  require_square_finite(a, "logm_principal");
  const Eigen::Index n = a.rows();

  Eigen::ComplexSchur<Mat> schur(a);
  if (schur.info() != Eigen::Success)
    throw NumericalError("logm_principal: Schur decomposition failed");
  Mat t = schur.matrixT();
  const Mat q = schur.matrixU();

  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    const cd lam = t(i, i);
    if (std::abs(lam) <= tol.abs * scale)
      throw NumericalError("logm_principal: matrix is singular");
    if (lam.real() < 0.0 &&
        std::abs(lam.imag()) <= tol.abs + tol.rel * std::abs(lam))
      throw BranchFailure("logm_principal: eigenvalue on negative real axis");
  }

  // Inverse scaling: square-root until ||T - I|| is small enough for the
  // Mercator series to converge to machine precision in ~24 terms.
  int s = 0;
  const Mat id = Mat::Identity(n, n);
  while ((t - id).norm() > 0.25) {
    t = sqrtm_triangular(t);
    if (++s > 60)
      throw NumericalError("logm_principal: square-root iteration stalled");
  }

  const Mat x = t - id;
  Mat term = x;
  Mat acc = Mat::Zero(n, n);
  for (int k = 1; k <= 26; ++k) {
    acc += term / static_cast<double>(k) * ((k % 2) ? 1.0 : -1.0);
    term = term * x;
  }
  acc *= std::pow(2.0, s);
  return q * acc * q.adjoint();
}

// ---------------------------------------------------------------------------

double norm_frobenius(const Mat& a) { return a.norm(); }

double norm_operator(const Mat& a) {
  if (!is_finite(a)) throw std::invalid_argument("norm: non-finite entries");
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Mat> svd(a);
  return svd.singularValues()(0);
}

double norm_scaled(const Mat& a, double scale) {
  return scale * norm_frobenius(a);
}

double matrix_norm(const Mat& a, NormKind kind, double scale) {
  switch (kind) {
    case NormKind::frobenius: return norm_frobenius(a);
    case NormKind::operator_norm: return norm_operator(a);
    case NormKind::scaled: return norm_scaled(a, scale);
  }
  throw std::invalid_argument("matrix_norm: unknown kind");
}

std::pair<RVec, Mat> eig_hermitian(const Mat& a, const Tolerance& tol) {
  require_square_finite(a, "eig_hermitian");
  const double dev = (a - a.adjoint()).norm();
  if (dev > tol.abs + tol.rel * std::max(1.0, a.norm()) + 1e-10)
    throw std::invalid_argument("eig_hermitian: input not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es((a + a.adjoint()) / 2.0);
  if (es.info() != Eigen::Success)
    throw NumericalError("eig_hermitian: eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

SpMat kron_sparse(const SpMat& a, const SpMat& b) {
  std::vector<Eigen::Triplet<cd>> trip;
  trip.reserve(static_cast<size_t>(a.nonZeros()) * b.nonZeros());
  for (int ka = 0; ka < a.outerSize(); ++ka)
    for (SpMat::InnerIterator ia(a, ka); ia; ++ia)
      for (int kb = 0; kb < b.outerSize(); ++kb)
        for (SpMat::InnerIterator ib(b, kb); ib; ++ib)
          trip.emplace_back(ia.row() * b.rows() + ib.row(),
                            ia.col() * b.cols() + ib.col(),
                            ia.value() * ib.value());
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

SpMat sparse_identity(Eigen::Index n) {
  SpMat id(n, n);
  id.setIdentity();
  return id;
}

bool is_diagonal_sparse(const SpMat& a, double tol) {
  for (int k = 0; k < a.outerSize(); ++k)
    for (SpMat::InnerIterator it(a, k); it; ++it)
      if (it.row() != it.col() && std::abs(it.value()) > tol) return false;
  return true;
}

double min_hermitian_eigenvalue(const Mat& a) {
  Eigen::SelfAdjointEigenSolver<Mat> es((a + a.adjoint()) / 2.0,
                                        Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace liebound

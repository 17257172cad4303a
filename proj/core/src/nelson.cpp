#include "liebound/nelson.hpp"

#include <cmath>

namespace liebound {

namespace {

double floor_of(const SpMat& mat) {
  if (is_diagonal_sparse(mat)) {
    double lo = 0.0;
    bool first = true;
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
      const double v = mat.coeff(i, i).real();
      if (first || v < lo) { lo = v; first = false; }
    }
    return lo;
  }
  if (mat.rows() <= 2048) return min_hermitian_eigenvalue(Mat(mat));
  return 0.0;  // all shipped energy operators are PSD
}

EnergyOperator finish(RepPtr rep, SpMat mat, EnergyKind kind) {
  EnergyOperator op;
  op.rep = std::move(rep);
  op.spectral_floor = floor_of(mat);
  op.mat = std::move(mat);
  op.kind = kind;
  op.inner_product_tag = op.rep->group->name;
  return op;
}

}  // namespace

EnergyOperator nelson_basis_sum(const RepPtr& rep) {
  if (rep->kind == RepKind::lorentz_scalar)
    throw NotMaterializable(
        "nelson_basis_sum: lorentz_scalar is functional-only");
  SpMat acc(rep->dim, rep->dim);
  for (const SpMat& g : rep->gens) acc = acc + SpMat(g * g);
  return finish(rep, std::move(acc), EnergyKind::nelson);
}

EnergyOperator nelson_closed_form(const RepPtr& rep) {
  SpMat mat;
  switch (rep->kind) {
    case RepKind::spin: {
      const double j = rep->spin_j;
      mat = SpMat(j * (j + 1.0) * sparse_identity(rep->dim));
      break;
    }
    case RepKind::flo: {
      const double m = rep->m;
      mat = SpMat(m * (2.0 * m - 1.0) / 8.0 * sparse_identity(rep->dim));
      break;
    }
    case RepKind::displacement: {
      const BosonOps ops = boson_ops(rep->m, rep->cutoff);
      mat = SpMat(sparse_identity(rep->dim) + SpMat(2.0 * ops.h));
      break;
    }
    case RepKind::metaplectic: {
      const BosonOps ops = boson_ops(rep->m, rep->cutoff);
      mat = SpMat(SpMat(ops.h * ops.h) +
                  SpMat(3.0 * rep->m / 8.0 * sparse_identity(rep->dim)));
      break;
    }
    case RepKind::su11_sector: {
      mat = su11_sector_ops(rep->sector_n, rep->cutoff).delta;
      break;
    }
    default:
      throw NotMaterializable("nelson_closed_form: no closed form shipped");
  }
  return finish(rep, std::move(mat), EnergyKind::closed_form);
}

EnergyOperator improved_k(const RepPtr& rep) {
  switch (rep->kind) {
    case RepKind::spin: {
      const double j = rep->spin_j;
      return finish(rep, SpMat(j * j * sparse_identity(rep->dim)),
                    EnergyKind::improved_k);
    }
    case RepKind::displacement: {
      const BosonOps ops = boson_ops(rep->m, rep->cutoff);
      return finish(rep, SpMat(2.0 * ops.h), EnergyKind::improved_k);
    }
    default:
      throw NotApplicable("improved_k: not available for " + rep->id());
  }
}

RescaledBounds rescaled_laplacian_bounds(const RepPtr& rep, const RVec& weights) {
  if (weights.size() != rep->group->algebra_dim)
    throw std::invalid_argument(
        "rescaled_laplacian_bounds: one weight per basis direction");
  for (Eigen::Index j = 0; j < weights.size(); ++j)
    if (weights(j) <= 0.0)
      throw std::invalid_argument("rescaled_laplacian_bounds: weights must be > 0");

  // ONB of <.,.>' is X_j / sqrt(w_j), so Delta' = sum A(X_j)^2 / w_j.
  SpMat acc(rep->dim, rep->dim);
  for (Eigen::Index j = 0; j < weights.size(); ++j)
    acc = acc + SpMat((1.0 / weights(j)) * SpMat(rep->gens[j] * rep->gens[j]));

  RescaledBounds out;
  out.c = weights.minCoeff();
  out.C = weights.maxCoeff();
  out.delta_prime = finish(rep, std::move(acc), EnergyKind::nelson);

  const Mat delta = nelson_basis_sum(rep).dense();
  const Mat dprime = out.delta_prime.dense();
  const auto idx = sub_cutoff_indices(*rep);
  Mat lower(idx.size(), idx.size()), upper(idx.size(), idx.size());
  const Mat lw = delta - out.c * dprime;
  const Mat up = out.C * dprime - delta;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) {
      lower(a, b) = lw(idx[a], idx[b]);
      upper(a, b) = up(idx[a], idx[b]);
    }
  out.violation_lower = std::min(0.0, min_hermitian_eigenvalue(lower));
  out.violation_upper = std::min(0.0, min_hermitian_eigenvalue(upper));
  return out;
}

double energy_expectation(const EnergyOperator& op, const Vec& psi) {
  const cd v = psi.adjoint() * (op.mat * psi);
  return v.real();
}

std::vector<Eigen::Index> sub_cutoff_indices(const Representation& rep,
                                             int max_total) {
  if (!rep.truncated) {
    std::vector<Eigen::Index> all(rep.dim);
    for (Eigen::Index i = 0; i < rep.dim; ++i) all[i] = i;
    return all;
  }
  const int limit = (max_total >= 0) ? max_total : rep.cutoff / 2;
  if (rep.kind == RepKind::su11_sector) {
    std::vector<Eigen::Index> out;
    for (Eigen::Index i = 0; i <= std::min<Eigen::Index>(limit, rep.dim - 1); ++i)
      out.push_back(i);
    return out;
  }
  return fock_indices_up_to(rep.m, rep.cutoff, limit);
}

}  // namespace liebound
